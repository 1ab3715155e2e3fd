#include "nodalkit/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nodalkit {

namespace {

constexpr long long kNumericVectorScale = 1000000000000LL; // 10^12

/// Near-integer eigenvalues print as JSON integers (the families built here
/// have integer spectra); everything else keeps the raw double.
Json snapped_value(double value) {
    double rounded = std::round(value);
    if (std::abs(value - rounded) < 1e-9) return static_cast<std::int64_t>(rounded);
    return value;
}

Json bigint_json(const BigInt& x) {
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str(); // beyond 64 bits, fall back to a decimal string
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON: expected {\"n\": ..., \"edges\": [...]}");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("n").get<int>(), edges);
}

std::string graph_to_edgelist(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph graph_from_edgelist(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    if (!(is >> n)) throw std::invalid_argument("edge list: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u = 0, v = 0;
    while (is >> u >> v) edges.emplace_back(u, v);
    if (!is.eof()) {
        is.clear();
        std::string rest;
        if (is >> rest) throw std::invalid_argument("edge list: trailing token '" + rest + "'");
    }
    return Graph(n, edges);
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph {\n";
    std::vector<bool> touched(g.vertex_count(), false);
    for (auto [u, v] : g.edges()) {
        os << "  " << u << " -- " << v << ";\n";
        touched[u] = touched[v] = true;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!touched[v]) os << "  " << v << ";\n";
    os << "}\n";
    return os.str();
}

Json representation_to_json(const Representation& rep) {
    Json j;
    j["parts"] = rep.parts();
    return j;
}

Representation representation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("parts"))
        throw std::invalid_argument("representation JSON: expected {\"parts\": [[...], ...]}");
    std::vector<std::vector<int>> parts;
    for (const auto& part : j.at("parts")) parts.push_back(part.get<std::vector<int>>());
    return Representation(parts);
}

FiniteGroup parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("group spec: expected kind:args, got '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);

    auto split_ints = [](const std::string& text) {
        std::vector<int> values;
        std::istringstream is(text);
        std::string token;
        while (std::getline(is, token, ',')) values.push_back(std::stoi(token));
        return values;
    };

    if (kind == "cyclic") return cyclic_group(std::stoi(args));
    if (kind == "abelian") return abelian_group(split_ints(args));
    if (kind == "semidirect") {
        int p = -1, q = -1;
        std::optional<int> t;
        std::istringstream is(args);
        std::string token;
        while (std::getline(is, token, ',')) {
            auto eq = token.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("group spec: expected k=v in '" + token + "'");
            std::string key = token.substr(0, eq);
            int value = std::stoi(token.substr(eq + 1));
            if (key == "p") p = value;
            else if (key == "q") q = value;
            else if (key == "t") t = value;
            else throw std::invalid_argument("group spec: unknown key '" + key + "'");
        }
        if (p < 0 || q < 0)
            throw std::invalid_argument("group spec: semidirect needs p= and q=");
        return semidirect_pq(p, q, t);
    }
    if (kind == "table") {
        std::ifstream in(args);
        if (!in) throw std::invalid_argument("group spec: cannot open table file '" + args + "'");
        Json j = Json::parse(in);
        std::vector<std::vector<int>> table;
        for (const auto& row : j) table.push_back(row.get<std::vector<int>>());
        return FiniteGroup::from_cayley_table(std::move(table), "table:" + args);
    }
    throw std::invalid_argument("group spec: unknown kind '" + kind + "'");
}

Json spectrum_report_to_json(const EigenBasis& basis) {
    Json j;
    j["clusters"] = Json::array();
    for (const auto& cluster : basis.clusters) {
        Json c;
        c["value"] = cluster.exact_value ? bigint_json(*cluster.exact_value)
                                         : snapped_value(cluster.value);
        c["multiplicity"] = cluster.multiplicity;
        if (!cluster.exact_value) c["value_raw"] = cluster.value;
        j["clusters"].push_back(std::move(c));
    }
    j["basis"] = Json::array();
    for (const auto& pair : basis.pairs) {
        Json p;
        p["value"] = pair.exact_value ? bigint_json(*pair.exact_value)
                                      : snapped_value(pair.value);
        if (!pair.exact_value) p["value_raw"] = pair.value;
        if (pair.family == EigenFamily::Numeric) {
            Json nums = Json::array();
            for (double x : pair.numeric_vector)
                nums.push_back(static_cast<std::int64_t>(
                    std::llround(x * static_cast<double>(kNumericVectorScale))));
            p["vector_num"] = std::move(nums);
            p["vector_den"] = kNumericVectorScale;
        } else {
            Json nums = Json::array();
            for (const BigInt& x : pair.exact_vector.nums) nums.push_back(bigint_json(x));
            p["vector_num"] = std::move(nums);
            p["vector_den"] = bigint_json(pair.exact_vector.den);
        }
        p["family"] = eigen_family_tag(pair.family);
        if (pair.part >= 0) p["part"] = pair.part;
        if (pair.clique >= 0) p["clique"] = pair.clique;
        if (pair.index >= 0) p["index"] = pair.index;
        j["basis"].push_back(std::move(p));
    }
    return j;
}

Json sign_vector_to_json(const SignVector& f) {
    Json j;
    Json nums = Json::array();
    for (const BigInt& x : f.entries) nums.push_back(bigint_json(x));
    j["vector_num"] = std::move(nums);
    j["vector_den"] = bigint_json(f.den);
    return j;
}

Json nodal_report_to_json(const NodalReport& report) {
    Json j;
    j["S"] = report.strong_count;
    j["W"] = report.weak_count;
    j["D"] = report.decomposition_number;
    j["strong_domains"] = report.strong_domains;
    j["witness_completion"] = sign_vector_to_json(report.witness_completion);
    j["witness_partition"] = report.witness_partition;
    j["search_size"] = report.search_size;
    j["snap_threshold"] = report.snap_threshold;
    return j;
}

Json theorem_report_to_json(const TheoremReport& report) {
    Json j;
    j["theorem_id"] = report.theorem_id;
    j["applicable"] = report.applicable;
    if (!report.note.empty()) j["note"] = report.note;
    j["hypotheses"] = Json::array();
    for (const auto& h : report.hypotheses)
        j["hypotheses"].push_back({{"name", h.name}, {"pass", h.pass}});
    j["assertions"] = Json::array();
    for (const auto& a : report.assertions)
        j["assertions"].push_back({{"statement", a.statement},
                                   {"expected", a.expected},
                                   {"computed", a.computed},
                                   {"verdict", verdict_tag(a.verdict)}});
    return j;
}

Json theorem_reports_to_json(const std::vector<TheoremReport>& reports) {
    Json j = Json::array();
    for (const auto& report : reports) j.push_back(theorem_report_to_json(report));
    return j;
}

} // namespace nodalkit
