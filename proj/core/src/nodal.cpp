#include "nodalkit/nodal.hpp"

#include "nodalkit/errors.hpp"
#include "nodalkit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nodalkit {

namespace {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> size;

    void reset(int n) {
        parent.resize(n);
        size.assign(n, 1);
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

void require_matching_length(const Graph& g, const SignVector& f, const char* where) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument(std::string(where) +
                                    ": vector length does not match vertex count");
}

} // namespace

SignVector SignVector::from_integers(const std::vector<long long>& values) {
    SignVector f;
    f.entries.reserve(values.size());
    for (long long v : values) f.entries.emplace_back(static_cast<long>(v));
    return f;
}

SignVector SignVector::from_numeric(const std::vector<double>& values, double snap_rel) {
    double max_abs = 0.0;
    for (double v : values) max_abs = std::max(max_abs, std::abs(v));
    double threshold = snap_rel * max_abs;
    SignVector f;
    f.snap_threshold = threshold;
    f.entries.reserve(values.size());
    for (double v : values) {
        if (std::abs(v) < threshold || v == 0.0)
            f.entries.emplace_back(0);
        else
            f.entries.emplace_back(v > 0 ? 1 : -1);
    }
    return f;
}

SignVector SignVector::parse(const std::string& text) {
    std::vector<mpq_class> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto first = token.find_first_not_of(" \t");
        auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("SignVector::parse: empty entry");
        token = token.substr(first, last - first + 1);

        mpq_class value;
        size_t dot = token.find('.');
        if (dot != std::string::npos) {
            std::string digits = token.substr(0, dot) + token.substr(dot + 1);
            size_t frac_len = token.size() - dot - 1;
            std::string den = "1" + std::string(frac_len, '0');
            if (mpq_set_str(value.get_mpq_t(), (digits + "/" + den).c_str(), 10) != 0)
                throw std::invalid_argument("SignVector::parse: bad entry '" + token + "'");
        } else if (mpq_set_str(value.get_mpq_t(), token.c_str(), 10) != 0) {
            throw std::invalid_argument("SignVector::parse: bad entry '" + token + "'");
        }
        if (value.get_den() == 0)
            throw std::invalid_argument("SignVector::parse: zero denominator in '" + token + "'");
        value.canonicalize();
        values.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    BigInt common(1);
    for (const auto& v : values) common = lcm(common, BigInt(v.get_den()));
    SignVector f;
    f.den = common;
    f.entries.reserve(values.size());
    for (const auto& v : values)
        f.entries.push_back(BigInt(v.get_num()) * (common / BigInt(v.get_den())));
    return f;
}

std::vector<int> SignVector::zero_set() const {
    std::vector<int> zeros;
    for (int i = 0; i < size(); ++i)
        if (entries[i] == 0) zeros.push_back(i);
    return zeros;
}

bool SignVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const BigInt& x) { return x == 0; });
}

bool SignVector::has_positive() const {
    return std::any_of(entries.begin(), entries.end(), [](const BigInt& x) { return x > 0; });
}

bool SignVector::has_negative() const {
    return std::any_of(entries.begin(), entries.end(), [](const BigInt& x) { return x < 0; });
}

StrongDomains strong_nodal_domains(const Graph& g, const SignVector& f) {
    require_matching_length(g, f, "strong_nodal_domains");
    int n = g.vertex_count();
    UnionFind uf;
    uf.reset(n);
    for (auto [u, v] : g.edges())
        if (f.sign(u) * f.sign(v) > 0) uf.unite(u, v);

    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v)
        if (f.sign(v) != 0) by_root[uf.find(v)].push_back(v);

    StrongDomains result;
    for (int r = 0; r < n; ++r)
        if (!by_root[r].empty()) result.domains.push_back(std::move(by_root[r]));
    std::sort(result.domains.begin(), result.domains.end());
    result.count = static_cast<int>(result.domains.size());
    return result;
}

namespace {

// Components of the subgraph induced on `keep`, as sorted parent-vertex sets.
std::vector<std::vector<int>> side_components(const Graph& g, const std::vector<int>& keep) {
    auto sub = induced_subgraph(g, keep);
    std::vector<std::vector<int>> result;
    for (const auto& block : connected_components(sub.graph)) {
        std::vector<int> parent_block;
        parent_block.reserve(block.size());
        for (int v : block) parent_block.push_back(sub.to_parent[v]);
        std::sort(parent_block.begin(), parent_block.end());
        result.push_back(std::move(parent_block));
    }
    return result;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

int weak_nodal_domains(const Graph& g, const SignVector& f) {
    require_matching_length(g, f, "weak_nodal_domains");
    for (const auto& component : connected_components(g)) {
        bool all_zero = std::all_of(component.begin(), component.end(),
                                    [&](int v) { return f.sign(v) == 0; });
        if (all_zero)
            throw std::invalid_argument(
                "weak_nodal_domains: f vanishes identically on a connected component");
    }

    std::vector<int> non_negative, non_positive;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f.sign(v) >= 0) non_negative.push_back(v);
        if (f.sign(v) <= 0) non_positive.push_back(v);
    }
    std::vector<std::vector<int>> candidates = side_components(g, non_negative);
    for (auto& block : side_components(g, non_positive)) candidates.push_back(std::move(block));

    // A weak domain is a maximal element of the candidate sets; a component
    // of one side that sits inside a component of the other (possible only
    // through zero vertices) is not maximal, and equal sets count once.
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    int count = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < candidates.size() && maximal; ++j)
            if (i != j && subset_of(candidates[i], candidates[j])) maximal = false;
        if (maximal) ++count;
    }
    return count;
}

std::vector<std::pair<int, int>> nodal_edges(const Graph& g, const SignVector& f,
                                             NodalEdgeMode mode) {
    require_matching_length(g, f, "nodal_edges");
    std::vector<std::pair<int, int>> result;
    for (auto [u, v] : g.edges()) {
        int product = f.sign(u) * f.sign(v);
        if (mode == NodalEdgeMode::Strong ? product < 0 : product <= 0)
            result.emplace_back(u, v);
    }
    return result;
}

void for_each_sign_completion(
    const SignVector& f, int cap,
    const std::function<bool(const SignVector&, std::uint64_t)>& visit) {
    std::vector<int> zeros = f.zero_set();
    int k = static_cast<int>(zeros.size());
    if (k > cap || k >= 64)
        throw BudgetExceededError(
            "sign completions: " + std::to_string(k) + " zero entries need 2^" +
                std::to_string(k) + " completions, above the cap of " + std::to_string(cap),
            static_cast<unsigned long long>(k));

    SignVector buffer = f;
    for (int z : zeros) buffer.entries[z] = buffer.den; // index 0: all bits +1
    std::uint64_t count = 1ULL << k;
    for (std::uint64_t c = 0; c < count; ++c) {
        if (c != 0) {
            std::uint64_t changed = c ^ (c - 1); // low bits that flipped
            for (int j = 0; changed != 0; ++j, changed >>= 1)
                if (changed & 1)
                    buffer.entries[zeros[j]] = (c >> j) & 1 ? -buffer.den : buffer.den;
        }
        if (!visit(buffer, c)) return;
    }
}

std::vector<SignVector> sign_completions(const SignVector& f, int cap) {
    std::vector<SignVector> out;
    for_each_sign_completion(f, cap, [&](const SignVector& g, std::uint64_t) {
        out.push_back(g);
        return true;
    });
    return out;
}

NodalReport nodal_decomposition_number(const Graph& g, const SignVector& f, int cap) {
    require_matching_length(g, f, "nodal_decomposition_number");
    if (f.is_zero())
        throw std::invalid_argument("nodal_decomposition_number: f must be nonzero");

    const std::vector<int> zeros = f.zero_set();
    const int zero_count = static_cast<int>(zeros.size());
    if (zero_count > cap || zero_count >= 64)
        throw BudgetExceededError(
            "nodal_decomposition_number: " + std::to_string(zero_count) +
                " zero entries need 2^" + std::to_string(zero_count) +
                " completions, above the cap of " + std::to_string(cap),
            static_cast<unsigned long long>(zero_count));

    NodalReport report;
    report.snap_threshold = f.snap_threshold;
    StrongDomains strong = strong_nodal_domains(g, f);
    report.strong_count = strong.count;
    report.strong_domains = std::move(strong.domains);
    report.weak_count = weak_nodal_domains(g, f);
    report.search_size = 1ULL << zero_count;

    const int n = g.vertex_count();
    const int floor = (f.has_positive() && f.has_negative()) ? 2 : 1;
    int best = n + 1;
    std::uint64_t best_index = 0;
    UnionFind uf;
    for_each_sign_completion(f, cap, [&](const SignVector& candidate, std::uint64_t index) {
        uf.reset(n);
        int components = n;
        for (auto [u, v] : g.edges())
            if (candidate.sign(u) == candidate.sign(v) && uf.unite(u, v)) --components;
        if (components < best) {
            best = components;
            best_index = index;
        }
        return best > floor;
    });

    report.decomposition_number = best;
    // Rebuild the witness from its enumeration index.
    report.witness_completion = f;
    for (size_t j = 0; j < zeros.size(); ++j)
        report.witness_completion.entries[zeros[j]] = (best_index >> j) & 1 ? -f.den : f.den;
    StrongDomains witness = strong_nodal_domains(g, report.witness_completion);
    report.witness_partition = std::move(witness.domains);
    return report;
}

CourantFloorReport check_courant_floor(const Graph& g, const SignVector& f, const BigInt& value,
                                       int cap) {
    require_matching_length(g, f, "check_courant_floor");
    CourantFloorReport report;
    report.applicable =
        connected_components(g).size() == 1 && value != 0 && !f.is_zero();
    if (!report.applicable) return report;
    report.eigenpair_ok = verify_eigenpair_exact(g, {f.entries, f.den}, value);
    report.decomposition_number = nodal_decomposition_number(g, f, cap).decomposition_number;
    report.holds = report.decomposition_number >= 2;
    return report;
}

SingleNegativeReport check_single_negative_lemma(const Graph& g, const SignVector& f, int cap) {
    require_matching_length(g, f, "check_single_negative_lemma");
    SingleNegativeReport report;
    if (connected_components(g).size() != 1) {
        report.reason = "graph is not connected";
        return report;
    }
    int negative_vertex = -1;
    int negatives = 0;
    for (int v = 0; v < f.size(); ++v)
        if (f.sign(v) < 0) {
            ++negatives;
            negative_vertex = v;
        }
    if (negatives != 1) {
        report.reason = "expected exactly one negative entry, found " + std::to_string(negatives);
        return report;
    }
    std::vector<int> cuts = articulation_points(g);
    if (std::binary_search(cuts.begin(), cuts.end(), negative_vertex)) {
        report.reason = "the negative vertex is a cut vertex";
        return report;
    }
    report.applicable = true;
    report.decomposition_number = nodal_decomposition_number(g, f, cap).decomposition_number;
    report.holds = report.decomposition_number == 2;
    return report;
}

} // namespace nodalkit
