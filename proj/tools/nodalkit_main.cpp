// Command-line front end: build graphs from expressions, compute spectra and
// nodal reports, construct power graphs, run the verification suites, and
// convert between formats.
//
// Exit codes: 0 success (no FAIL verdicts), 1 verification failure,
// 2 usage/parse error, 3 enumeration or exact-arithmetic budget exceeded.

#include "nodalkit/errors.hpp"
#include "nodalkit/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nodalkit::Json;

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

nodalkit::Graph load_graph(const std::string& path) {
    if (path == "-") return nodalkit::graph_from_json(Json::parse(read_all(std::cin)));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return nodalkit::graph_from_json(Json::parse(in));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

// Top-level comma split that respects [...] nesting, for values like
// rep=[[2,3],[4],[11]].
std::vector<std::string> split_params(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> params;
    if (text.empty()) return params;
    for (const auto& item : split_params(text)) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("params: expected key=value, got '" + item + "'");
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return params;
}

nodalkit::Representation rep_from_string(const std::string& text) {
    Json j = Json::parse(text);
    std::vector<std::vector<int>> parts;
    for (const auto& part : j) parts.push_back(part.get<std::vector<int>>());
    return nodalkit::Representation(parts);
}

int default_cap() {
    if (const char* env = std::getenv("NODAL_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("NODAL_CAP must be an integer");
        }
    }
    return nodalkit::kDefaultCompletionCap;
}

int run_verify(const std::string& suite, const std::string& params_text, int cap) {
    auto params = parse_params(params_text);
    auto require = [&](const char* key) -> const std::string& {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("verify --suite " + suite + " needs " + key +
                                        "=... in --params");
        return it->second;
    };

    std::vector<nodalkit::TheoremReport> reports;
    if (suite == "all") {
        reports = nodalkit::default_full_suite(cap);
    } else if (suite == "slb") {
        if (params.empty())
            reports = nodalkit::default_slb_suite(cap);
        else
            reports.push_back(nodalkit::verify_slb(rep_from_string(require("rep")), cap));
    } else if (suite == "highest") {
        if (params.empty()) {
            reports = nodalkit::default_highest_suite(cap);
        } else if (params.count("group")) {
            auto group = nodalkit::parse_group_spec(params.at("group"));
            reports.push_back(nodalkit::verify_highest_eigenvalue(
                nodalkit::power_graph(group), "power-graph(" + group.name() + ")", cap));
        } else {
            reports.push_back(nodalkit::verify_highest_eigenvalue(
                load_graph(require("graph")), params.at("graph"), cap));
        }
    } else if (suite == "pq") {
        if (params.empty())
            reports = nodalkit::default_pq_suite(cap);
        else
            reports = nodalkit::verify_power_graph_pq(std::stoi(require("p")),
                                                      std::stoi(require("q")), cap);
    } else if (suite == "pgroup") {
        if (params.empty()) {
            reports = nodalkit::default_pgroup_suite(cap);
        } else {
            Json factors = Json::parse(require("factors"));
            reports.push_back(nodalkit::verify_abelian_p_group(
                std::stoi(require("p")), factors.get<std::vector<int>>(), cap));
        }
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }

    std::cout << nodalkit::theorem_reports_to_json(reports).dump(2) << "\n";
    for (const auto& report : reports)
        for (const auto& a : report.assertions)
            if (a.verdict == nodalkit::Verdict::Flag)
                std::cerr << "FLAG " << report.theorem_id << ": " << a.statement
                          << " (expected " << a.expected << ", computed " << a.computed << ")\n";
    return nodalkit::verify_exit_code(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph Laplacian spectra and nodal decomposition toolkit"};
    app.require_subcommand(1);

    std::string expr, graph_path = "-", out_path, vector_text, group_spec;
    std::string exact_rep_path, suite, params_text, format;
    double tol = 1e-8;
    std::optional<int> cap_flag;

    auto* build = app.add_subcommand("build", "build a graph from an expression");
    build->add_option("--expr", expr, "expression, e.g. J(U(K2,K3),J(K4,K11))")->required();
    build->add_option("--out", out_path, "output path (default stdout)");

    auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum report");
    spectrum->add_option("--graph", graph_path, "graph JSON path or - for stdin");
    spectrum->add_option("--exact-rep", exact_rep_path,
                         "representation JSON; emit the exact closed-form basis");
    spectrum->add_option("--tol", tol, "numeric residual tolerance");
    spectrum->add_option("--out", out_path, "output path (default stdout)");

    auto* nodal = app.add_subcommand("nodal", "nodal domains and decomposition number");
    nodal->add_option("--graph", graph_path, "graph JSON path or - for stdin");
    nodal->add_option("--vector", vector_text, "comma-separated rationals")->required();
    nodal->add_option("--cap", cap_flag, "max zero entries to enumerate over");
    nodal->add_option("--out", out_path, "output path (default stdout)");

    auto* power = app.add_subcommand("power", "power graph of a finite group");
    power->add_option("--group", group_spec,
                      "cyclic:12 | abelian:2,2,4 | semidirect:p=2,q=3 | table:path.json")
        ->required();
    power->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "all | slb | highest | pq | pgroup")->required();
    verify->add_option("--params", params_text, "scenario parameters, e.g. p=2,q=3");
    verify->add_option("--cap", cap_flag, "max zero entries to enumerate over");

    auto* export_cmd = app.add_subcommand("export", "convert a graph to another format");
    export_cmd->add_option("--graph", graph_path, "graph JSON path or - for stdin");
    export_cmd->add_option("--format", format, "json | dot | edgelist | text")->required();
    export_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        int cap = cap_flag.value_or(default_cap());

        if (build->parsed()) {
            auto g = nodalkit::parse_graph_expression(expr);
            write_output(out_path, nodalkit::graph_to_json(g).dump());
            return 0;
        }
        if (spectrum->parsed()) {
            auto g = load_graph(graph_path);
            if (exact_rep_path.empty()) {
                auto basis = nodalkit::eigen_decompose(g, tol);
                write_output(out_path, nodalkit::spectrum_report_to_json(basis).dump(2));
                return 0;
            }
            std::ifstream in(exact_rep_path);
            if (!in)
                throw std::invalid_argument("cannot open representation file '" +
                                            exact_rep_path + "'");
            auto rep = nodalkit::representation_from_json(Json::parse(in));
            if (nodalkit::from_representation(rep) != g)
                throw std::invalid_argument(
                    "the representation does not lay out the given graph; build it with "
                    "REP(...) so vertex blocks match");
            auto basis = nodalkit::closed_form_basis(rep);
            auto numeric = nodalkit::eigen_decompose(g, tol);
            double max_gap = 0.0;
            std::vector<double> exact_sorted;
            for (const auto& pair : basis.pairs) exact_sorted.push_back(pair.value);
            std::sort(exact_sorted.begin(), exact_sorted.end());
            for (int i = 0; i < g.vertex_count(); ++i)
                max_gap = std::max(max_gap,
                                   std::abs(exact_sorted[i] - numeric.pairs[i].value));
            Json j = nodalkit::spectrum_report_to_json(basis);
            j["numeric_agreement"] = max_gap < 1e-8;
            j["numeric_max_gap"] = max_gap;
            write_output(out_path, j.dump(2));
            return max_gap < 1e-8 ? 0 : 1;
        }
        if (nodal->parsed()) {
            auto g = load_graph(graph_path);
            auto f = nodalkit::SignVector::parse(vector_text);
            auto report = nodalkit::nodal_decomposition_number(g, f, cap);
            write_output(out_path, nodalkit::nodal_report_to_json(report).dump(2));
            return 0;
        }
        if (power->parsed()) {
            auto group = nodalkit::parse_group_spec(group_spec);
            write_output(out_path,
                         nodalkit::graph_to_json(nodalkit::power_graph(group)).dump());
            return 0;
        }
        if (verify->parsed()) return run_verify(suite, params_text, cap);
        if (export_cmd->parsed()) {
            auto g = load_graph(graph_path);
            if (format == "json") {
                write_output(out_path, nodalkit::graph_to_json(g).dump());
            } else if (format == "dot") {
                write_output(out_path, nodalkit::graph_to_dot(g));
            } else if (format == "edgelist") {
                write_output(out_path, nodalkit::graph_to_edgelist(g));
            } else if (format == "text") {
                std::ostringstream os;
                os << "vertices: " << g.vertex_count() << "\n";
                os << "edges: " << g.edge_count() << "\n";
                os << "components: " << nodalkit::connected_components(g).size() << "\n";
                os << "degrees:";
                for (int v = 0; v < g.vertex_count(); ++v) os << " " << g.degree(v);
                os << "\n";
                write_output(out_path, os.str());
            } else {
                throw std::invalid_argument("unknown format '" + format + "'");
            }
            return 0;
        }
        return 2;
    } catch (const nodalkit::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
