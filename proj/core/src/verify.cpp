#include "nodalkit/verify.hpp"

#include "nodalkit/errors.hpp"
#include "nodalkit/groups.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nodalkit {

std::string verdict_tag(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Flag: return "FLAG";
    }
    throw std::logic_error("verdict_tag: unknown verdict");
}

bool TheoremReport::has_fail() const {
    return std::any_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.verdict == Verdict::Fail; });
}

bool TheoremReport::has_flag() const {
    return std::any_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.verdict == Verdict::Flag; });
}

namespace {

class ScopedTimer {
public:
    explicit ScopedTimer(double& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
    ~ScopedTimer() {
        out_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    double& out_;
    std::chrono::steady_clock::time_point start_;
};

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string rep_string(const Representation& rep) {
    std::string out = "[";
    for (size_t r = 0; r < rep.parts().size(); ++r) {
        out += r ? ",[" : "[";
        for (size_t i = 0; i < rep.parts()[r].size(); ++i)
            out += (i ? "," : "") + std::to_string(rep.parts()[r][i]);
        out += "]";
    }
    return out + "]";
}

std::string cluster_string(const std::vector<EigenCluster>& clusters) {
    std::string out = "{";
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (i) out += ", ";
        if (clusters[i].exact_value)
            out += clusters[i].exact_value->get_str();
        else
            out += fmt_double(clusters[i].value);
        out += "^" + std::to_string(clusters[i].multiplicity);
    }
    return out + "}";
}

std::string pair_label(const EigenPair& pair) {
    std::string out = eigen_family_tag(pair.family);
    if (pair.part >= 0) {
        out += "(part=" + std::to_string(pair.part);
        if (pair.clique >= 0) out += ",clique=" + std::to_string(pair.clique);
        if (pair.index >= 0) out += ",w=" + std::to_string(pair.index);
        out += ")";
    }
    return out;
}

SignVector sign_vector_of(const EigenPair& pair) {
    if (pair.family == EigenFamily::Numeric) return SignVector::from_numeric(pair.numeric_vector);
    SignVector f;
    f.entries = pair.exact_vector.nums;
    f.den = pair.exact_vector.den;
    return f;
}

void add_assertion(TheoremReport& report, std::string statement, std::string expected,
                   std::string computed, Verdict verdict) {
    report.assertions.push_back(
        {std::move(statement), std::move(expected), std::move(computed), verdict});
}

void add_check(TheoremReport& report, std::string statement, std::string expected,
               std::string computed, bool pass) {
    add_assertion(report, std::move(statement), std::move(expected), std::move(computed),
                  pass ? Verdict::Pass : Verdict::Fail);
}

bool hypotheses_hold(const TheoremReport& report) {
    return std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                       [](const HypothesisCheck& h) { return h.pass; });
}

// Shared top-eigenvalue battery for graphs with a unique dominating cut
// vertex. Fills hypotheses; on success appends the assertions and returns
// the computed decomposition number (-1 when the hypotheses fail).
struct HighestChecks {
    bool applicable = false;
    int decomposition_number = -1;
    int components_after_delete = 0;
    int complement_components = 0;
};

HighestChecks append_highest_checks(TheoremReport& report, const Graph& g, int cap) {
    HighestChecks out;
    const int n = g.vertex_count();
    bool connected = connected_components(g).size() == 1;
    report.hypotheses.push_back({"graph is connected", connected});
    std::vector<int> dominating = dominating_vertices(g);
    report.hypotheses.push_back({"exactly one dominating vertex", dominating.size() == 1});
    bool dominating_cut = false;
    if (dominating.size() == 1) {
        std::vector<int> cuts = articulation_points(g);
        dominating_cut = std::binary_search(cuts.begin(), cuts.end(), dominating.front());
    }
    report.hypotheses.push_back({"the dominating vertex is a cut vertex", dominating_cut});
    if (!connected || dominating.size() != 1 || !dominating_cut) {
        report.applicable = false;
        report.note = "hypotheses not met";
        return out;
    }
    out.applicable = true;
    const int v = dominating.front();

    EigenBasis numeric = eigen_decompose(g, 1e-8);
    const EigenCluster& top = numeric.clusters.back();
    add_check(report, "top eigenvalue equals the vertex count", std::to_string(n),
              fmt_double(top.value), std::abs(top.value - n) < kEigenClusterTol);
    add_check(report, "top eigenvalue is simple", "multiplicity 1",
              "multiplicity " + std::to_string(top.multiplicity), top.multiplicity == 1);

    SignVector f;
    f.entries.assign(n, BigInt(-1));
    f.entries[v] = n - 1;
    bool eigenpair_ok = verify_eigenpair_exact(g, {f.entries, f.den}, BigInt(n));
    add_check(report, "(n-1, -1, ..., -1) with n-1 at the dominating vertex is an exact "
                      "eigenpair at lambda = n",
              "true", fmt_bool(eigenpair_ok), eigenpair_ok);

    NodalReport nodal = nodal_decomposition_number(g, f, cap);
    out.decomposition_number = nodal.decomposition_number;
    add_check(report, "D(f_top) >= 3", ">= 3", std::to_string(nodal.decomposition_number),
              nodal.decomposition_number >= 3);

    std::vector<int> rest;
    for (int u = 0; u < n; ++u)
        if (u != v) rest.push_back(u);
    out.components_after_delete =
        static_cast<int>(connected_components(induced_subgraph(g, rest).graph).size());
    add_check(report, "D(f_top) == 1 + components(G - v)",
              std::to_string(1 + out.components_after_delete),
              std::to_string(nodal.decomposition_number),
              nodal.decomposition_number == 1 + out.components_after_delete);

    out.complement_components = static_cast<int>(connected_components(complement(g)).size());
    add_assertion(report,
                  "narrative: strong-domain count equals the complement's component count",
                  std::to_string(out.complement_components),
                  std::to_string(nodal.decomposition_number),
                  nodal.decomposition_number == out.complement_components ? Verdict::Pass
                                                                          : Verdict::Flag);
    return out;
}

// Middle-eigenvalue checks shared by the clique-join scenarios: every basis
// vector whose eigenvalue is neither 0 nor the maximum has D exactly 2, and
// part-difference vectors split the graph into a clique plus a connected
// remainder. Exclusion is by eigenvalue, not by family.
void append_middle_checks(TheoremReport& report, const Graph& g, const EigenBasis& basis,
                          int cap) {
    BigInt top(0);
    for (const auto& pair : basis.pairs) top = std::max(top, *pair.exact_value);

    for (const auto& pair : basis.pairs) {
        if (*pair.exact_value == 0 || *pair.exact_value == top) continue;
        SignVector f = sign_vector_of(pair);
        NodalReport nodal = nodal_decomposition_number(g, f, cap);
        add_check(report,
                  "D == 2 for " + pair_label(pair) + " at lambda = " + pair.exact_value->get_str(),
                  "2", std::to_string(nodal.decomposition_number),
                  nodal.decomposition_number == 2);

        if (pair.family == EigenFamily::PartDifference) {
            std::vector<int> negatives, others;
            for (int v = 0; v < f.size(); ++v)
                (f.sign(v) < 0 ? negatives : others).push_back(v);
            Graph neg = induced_subgraph(g, negatives).graph;
            bool neg_clique =
                neg.edge_count() == neg.vertex_count() * (neg.vertex_count() - 1) / 2;
            bool neg_connected = connected_components(neg).size() == 1;
            bool rest_connected =
                connected_components(induced_subgraph(g, others).graph).size() == 1;
            add_check(report,
                      "negative support of " + pair_label(pair) +
                          " is a clique and its remainder is connected",
                      "true", fmt_bool(neg_clique && neg_connected && rest_connected),
                      neg_clique && neg_connected && rest_connected);
        }
    }
}

} // namespace

TheoremReport verify_slb(const Representation& rep, int cap,
                         bool check_top_simplicity_narrative) {
    TheoremReport report;
    ScopedTimer timer(report.runtime_seconds);
    report.theorem_id = "slb(rep=" + rep_string(rep) + ")";
    report.hypotheses.push_back({"base graph is a join (s >= 2)", rep.part_count() >= 2});
    if (!hypotheses_hold(report)) {
        report.applicable = false;
        report.note = "the closed form needs at least two parts";
        return report;
    }

    const Graph g = from_representation(rep);
    const EigenBasis basis = closed_form_basis(rep);
    const int n = rep.vertex_count();

    add_check(report, "multiplicity ledger sums to the vertex count", std::to_string(n),
              std::to_string(basis.pairs.size()),
              static_cast<int>(basis.pairs.size()) == n);

    EigenBasis numeric = eigen_decompose(g, 1e-8);
    double max_gap = 0.0;
    std::vector<double> exact_sorted;
    for (const auto& pair : basis.pairs) exact_sorted.push_back(pair.value);
    std::sort(exact_sorted.begin(), exact_sorted.end());
    for (int i = 0; i < n; ++i)
        max_gap = std::max(max_gap, std::abs(exact_sorted[i] - numeric.pairs[i].value));
    add_check(report, "numeric and exact spectra agree within 1e-8",
              "max gap < 1e-8", fmt_double(max_gap), max_gap < 1e-8);
    add_check(report, "spectrum clusters", cluster_string(basis.clusters),
              cluster_string(basis.clusters), true);

    if (check_top_simplicity_narrative) {
        int top_multiplicity = basis.clusters.back().multiplicity;
        add_assertion(report, "narrative: the top eigenvalue is simple", "multiplicity 1",
                      "multiplicity " + std::to_string(top_multiplicity),
                      top_multiplicity == 1 ? Verdict::Pass : Verdict::Flag);
    }

    append_middle_checks(report, g, basis, cap);
    return report;
}

TheoremReport verify_highest_eigenvalue(const Graph& g, const std::string& label, int cap) {
    TheoremReport report;
    ScopedTimer timer(report.runtime_seconds);
    report.theorem_id = "highest-eigenvalue(" + (label.empty() ? "graph" : label) + ")";
    append_highest_checks(report, g, cap);
    return report;
}

std::vector<TheoremReport> verify_power_graph_pq(int p, int q, int cap) {
    if (p == q) throw std::invalid_argument("verify_power_graph_pq: p and q must be distinct");
    if (p > q) std::swap(p, q);
    std::string suffix = "(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";

    std::vector<TheoremReport> reports;

    {
        TheoremReport report;
        ScopedTimer timer(report.runtime_seconds);
        report.theorem_id = "power-graph-pq-cyclic" + suffix;
        FiniteGroup h = cyclic_group(p * q);
        Graph pg = power_graph(h);
        Representation rep({{p - 1, q - 1},
                            {static_cast<int>(euler_totient(p * q)) + 1}});
        Graph shape = from_representation(rep);
        bool isomorphic = are_isomorphic(pg, shape);
        add_check(report,
                  "power graph of the cyclic group is isomorphic to " + rep_string(rep),
                  "true", fmt_bool(isomorphic), isomorphic);

        EigenBasis basis = closed_form_basis(rep);
        EigenBasis numeric = eigen_decompose(pg, 1e-8);
        std::vector<double> exact_sorted;
        for (const auto& pair : basis.pairs) exact_sorted.push_back(pair.value);
        std::sort(exact_sorted.begin(), exact_sorted.end());
        double max_gap = 0.0;
        for (int i = 0; i < pg.vertex_count(); ++i)
            max_gap = std::max(max_gap, std::abs(exact_sorted[i] - numeric.pairs[i].value));
        add_check(report, "power-graph spectrum matches the closed form within 1e-8",
                  cluster_string(basis.clusters), fmt_double(max_gap), max_gap < 1e-8);

        append_middle_checks(report, shape, basis, cap);
        reports.push_back(std::move(report));
    }

    {
        TheoremReport report;
        ScopedTimer timer(report.runtime_seconds);
        report.theorem_id = "power-graph-pq-nonabelian" + suffix;
        bool divides = (q - 1) % p == 0;
        report.hypotheses.push_back({"p divides q-1", divides});
        if (!divides) {
            report.applicable = false;
            report.note = "no non-abelian group of order p*q exists";
        } else {
            FiniteGroup h = semidirect_pq(p, q);
            Graph pg = power_graph(h);
            HighestChecks checks = append_highest_checks(report, pg, cap);
            if (checks.applicable) {
                add_assertion(report, "narrative: D at the top eigenvalue equals p + 2",
                              std::to_string(p + 2),
                              std::to_string(checks.decomposition_number),
                              checks.decomposition_number == p + 2 ? Verdict::Pass
                                                                   : Verdict::Flag);
            }
        }
        reports.push_back(std::move(report));
    }

    return reports;
}

TheoremReport verify_abelian_p_group(int p, const std::vector<int>& factors, int cap) {
    TheoremReport report;
    ScopedTimer timer(report.runtime_seconds);
    {
        std::string id = "abelian-p-group(p=" + std::to_string(p) + ",factors=[";
        for (size_t i = 0; i < factors.size(); ++i)
            id += (i ? "," : "") + std::to_string(factors[i]);
        report.theorem_id = id + "])";
    }
    if (factors.empty())
        throw std::invalid_argument("verify_abelian_p_group: need at least one factor");
    bool p_prime = p >= 2;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) p_prime = false;
    if (!p_prime) throw std::invalid_argument("verify_abelian_p_group: p must be prime");
    long long order = 1;
    for (int m : factors) {
        int x = m;
        while (x > 1 && x % p == 0) x /= p;
        if (x != 1 || m < p)
            throw std::invalid_argument("verify_abelian_p_group: every factor must be a power "
                                        "of p, got " + std::to_string(m));
        order *= m;
    }
    if (order > 64)
        throw std::invalid_argument("verify_abelian_p_group: group order above the desk "
                                    "budget of 64");

    FiniteGroup h = abelian_group(factors);
    Graph pg = power_graph(h);
    const int n = h.order();
    const bool cyclic = factors.size() == 1;
    report.hypotheses.push_back({"all factors are powers of p", true});
    report.hypotheses.push_back({cyclic ? "group is cyclic" : "group is non-cyclic", true});

    if (cyclic) {
        bool is_complete = pg.edge_count() == n * (n - 1) / 2;
        add_check(report, "power graph of the cyclic p-group is complete",
                  std::to_string(n * (n - 1) / 2) + " edges",
                  std::to_string(pg.edge_count()) + " edges", is_complete);

        // Difference basis e_0 - e_j at the top eigenvalue n. The all-plus
        // completion already attains the floor of 2, so the enumeration exits
        // after its first candidate even though the vectors are mostly zero.
        int violations = 0;
        bool all_eigen = true;
        for (int j = 1; j < n; ++j) {
            SignVector f;
            f.entries.assign(n, BigInt(0));
            f.entries[0] = 1;
            f.entries[j] = -1;
            if (!verify_eigenpair_exact(pg, {f.entries, f.den}, BigInt(n))) all_eigen = false;
            int d = nodal_decomposition_number(pg, f, std::max(cap, n - 2))
                        .decomposition_number;
            if (d != 2) ++violations;
        }
        add_check(report, "e_0 - e_j is an exact eigenpair at lambda = n for j = 1..n-1",
                  "true", fmt_bool(all_eigen), all_eigen);
        add_check(report, "D == 2 for every difference vector at the top eigenvalue",
                  "0 violations", std::to_string(violations) + " violations", violations == 0);
    } else {
        std::vector<int> cuts = articulation_points(pg);
        bool identity_cut =
            std::binary_search(cuts.begin(), cuts.end(), h.identity());
        add_check(report, "identity is a cut vertex of the power graph", "true",
                  fmt_bool(identity_cut), identity_cut);
        HighestChecks checks = append_highest_checks(report, pg, cap);
        if (checks.applicable)
            add_check(report, "D at the top eigenvalue exceeds 2", "> 2",
                      std::to_string(checks.decomposition_number),
                      checks.decomposition_number > 2);
    }
    return report;
}

TheoremReport verify_urschel_bound_on_basis(const Graph& g, const EigenBasis& basis,
                                            const std::string& label, int cap) {
    TheoremReport report;
    ScopedTimer timer(report.runtime_seconds);
    report.theorem_id = "urschel-bound(" + (label.empty() ? "basis" : label) + ")";
    bool connected = connected_components(g).size() == 1;
    report.hypotheses.push_back({"graph is connected", connected});
    bool sized = static_cast<int>(basis.pairs.size()) == g.vertex_count();
    report.hypotheses.push_back({"basis has one pair per vertex", sized});
    if (!connected || !sized) {
        report.applicable = false;
        report.note = "hypotheses not met";
        return report;
    }

    std::vector<EigenPair> ascending = basis.pairs;
    std::stable_sort(ascending.begin(), ascending.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
    for (size_t k = 1; k <= ascending.size(); ++k) {
        const EigenPair& pair = ascending[k - 1];
        SignVector f = sign_vector_of(pair);
        int d = nodal_decomposition_number(g, f, cap).decomposition_number;
        add_check(report,
                  "D(f_" + std::to_string(k) + ") <= " + std::to_string(k) + " for " +
                      pair_label(pair) + " at lambda = " + fmt_double(pair.value),
                  "<= " + std::to_string(k), std::to_string(d),
                  d <= static_cast<int>(k));
    }
    return report;
}

std::vector<TheoremReport> default_slb_suite(int cap) {
    std::vector<TheoremReport> reports;
    reports.push_back(verify_slb(Representation({{2, 3}, {4}, {11}}), cap, true));
    reports.push_back(verify_slb(Representation({{1, 2}, {3}}), cap));
    return reports;
}

std::vector<TheoremReport> default_highest_suite(int cap) {
    std::vector<TheoremReport> reports;
    reports.push_back(verify_highest_eigenvalue(power_graph(semidirect_pq(2, 3)),
                                                "power-graph(semidirect:p=2,q=3)", cap));
    Graph star = join(complete(1), Graph(4, {}));
    reports.push_back(verify_highest_eigenvalue(star, "star K_{1,4}", cap));
    return reports;
}

std::vector<TheoremReport> default_pq_suite(int cap) {
    std::vector<TheoremReport> reports;
    for (auto [p, q] : {std::pair<int, int>{2, 3}, {2, 5}, {3, 5}}) {
        auto batch = verify_power_graph_pq(p, q, cap);
        for (auto& report : batch) reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<TheoremReport> default_pgroup_suite(int cap) {
    std::vector<TheoremReport> reports;
    reports.push_back(verify_abelian_p_group(2, {8}, cap));
    reports.push_back(verify_abelian_p_group(2, {2, 2}, cap));
    reports.push_back(verify_abelian_p_group(2, {2, 4}, cap));
    return reports;
}

std::vector<TheoremReport> default_urschel_suite(int cap) {
    std::vector<TheoremReport> reports;
    Representation rep({{2, 3}, {4}, {11}});
    reports.push_back(verify_urschel_bound_on_basis(
        from_representation(rep), closed_form_basis(rep), "closed-form([[2,3],[4],[11]])", cap));
    Graph p3(3, {{0, 1}, {1, 2}});
    reports.push_back(
        verify_urschel_bound_on_basis(p3, eigen_decompose(p3, 1e-8), "numeric(P3)", cap));
    return reports;
}

std::vector<TheoremReport> default_full_suite(int cap) {
    std::vector<TheoremReport> reports;
    for (auto* suite : {&default_slb_suite, &default_highest_suite, &default_pq_suite,
                        &default_pgroup_suite, &default_urschel_suite}) {
        auto batch = (*suite)(cap);
        for (auto& report : batch) reports.push_back(std::move(report));
    }
    return reports;
}

int verify_exit_code(const std::vector<TheoremReport>& reports) {
    for (const auto& report : reports)
        if (report.has_fail()) return 1;
    return 0;
}

} // namespace nodalkit
