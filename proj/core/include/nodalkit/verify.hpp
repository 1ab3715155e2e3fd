#ifndef NODALKIT_VERIFY_HPP
#define NODALKIT_VERIFY_HPP

#include "nodalkit/builders.hpp"
#include "nodalkit/graph.hpp"
#include "nodalkit/nodal.hpp"
#include "nodalkit/spectra.hpp"

#include <string>
#include <vector>

namespace nodalkit {

enum class Verdict { Pass, Fail, Flag };

std::string verdict_tag(Verdict verdict); // PASS / FAIL / FLAG

struct HypothesisCheck {
    std::string name;
    bool pass = false;
};

/// One checked statement. FLAG marks the places where a narrative value and
/// the computed value disagree while the corrected statement passes; FAIL is
/// reserved for violations of corrected statements.
struct Assertion {
    std::string statement;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::Pass;
};

struct TheoremReport {
    std::string theorem_id;
    bool applicable = true;
    std::string note; // reason when not applicable
    std::vector<HypothesisCheck> hypotheses;
    std::vector<Assertion> assertions;
    double runtime_seconds = 0.0;

    bool has_fail() const;
    bool has_flag() const;
};

/// Every closed-form basis vector at a nonzero, non-maximal eigenvalue has
/// nodal decomposition number exactly 2; part-difference vectors split the
/// graph into a clique and its connected remainder. With
/// `check_top_simplicity_narrative`, additionally compares the top
/// eigenvalue's multiplicity against the narrative claim of simplicity
/// (FLAG on mismatch).
TheoremReport verify_slb(const Representation& rep, int cap = kDefaultCompletionCap,
                         bool check_top_simplicity_narrative = false);

/// For a connected graph whose unique dominating vertex is also a cut
/// vertex: the top eigenvalue equals the vertex count and is simple, the
/// vector (n-1, -1, ..., -1) is an exact eigenpair, and its decomposition
/// number is 1 + c(G - v) >= 3. The narrative comparison against the
/// complement's component count is FLAGged when it disagrees.
TheoremReport verify_highest_eigenvalue(const Graph& g, const std::string& label = "",
                                        int cap = kDefaultCompletionCap);

/// Power graphs of groups of order p*q, p < q primes. Returns two reports:
/// the cyclic case (clique-join shape + middle-eigenvalue checks) and the
/// non-abelian case (top-eigenvalue checks plus the p+2 narrative), which is
/// NOT-APPLICABLE when p does not divide q-1.
std::vector<TheoremReport> verify_power_graph_pq(int p, int q, int cap = kDefaultCompletionCap);

/// Abelian p-group characterization: cyclic groups have complete power
/// graphs with D == 2 across a top-eigenvalue basis; non-cyclic groups have
/// the identity as a cut vertex and D > 2 at the top eigenvalue.
TheoremReport verify_abelian_p_group(int p, const std::vector<int>& factors,
                                     int cap = kDefaultCompletionCap);

/// D(f_k) <= k for the basis at hand, pairs sorted ascending by eigenvalue
/// (stable on the basis order). Checks the constructed basis only.
TheoremReport verify_urschel_bound_on_basis(const Graph& g, const EigenBasis& basis,
                                            const std::string& label = "",
                                            int cap = kDefaultCompletionCap);

std::vector<TheoremReport> default_slb_suite(int cap = kDefaultCompletionCap);
std::vector<TheoremReport> default_highest_suite(int cap = kDefaultCompletionCap);
std::vector<TheoremReport> default_pq_suite(int cap = kDefaultCompletionCap);
std::vector<TheoremReport> default_pgroup_suite(int cap = kDefaultCompletionCap);
std::vector<TheoremReport> default_urschel_suite(int cap = kDefaultCompletionCap);
std::vector<TheoremReport> default_full_suite(int cap = kDefaultCompletionCap);

/// 0 when no report carries a FAIL verdict, 1 otherwise (FLAGs are allowed).
int verify_exit_code(const std::vector<TheoremReport>& reports);

} // namespace nodalkit

#endif
