#ifndef NODALKIT_NODAL_HPP
#define NODALKIT_NODAL_HPP

#include "nodalkit/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nodalkit {

/// Default cap on the number of zero entries a sign-completion enumeration
/// will accept (2^22 completions, seconds at desk scale).
inline constexpr int kDefaultCompletionCap = 22;

/// Vertex-valued vector with exact sign information: integer-scaled entries
/// over one positive denominator. Only signs matter for nodal counts; the
/// magnitudes are kept for reporting.
struct SignVector {
    std::vector<BigInt> entries;
    BigInt den{1};
    double snap_threshold = 0.0; // nonzero when built from numeric data

    static SignVector from_integers(const std::vector<long long>& values);

    /// Snap tiny numeric entries to exact zero (|x| < snap_rel * ||v||_inf)
    /// and keep the sign pattern; magnitudes are reduced to -1/0/+1.
    static SignVector from_numeric(const std::vector<double>& values, double snap_rel = 1e-9);

    /// Comma-separated rationals: integers, fractions ("-2/3"), or decimals.
    static SignVector parse(const std::string& text);

    int size() const { return static_cast<int>(entries.size()); }
    int sign(int i) const { return sgn(entries[i]); }
    std::vector<int> zero_set() const;
    bool is_zero() const;
    bool has_positive() const;
    bool has_negative() const;
};

struct StrongDomains {
    int count = 0;
    std::vector<std::vector<int>> domains; // partition of the nonzero vertices
};

/// Maximal connected subgraphs on which f is strictly one sign.
StrongDomains strong_nodal_domains(const Graph& g, const SignVector& f);

/// Maximal connected subgraphs on which f is non-negative or non-positive.
/// Rejects vectors that vanish identically on a connected component.
int weak_nodal_domains(const Graph& g, const SignVector& f);

enum class NodalEdgeMode { Strong, Weak };

/// Edges whose endpoint values multiply to < 0 (strong) or <= 0 (weak).
std::vector<std::pair<int, int>> nodal_edges(const Graph& g, const SignVector& f,
                                             NodalEdgeMode mode);

/// Visit all 2^z sign completions of f in deterministic order: bit j of the
/// completion index controls the j-th zero entry in ascending vertex order,
/// bit 0 -> +1 and bit 1 -> -1. The visitor returns false to stop early.
/// Throws BudgetExceededError when the zero count exceeds `cap`.
void for_each_sign_completion(
    const SignVector& f, int cap,
    const std::function<bool(const SignVector&, std::uint64_t)>& visit);

/// Materialized completions, same order as for_each_sign_completion.
std::vector<SignVector> sign_completions(const SignVector& f, int cap = kDefaultCompletionCap);

struct NodalReport {
    int strong_count = 0;
    int weak_count = 0;
    std::vector<std::vector<int>> strong_domains;
    int decomposition_number = 0;
    SignVector witness_completion;
    std::vector<std::vector<int>> witness_partition;
    std::uint64_t search_size = 0; // 2^|zero set|
    double snap_threshold = 0.0;
};

/// Nodal decomposition number: the minimum strong-domain count over all sign
/// completions of f, found by exhaustive enumeration with early exit at the
/// certified floor (2 when f changes sign, 1 otherwise). The witness is the
/// first completion attaining the minimum in enumeration order.
NodalReport nodal_decomposition_number(const Graph& g, const SignVector& f,
                                       int cap = kDefaultCompletionCap);

struct CourantFloorReport {
    bool applicable = false;  // g connected, value != 0, f nonzero
    bool eigenpair_ok = false;
    int decomposition_number = 0;
    bool holds = false; // decomposition_number >= 2
};

/// Every eigenvector of a nonzero eigenvalue on a connected graph has at
/// least two parts in any nodal decomposition.
CourantFloorReport check_courant_floor(const Graph& g, const SignVector& f, const BigInt& value,
                                       int cap = kDefaultCompletionCap);

struct SingleNegativeReport {
    bool applicable = false;
    std::string reason;
    int decomposition_number = 0;
    bool holds = false; // decomposition_number == 2
};

/// If f has exactly one negative entry and that vertex is not a cut vertex
/// of a connected graph, the nodal decomposition number is exactly 2.
SingleNegativeReport check_single_negative_lemma(const Graph& g, const SignVector& f,
                                                 int cap = kDefaultCompletionCap);

} // namespace nodalkit

#endif
