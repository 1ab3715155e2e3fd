#ifndef NODALKIT_SPECTRA_HPP
#define NODALKIT_SPECTRA_HPP

#include "nodalkit/builders.hpp"
#include "nodalkit/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nodalkit {

/// Eigenvalue clustering tolerance: the families built here have integer
/// Laplacian spectra with gaps >= 1, so multiplicities are robust at 1e-6.
inline constexpr double kEigenClusterTol = 1e-6;

/// Rational vector stored as integer numerators over one positive denominator.
struct RationalVector {
    std::vector<BigInt> nums;
    BigInt den{1};

    int size() const { return static_cast<int>(nums.size()); }
    bool is_zero() const;
};

enum class EigenFamily {
    Constant,       // all-ones vector at eigenvalue 0
    PartDifference, // supported on two cliques of one part
    IntraClique,    // difference of two vertices inside one clique
    Top,            // part against last part, at the vertex count
    Numeric,
};

/// Wire tags: CONST, Z, X, Y, NUMERIC.
std::string eigen_family_tag(EigenFamily family);

struct EigenPair {
    EigenFamily family = EigenFamily::Numeric;
    double value = 0.0;
    std::optional<BigInt> exact_value; // set for closed-form pairs
    RationalVector exact_vector;       // integer-scaled; empty for numeric pairs
    std::vector<double> numeric_vector;
    // Family coordinates (1-based, -1 when not applicable): part, global
    // clique index, index within the family.
    int part = -1;
    int clique = -1;
    int index = -1;
};

struct EigenCluster {
    double value = 0.0;
    std::optional<BigInt> exact_value;
    int multiplicity = 0;
};

struct EigenBasis {
    bool exact = false;
    std::vector<EigenPair> pairs;      // numeric: ascending; exact: family order
    std::vector<EigenCluster> clusters; // ascending by value
};

/// Dense symmetric eigendecomposition of the Laplacian by cyclic Jacobi
/// rotations, iterated until the largest off-diagonal entry drops below
/// 1e-12 * ||L||_F. Eigenvalues ascend; every pair is residual-checked
/// against `tol`; values within kEigenClusterTol are merged into clusters.
EigenBasis eigen_decompose(const Graph& g, double tol = 1e-8);

/// Exact eigenbasis of a clique-join representation, requiring at least two
/// parts. Emits exactly N integer-scaled pairs in family order (constant,
/// part-difference, intra-clique, top); every pair is verified in exact
/// arithmetic before being returned.
EigenBasis closed_form_basis(const Representation& rep);

/// True iff L(g) * v == value * v entrywise in exact integer arithmetic
/// (after clearing the denominator). The zero vector is rejected.
bool verify_eigenpair_exact(const Graph& g, const RationalVector& v, const BigInt& value);

/// Characteristic polynomial of L(g), det(xI - L), as coefficients in
/// ascending degree order (monic). Exact-arithmetic budget: n <= 64.
std::vector<BigInt> characteristic_polynomial(const Graph& g);

struct JoinSpectrumReport {
    bool identity_holds = false;
    std::vector<BigInt> lhs; // theta(a+b, x) * (x-n1) * (x-n2)
    std::vector<BigInt> rhs; // x * (x-n1-n2) * theta(a, x-n2) * theta(b, x-n1)
};

/// Checks the join characteristic-polynomial identity as an exact big-integer
/// polynomial identity.
JoinSpectrumReport join_spectrum_identity_check(const Graph& a, const Graph& b);

struct MoharReport {
    double lambda_max = 0.0;
    int n = 0;
    bool bound_holds = false;           // lambda_max <= n + tol
    bool complement_connected = false;
    bool equality = false;              // |lambda_max - n| < kEigenClusterTol
    bool equality_consistent = false;   // equality <=> complement disconnected
};

/// lambda_max(G) <= n, with equality exactly when the complement is
/// disconnected.
MoharReport mohar_bound_check(const Graph& g, double tol = 1e-8);

/// Rank over the rationals via fraction-free Gaussian elimination.
int exact_rank(std::vector<std::vector<BigInt>> rows);

} // namespace nodalkit

#endif
