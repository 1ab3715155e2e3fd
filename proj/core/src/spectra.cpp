#include "nodalkit/spectra.hpp"

#include "nodalkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nodalkit {

bool RationalVector::is_zero() const {
    return std::all_of(nums.begin(), nums.end(), [](const BigInt& x) { return x == 0; });
}

std::string eigen_family_tag(EigenFamily family) {
    switch (family) {
        case EigenFamily::Constant: return "CONST";
        case EigenFamily::PartDifference: return "Z";
        case EigenFamily::IntraClique: return "X";
        case EigenFamily::Top: return "Y";
        case EigenFamily::Numeric: return "NUMERIC";
    }
    throw std::logic_error("eigen_family_tag: unknown family");
}

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr int kCharPolyBudget = 64;

std::vector<EigenCluster> cluster_values(const std::vector<EigenPair>& ascending) {
    std::vector<EigenCluster> clusters;
    for (const auto& pair : ascending) {
        if (!clusters.empty() && pair.value - clusters.back().value < kEigenClusterTol) {
            ++clusters.back().multiplicity;
            if (clusters.back().exact_value != pair.exact_value)
                clusters.back().exact_value.reset();
        } else {
            clusters.push_back({pair.value, pair.exact_value, 1});
        }
    }
    return clusters;
}

void orient_first_nonzero_positive(std::vector<double>& v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

} // namespace

EigenBasis eigen_decompose(const Graph& g, double tol) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("eigen_decompose: graph needs at least one vertex");
    if (tol <= 0) throw std::invalid_argument("eigen_decompose: tol must be positive");

    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) a[v][v] = g.degree(v);
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = -1.0;
    std::vector<std::vector<double>> lap = a;

    double frobenius = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frobenius += a[i][j] * a[i][j];
    frobenius = std::sqrt(frobenius);
    const double stop = 1e-12 * frobenius;

    std::vector<std::vector<double>> vec(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) vec[i][i] = 1.0;

    int sweep = 0;
    for (; sweep < kMaxJacobiSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p][q]));
        if (off <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (std::abs(apq) <= stop) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
                    a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = vec[k][p], vkq = vec[k][q];
                    vec[k][p] = vkp - s * (vkq + tau * vkp);
                    vec[k][q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
    if (sweep == kMaxJacobiSweeps)
        throw std::runtime_error("eigen_decompose: Jacobi iteration did not converge within " +
                                 std::to_string(kMaxJacobiSweeps) + " sweeps");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });

    EigenBasis basis;
    basis.exact = false;
    for (int idx : order) {
        EigenPair pair;
        pair.family = EigenFamily::Numeric;
        pair.value = a[idx][idx];
        pair.numeric_vector.resize(n);
        for (int k = 0; k < n; ++k) pair.numeric_vector[k] = vec[k][idx];
        orient_first_nonzero_positive(pair.numeric_vector);

        double residual = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += lap[i][j] * pair.numeric_vector[j];
            residual = std::max(residual, std::abs(row - pair.value * pair.numeric_vector[i]));
        }
        if (residual >= tol)
            throw std::runtime_error("eigen_decompose: residual " + std::to_string(residual) +
                                     " exceeds tolerance");
        basis.pairs.push_back(std::move(pair));
    }
    basis.clusters = cluster_values(basis.pairs);
    return basis;
}

EigenBasis closed_form_basis(const Representation& rep) {
    int s = rep.part_count();
    if (s < 2)
        throw std::invalid_argument(
            "closed_form_basis: the base graph must have at least two parts (a join), "
            "otherwise the vertex count is not an eigenvalue of the Laplacian");

    const Graph g = from_representation(rep);
    const int total = rep.vertex_count();
    const std::vector<int> sizes = rep.clique_sizes();
    const std::vector<int> offsets = rep.clique_vertex_offsets();

    auto clique_block = [&](int l) { // l is a 0-based global clique index
        return std::pair<int, int>{offsets[l], offsets[l] + sizes[l]};
    };

    EigenBasis basis;
    basis.exact = true;

    auto push_pair = [&](EigenFamily family, long value, std::vector<BigInt> nums,
                         int part, int clique, int index) {
        EigenPair pair;
        pair.family = family;
        pair.exact_value = BigInt(value);
        pair.value = static_cast<double>(value);
        pair.exact_vector = {std::move(nums), BigInt(1)};
        pair.part = part;
        pair.clique = clique;
        pair.index = index;
        if (!verify_eigenpair_exact(g, pair.exact_vector, *pair.exact_value))
            throw std::logic_error("closed_form_basis: constructed pair failed exact check");
        basis.pairs.push_back(std::move(pair));
    };

    push_pair(EigenFamily::Constant, 0, std::vector<BigInt>(total, BigInt(1)), -1, -1, -1);

    // Part-difference family: one clique of a part against the part's last
    // clique, zero elsewhere; eigenvalue N - N_r, multiplicity n_r - 1.
    // Scaled by the last clique's order so entries are integers.
    for (int r = 0; r < s; ++r) {
        int n_r = rep.clique_count_in_part(r);
        int last = rep.clique_prefix(r + 1) - 1;
        long value = total - rep.part_vertex_count(r);
        for (int w = 1; w <= n_r - 1; ++w) {
            int cur = rep.clique_prefix(r) + w - 1;
            std::vector<BigInt> nums(total, BigInt(0));
            auto [cb, ce] = clique_block(cur);
            for (int q = cb; q < ce; ++q) nums[q] = sizes[last];
            auto [lb, le] = clique_block(last);
            for (int q = lb; q < le; ++q) nums[q] = -sizes[cur];
            push_pair(EigenFamily::PartDifference, value, std::move(nums), r + 1, cur + 1, w);
        }
    }

    // Intra-clique family: difference of two vertices of one clique;
    // eigenvalue N - N_r + p_l, multiplicity p_l - 1 per clique.
    for (int r = 0; r < s; ++r) {
        long base_value = total - rep.part_vertex_count(r);
        for (int l = rep.clique_prefix(r); l < rep.clique_prefix(r + 1); ++l) {
            int anchor = offsets[l] + sizes[l] - 1;
            for (int w = 1; w <= sizes[l] - 1; ++w) {
                std::vector<BigInt> nums(total, BigInt(0));
                nums[anchor - w] = 1;
                nums[anchor] = -1;
                push_pair(EigenFamily::IntraClique, base_value + sizes[l], std::move(nums),
                          r + 1, l + 1, w);
            }
        }
    }

    // Top family: one part against the last part; eigenvalue N, multiplicity
    // s - 1. Scaled by the last part's vertex count.
    {
        long last_part_count = rep.part_vertex_count(s - 1);
        for (int w = 1; w <= s - 1; ++w) {
            std::vector<BigInt> nums(total, BigInt(0));
            for (int l = rep.clique_prefix(w - 1); l < rep.clique_prefix(w); ++l) {
                auto [cb, ce] = clique_block(l);
                for (int q = cb; q < ce; ++q) nums[q] = last_part_count;
            }
            long part_count_w = rep.part_vertex_count(w - 1);
            for (int l = rep.clique_prefix(s - 1); l < rep.clique_prefix(s); ++l) {
                auto [cb, ce] = clique_block(l);
                for (int q = cb; q < ce; ++q) nums[q] = -part_count_w;
            }
            push_pair(EigenFamily::Top, total, std::move(nums), w, -1, w);
        }
    }

    if (static_cast<int>(basis.pairs.size()) != total)
        throw std::logic_error("closed_form_basis: multiplicity ledger does not sum to N");

    std::vector<EigenPair> ascending = basis.pairs;
    std::stable_sort(ascending.begin(), ascending.end(),
                     [](const EigenPair& a, const EigenPair& b) {
                         return *a.exact_value < *b.exact_value;
                     });
    basis.clusters = cluster_values(ascending);
    return basis;
}

bool verify_eigenpair_exact(const Graph& g, const RationalVector& v, const BigInt& value) {
    if (v.size() != g.vertex_count())
        throw std::invalid_argument("verify_eigenpair_exact: vector length does not match "
                                    "vertex count");
    if (v.den <= 0)
        throw std::invalid_argument("verify_eigenpair_exact: denominator must be positive");
    if (v.is_zero()) return false;
    // The denominator clears: L(x/d) = v(x/d) iff Lx = vx.
    for (int i = 0; i < g.vertex_count(); ++i) {
        BigInt acc = BigInt(g.degree(i)) * v.nums[i];
        for (int j : g.neighbors(i)) acc -= v.nums[j];
        if (acc != value * v.nums[i]) return false;
    }
    return true;
}

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// p(x - c) by Horner: fold coefficients from the top through (x - c).
std::vector<BigInt> poly_shift(const std::vector<BigInt>& p, long c) {
    std::vector<BigInt> out{p.back()};
    for (size_t k = p.size() - 1; k-- > 0;) {
        out.insert(out.begin(), BigInt(0));
        for (size_t i = 0; i + 1 < out.size(); ++i) out[i] -= BigInt(c) * out[i + 1];
        out[0] += p[k];
    }
    return out;
}

std::vector<BigInt> linear_factor(long root) { return {BigInt(-root), BigInt(1)}; }

} // namespace

std::vector<BigInt> characteristic_polynomial(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCharPolyBudget)
        throw BudgetExceededError("characteristic_polynomial: exact-arithmetic budget is n <= " +
                                      std::to_string(kCharPolyBudget) + ", got n = " +
                                      std::to_string(n),
                                  static_cast<unsigned long long>(n));
    IntegerMatrix lap = laplacian(g);

    // Faddeev-LeVerrier: M_k = L*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(L*M_k)/k.
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    coeffs[n] = 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m[i][i] += coeffs[n - k + 1];
        std::vector<std::vector<BigInt>> lm(n, std::vector<BigInt>(n, BigInt(0)));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                const BigInt& lit = lap.at(i, t);
                if (lit == 0) continue;
                for (int j = 0; j < n; ++j) lm[i][j] += lit * m[t][j];
            }
        BigInt trace(0);
        for (int i = 0; i < n; ++i) trace += lm[i][i];
        if (trace % k != 0)
            throw std::logic_error("characteristic_polynomial: non-exact trace division");
        coeffs[n - k] = -trace / k;
        m = std::move(lm);
    }
    return coeffs;
}

JoinSpectrumReport join_spectrum_identity_check(const Graph& a, const Graph& b) {
    long n1 = a.vertex_count();
    long n2 = b.vertex_count();
    std::vector<BigInt> theta_join = characteristic_polynomial(join(a, b));
    std::vector<BigInt> theta_a = characteristic_polynomial(a);
    std::vector<BigInt> theta_b = characteristic_polynomial(b);

    JoinSpectrumReport report;
    report.lhs = poly_mul(poly_mul(theta_join, linear_factor(n1)), linear_factor(n2));
    report.rhs = poly_mul(poly_mul(linear_factor(0), linear_factor(n1 + n2)),
                          poly_mul(poly_shift(theta_a, n2), poly_shift(theta_b, n1)));
    report.identity_holds = report.lhs == report.rhs;
    return report;
}

MoharReport mohar_bound_check(const Graph& g, double tol) {
    MoharReport report;
    report.n = g.vertex_count();
    EigenBasis basis = eigen_decompose(g, tol);
    report.lambda_max = basis.pairs.back().value;
    report.bound_holds = report.lambda_max <= report.n + tol;
    report.complement_connected = connected_components(complement(g)).size() == 1;
    report.equality = std::abs(report.lambda_max - report.n) < kEigenClusterTol;
    report.equality_consistent = report.equality == !report.complement_connected;
    return report;
}

int exact_rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    for (const auto& row : rows)
        if (row.size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");

    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m[i][j] = mpq_class(rows[i][j]);

    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t pivot_row = rank;
        while (pivot_row < m.size() && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == m.size()) continue;
        std::swap(m[rank], m[pivot_row]);
        for (size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            mpq_class factor = m[i][col] / m[rank][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace nodalkit
