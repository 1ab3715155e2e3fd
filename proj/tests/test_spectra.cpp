#include "nodalkit/spectra.hpp"

#include "nodalkit/errors.hpp"
#include "support/test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace nodalkit {
namespace {

Graph k(int n) { return complete(n); }

std::vector<std::pair<double, int>> cluster_summary(const EigenBasis& basis) {
    std::vector<std::pair<double, int>> out;
    for (const auto& c : basis.clusters) out.emplace_back(c.value, c.multiplicity);
    return out;
}

TEST(EigenDecompose, CompleteGraph) {
    EigenBasis basis = eigen_decompose(k(4));
    ASSERT_EQ(basis.clusters.size(), 2u);
    EXPECT_NEAR(basis.clusters[0].value, 0.0, 1e-10);
    EXPECT_EQ(basis.clusters[0].multiplicity, 1);
    EXPECT_NEAR(basis.clusters[1].value, 4.0, 1e-10);
    EXPECT_EQ(basis.clusters[1].multiplicity, 3);
}

TEST(EigenDecompose, Path3HasHandDerivedSpectrum) {
    // Characteristic polynomial x^3 - 4x^2 + 3x factors as x(x-1)(x-3).
    EigenBasis basis = eigen_decompose(Graph(3, {{0, 1}, {1, 2}}));
    ASSERT_EQ(basis.pairs.size(), 3u);
    EXPECT_NEAR(basis.pairs[0].value, 0.0, 1e-10);
    EXPECT_NEAR(basis.pairs[1].value, 1.0, 1e-10);
    EXPECT_NEAR(basis.pairs[2].value, 3.0, 1e-10);
}

TEST(EigenDecompose, OrthonormalAndNonNegative) {
    std::mt19937 rng(31);
    for (int round = 0; round < 20; ++round) {
        Graph g = testing::random_graph(rng, 10, 0.4);
        EigenBasis basis = eigen_decompose(g);
        int n = g.vertex_count();
        for (int i = 0; i < n; ++i) {
            EXPECT_GT(basis.pairs[i].value, -1e-9);
            for (int j = i; j < n; ++j) {
                double dot = 0;
                for (int t = 0; t < n; ++t)
                    dot += basis.pairs[i].numeric_vector[t] * basis.pairs[j].numeric_vector[t];
                EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-8);
            }
        }
    }
}

TEST(EigenDecompose, ZeroMultiplicityEqualsComponentCount) {
    std::mt19937 rng(37);
    for (int round = 0; round < 30; ++round) {
        Graph g = testing::random_graph(rng, 9, 0.2);
        EigenBasis basis = eigen_decompose(g);
        EXPECT_EQ(basis.clusters.front().multiplicity,
                  static_cast<int>(connected_components(g).size()));
    }
}

TEST(ClosedFormBasis, TwoVertexJoin) {
    EigenBasis basis = closed_form_basis(Representation({{1}, {1}}));
    ASSERT_EQ(basis.pairs.size(), 2u);
    EXPECT_EQ(cluster_summary(basis),
              (std::vector<std::pair<double, int>>{{0.0, 1}, {2.0, 1}}));
    EXPECT_EQ(basis.pairs[1].exact_vector.nums, (std::vector<BigInt>{BigInt(1), BigInt(-1)}));
}

TEST(ClosedFormBasis, PowerGraphOfZ6Shape) {
    EigenBasis basis = closed_form_basis(Representation({{1, 2}, {3}}));
    EXPECT_EQ(cluster_summary(basis),
              (std::vector<std::pair<double, int>>{{0, 1}, {3, 1}, {5, 1}, {6, 3}}));
}

TEST(ClosedFormBasis, CorollaryGraphLedger) {
    Representation rep({{2, 3}, {4}, {11}});
    EigenBasis basis = closed_form_basis(rep);
    EXPECT_EQ(basis.pairs.size(), 20u);
    EXPECT_EQ(cluster_summary(basis),
              (std::vector<std::pair<double, int>>{{0, 1}, {15, 1}, {17, 1}, {18, 2}, {20, 15}}));
    // 1 + (s-1) + sum(n_r - 1) + sum(p_l - 1) = 1 + 2 + 1 + 16 = 20
    int ledger = 1 + (rep.part_count() - 1);
    for (int r = 0; r < rep.part_count(); ++r) ledger += rep.clique_count_in_part(r) - 1;
    for (int p : rep.clique_sizes()) ledger += p - 1;
    EXPECT_EQ(ledger, 20);
}

TEST(ClosedFormBasis, RejectsSinglePart) {
    EXPECT_THROW(closed_form_basis(Representation({{2, 3}})), std::invalid_argument);
}

TEST(ClosedFormBasis, PairsVerifyExactlyAndSpanFullRank) {
    std::mt19937 rng(41);
    for (int round = 0; round < 15; ++round) {
        Representation rep = testing::random_representation(rng, 3, 16);
        Graph g = from_representation(rep);
        EigenBasis basis = closed_form_basis(rep);
        std::vector<std::vector<BigInt>> rows;
        for (const auto& pair : basis.pairs) {
            EXPECT_TRUE(verify_eigenpair_exact(g, pair.exact_vector, *pair.exact_value));
            rows.push_back(pair.exact_vector.nums);
        }
        EXPECT_EQ(exact_rank(rows), rep.vertex_count());
    }
}

TEST(ClosedFormBasis, AgreesWithNumericSolver) {
    std::mt19937 rng(43);
    for (int round = 0; round < 15; ++round) {
        Representation rep = testing::random_representation(rng, 3, 20);
        Graph g = from_representation(rep);
        EigenBasis exact = closed_form_basis(rep);
        EigenBasis numeric = eigen_decompose(g);
        std::vector<double> values;
        for (const auto& pair : exact.pairs) values.push_back(pair.value);
        std::sort(values.begin(), values.end());
        for (size_t i = 0; i < values.size(); ++i)
            EXPECT_NEAR(values[i], numeric.pairs[i].value, 1e-8);
    }
}

TEST(VerifyEigenpairExact, KnownCases) {
    Graph k3 = k(3);
    EXPECT_TRUE(verify_eigenpair_exact(k3, {{BigInt(1), BigInt(-1), BigInt(0)}, BigInt(1)},
                                       BigInt(3)));
    EXPECT_TRUE(verify_eigenpair_exact(k3, {{BigInt(1), BigInt(1), BigInt(1)}, BigInt(1)},
                                       BigInt(0)));
    EXPECT_FALSE(verify_eigenpair_exact(k3, {{BigInt(1), BigInt(-1), BigInt(0)}, BigInt(1)},
                                        BigInt(2)));
    EXPECT_FALSE(verify_eigenpair_exact(k3, {{BigInt(0), BigInt(0), BigInt(0)}, BigInt(1)},
                                        BigInt(0)));
    EXPECT_THROW(verify_eigenpair_exact(k3, {{BigInt(1)}, BigInt(1)}, BigInt(0)),
                 std::invalid_argument);
}

TEST(CharacteristicPolynomial, SmallCases) {
    EXPECT_EQ(characteristic_polynomial(k(2)),
              (std::vector<BigInt>{BigInt(0), BigInt(-2), BigInt(1)}));
    EXPECT_EQ(characteristic_polynomial(Graph(3, {{0, 1}, {1, 2}})),
              (std::vector<BigInt>{BigInt(0), BigInt(3), BigInt(-4), BigInt(1)}));
}

TEST(CharacteristicPolynomial, MatchesCofactorOracle) {
    std::mt19937 rng(47);
    for (int round = 0; round < 40; ++round) {
        Graph g = testing::random_graph(rng, 6, 0.5);
        EXPECT_EQ(characteristic_polynomial(g), testing::oracle_characteristic_polynomial(g));
    }
}

TEST(CharacteristicPolynomial, ConstantTermVanishes) {
    std::mt19937 rng(53);
    for (int round = 0; round < 30; ++round) {
        Graph g = testing::random_graph(rng, 8, 0.4);
        EXPECT_EQ(characteristic_polynomial(g).front(), 0);
    }
}

TEST(CharacteristicPolynomial, BudgetGuard) {
    EXPECT_THROW(characteristic_polynomial(Graph(65, {})), BudgetExceededError);
}

TEST(JoinSpectrumIdentity, SmallCases) {
    EXPECT_TRUE(join_spectrum_identity_check(k(1), k(1)).identity_holds);
    EXPECT_TRUE(join_spectrum_identity_check(k(2), k(1)).identity_holds);
}

TEST(JoinSpectrumIdentity, RandomPairs) {
    std::mt19937 rng(59);
    for (int round = 0; round < 25; ++round) {
        Graph a = testing::random_graph(rng, 5, 0.4);
        Graph b = testing::random_graph(rng, 6, 0.4);
        EXPECT_TRUE(join_spectrum_identity_check(a, b).identity_holds);
    }
}

TEST(MoharBound, CompleteGraph) {
    MoharReport report = mohar_bound_check(k(6));
    EXPECT_TRUE(report.bound_holds);
    EXPECT_TRUE(report.equality);
    EXPECT_FALSE(report.complement_connected);
    EXPECT_TRUE(report.equality_consistent);
}

TEST(MoharBound, Path3EqualityCase) {
    MoharReport report = mohar_bound_check(Graph(3, {{0, 1}, {1, 2}}));
    EXPECT_TRUE(report.equality); // lambda_max = 3 = n; complement is disconnected
    EXPECT_FALSE(report.complement_connected);
    EXPECT_TRUE(report.equality_consistent);
}

TEST(MoharBound, FiveCycleStrictCase) {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    MoharReport report = mohar_bound_check(c5);
    EXPECT_TRUE(report.bound_holds);
    EXPECT_FALSE(report.equality);
    EXPECT_TRUE(report.complement_connected);
    EXPECT_TRUE(report.equality_consistent);
    EXPECT_LT(report.lambda_max, 5.0);
}

TEST(ExactRank, SmallCases) {
    EXPECT_EQ(exact_rank({{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}}), 2);
    EXPECT_EQ(exact_rank({{BigInt(2), BigInt(4)}, {BigInt(1), BigInt(2)}}), 1);
    EXPECT_EQ(exact_rank({{BigInt(0), BigInt(0)}}), 0);
    EXPECT_EQ(exact_rank({{BigInt(3), BigInt(1), BigInt(2)},
                          {BigInt(1), BigInt(1), BigInt(0)},
                          {BigInt(4), BigInt(2), BigInt(2)}}),
              2);
}

} // namespace
} // namespace nodalkit
