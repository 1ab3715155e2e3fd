#include "nodalkit/nodal.hpp"

#include "nodalkit/builders.hpp"
#include "nodalkit/errors.hpp"
#include "nodalkit/groups.hpp"
#include "support/test_util.hpp"

#include <gtest/gtest.h>

namespace nodalkit {
namespace {

SignVector sv(std::vector<long long> values) { return SignVector::from_integers(values); }

Graph k(int n) { return complete(n); }

TEST(StrongNodalDomains, KnownCases) {
    EXPECT_EQ(strong_nodal_domains(k(5), sv({1, 0, 0, 0, -1})).count, 2);
    EXPECT_EQ(strong_nodal_domains(Graph(3, {{0, 1}, {1, 2}}), sv({1, 0, -1})).count, 2);
}

TEST(StrongNodalDomains, PowerGraphOfS3) {
    Graph pg = power_graph(semidirect_pq(2, 3)); // identity is vertex 0
    StrongDomains domains = strong_nodal_domains(pg, sv({5, -1, -1, -1, -1, -1}));
    EXPECT_EQ(domains.count, 5);
    std::vector<size_t> sizes;
    for (const auto& d : domains.domains) sizes.push_back(d.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<size_t>{1, 1, 1, 1, 2}));
}

TEST(WeakNodalDomains, KnownCases) {
    EXPECT_EQ(weak_nodal_domains(Graph(3, {{0, 1}, {1, 2}}), sv({1, 0, -1})), 2);
    EXPECT_EQ(weak_nodal_domains(k(5), sv({1, 0, 0, 0, -1})), 2);
}

TEST(WeakNodalDomains, MaximalityThroughZeros) {
    // On P3 with f = (1,0,0), {1,2} from the non-positive side sits inside
    // {0,1,2}; only the maximal set counts.
    EXPECT_EQ(weak_nodal_domains(Graph(3, {{0, 1}, {1, 2}}), sv({1, 0, 0})), 1);
}

TEST(WeakNodalDomains, RejectsVanishingComponent) {
    Graph two(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(weak_nodal_domains(two, sv({1, 1, 0, 0})), std::invalid_argument);
}

TEST(WeakNodalDomains, MatchesSubsetOracle) {
    std::mt19937 rng(61);
    for (int round = 0; round < 150; ++round) {
        Graph g = testing::random_connected_graph(rng, 7, 0.3);
        SignVector f = testing::random_sign_vector(rng, 7, 0.35);
        if (f.is_zero()) continue;
        EXPECT_EQ(weak_nodal_domains(g, f), testing::oracle_weak_count(g, f));
        EXPECT_EQ(strong_nodal_domains(g, f).count, testing::oracle_strong_count(g, f));
    }
}

TEST(NodalEdges, KnownCases) {
    Graph p3(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(nodal_edges(p3, sv({1, 0, -1}), NodalEdgeMode::Strong).empty());
    EXPECT_EQ(nodal_edges(p3, sv({1, 0, -1}), NodalEdgeMode::Weak).size(), 2u);
    auto both = nodal_edges(k(2), sv({1, -1}), NodalEdgeMode::Strong);
    EXPECT_EQ(both, (std::vector<std::pair<int, int>>{{0, 1}}));
    EXPECT_EQ(nodal_edges(k(2), sv({1, -1}), NodalEdgeMode::Weak), both);
}

TEST(SignCompletions, CountsAndOrder) {
    EXPECT_EQ(sign_completions(sv({1, -1})).size(), 1u);
    EXPECT_EQ(sign_completions(sv({1, 0})).size(), 2u);
    EXPECT_EQ(sign_completions(sv({0, 1, 0, -1, -1, 1, 0})).size(), 8u);

    auto completions = sign_completions(sv({0, 5, 0}));
    ASSERT_EQ(completions.size(), 4u);
    // bit 0 is the lowest zero index; 0 -> +1, 1 -> -1
    EXPECT_EQ(completions[0].entries, (std::vector<BigInt>{BigInt(1), BigInt(5), BigInt(1)}));
    EXPECT_EQ(completions[1].entries, (std::vector<BigInt>{BigInt(-1), BigInt(5), BigInt(1)}));
    EXPECT_EQ(completions[2].entries, (std::vector<BigInt>{BigInt(1), BigInt(5), BigInt(-1)}));
    EXPECT_EQ(completions[3].entries, (std::vector<BigInt>{BigInt(-1), BigInt(5), BigInt(-1)}));
}

TEST(SignCompletions, CapGuard) {
    SignVector f;
    f.entries.assign(24, BigInt(0));
    f.entries[0] = 1;
    try {
        sign_completions(f, 22);
        FAIL() << "expected BudgetExceededError";
    } catch (const BudgetExceededError& e) {
        EXPECT_EQ(e.required(), 23u);
    }
}

TEST(DecompositionNumber, CompleteGraphSecondEigenvector) {
    for (int n = 3; n <= 8; ++n) {
        std::vector<long long> values(n, 0);
        values.front() = 1;
        values.back() = -1;
        NodalReport report = nodal_decomposition_number(k(n), sv(values));
        EXPECT_EQ(report.decomposition_number, 2);
        EXPECT_EQ(report.search_size, 1ull << (n - 2));
    }
}

TEST(DecompositionNumber, Path3Witness) {
    NodalReport report = nodal_decomposition_number(Graph(3, {{0, 1}, {1, 2}}), sv({1, 0, -1}));
    EXPECT_EQ(report.decomposition_number, 2);
    EXPECT_EQ(report.witness_completion.entries,
              (std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(-1)}));
    EXPECT_EQ(report.strong_count, 2);
    EXPECT_EQ(report.weak_count, 2);
}

TEST(DecompositionNumber, NoZerosEqualsStrongCount) {
    Graph pg = power_graph(semidirect_pq(2, 3));
    NodalReport report = nodal_decomposition_number(pg, sv({5, -1, -1, -1, -1, -1}));
    EXPECT_EQ(report.decomposition_number, 5);
    EXPECT_EQ(report.search_size, 1u);
    EXPECT_EQ(report.witness_partition.size(), 5u);
}

TEST(DecompositionNumber, RejectsZeroVector) {
    EXPECT_THROW(nodal_decomposition_number(k(3), sv({0, 0, 0})), std::invalid_argument);
}

TEST(DecompositionNumber, MatchesFullEnumerationOracle) {
    std::mt19937 rng(67);
    for (int round = 0; round < 200; ++round) {
        Graph g = testing::random_connected_graph(rng, 7, 0.3);
        SignVector f = testing::random_sign_vector(rng, 7, 0.4);
        if (f.is_zero()) continue;
        NodalReport report = nodal_decomposition_number(g, f);
        EXPECT_EQ(report.decomposition_number, testing::oracle_decomposition_number(g, f));
    }
}

TEST(DecompositionNumber, WitnessPartitionInvariants) {
    std::mt19937 rng(71);
    for (int round = 0; round < 150; ++round) {
        int n = 7;
        Graph g = testing::random_connected_graph(rng, n, 0.3);
        SignVector f = testing::random_sign_vector(rng, n, 0.4);
        if (f.is_zero()) continue;
        NodalReport report = nodal_decomposition_number(g, f);

        EXPECT_EQ(report.witness_partition.size(),
                  static_cast<size_t>(report.decomposition_number));
        // blocks partition V
        std::vector<int> seen(n, 0);
        for (const auto& block : report.witness_partition)
            for (int v : block) ++seen[v];
        EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), n);
        const SignVector& w = report.witness_completion;
        // witness agrees with f off the zero set
        for (int v = 0; v < n; ++v)
            if (f.sign(v) != 0) EXPECT_EQ(w.entries[v], f.entries[v]);
        for (const auto& block : report.witness_partition) {
            // connected and constant-sign blocks
            EXPECT_EQ(connected_components(induced_subgraph(g, block).graph).size(), 1u);
            for (int v : block) EXPECT_EQ(w.sign(v), w.sign(block.front()));
        }
        // maximality: adjacent blocks carry opposite signs
        std::vector<int> block_of(n, -1);
        for (size_t b = 0; b < report.witness_partition.size(); ++b)
            for (int v : report.witness_partition[b]) block_of[v] = static_cast<int>(b);
        for (auto [u, v] : g.edges())
            if (block_of[u] != block_of[v]) EXPECT_NE(w.sign(u), w.sign(v));
        // D is bounded by the single-sign completions
        for (long fill : {1L, -1L}) {
            SignVector filled = f;
            for (int z : f.zero_set()) filled.entries[z] = fill;
            EXPECT_LE(report.decomposition_number, strong_nodal_domains(g, filled).count);
        }
    }
}

TEST(CourantFloor, EigenvectorOnTriangle) {
    CourantFloorReport report = check_courant_floor(k(3), sv({1, -1, 0}), BigInt(3));
    EXPECT_TRUE(report.applicable);
    EXPECT_TRUE(report.eigenpair_ok);
    EXPECT_EQ(report.decomposition_number, 2);
    EXPECT_TRUE(report.holds);
}

TEST(CourantFloor, ConstantVectorNotApplicable) {
    CourantFloorReport report = check_courant_floor(k(3), sv({1, 1, 1}), BigInt(0));
    EXPECT_FALSE(report.applicable);
}

TEST(CourantFloor, NonEigenvectorReported) {
    CourantFloorReport report = check_courant_floor(k(3), sv({1, -2, 0}), BigInt(3));
    EXPECT_TRUE(report.applicable);
    EXPECT_FALSE(report.eigenpair_ok);
}

TEST(SingleNegativeLemma, IntraCliqueVectorOnCorollaryGraph) {
    Representation rep({{2, 3}, {4}, {11}});
    Graph g = from_representation(rep);
    std::vector<long long> values(20, 0);
    values[0] = 1;
    values[1] = -1; // difference inside the first clique
    SingleNegativeReport report = check_single_negative_lemma(g, sv(values));
    EXPECT_TRUE(report.applicable);
    EXPECT_EQ(report.decomposition_number, 2);
    EXPECT_TRUE(report.holds);
}

TEST(SingleNegativeLemma, HypothesisFilters) {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    SingleNegativeReport center = check_single_negative_lemma(star, sv({-1, 1, 1, 1}));
    EXPECT_FALSE(center.applicable); // the negative vertex is a cut vertex

    SingleNegativeReport many = check_single_negative_lemma(k(4), sv({3, -1, -1, -1}));
    EXPECT_FALSE(many.applicable); // three negative entries
}

TEST(SignVectorParse, RationalsAndErrors) {
    SignVector f = SignVector::parse("0,1,0,-1,-1,1,0");
    EXPECT_EQ(f.size(), 7);
    EXPECT_EQ(f.den, 1);
    EXPECT_EQ(f.zero_set(), (std::vector<int>{0, 2, 6}));

    SignVector r = SignVector::parse("1/2,-3/4,0.5");
    EXPECT_EQ(r.den, 4);
    EXPECT_EQ(r.entries, (std::vector<BigInt>{BigInt(2), BigInt(-3), BigInt(2)}));

    EXPECT_THROW(SignVector::parse("1,,2"), std::invalid_argument);
    EXPECT_THROW(SignVector::parse("abc"), std::invalid_argument);
    EXPECT_THROW(SignVector::parse("1/0"), std::invalid_argument);
}

TEST(SignVectorFromNumeric, SnapsRelativeDust) {
    SignVector f = SignVector::from_numeric({1e-12, 0.5, -0.5});
    EXPECT_EQ(f.sign(0), 0);
    EXPECT_EQ(f.sign(1), 1);
    EXPECT_EQ(f.sign(2), -1);
    EXPECT_GT(f.snap_threshold, 0.0);
}

} // namespace
} // namespace nodalkit
