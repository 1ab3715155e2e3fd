// Shared test helpers: deterministic random generators and independent
// brute-force oracles. The oracles deliberately avoid the library's
// algorithms (BFS instead of union-find, subset enumeration instead of
// component pruning, cofactor expansion instead of Faddeev-LeVerrier) so a
// disagreement points at a real defect.
#ifndef NODALKIT_TEST_UTIL_HPP
#define NODALKIT_TEST_UTIL_HPP

#include "nodalkit/builders.hpp"
#include "nodalkit/graph.hpp"
#include "nodalkit/nodal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace nodalkit::testing {

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution keep(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keep(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Random spanning tree plus extra density; always connected.
inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    std::bernoulli_distribution keep(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keep(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Representation random_representation(std::mt19937& rng, int max_parts, int max_vertices) {
    std::uniform_int_distribution<int> part_count(2, max_parts);
    int s = part_count(rng);
    std::vector<std::vector<int>> parts(s);
    int budget = max_vertices;
    std::uniform_int_distribution<int> clique_count(1, 3);
    std::uniform_int_distribution<int> clique_size(1, 4);
    for (int r = 0; r < s; ++r) {
        int cliques = clique_count(rng);
        for (int i = 0; i < cliques; ++i) {
            int p = std::min(clique_size(rng), std::max(1, budget - (s - r - 1) - (cliques - i - 1)));
            parts[r].push_back(p);
            budget -= p;
        }
    }
    return Representation(parts);
}

inline SignVector random_sign_vector(std::mt19937& rng, int n, double zero_prob) {
    std::bernoulli_distribution zero(zero_prob);
    std::uniform_int_distribution<int> magnitude(1, 5);
    std::bernoulli_distribution negative(0.5);
    SignVector f;
    f.entries.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (zero(rng))
            f.entries.emplace_back(0);
        else
            f.entries.emplace_back((negative(rng) ? -1 : 1) * magnitude(rng));
    }
    return f;
}

// Strong-domain count by BFS over same-sign edges, no union-find.
inline int oracle_strong_count(const Graph& g, const SignVector& f) {
    int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || f.sign(start) == 0) continue;
        ++count;
        std::vector<int> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w] && f.sign(w) == f.sign(v)) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
    }
    return count;
}

// Weak domains straight from the definition: enumerate all vertex subsets
// (n <= ~12), keep connected sign-compatible ones, count maximal elements.
inline int oracle_weak_count(const Graph& g, const SignVector& f) {
    int n = g.vertex_count();
    auto connected_mask = [&](unsigned mask) {
        if (mask == 0) return false;
        unsigned start = mask & (~mask + 1);
        unsigned reached = start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 0; v < n; ++v) {
                if (!(reached >> v & 1)) continue;
                for (int w : g.neighbors(v)) {
                    unsigned bit = 1u << w;
                    if ((mask & bit) && !(reached & bit)) {
                        reached |= bit;
                        grew = true;
                    }
                }
            }
        }
        return reached == mask;
    };
    auto compatible = [&](unsigned mask) {
        bool pos = false, neg = false;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) {
                if (f.sign(v) > 0) pos = true;
                if (f.sign(v) < 0) neg = true;
            }
        return !(pos && neg);
    };
    std::vector<unsigned> domains;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (compatible(mask) && connected_mask(mask)) domains.push_back(mask);
    int count = 0;
    for (unsigned a : domains) {
        bool maximal = true;
        for (unsigned b : domains)
            if (a != b && (a & b) == a) maximal = false;
        if (maximal) ++count;
    }
    return count;
}

// Full completion enumeration without early exit.
inline int oracle_decomposition_number(const Graph& g, const SignVector& f) {
    std::vector<int> zeros = f.zero_set();
    int best = g.vertex_count() + 1;
    for (std::uint64_t c = 0; c < (1ULL << zeros.size()); ++c) {
        SignVector candidate = f;
        for (size_t j = 0; j < zeros.size(); ++j)
            candidate.entries[zeros[j]] = (c >> j) & 1 ? BigInt(-1) : BigInt(1);
        best = std::min(best, oracle_strong_count(g, candidate));
    }
    return best;
}

// Isomorphism by trying every permutation; n <= 8.
inline bool oracle_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Characteristic polynomial by cofactor expansion of xI - L over integer
// polynomials; n <= 7.
inline std::vector<BigInt> oracle_characteristic_polynomial(const Graph& g) {
    using Poly = std::vector<BigInt>;
    auto mul = [](const Poly& p, const Poly& q) {
        Poly out(p.size() + q.size() - 1, BigInt(0));
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
        return out;
    };
    auto add_scaled = [](Poly& acc, const Poly& p, int sign) {
        if (acc.size() < p.size()) acc.resize(p.size(), BigInt(0));
        for (size_t i = 0; i < p.size(); ++i) acc[i] += sign * p[i];
    };

    int n = g.vertex_count();
    IntegerMatrix lap = laplacian(g);
    // entries of xI - L as degree <= 1 polynomials
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = {BigInt(-lap.at(i, j))};
            if (i == j) m[i][j].push_back(BigInt(1));
        }

    std::function<Poly(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> Poly {
        if (rows.empty()) return {BigInt(1)};
        Poly acc{BigInt(0)};
        int r = rows.front();
        std::vector<int> rest_rows(rows.begin() + 1, rows.end());
        for (size_t k = 0; k < cols.size(); ++k) {
            std::vector<int> rest_cols;
            for (size_t t = 0; t < cols.size(); ++t)
                if (t != k) rest_cols.push_back(cols[t]);
            Poly term = mul(m[r][cols[k]], det(rest_rows, rest_cols));
            add_scaled(acc, term, k % 2 == 0 ? 1 : -1);
        }
        return acc;
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Poly result = det(all, all);
    result.resize(n + 1, BigInt(0));
    return result;
}

// Cut vertices by deletion: removing a cut vertex raises the component
// count (an isolated vertex lowers it, any other non-cut vertex keeps it).
inline std::vector<int> oracle_articulation_points(const Graph& g) {
    std::vector<int> cuts;
    size_t base = connected_components(g).size();
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> rest;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v) rest.push_back(u);
        size_t after = connected_components(induced_subgraph(g, rest).graph).size();
        if (after > base) cuts.push_back(v);
    }
    return cuts;
}

} // namespace nodalkit::testing

#endif
