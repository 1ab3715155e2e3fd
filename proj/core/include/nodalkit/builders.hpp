#ifndef NODALKIT_BUILDERS_HPP
#define NODALKIT_BUILDERS_HPP

#include "nodalkit/graph.hpp"

#include <string>
#include <vector>

namespace nodalkit {

/// Clique-join layout over a complete multipartite base graph.
///
/// `parts()[r]` lists the orders of the cliques substituted into the r-th
/// independent part, in layout order. Only the part sizes are stored; every
/// derived count is recomputed on demand.
class Representation {
public:
    explicit Representation(std::vector<std::vector<int>> part_sizes);

    const std::vector<std::vector<int>>& parts() const { return part_sizes_; }

    int part_count() const; // s
    int clique_count() const; // total number of cliques
    int clique_count_in_part(int r) const; // n_r, r 0-based
    int part_vertex_count(int r) const; // N_r
    int vertex_count() const; // N

    /// Number of cliques in parts 0..t-1 (so clique_prefix(0) == 0).
    int clique_prefix(int t) const;

    /// Clique orders flattened in layout order.
    std::vector<int> clique_sizes() const;

    /// First vertex of each clique block under the canonical layout.
    std::vector<int> clique_vertex_offsets() const;

private:
    std::vector<std::vector<int>> part_sizes_;
};

/// Complete graph on n >= 1 vertices.
Graph complete(int n);

/// Disjoint union; b's vertices are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Join: disjoint union plus all cross edges.
Graph join(const Graph& a, const Graph& b);

/// Replace each base vertex by its fiber graph; cross-fiber edges are all
/// present or all absent following base adjacency. Fiber blocks are laid out
/// in base-vertex order.
Graph g_join(const Graph& base, const std::vector<Graph>& fibers);

/// Complete multipartite graph; u, v adjacent iff they lie in different parts.
Graph complete_multipartite(const std::vector<int>& part_sizes);

/// Build the graph of a representation: cliques laid out block by block,
/// parts in listed order, with cross edges exactly between different parts.
Graph from_representation(const Representation& rep);

/// Exact isomorphism test by backtracking search with degree refinement.
/// Supported up to 64 vertices; throws BudgetExceededError beyond that.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Builder expression mini-language:
///   K5  U(K2,K3)  J(a,b)  MP(2,3)  REP([[2,3],[4],[11]])
/// U and J accept two or more arguments and fold left.
Graph parse_graph_expression(const std::string& expr);

} // namespace nodalkit

#endif
