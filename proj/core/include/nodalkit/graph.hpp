#ifndef NODALKIT_GRAPH_HPP
#define NODALKIT_GRAPH_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace nodalkit {

using BigInt = mpz_class;

/// Undirected simple graph on vertices 0..n-1. Immutable after construction;
/// edges are stored canonically (u < v, sorted) and adjacency lists are
/// sorted, so two graphs are equal iff their (n, edges) pairs are equal.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Dense square matrix with arbitrary-precision integer entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(int order);

    int order() const { return order_; }
    BigInt& at(int i, int j) { return entries_[static_cast<size_t>(i) * order_ + j]; }
    const BigInt& at(int i, int j) const { return entries_[static_cast<size_t>(i) * order_ + j]; }

    bool is_symmetric() const;
    std::vector<BigInt> row_sums() const;

private:
    int order_ = 0;
    std::vector<BigInt> entries_;
};

/// Graph Laplacian: degree on the diagonal, -1 for each edge.
IntegerMatrix laplacian(const Graph& g);

/// Complement graph: distinct u, v adjacent iff not adjacent in g.
Graph complement(const Graph& g);

/// Partition of the vertex set into maximal connected blocks. Blocks are
/// ordered by smallest member and sorted internally.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Cut vertices, via depth-first low-link search. On disconnected input,
/// returns the cut vertices of each component.
std::vector<int> articulation_points(const Graph& g);

/// Vertices adjacent to every other vertex.
std::vector<int> dominating_vertices(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent; // new index -> vertex of the parent graph
};

/// Subgraph induced on `vertices`, relabeled 0..|vertices|-1 in sorted order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace nodalkit

#endif
