#include "nodalkit/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nodalkit {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("Graph: vertex count must be non-negative");
    n_ = n;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint " +
                                        std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range [0," + std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors: vertex out of range");
    return adjacency_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::has_edge: vertex out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

IntegerMatrix::IntegerMatrix(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("IntegerMatrix: order must be non-negative");
    entries_.assign(static_cast<size_t>(order) * order, BigInt(0));
}

bool IntegerMatrix::is_symmetric() const {
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::vector<BigInt> IntegerMatrix::row_sums() const {
    std::vector<BigInt> sums(order_, BigInt(0));
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) sums[i] += at(i, j);
    return sums;
}

IntegerMatrix laplacian(const Graph& g) {
    IntegerMatrix m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) m.at(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = -1;
        m.at(v, u) = -1;
    }
    return m;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        stack.push_back(start);
        label[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            blocks[id].push_back(v);
            for (int w : g.neighbors(v)) {
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(blocks[id].begin(), blocks[id].end());
    }
    return blocks;
}

namespace {

// Iterative low-link DFS; recursion depth on path-like graphs can reach n.
void articulation_dfs(const Graph& g, int root, std::vector<int>& disc,
                      std::vector<int>& low, std::vector<bool>& is_cut, int& timer) {
    struct Frame {
        int v;
        int parent;
        size_t next_child;
    };
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbrs = g.neighbors(f.v);
        if (f.next_child < nbrs.size()) {
            int w = nbrs[f.next_child++];
            if (w == f.parent) continue;
            if (disc[w] >= 0) {
                low[f.v] = std::min(low[f.v], disc[w]);
            } else {
                disc[w] = low[w] = timer++;
                if (f.v == root) ++root_children;
                stack.push_back({w, f.v, 0});
            }
        } else {
            int v = f.v;
            int parent = f.parent;
            stack.pop_back();
            if (parent >= 0) {
                low[parent] = std::min(low[parent], low[v]);
                if (parent != root && low[v] >= disc[parent]) is_cut[parent] = true;
            }
        }
    }
    if (root_children >= 2) is_cut[root] = true;
}

} // namespace

std::vector<int> articulation_points(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, -1);
    std::vector<bool> is_cut(n, false);
    int timer = 0;
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) articulation_dfs(g, v, disc, low, is_cut, timer);
    std::vector<int> result;
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) result.push_back(v);
    return result;
}

std::vector<int> dominating_vertices(const Graph& g) {
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.vertex_count() - 1) result.push_back(v);
    return result;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> to_parent(vertices);
    std::sort(to_parent.begin(), to_parent.end());
    to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());
    std::vector<int> to_child(g.vertex_count(), -1);
    for (size_t i = 0; i < to_parent.size(); ++i) {
        int v = to_parent[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        to_child[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (to_child[u] >= 0 && to_child[v] >= 0) edges.emplace_back(to_child[u], to_child[v]);
    return {Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

} // namespace nodalkit
