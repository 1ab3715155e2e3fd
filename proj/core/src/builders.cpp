#include "nodalkit/builders.hpp"

#include "nodalkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nodalkit {

Representation::Representation(std::vector<std::vector<int>> part_sizes)
    : part_sizes_(std::move(part_sizes)) {
    if (part_sizes_.empty())
        throw std::invalid_argument("Representation: need at least one part");
    for (const auto& part : part_sizes_) {
        if (part.empty())
            throw std::invalid_argument("Representation: every part needs at least one clique");
        for (int p : part)
            if (p < 1) throw std::invalid_argument("Representation: clique sizes must be >= 1");
    }
}

int Representation::part_count() const { return static_cast<int>(part_sizes_.size()); }

int Representation::clique_count() const {
    int total = 0;
    for (const auto& part : part_sizes_) total += static_cast<int>(part.size());
    return total;
}

int Representation::clique_count_in_part(int r) const {
    return static_cast<int>(part_sizes_.at(r).size());
}

int Representation::part_vertex_count(int r) const {
    const auto& part = part_sizes_.at(r);
    return std::accumulate(part.begin(), part.end(), 0);
}

int Representation::vertex_count() const {
    int total = 0;
    for (int r = 0; r < part_count(); ++r) total += part_vertex_count(r);
    return total;
}

int Representation::clique_prefix(int t) const {
    if (t < 0 || t > part_count())
        throw std::out_of_range("Representation::clique_prefix: part index out of range");
    int total = 0;
    for (int r = 0; r < t; ++r) total += clique_count_in_part(r);
    return total;
}

std::vector<int> Representation::clique_sizes() const {
    std::vector<int> sizes;
    for (const auto& part : part_sizes_)
        sizes.insert(sizes.end(), part.begin(), part.end());
    return sizes;
}

std::vector<int> Representation::clique_vertex_offsets() const {
    std::vector<int> offsets;
    int at = 0;
    for (int p : clique_sizes()) {
        offsets.push_back(at);
        at += p;
    }
    return offsets;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges(a.edges());
    int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges(a.edges());
    int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph g_join(const Graph& base, const std::vector<Graph>& fibers) {
    if (static_cast<int>(fibers.size()) != base.vertex_count())
        throw std::invalid_argument("g_join: need exactly one fiber per base vertex");
    std::vector<int> offset(fibers.size() + 1, 0);
    for (size_t i = 0; i < fibers.size(); ++i)
        offset[i + 1] = offset[i] + fibers[i].vertex_count();

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < fibers.size(); ++i)
        for (auto [u, v] : fibers[i].edges())
            edges.emplace_back(u + offset[i], v + offset[i]);
    for (auto [x, y] : base.edges())
        for (int u = offset[x]; u < offset[x + 1]; ++u)
            for (int v = offset[y]; v < offset[y + 1]; ++v) edges.emplace_back(u, v);
    return Graph(offset.back(), edges);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        throw std::invalid_argument("complete_multipartite: need at least one part");
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    std::vector<int> part_of;
    for (size_t r = 0; r < part_sizes.size(); ++r)
        part_of.insert(part_of.end(), part_sizes[r], static_cast<int>(r));
    int n = static_cast<int>(part_of.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph from_representation(const Representation& rep) {
    std::vector<int> sizes = rep.clique_sizes();
    std::vector<int> offsets = rep.clique_vertex_offsets();
    std::vector<int> part_of_clique;
    for (int r = 0; r < rep.part_count(); ++r)
        part_of_clique.insert(part_of_clique.end(), rep.clique_count_in_part(r), r);

    std::vector<std::pair<int, int>> edges;
    int total_cliques = rep.clique_count();
    for (int l = 0; l < total_cliques; ++l)
        for (int u = offsets[l]; u < offsets[l] + sizes[l]; ++u)
            for (int v = u + 1; v < offsets[l] + sizes[l]; ++v) edges.emplace_back(u, v);
    for (int l = 0; l < total_cliques; ++l)
        for (int m = l + 1; m < total_cliques; ++m) {
            if (part_of_clique[l] == part_of_clique[m]) continue;
            for (int u = offsets[l]; u < offsets[l] + sizes[l]; ++u)
                for (int v = offsets[m]; v < offsets[m] + sizes[m]; ++v)
                    edges.emplace_back(u, v);
        }
    return Graph(rep.vertex_count(), edges);
}

namespace {

std::vector<long long> refinement_keys(const Graph& g) {
    int n = g.vertex_count();
    std::vector<long long> keys(n);
    for (int v = 0; v < n; ++v) {
        long long nbr_deg_sum = 0;
        for (int w : g.neighbors(v)) nbr_deg_sum += g.degree(w);
        keys[v] = static_cast<long long>(g.degree(v)) * 100000 + nbr_deg_sum;
    }
    return keys;
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& order,
                    const std::vector<long long>& keys_a, const std::vector<long long>& keys_b,
                    std::vector<int>& map_ab, std::vector<bool>& used_b, size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < b.vertex_count(); ++w) {
        if (used_b[w] || keys_a[v] != keys_b[w]) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i) {
            int u = order[i];
            if (a.has_edge(v, u) != b.has_edge(w, map_ab[u])) ok = false;
        }
        if (!ok) continue;
        map_ab[v] = w;
        used_b[w] = true;
        if (extend_mapping(a, b, order, keys_a, keys_b, map_ab, used_b, depth + 1)) return true;
        used_b[w] = false;
        map_ab[v] = -1;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count();
    if (n > 64)
        throw BudgetExceededError(
            "are_isomorphic: exact search supported up to 64 vertices, got " + std::to_string(n),
            static_cast<unsigned long long>(n));
    if (n == 0) return true;

    auto keys_a = refinement_keys(a);
    auto keys_b = refinement_keys(b);
    auto sorted_a = keys_a;
    auto sorted_b = keys_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;

    // Match rare refinement classes first to keep the branching factor low.
    std::map<long long, int> class_size;
    for (long long k : keys_a) ++class_size[k];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto cx = class_size[keys_a[x]], cy = class_size[keys_a[y]];
        if (cx != cy) return cx < cy;
        return x < y;
    });

    std::vector<int> map_ab(n, -1);
    std::vector<bool> used_b(n, false);
    return extend_mapping(a, b, order, keys_a, keys_b, map_ab, used_b, 0);
}

namespace {

// Recursive-descent parser for the builder expression language.
class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    Graph parse() {
        Graph g = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("graph expression: trailing input at position " +
                                        std::to_string(pos_));
        return g;
    }

private:
    Graph expression() {
        skip_ws();
        if (consume_word("REP")) return rep_expression();
        if (consume_word("MP")) return mp_expression();
        if (consume_word("U")) return fold_expression(&disjoint_union);
        if (consume_word("J")) return fold_expression(&join);
        if (consume_word("K")) return complete(integer());
        throw std::invalid_argument("graph expression: expected K/U/J/MP/REP at position " +
                                    std::to_string(pos_));
    }

    Graph fold_expression(Graph (*combine)(const Graph&, const Graph&)) {
        expect('(');
        Graph acc = expression();
        expect(',');
        acc = combine(acc, expression());
        while (try_consume(',')) acc = combine(acc, expression());
        expect(')');
        return acc;
    }

    Graph mp_expression() {
        expect('(');
        std::vector<int> sizes{integer()};
        while (try_consume(',')) sizes.push_back(integer());
        expect(')');
        return complete_multipartite(sizes);
    }

    Graph rep_expression() {
        expect('(');
        expect('[');
        std::vector<std::vector<int>> parts;
        parts.push_back(int_list());
        while (try_consume(',')) parts.push_back(int_list());
        expect(']');
        expect(')');
        return from_representation(Representation(parts));
    }

    std::vector<int> int_list() {
        expect('[');
        std::vector<int> values{integer()};
        while (try_consume(',')) values.push_back(integer());
        expect(']');
        return values;
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_)
            throw std::invalid_argument("graph expression: expected integer at position " +
                                        std::to_string(start));
        return std::stoi(text_.substr(start, pos_ - start));
    }

    bool consume_word(const std::string& word) {
        skip_ws();
        if (text_.compare(pos_, word.size(), word) != 0) return false;
        // Keep "MP" from being read as a stray token after "M".
        size_t end = pos_ + word.size();
        if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end])))
            return false;
        pos_ = end;
        return true;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c))
            throw std::invalid_argument(std::string("graph expression: expected '") + c +
                                        "' at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

Graph parse_graph_expression(const std::string& expr) { return ExprParser(expr).parse(); }

} // namespace nodalkit
