#include "nodalkit/groups.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace nodalkit {

namespace {

constexpr int kMaxGroupOrder = 512;
constexpr int kFullAssociativityOrder = 64;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_latin_square(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    std::vector<bool> seen(n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw std::invalid_argument("group table: not square");
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < n; ++b) {
            int x = table[a][b];
            if (x < 0 || x >= n || seen[x])
                throw std::invalid_argument("group table: row " + std::to_string(a) +
                                            " is not a permutation (not a Latin square)");
            seen[x] = true;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), false);
        for (int a = 0; a < n; ++a) {
            int x = table[a][b];
            if (seen[x])
                throw std::invalid_argument("group table: column " + std::to_string(b) +
                                            " is not a permutation (not a Latin square)");
            seen[x] = true;
        }
    }
}

int find_identity(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (table[e][x] != x || table[x][e] != x) ok = false;
        if (ok) return e;
    }
    throw std::invalid_argument("group table: no two-sided identity element");
}

void check_associativity(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    auto check = [&](int a, int b, int c) {
        if (table[table[a][b]][c] != table[a][table[b][c]])
            throw std::invalid_argument("group table: associativity fails at (" +
                                        std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + ")");
    };
    if (n <= kFullAssociativityOrder) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937 rng(0x9e3779b9u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < 10000; ++i) check(pick(rng), pick(rng), pick(rng));
    }
}

} // namespace

FiniteGroup FiniteGroup::from_cayley_table(std::vector<std::vector<int>> table,
                                           std::string name) {
    if (table.empty()) throw std::invalid_argument("group table: empty");
    if (static_cast<int>(table.size()) > kMaxGroupOrder)
        throw std::invalid_argument("group table: order above supported limit " +
                                    std::to_string(kMaxGroupOrder));
    check_latin_square(table);
    FiniteGroup h;
    h.identity_ = find_identity(table);
    check_associativity(table);
    h.table_ = std::move(table);
    h.name_ = std::move(name);
    return h;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return FiniteGroup::from_cayley_table(std::move(table), "cyclic:" + std::to_string(n));
}

FiniteGroup abelian_group(const std::vector<int>& cyclic_factors) {
    for (int m : cyclic_factors)
        if (m < 2) throw std::invalid_argument("abelian_group: factors must be >= 2");
    long long order = 1;
    for (int m : cyclic_factors) {
        order *= m;
        if (order > kMaxGroupOrder)
            throw std::invalid_argument("abelian_group: order above supported limit " +
                                        std::to_string(kMaxGroupOrder));
    }
    int n = static_cast<int>(order);
    int k = static_cast<int>(cyclic_factors.size());

    // Lexicographic index of a coordinate tuple, first factor most significant.
    auto decode = [&](int idx) {
        std::vector<int> coords(k);
        for (int i = k - 1; i >= 0; --i) {
            coords[i] = idx % cyclic_factors[i];
            idx /= cyclic_factors[i];
        }
        return coords;
    };
    auto encode = [&](const std::vector<int>& coords) {
        int idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * cyclic_factors[i] + coords[i];
        return idx;
    };

    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < n; ++b) {
            auto cb = decode(b);
            std::vector<int> cc(k);
            for (int i = 0; i < k; ++i) cc[i] = (ca[i] + cb[i]) % cyclic_factors[i];
            table[a][b] = encode(cc);
        }
    }
    std::string name = "abelian:";
    for (int i = 0; i < k; ++i) name += (i ? "," : "") + std::to_string(cyclic_factors[i]);
    if (k == 0) name = "abelian:trivial";
    return FiniteGroup::from_cayley_table(std::move(table), std::move(name));
}

namespace {

int pow_mod(long long base, long long exp, long long mod) {
    long long result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(result);
}

int multiplicative_order(int t, int q) {
    int x = t % q;
    for (int k = 1; k <= q; ++k) {
        if (x == 1) return k;
        x = static_cast<int>(static_cast<long long>(x) * t % q);
    }
    return -1;
}

} // namespace

FiniteGroup semidirect_pq(int p, int q, std::optional<int> multiplier) {
    if (!is_prime(p) || !is_prime(q))
        throw std::invalid_argument("semidirect_pq: p and q must be prime");
    if (p == q) throw std::invalid_argument("semidirect_pq: p and q must be distinct");
    if ((q - 1) % p != 0)
        throw std::invalid_argument("semidirect_pq: p must divide q-1 for a non-abelian group "
                                    "of order p*q to exist");
    long long order = static_cast<long long>(p) * q;
    if (order > kMaxGroupOrder)
        throw std::invalid_argument("semidirect_pq: order above supported limit " +
                                    std::to_string(kMaxGroupOrder));

    int t = 0;
    if (multiplier) {
        t = *multiplier;
        if (t <= 1 || t >= q || multiplicative_order(t, q) != p)
            throw std::invalid_argument("semidirect_pq: multiplier must have multiplicative "
                                        "order p modulo q");
    } else {
        for (int cand = 2; cand < q; ++cand)
            if (multiplicative_order(cand, q) == p) {
                t = cand;
                break;
            }
    }

    // Element (a, b) in Z_q x Z_p indexed as a*p + b.
    int n = static_cast<int>(order);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < p; ++d) {
                    int first = static_cast<int>((a + static_cast<long long>(pow_mod(t, b, q)) * c) % q);
                    int second = (b + d) % p;
                    table[a * p + b][c * p + d] = first * p + second;
                }
    std::string name = "semidirect:p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                       ",t=" + std::to_string(t);
    return FiniteGroup::from_cayley_table(std::move(table), std::move(name));
}

int element_order(const FiniteGroup& h, int x) {
    if (x < 0 || x >= h.order())
        throw std::invalid_argument("element_order: element out of range");
    int acc = x;
    int k = 1;
    while (acc != h.identity()) {
        acc = h.multiply(acc, x);
        ++k;
    }
    return k;
}

std::vector<int> cyclic_subgroup(const FiniteGroup& h, int x) {
    if (x < 0 || x >= h.order())
        throw std::invalid_argument("cyclic_subgroup: element out of range");
    std::vector<int> members;
    int acc = x;
    do {
        members.push_back(acc);
        acc = h.multiply(acc, x);
    } while (acc != x);
    std::sort(members.begin(), members.end());
    return members;
}

Graph power_graph(const FiniteGroup& h) {
    int n = h.order();
    std::vector<std::vector<bool>> in_subgroup(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y : cyclic_subgroup(h, x)) in_subgroup[x][y] = true;
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (in_subgroup[x][y] || in_subgroup[y][x]) edges.emplace_back(x, y);
    return Graph(n, edges);
}

long long euler_totient(long long n) {
    if (n < 1) throw std::invalid_argument("euler_totient: need n >= 1");
    long long count = 0;
    for (long long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

} // namespace nodalkit
