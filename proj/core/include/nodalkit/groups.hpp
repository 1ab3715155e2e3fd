#ifndef NODALKIT_GROUPS_HPP
#define NODALKIT_GROUPS_HPP

#include "nodalkit/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nodalkit {

/// Finite group as a validated multiplication table. Construction checks the
/// Latin-square property, locates the identity, and checks associativity
/// (exhaustively up to order 64, on 10^4 random triples above).
class FiniteGroup {
public:
    static FiniteGroup from_cayley_table(std::vector<std::vector<int>> table,
                                         std::string name = "");

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int multiply(int a, int b) const { return table_.at(a).at(b); }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::string& name() const { return name_; }

private:
    FiniteGroup() = default;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::string name_;
};

/// Z_n with table[a][b] = (a+b) mod n, identity 0.
FiniteGroup cyclic_group(int n);

/// Direct product of cyclic groups, elements indexed lexicographically by
/// their coordinate tuples. An empty factor list gives the trivial group.
FiniteGroup abelian_group(const std::vector<int>& cyclic_factors);

/// Non-abelian group of order p*q for primes p | q-1: elements (a,b) in
/// Z_q x Z_p with (a,b)*(c,d) = (a + t^b c mod q, b+d mod p), indexed a*p+b.
/// The multiplier t must have multiplicative order p mod q; by default the
/// smallest such t > 1 is chosen and recorded in the group name.
FiniteGroup semidirect_pq(int p, int q, std::optional<int> multiplier = std::nullopt);

/// Smallest k >= 1 with x^k = identity.
int element_order(const FiniteGroup& h, int x);

/// {x^k : k >= 1}, sorted; always contains the identity.
std::vector<int> cyclic_subgroup(const FiniteGroup& h, int x);

/// Power graph: vertices are the group elements; distinct x, y are adjacent
/// iff one is a positive power of the other.
Graph power_graph(const FiniteGroup& h);

/// Euler's totient: count of 1 <= k <= n coprime to n.
long long euler_totient(long long n);

} // namespace nodalkit

#endif
