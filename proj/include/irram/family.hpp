#ifndef IRRAM_FAMILY_HPP
#define IRRAM_FAMILY_HPP

#include <vector>

#include "irram/graph.hpp"

namespace irram {

// Members of the forced-subgraph family for blue m-element irredundant
// sets: K_m, the joins K_{m-k} + (K_{k,k} - kK_2) for 3 <= k <= m-1, and
// K_{m,m} - mK_2.
struct FamilyMember {
    enum class Role { Complete, Join, Crown };
    Role role;
    int k; // join parameter; 0 for K_m, m for the crown
    Graph graph;
};

// K_{k,k} minus a perfect matching (vertex i not joined to k+i).
Graph crown_graph(int k);
// Join of K_a with g: every K_a vertex adjacent to every g vertex.
Graph join_complete(int a, const Graph& g);

// Throws std::domain_error for m < 3.
std::vector<FamilyMember> family_f_members(int m);

} // namespace irram

#endif
