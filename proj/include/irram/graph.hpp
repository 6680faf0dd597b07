#ifndef IRRAM_GRAPH_HPP
#define IRRAM_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>

#include "irram/vertexset.hpp"

namespace irram {

constexpr int kMaxOrder = 64;

// Undirected simple graph on at most 64 vertices, one adjacency word per
// vertex. Symmetric, loop-free; bits at positions >= order stay zero.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ull; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    std::uint64_t row(int v) const { return adj_[v]; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    long edge_count() const;
    double average_degree() const;
    VertexSet vertices() const { return VertexSet::full(n_); }

    // Appends an isolated vertex (index order()) and returns its index.
    int add_vertex();
    // Appends a vertex adjacent to exactly `nbrs`.
    int add_vertex(VertexSet nbrs);

    bool operator==(const Graph&) const = default;

    static Graph empty(int n) { return Graph(n); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_bipartite(int a, int b);
    // Circulant on Z_n with the given connection offsets (1 <= s <= n/2).
    static Graph circulant(int n, const std::uint32_t* offsets, int count);

  private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> adj_{};
};

Graph complement(const Graph& g);
// Vertices of s keep their relative order; s may be empty.
Graph induced_subgraph(const Graph& g, VertexSet s);

bool contains_triangle(const Graph& g);
// True iff some 6-subset induces exactly a 6-cycle (6 edges, no chords).
bool has_induced_c6(const Graph& g);
bool is_bipartite(const Graph& g);

// Exact maximum independent set size; branch and bound on adjacency words.
int independence_number(const Graph& g);
// alpha(g) >= k, short-circuiting as soon as a k-set is found.
bool has_independent_set(const Graph& g, int k);
// Like has_independent_set but restricted to the induced subgraph on cand.
bool has_independent_set_within(const Graph& g, VertexSet cand, int k);
// True iff g restricted to `within` contains a clique of size k.
bool contains_clique(const Graph& g, int k);

// Subgraph (not induced) containment; exact backtracking with degree
// pruning. Throws std::domain_error when g.order() > 16.
bool contains_subgraph(const Graph& g, const Graph& h);

} // namespace irram

#endif
