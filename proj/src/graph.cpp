#include "irram/graph.hpp"

#include <cassert>
#include <stdexcept>

namespace irram {

Graph::Graph(int order) : n_(order) {
    if (order < 0 || order > kMaxOrder)
        throw std::domain_error("graph order must be in [0, 64]");
}

void Graph::add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

void Graph::toggle_edge(int u, int v) {
    assert(u != v);
    adj_[u] ^= 1ull << v;
    adj_[v] ^= 1ull << u;
}

long Graph::edge_count() const {
    long twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

double Graph::average_degree() const {
    if (n_ == 0) return 0.0;
    return 2.0 * static_cast<double>(edge_count()) / n_;
}

int Graph::add_vertex() {
    if (n_ >= kMaxOrder) throw std::domain_error("graph order cap (64) reached");
    adj_[n_] = 0;
    return n_++;
}

int Graph::add_vertex(VertexSet nbrs) {
    assert(nbrs.subset_of(vertices()));
    int v = add_vertex();
    adj_[v] = nbrs.bits;
    nbrs.for_each([&](int u) { adj_[u] |= 1ull << v; });
    return v;
}

Graph Graph::complete(int n) {
    Graph g(n);
    std::uint64_t all = VertexSet::full(n).bits;
    for (int v = 0; v < n; ++v) g.adj_[v] = all & ~(1ull << v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    if (n == 2) { g.add_edge(0, 1); return g; }
    for (int v = 0; v < n && n >= 3; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::circulant(int n, const std::uint32_t* offsets, int count) {
    Graph g(n);
    for (int i = 0; i < count; ++i) {
        int s = static_cast<int>(offsets[i]);
        if (s < 1 || 2 * s > n) throw std::domain_error("circulant offset out of range");
        for (int v = 0; v < n; ++v)
            if (v != (v + s) % n) g.add_edge(v, (v + s) % n);
    }
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    std::uint64_t all = VertexSet::full(g.order()).bits;
    for (int v = 0; v < g.order(); ++v)
        VertexSet(all & ~(1ull << v) & ~g.row(v)).for_each([&](int u) {
            if (u > v) c.add_edge(v, u);
        });
    return c;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    assert(s.subset_of(g.vertices()));
    // relabel by increasing original index
    int map[kMaxOrder];
    int k = 0;
    s.for_each([&](int v) { map[v] = k++; });
    Graph h(k);
    s.for_each([&](int v) {
        VertexSet(g.row(v) & s.bits).for_each([&](int u) {
            if (u > v) h.add_edge(map[v], map[u]);
        });
    });
    return h;
}

bool contains_triangle(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        // only look at neighbors above v; common neighborhood => triangle
        std::uint64_t above = g.row(v) & ~((2ull << v) - 1);
        for (std::uint64_t w = above; w; w &= w - 1) {
            int u = std::countr_zero(w);
            if (g.row(v) & g.row(u)) return true;
        }
    }
    return false;
}

namespace {

// Subset of 6 vertices with all inner degrees 2 and 6 inner edges is a
// disjoint union of cycles covering 6 vertices; a C6 iff connected.
bool subset_is_c6(const Graph& g, const int* vs) {
    std::uint64_t mask = 0;
    for (int i = 0; i < 6; ++i) mask |= 1ull << vs[i];
    int twice_edges = 0;
    for (int i = 0; i < 6; ++i) {
        int d = std::popcount(g.row(vs[i]) & mask);
        if (d != 2) return false;
        twice_edges += d;
    }
    if (twice_edges != 12) return false;
    // connectivity within the subset
    std::uint64_t seen = 1ull << vs[0];
    std::uint64_t frontier = g.row(vs[0]) & mask;
    while (frontier & ~seen) {
        seen |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t w = frontier; w; w &= w - 1)
            next |= g.row(std::countr_zero(w)) & mask;
        frontier = next;
    }
    return std::popcount(seen) == 6;
}

} // namespace

bool has_induced_c6(const Graph& g) {
    int n = g.order();
    if (n < 6) return false;
    int vs[6];
    // iterate 6-subsets; cheap filters (edge count, min degree) come first
    // inside subset_is_c6
    for (vs[0] = 0; vs[0] < n - 5; ++vs[0])
        for (vs[1] = vs[0] + 1; vs[1] < n - 4; ++vs[1])
            for (vs[2] = vs[1] + 1; vs[2] < n - 3; ++vs[2])
                for (vs[3] = vs[2] + 1; vs[3] < n - 2; ++vs[3])
                    for (vs[4] = vs[3] + 1; vs[4] < n - 1; ++vs[4])
                        for (vs[5] = vs[4] + 1; vs[5] < n; ++vs[5])
                            if (subset_is_c6(g, vs)) return true;
    return false;
}

bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::uint64_t colored = 0, side[2] = {0, 0};
    for (int start = 0; start < n; ++start) {
        if ((colored >> start) & 1ull) continue;
        std::uint64_t frontier = 1ull << start;
        int parity = 0;
        while (frontier) {
            side[parity] |= frontier;
            colored |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t w = frontier; w; w &= w - 1)
                next |= g.row(std::countr_zero(w));
            if (next & side[parity]) return false; // odd cycle
            frontier = next & ~colored;
            parity ^= 1;
        }
    }
    return true;
}

namespace {

// Greedy clique cover of cand: each clique contributes at most one vertex
// to an independent set, so the cover size bounds alpha from above.
int clique_cover_bound(const Graph& g, std::uint64_t cand) {
    int cliques = 0;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t clique = 1ull << v;
        std::uint64_t rest = cand;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if ((clique & ~g.row(u)) == 0) { // u adjacent to whole clique
                clique |= 1ull << u;
                cand &= ~(1ull << u);
            }
        }
        ++cliques;
    }
    return cliques;
}

struct MisState {
    const Graph* g;
    int best;
    int cutoff; // stop as soon as best >= cutoff (0 = exact run)
};

void mis_branch(MisState& st, std::uint64_t cand, int size) {
    if (size > st.best) st.best = size;
    if (st.cutoff && st.best >= st.cutoff) return;
    if (!cand) return;
    int room = std::popcount(cand);
    if (size + room <= st.best) return;
    if (size + clique_cover_bound(*st.g, cand) <= st.best) return;
    // branch on the lowest-index maximum-degree vertex within cand
    int pick = -1, best_deg = -1;
    for (std::uint64_t w = cand; w; w &= w - 1) {
        int v = std::countr_zero(w);
        int d = std::popcount(st.g->row(v) & cand);
        if (d > best_deg) { best_deg = d; pick = v; }
    }
    if (best_deg == 0) { // cand independent, take it all
        if (size + room > st.best) st.best = size + room;
        return;
    }
    mis_branch(st, cand & ~st.g->row(pick) & ~(1ull << pick), size + 1);
    if (st.cutoff && st.best >= st.cutoff) return;
    mis_branch(st, cand & ~(1ull << pick), size);
}

} // namespace

int independence_number(const Graph& g) {
    MisState st{&g, 0, 0};
    mis_branch(st, g.vertices().bits, 0);
    return st.best;
}

bool has_independent_set(const Graph& g, int k) {
    return has_independent_set_within(g, g.vertices(), k);
}

bool has_independent_set_within(const Graph& g, VertexSet cand, int k) {
    if (k <= 0) return true;
    if (cand.count() < k) return false;
    MisState st{&g, 0, k};
    mis_branch(st, cand.bits, 0);
    return st.best >= k;
}

bool contains_clique(const Graph& g, int k) {
    if (k <= 1) return k <= 0 || g.order() >= 1;
    if (k == 2) return g.edge_count() > 0;
    return has_independent_set(complement(g), k);
}

namespace {

bool embed(const Graph& g, const Graph& h, int next, std::uint64_t used, int* map) {
    if (next == h.order()) return true;
    for (int cand = 0; cand < g.order(); ++cand) {
        if ((used >> cand) & 1ull) continue;
        if (g.degree(cand) < h.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (h.has_edge(next, prev) && !g.has_edge(cand, map[prev])) ok = false;
        if (!ok) continue;
        map[next] = cand;
        if (embed(g, h, next + 1, used | (1ull << cand), map)) return true;
    }
    return false;
}

} // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
    if (g.order() > 16)
        throw std::domain_error("contains_subgraph: host order > 16 unsupported");
    if (h.order() > g.order()) return false;
    int map[17];
    return embed(g, h, 0, 0, map);
}

} // namespace irram
