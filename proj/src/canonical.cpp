#include "irram/canonical.hpp"

#include <cassert>

namespace irram {

std::strong_ordering CanonicalCode::operator<=>(const CanonicalCode& o) const {
    if (bit_count != o.bit_count) return bit_count <=> o.bit_count;
    int wc = word_count();
    for (int i = 0; i < wc; ++i)
        if (words[i] != o.words[i]) return words[i] <=> o.words[i];
    return std::strong_ordering::equal;
}

std::vector<std::uint8_t> CanonicalCode::bytes() const {
    std::vector<std::uint8_t> out((bit_count + 7) / 8);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(words[i / 8] >> (56 - 8 * (i % 8)));
    return out;
}

CanonicalCode code_of_labeling(const Graph& g, const int* perm) {
    CanonicalCode code;
    int n = g.order();
    code.bit_count = n * (n - 1) / 2;
    int pos = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t ri = g.row(perm[i]);
        for (int j = i + 1; j < n; ++j, ++pos)
            if ((ri >> perm[j]) & 1ull)
                code.words[pos >> 6] |= 0x8000000000000000ull >> (pos & 63);
    }
    return code;
}

namespace {

// Ordered partition of [0,n) as a list of cells; cell order fixes which
// positions its vertices may take.
struct Partition {
    std::uint64_t cell[kMaxOrder];
    int count = 0;
};

struct UnionFind {
    int parent[kMaxOrder];
    void reset(int n) { for (int i = 0; i < n; ++i) parent[i] = i; }
    int find(int v) { while (parent[v] != v) v = parent[v] = parent[parent[v]]; return v; }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    bool same(int a, int b) { return find(a) == find(b); }
};

class CanonSearch {
  public:
    CanonSearch(const Graph& g, bool pin_last)
        : g_(g), n_(g.order()), pin_last_(pin_last) {}

    // Runs the search. With abort_below set, stops early (returns false)
    // as soon as some leaf code is strictly smaller than `seed`.
    bool run(const CanonicalCode* seed, bool abort_below) {
        have_best_ = false;
        have_first_ = false;
        aborted_ = false;
        seed_is_external_untouched_ = true;
        if (seed) { best_ = *seed; have_best_ = true; }
        abort_below_ = abort_below;
        Partition root;
        if (n_ == 0) {
            best_ = CanonicalCode{};
            have_best_ = true;
            return true;
        }
        if (pin_last_) {
            if (n_ > 1) root.cell[root.count++] = VertexSet::full(n_ - 1).bits;
            root.cell[root.count++] = 1ull << (n_ - 1);
        } else {
            root.cell[root.count++] = VertexSet::full(n_).bits;
        }
        depth_ = 0;
        descend(root);
        return !aborted_;
    }

    const CanonicalCode& best() const { return best_; }
    const std::array<int, kMaxOrder>& best_perm() const { return best_perm_; }

  private:
    const Graph& g_;
    int n_;
    bool pin_last_;
    bool abort_below_ = false;
    bool aborted_ = false;

    CanonicalCode best_;
    std::array<int, kMaxOrder> best_perm_{};
    bool have_best_ = false;
    bool seed_is_external_untouched_ = true;

    CanonicalCode first_;
    std::array<int, kMaxOrder> first_perm_{};
    bool have_first_ = false;

    // individualized vertex per level, for automorphism bookkeeping
    int path_[kMaxOrder];
    int depth_ = 0;
    UnionFind* level_uf_[kMaxOrder];

    // Equitable refinement: repeatedly split cells by neighbor counts into
    // earlier-created cells until stable. Subcells replace their parent in
    // place, ordered by ascending count.
    static void refine(const Graph& g, Partition& p) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < p.count; ++s) {
                std::uint64_t splitter = p.cell[s];
                for (int c = 0; c < p.count; ++c) {
                    std::uint64_t cell = p.cell[c];
                    if (std::popcount(cell) <= 1) continue;
                    int cnt[kMaxOrder];
                    int distinct_lo = 65, distinct_hi = -1;
                    bool uniform = true;
                    int firstv = std::countr_zero(cell);
                    int c0 = std::popcount(g.row(firstv) & splitter);
                    for (std::uint64_t w = cell; w; w &= w - 1) {
                        int v = std::countr_zero(w);
                        cnt[v] = std::popcount(g.row(v) & splitter);
                        if (cnt[v] != c0) uniform = false;
                        if (cnt[v] < distinct_lo) distinct_lo = cnt[v];
                        if (cnt[v] > distinct_hi) distinct_hi = cnt[v];
                    }
                    if (uniform) continue;
                    // bucket by count value, ascending
                    std::uint64_t bucket[kMaxOrder + 1];
                    int nb = 0;
                    for (int k = distinct_lo; k <= distinct_hi; ++k) {
                        std::uint64_t b = 0;
                        for (std::uint64_t w = cell; w; w &= w - 1) {
                            int v = std::countr_zero(w);
                            if (cnt[v] == k) b |= 1ull << v;
                        }
                        if (b) bucket[nb++] = b;
                    }
                    // splice buckets in place of cell c
                    for (int i = p.count - 1; i > c; --i) p.cell[i + nb - 1] = p.cell[i];
                    for (int i = 0; i < nb; ++i) p.cell[c + i] = bucket[i];
                    p.count += nb - 1;
                    changed = true;
                    if (c < s) s += nb - 1; // keep splitter index stable
                    c += nb - 1;
                }
            }
        }
    }

    static int first_non_singleton(const Partition& p) {
        for (int i = 0; i < p.count; ++i)
            if (std::popcount(p.cell[i]) > 1) return i;
        return -1;
    }

    void handle_leaf(const Partition& p) {
        int perm[kMaxOrder];
        for (int i = 0; i < p.count; ++i) perm[i] = std::countr_zero(p.cell[i]);
        CanonicalCode code = code_of_labeling(g_, perm);

        if (!have_first_) {
            have_first_ = true;
            first_ = code;
            for (int i = 0; i < n_; ++i) first_perm_[i] = perm[i];
        } else if (code == first_) {
            record_automorphism(first_perm_.data(), perm);
        }

        if (!have_best_ || code < best_) {
            if (abort_below_ && have_best_) { aborted_ = true; return; }
            best_ = code;
            seed_is_external_untouched_ = false;
            have_best_ = true;
            for (int i = 0; i < n_; ++i) best_perm_[i] = perm[i];
        } else if (code == best_ && !seed_is_external_untouched_) {
            record_automorphism(best_perm_.data(), perm);
        }
    }

    // perm_a and perm_b produce equal codes, so sigma(perm_a[i]) = perm_b[i]
    // is an automorphism. It may prune the sibling loop at depth k only if
    // it fixes every individualized vertex above k, checked directly.
    void record_automorphism(const int* perm_a, const int* perm_b) {
        int sigma[kMaxOrder];
        for (int i = 0; i < n_; ++i) sigma[perm_a[i]] = perm_b[i];
        int lvl = 0;
        while (lvl < depth_ && sigma[path_[lvl]] == path_[lvl]) ++lvl;
        for (int k = 0; k <= lvl && k < depth_; ++k)
            for (int i = 0; i < n_; ++i) level_uf_[k]->unite(i, sigma[i]);
    }

    void descend(Partition p) {
        if (aborted_) return;
        refine(g_, p);
        int cell_idx = first_non_singleton(p);
        if (cell_idx < 0) { handle_leaf(p); return; }

        UnionFind uf;
        uf.reset(n_);
        level_uf_[depth_] = &uf;
        std::uint64_t cell = p.cell[cell_idx];
        int tried[kMaxOrder];
        int tried_count = 0;
        for (std::uint64_t w = cell; w; w &= w - 1) {
            int v = std::countr_zero(w);
            bool skip = false;
            for (int i = 0; i < tried_count && !skip; ++i)
                if (uf.same(v, tried[i])) skip = true;
            if (skip) continue;
            tried[tried_count++] = v;

            Partition q;
            q.count = p.count + 1;
            for (int i = 0; i < cell_idx; ++i) q.cell[i] = p.cell[i];
            q.cell[cell_idx] = 1ull << v;
            q.cell[cell_idx + 1] = cell & ~(1ull << v);
            for (int i = cell_idx + 1; i < p.count; ++i) q.cell[i + 1] = p.cell[i];

            path_[depth_] = v;
            ++depth_;
            descend(q);
            --depth_;
            if (aborted_) return;
        }
    }
};

} // namespace

CanonicalResult canonical_result(const Graph& g) {
    CanonSearch s(g, false);
    s.run(nullptr, false);
    CanonicalResult r;
    r.code = s.best();
    r.perm = s.best_perm();
    return r;
}

CanonicalCode canonical_code(const Graph& g) { return canonical_result(g).code; }

Graph canonical_form(const Graph& g) {
    CanonicalResult r = canonical_result(g);
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(r.perm[i], r.perm[j])) out.add_edge(i, j);
    return out;
}

bool augmentation_is_canonical(const Graph& child, CanonicalCode* code_out) {
    int n = child.order();
    assert(n >= 1);
    // minimal code among orderings that put the new vertex (n-1) last
    CanonSearch pinned(child, true);
    pinned.run(nullptr, false);
    CanonicalCode restricted = pinned.best();
    // accept iff no ordering at all beats it
    CanonSearch free_search(child, false);
    bool no_smaller = free_search.run(&restricted, true);
    if (no_smaller && code_out) *code_out = restricted;
    return no_smaller;
}

} // namespace irram
