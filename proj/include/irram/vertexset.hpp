#ifndef IRRAM_VERTEXSET_HPP
#define IRRAM_VERTEXSET_HPP

#include <bit>
#include <cstdint>

namespace irram {

// Vertex subsets of a graph on at most 64 vertices, one bit per vertex.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet full(int order) {
        return VertexSet(order >= 64 ? ~0ull : ((1ull << order) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ull << v); }

    constexpr bool contains(int v) const { return (bits >> v) & 1ull; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr void add(int v) { bits |= 1ull << v; }
    constexpr void remove(int v) { bits &= ~(1ull << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits ^ o.bits); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    constexpr VertexSet complement_within(int order) const {
        return VertexSet(~bits & full(order).bits);
    }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool operator==(const VertexSet&) const = default;

    // Visits members in increasing order; f takes the vertex index.
    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t w = bits; w; w &= w - 1) f(std::countr_zero(w));
    }
};

} // namespace irram

#endif
