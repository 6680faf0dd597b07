#ifndef IRRAM_CANONICAL_HPP
#define IRRAM_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "irram/graph.hpp"

namespace irram {

// Upper-triangle bit string of a labeled graph: pair (i,j), i<j, in
// lexicographic order, most significant bit first within each word.
struct CanonicalCode {
    int bit_count = 0;
    std::array<std::uint64_t, 32> words{};

    int word_count() const { return (bit_count + 63) / 64; }
    std::strong_ordering operator<=>(const CanonicalCode& o) const;
    bool operator==(const CanonicalCode& o) const { return (*this <=> o) == 0; }
    // MSB-first bytes, zero-padded to a whole byte.
    std::vector<std::uint8_t> bytes() const;
};

CanonicalCode code_of_labeling(const Graph& g, const int* perm);

struct CanonicalResult {
    CanonicalCode code;
    std::array<int, kMaxOrder> perm{}; // position -> original vertex
};

// Minimal code over all vertex orderings, found by ordered partition
// refinement with automorphism (orbit) pruning.
CanonicalCode canonical_code(const Graph& g);
CanonicalResult canonical_result(const Graph& g);
// The graph relabeled into its canonical ordering.
Graph canonical_form(const Graph& g);

// Orderly-generation acceptance test for a child whose newest vertex is
// order()-1: true iff some minimal-code ordering puts that vertex last,
// i.e. the new vertex lies in the orbit of the canonical last vertex.
// On acceptance *code_out (if given) receives the canonical code.
bool augmentation_is_canonical(const Graph& child, CanonicalCode* code_out = nullptr);

} // namespace irram

#endif
