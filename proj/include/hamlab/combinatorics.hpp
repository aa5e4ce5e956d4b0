#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hamlab/structures.hpp"

namespace hamlab {

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int k);

// Visits every k-subset of [0, n) in lexicographic order as (slotIndex, sortedTuple).
// This is the single slot enumeration e_0, ..., e_{N-1} shared by all models.
template <typename Fn>
void for_each_slot(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    Tuple cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
    std::uint64_t index = 0;
    while (true) {
        fn(index++, std::as_const(cur));
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == static_cast<VertexId>(n - k + i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Visits the k! orderings of a sorted tuple in lexicographic order as (orientationIndex, arc).
template <typename Fn>
void for_each_orientation(const Tuple& sortedSlot, Fn&& fn) {
    Tuple arc = sortedSlot;
    std::uint32_t r = 0;
    do {
        fn(r++, std::as_const(arc));
    } while (std::next_permutation(arc.begin(), arc.end()));
}

// Lexicographic rank of a sorted k-subset among all k-subsets of [0, n).
std::uint64_t slot_rank(int n, std::span<const VertexId> sortedSlot);

// Index of arc among the lexicographic orderings of its sorted vertex set.
std::uint32_t orientation_rank(std::span<const VertexId> arc);

inline Tuple sorted_copy(std::span<const VertexId> t) {
    Tuple out(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hamlab
