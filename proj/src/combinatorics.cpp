#include "hamlab/combinatorics.hpp"

#include "hamlab/errors.hpp"

namespace hamlab {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t factorial(int k) {
    if (k < 0 || k > 20) throw ParameterError("factorial out of range");
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t slot_rank(int n, std::span<const VertexId> sortedSlot) {
    const int k = static_cast<int>(sortedSlot.size());
    std::uint64_t rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        const int v = static_cast<int>(sortedSlot[static_cast<std::size_t>(i)]);
        for (int u = prev + 1; u < v; ++u) rank += binomial(n - 1 - u, k - 1 - i);
        prev = v;
    }
    return rank;
}

std::uint32_t orientation_rank(std::span<const VertexId> arc) {
    // Lehmer code.
    const std::size_t k = arc.size();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < k; ++j)
            if (arc[j] < arc[i]) ++smaller;
        rank += smaller * factorial(static_cast<int>(k - 1 - i));
    }
    return static_cast<std::uint32_t>(rank);
}

}  // namespace hamlab
