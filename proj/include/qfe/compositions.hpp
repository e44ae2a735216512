#pragma once

/**
 * @file compositions.hpp
 * @brief Enumeration of weak compositions.
 */

#include <cstddef>
#include <span>
#include <vector>

namespace qfe {

/// Calls fn(parts) for every (i_1, ..., i_k) of nonnegative integers summing
/// to n, in colexicographic order. k = 0 yields the empty composition only
/// when n = 0.
template <typename Fn>
void for_each_weak_composition(std::size_t n, std::size_t k, Fn&& fn) {
    if (k == 0) {
        if (n == 0) fn(std::span<const std::size_t>{});
        return;
    }
    std::vector<std::size_t> parts(k, 0);
    parts[0] = n;
    while (true) {
        fn(std::span<const std::size_t>(parts));
        // Colex successor: find the first nonzero part before the last slot,
        // move one unit right, and pile the remainder back into slot 0.
        std::size_t i = 0;
        while (i + 1 < k && parts[i] == 0) ++i;
        if (i + 1 >= k) return;
        std::size_t carry = parts[i] - 1;
        parts[i] = 0;
        parts[i + 1] += 1;
        parts[0] = carry;
    }
}

/// Number of weak compositions of n into k parts, binom(n + k - 1, k - 1).
inline std::size_t weak_composition_count(std::size_t n, std::size_t k) {
    if (k == 0) return n == 0 ? 1 : 0;
    std::size_t num = 1;
    for (std::size_t i = 1; i < k; ++i) num = num * (n + i) / i;
    return num;
}

}  // namespace qfe
