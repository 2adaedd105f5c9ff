#pragma once

#include "wronsk/errors.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wronsk::detail {

// Division-free determinant by Laplace expansion along rows, memoized on the
// subset of still-unused columns.  2^n states, n*2^(n-1) ring products total —
// exponentially better than the naive n! cofactor recursion, and no division,
// so it works over polynomial and series rings alike.
//
// Ring requirements: copyable, binary + and -, binary *, unary -.
// entry(i, j) must return something convertible to Ring.
template <class Ring, class EntryFn>
Ring laplace_det(std::size_t n, EntryFn&& entry) {
    if (n == 0) throw UsageError("empty matrix determinant needs an explicit unit");
    if (n > 20) throw UsageError("determinant dimension too large");

    // memo[mask] = det of the minor on the columns in `mask`, using the last
    // popcount(mask) rows.  Filled bottom-up in popcount order so every
    // dependency is ready.
    std::vector<std::optional<Ring>> memo(std::size_t(1) << n);
    std::vector<std::vector<std::uint32_t>> by_count(n + 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask)
        by_count[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);

    for (std::size_t count = 1; count <= n; ++count) {
        const std::size_t row = n - count; // expanding along this row
        for (const std::uint32_t mask : by_count[count]) {
            std::optional<Ring> acc;
            std::size_t parity = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask & (std::uint32_t(1) << j))) continue;
                Ring term = entry(row, j);
                if (count > 1) {
                    const std::uint32_t sub = mask & ~(std::uint32_t(1) << j);
                    term = term * *memo[sub];
                }
                if (!acc) {
                    acc = (parity % 2 == 0) ? std::move(term) : -term;
                } else {
                    acc = (parity % 2 == 0) ? *acc + term : *acc - term;
                }
                ++parity;
            }
            memo[mask] = std::move(*acc);
        }
    }
    return *memo[(std::size_t(1) << n) - 1];
}

} // namespace wronsk::detail
