#pragma once

#include "wronsk/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wronsk {

// Integer partition: weakly decreasing positive parts.  Trailing zeros are
// accepted on input and stripped, so (2,1,0) == (2,1).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "2,1" (also "2, 1", "2,1,0"); "0" and "" mean the empty partition.
    static Partition parse(std::string_view text);

    int weight() const noexcept { return weight_; }
    int rows() const noexcept { return static_cast<int>(parts_.size()); }
    /// part(i) is 0 beyond the last row.
    int part(int i) const;
    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Parts padded with zeros to the given length; throws if rows() > length.
    std::vector<int> padded(int length) const;

    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    /// "2,1" for (2,1); "0" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    /// Canonical enumeration order: by weight, then reverse-lexicographic on
    /// parts, so ascending iteration lists (3), (2,1), (1,1,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of the given weight with at most max_rows rows and (when
/// set) parts at most max_cols, in the canonical order above.
std::vector<Partition> partitions_in_box(int weight, int max_rows,
                                         std::optional<int> max_cols = std::nullopt);

/// Hook lengths in row-major reading order.
std::vector<int> hook_lengths(const Partition& shape);

/// Number of standard Young tableaux by the hook length formula.
Integer syt_count_hook(const Partition& shape);

/// Same count by explicit backtracking over growth chains; weight <= 12.
Integer syt_enumerate(const Partition& shape);

/// Partitions mu with mu_0 >= lambda_0 >= mu_1 >= lambda_1 >= ... and
/// |mu| = |lambda| + k, at most rank+1 rows, and (when set) mu_0 <= col_bound.
/// Ordered descending-lexicographically.
std::vector<Partition> pieri_successors(const Partition& lambda, int k, int rank,
                                        std::optional<int> col_bound = std::nullopt);

/// Partitions obtained from lambda by adding one box, within rank+1 rows.
std::vector<Partition> addable_corners(const Partition& lambda, int rank);

} // namespace wronsk
