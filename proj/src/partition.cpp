#include "wronsk/partition.hpp"

#include "wronsk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wronsk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw UsageError("partition parts must be nonnegative and weakly decreasing");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw UsageError("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string chunk;
    std::istringstream in{std::string(text)};
    bool any = false;
    while (std::getline(in, chunk, ',')) {
        any = true;
        std::size_t begin = 0, end = chunk.size();
        while (begin < end && std::isspace(static_cast<unsigned char>(chunk[begin]))) ++begin;
        while (end > begin && std::isspace(static_cast<unsigned char>(chunk[end - 1]))) --end;
        if (begin == end) throw UsageError("empty part in partition text");
        int value = 0;
        for (std::size_t i = begin; i < end; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(chunk[i])))
                throw UsageError("invalid partition text: '" + std::string(text) + "'");
            value = value * 10 + (chunk[i] - '0');
            if (value > 1'000'000) throw UsageError("partition part too large");
        }
        parts.push_back(value);
    }
    if (!any) return Partition();
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 0) throw UsageError("negative row index");
    return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
}

std::vector<int> Partition::padded(int length) const {
    if (length < rows())
        throw UsageError("partition " + to_string() + " has more than " +
                         std::to_string(length) + " rows");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(length), 0);
    return out;
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.rows(); ++i)
        if (part(i) < inner.part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> out(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out << ',';
        out << parts_[i];
    }
    return out.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
    return b.parts_ <=> a.parts_; // larger parts first within a weight
}

namespace {

void enumerate_box(int remaining, int max_part, int rows_left, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        // Feasibility: the remaining rows can still absorb the weight.
        if (static_cast<long long>(p) * rows_left < remaining) break;
        acc.push_back(p);
        enumerate_box(remaining - p, p, rows_left - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_box(int weight, int max_rows,
                                         std::optional<int> max_cols) {
    if (weight < 0 || max_rows < 0) throw UsageError("negative partition bound");
    std::vector<Partition> out;
    const int cap = max_cols.value_or(weight);
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> acc;
    enumerate_box(weight, std::min(cap, weight), max_rows, acc, out);
    return out;
}

std::vector<int> hook_lengths(const Partition& shape) {
    const Partition conj = shape.conjugate();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(shape.weight()));
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = 0; j < shape.part(i); ++j) {
            const int arm = shape.part(i) - j - 1;
            const int leg = conj.part(j) - i - 1;
            out.push_back(arm + leg + 1);
        }
    return out;
}

Integer syt_count_hook(const Partition& shape) {
    Integer num = factorial(shape.weight());
    for (int h : hook_lengths(shape)) num /= h;
    return num;
}

namespace {

// Counts saturated chains empty -> shape by adding one box at a time.
// Deliberately brute force: this is the independent oracle the hook formula
// is tested against.
Integer count_chains(const Partition& target, std::vector<int>& current, int placed) {
    if (placed == target.weight()) return 1;
    Integer total = 0;
    const int rows = static_cast<int>(current.size());
    for (int i = 0; i < rows; ++i) {
        const int above = (i == 0) ? target.part(0) : current[static_cast<std::size_t>(i - 1)];
        if (current[static_cast<std::size_t>(i)] >= above) continue;
        if (current[static_cast<std::size_t>(i)] >= target.part(i)) continue;
        ++current[static_cast<std::size_t>(i)];
        total += count_chains(target, current, placed + 1);
        --current[static_cast<std::size_t>(i)];
    }
    return total;
}

} // namespace

Integer syt_enumerate(const Partition& shape) {
    if (shape.weight() > 12)
        throw UsageError("syt_enumerate is limited to weight <= 12");
    if (shape.weight() == 0) return 1;
    std::vector<int> current(static_cast<std::size_t>(shape.rows()), 0);
    return count_chains(shape, current, 0);
}

namespace {

void pieri_rec(const std::vector<int>& lambda, int row, int remaining, int upper,
               std::vector<int>& acc, std::vector<Partition>& out) {
    const int n = static_cast<int>(lambda.size());
    if (row == n) {
        if (remaining == 0) out.emplace_back(acc);
        return;
    }
    const int lo = lambda[static_cast<std::size_t>(row)];
    // mu_row is between lambda_row and min(upper, lambda_row + remaining),
    // where upper is lambda_{row-1} (interlacing) or the box bound at row 0.
    const int hi = std::min(upper, lo + remaining);
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        // Interlacing: mu_{row+1} <= lambda_row, which also keeps mu decreasing.
        pieri_rec(lambda, row + 1, remaining - (v - lo), lo, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> pieri_successors(const Partition& lambda, int k, int rank,
                                        std::optional<int> col_bound) {
    if (k < 0) throw UsageError("negative Pieri degree");
    if (rank < 0) throw UsageError("negative rank");
    if (lambda.rows() > rank + 1)
        throw UsageError("partition has more rows than the ring allows");
    if (col_bound && lambda.part(0) > *col_bound)
        throw UsageError("partition does not fit in the column bound");
    const std::vector<int> padded = lambda.padded(rank + 1);
    std::vector<Partition> out;
    std::vector<int> acc;
    const int top = col_bound.value_or(lambda.part(0) + k);
    pieri_rec(padded, 0, k, top, acc, out);
    return out;
}

std::vector<Partition> addable_corners(const Partition& lambda, int rank) {
    if (rank < 0) throw UsageError("negative rank");
    if (lambda.rows() > rank + 1)
        throw UsageError("partition has more rows than the ring allows");
    std::vector<Partition> out;
    for (int i = 0; i <= rank; ++i) {
        if (i > 0 && lambda.part(i) >= lambda.part(i - 1)) continue;
        std::vector<int> parts = lambda.padded(rank + 1);
        ++parts[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(parts));
    }
    return out;
}

} // namespace wronsk
