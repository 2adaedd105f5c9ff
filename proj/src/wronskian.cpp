#include "wronsk/wronskian.hpp"

#include "wronsk/detail/laplace_det.hpp"
#include "wronsk/errors.hpp"

#include <algorithm>

namespace wronsk {

DividedSeries generalized_wronskian(std::span<const DividedSeries> tuple,
                                    const Partition& shape, int out_order) {
    if (tuple.empty()) throw UsageError("empty series tuple");
    const int r = static_cast<int>(tuple.size()) - 1;
    const SymbolsPtr& table = tuple[0].symbols();
    int min_order = tuple[0].order();
    for (const DividedSeries& f : tuple) {
        if (!same_symbols(f.symbols(), table))
            throw UsageError("tuple series over different symbol tables");
        min_order = std::min(min_order, f.order());
    }
    if (shape.rows() > r + 1)
        throw UsageError("shape has more rows than the tuple has entries");

    const int certifiable = min_order - r - shape.part(0);
    if (certifiable < 0)
        throw TruncationError("series orders cannot certify this Wronskian");
    const int out = out_order < 0 ? certifiable : out_order;
    if (out > certifiable)
        throw TruncationError("requested order " + std::to_string(out) +
                              " exceeds the certifiable order " +
                              std::to_string(certifiable));

    // Entries truncated up front: the determinant then works at the cheapest
    // certified order throughout.
    const std::size_t n = tuple.size();
    std::vector<DividedSeries> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int shift = static_cast<int>(j) + shape.part(r - static_cast<int>(j));
            entries.push_back(tuple[i].derived(shift).truncated(out));
        }
    return detail::laplace_det<DividedSeries>(
        n, [&entries, n](std::size_t i, std::size_t j) -> const DividedSeries& {
            return entries[i * n + j];
        });
}

GiambelliReport giambelli_certificate(const UniversalContext& ctx,
                                      const Partition& shape, int order) {
    if (order < 0) throw UsageError("negative comparison order");
    const int r = ctx.rank();
    const int needed = order + r + shape.part(0);
    const UniversalContext big = ctx.extended(std::max(needed, r + 1));
    const std::vector<DividedSeries> u = universal_solutions(big, needed);

    const DividedSeries w_shape = generalized_wronskian(u, shape, order);
    const DividedSeries w_empty = generalized_wronskian(u, Partition(), order);
    Polynomial ratio = jacobi_trudi(shape, GradedSequence::h_values(big), r);

    const bool ok = w_shape == w_empty.scaled(ratio);
    return {std::move(ratio), ok, order};
}

bool pieri_wronskian_check(const UniversalContext& ctx, const Partition& shape,
                           int k, int order) {
    if (k < 0) throw UsageError("negative Pieri degree");
    if (order < 0) throw UsageError("negative comparison order");
    const int r = ctx.rank();
    const int needed = order + r + shape.part(0) + k;
    const UniversalContext big = ctx.extended(std::max({needed, r + 1, k}));
    const std::vector<DividedSeries> u = universal_solutions(big, needed);

    const DividedSeries lhs = generalized_wronskian(u, shape, order).scaled(big.h(k));
    DividedSeries rhs = DividedSeries::zero(big.symbols(), order);
    for (const Partition& succ : pieri_successors(shape, k, r))
        rhs = rhs + generalized_wronskian(u, succ, order);
    return lhs == rhs;
}

DerivativeExpansion derivative_expansion(const UniversalContext& ctx, int k, int order) {
    if (k < 0) throw UsageError("negative derivative count");
    const int r = ctx.rank();
    if (order < k + r + 1)
        throw UsageError("order must be at least k + rank + 1");
    const UniversalContext big = ctx.extended(order);
    const std::vector<DividedSeries> u = universal_solutions(big, order);

    const int compared = order - r - k;
    const DividedSeries dk = generalized_wronskian(u, Partition(), order - r).derived(k);

    // The constant term of D^k W_0 determines the whole expansion.
    const SchurExpansion expansion = schur_expand(rewrite_in_h(dk.coeff(0)), r);
    for (const auto& [shape, c] : expansion.terms())
        if (shape.weight() != k)
            throw InternalError("derivative expansion produced a shape of weight " +
                                std::to_string(shape.weight()));

    DividedSeries rhs = DividedSeries::zero(big.symbols(), compared);
    for (const auto& [shape, c] : expansion.terms())
        rhs = rhs + generalized_wronskian(u, shape, compared).scaled(
                        Polynomial::constant(big.symbols(), c));
    const bool ok = dk.truncated(compared) == rhs;
    return {expansion, ok, compared};
}

bool young_cover_derivative_check(std::span<const DividedSeries> tuple,
                                  const Partition& shape, int order) {
    if (order < 0) throw UsageError("negative comparison order");
    const int r = static_cast<int>(tuple.size()) - 1;
    const DividedSeries lhs = generalized_wronskian(tuple, shape, order + 1).derived(1);
    DividedSeries rhs = DividedSeries::zero(tuple[0].symbols(), order);
    for (const Partition& succ : addable_corners(shape, r))
        rhs = rhs + generalized_wronskian(tuple, succ, order);
    return lhs == rhs;
}

} // namespace wronsk
