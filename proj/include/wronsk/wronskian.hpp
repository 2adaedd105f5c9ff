#pragma once

#include "wronsk/ode.hpp"
#include "wronsk/partition.hpp"
#include "wronsk/schur.hpp"

#include <span>

namespace wronsk {

// W_lambda(f) = det( f_i^{(j + lambda_{r-j})} ), i, j = 0..r: column j is
// derived j + lambda_{r-j} times, so the empty shape gives the classical
// Wronskian.  The certified output order is
//   min_i order(f_i) - rank - lambda_0,
// which the default out_order = -1 requests; asking for less is cheaper
// (every matrix entry is truncated before the determinant), asking for more
// throws TruncationError.
DividedSeries generalized_wronskian(std::span<const DividedSeries> tuple,
                                    const Partition& shape, int out_order = -1);

struct GiambelliReport {
    Polynomial ratio; // the exact determinantal factor in the h-values
    bool verified;    // W_lambda == ratio * W_0 up to compared_order
    int compared_order;
};

/// Certifies W_lambda(u) = Delta_lambda(h) W_0(u) on the universal system,
/// comparing series coefficients 0..order.
GiambelliReport giambelli_certificate(const UniversalContext& ctx,
                                      const Partition& shape, int order);

/// h_k W_lambda(u) == sum over Pieri successors mu of W_mu(u), to `order`.
bool pieri_wronskian_check(const UniversalContext& ctx, const Partition& shape,
                           int k, int order);

struct DerivativeExpansion {
    SchurExpansion expansion; // D^k W_0 = sum c_lambda W_lambda over |lambda| = k
    bool verified;            // the series identity held up to compared_order
    int compared_order;
};

/// Expands the k-th derivative of the classical Wronskian of the universal
/// system in the generalized-Wronskian basis.  The coefficients are read off
/// the constant term (rewritten in h, expanded by Pieri steps) and then the
/// full series identity is checked to order - k - rank.
DerivativeExpansion derivative_expansion(const UniversalContext& ctx, int k, int order);

/// D(W_lambda(f)) == sum of W_mu(f) over the one-box extensions mu of lambda,
/// compared to the given order.  Holds for every tuple f, not only solutions.
bool young_cover_derivative_check(std::span<const DividedSeries> tuple,
                                  const Partition& shape, int order);

} // namespace wronsk
