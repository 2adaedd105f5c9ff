#pragma once

#include "wronsk/partition.hpp"
#include "wronsk/schur.hpp"

#include <vector>

namespace wronsk {

// The Chow/cohomology ring of the variety of r-planes in projective d-space,
// in the Schubert basis: classes are indexed by partitions inside the
// (rank+1) x (dim-rank) box, products follow Pieri/Giambelli, and the class
// of a point is the full box.
class GrassmannRing {
public:
    GrassmannRing(int rank, int dim); // requires 0 <= rank < dim

    int rank() const noexcept { return rank_; }
    int dim() const noexcept { return dim_; }
    int cols() const noexcept { return dim_ - rank_; }
    /// Complex dimension of the variety = weight of the box.
    int total_weight() const noexcept { return (rank_ + 1) * cols(); }

    bool fits(const Partition& shape) const;
    Partition box() const;
    /// The box-complement (Poincare-dual index).
    Partition complement(const Partition& shape) const;
    /// All classes, canonical order (weight, then reverse-lex).
    std::vector<Partition> basis() const;

private:
    int rank_, dim_;
};

/// Drops every term whose shape leaves the box (the quotient projection).
SchurExpansion reduce_to_box(const SchurExpansion& x, const GrassmannRing& g);

/// Product in the Schubert basis: one factor is expanded through the
/// determinantal formula into special classes, which then act by Pieri steps
/// bounded by the box.
SchurExpansion grassmann_product(const GrassmannRing& g, const Partition& a,
                                 const Partition& b);
SchurExpansion grassmann_product(const GrassmannRing& g, const SchurExpansion& a,
                                 const SchurExpansion& b);

/// sigma_k acting on a linear combination of cycle classes by Pieri in the box.
SchurExpansion cap_action(const GrassmannRing& g, int k, const SchurExpansion& cycles);

/// Integral of a top-weight class: the coefficient of the box (0 otherwise).
Rational integral(const GrassmannRing& g, const SchurExpansion& x);

/// Degree of the Pluecker embedding: sigma_1^{total_weight} evaluated at the box.
Integer grassmann_degree(int rank, int dim);

/// The ring map from the universal coefficient ring onto the finite ring:
/// rewrite in h, expand in the Schur basis, truncate to the box.
SchurExpansion grassmann_image(const Polynomial& p_in_e, const GrassmannRing& g);

} // namespace wronsk
