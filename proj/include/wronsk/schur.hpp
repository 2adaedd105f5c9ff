#pragma once

#include "wronsk/ode.hpp"
#include "wronsk/partition.hpp"
#include "wronsk/polynomial.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace wronsk {

// A graded sequence x_0 = 1, x_1, x_2, ... of ring elements to feed into the
// determinantal formula: concrete values (the h-sequence of a context) or
// formal variables.  Indices below zero are always zero; past the stored
// range the sequence either vanishes (truncated alphabets) or refuses.
class GradedSequence {
public:
    static GradedSequence from_values(SymbolsPtr symbols, std::vector<Polynomial> values,
                                      bool zero_beyond);
    /// x_j = h_j of the context; throws past the working order.
    static GradedSequence h_values(const UniversalContext& ctx);
    /// Formal variables prefix1..prefixN standing for x_1..x_N.
    static GradedSequence formal(const std::string& prefix, int count, bool zero_beyond);

    const SymbolsPtr& symbols() const noexcept { return symbols_; }
    int max_index() const noexcept { return static_cast<int>(values_.size()) - 1; }
    Polynomial at(int j) const;

private:
    GradedSequence(SymbolsPtr symbols, std::vector<Polynomial> values, bool zero_beyond);
    SymbolsPtr symbols_;
    std::vector<Polynomial> values_; // x_0..x_max
    bool zero_beyond_;
};

/// The (rank+1) x (rank+1) determinant det( x_{shape_{r-j} + j - i} )_{i,j}.
/// `shape` is any integer tuple of length rank+1 — non-monotone tuples are
/// meaningful and arise in the multinomial expansion; entries with negative
/// index are zero, so the determinant vanishes or acquires signs exactly as
/// the antisymmetrized formula dictates.
Polynomial jacobi_trudi(std::span<const int> shape, const GradedSequence& x, int rank);
Polynomial jacobi_trudi(const Partition& shape, const GradedSequence& x, int rank);

/// e_0..e_{count} as polynomials in the formal h-variables h1..h{count}:
/// e_k = h1 e_{k-1} - h2 e_{k-2} + ... (the inverse of the h-recurrence).
std::vector<Polynomial> e_from_h(int count);

/// Rewrites a polynomial over e1..eK as one over h1..hK (inverse generators).
Polynomial rewrite_in_h(const Polynomial& p);
/// Rewrites a polynomial over h1..hK as one over e1..eK.
Polynomial rewrite_in_e(const Polynomial& p);

// Finite Q-linear combination of Schur classes indexed by partitions.
class SchurExpansion {
public:
    SchurExpansion() = default;

    void add(const Partition& shape, const Rational& coeff);
    Rational coeff(const Partition& shape) const;
    const std::map<Partition, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    SchurExpansion scaled(const Rational& factor) const;
    friend SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b);
    friend SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b);
    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) = default;

    /// e.g. "s[3] + 2*s[2,1]"; the unit class renders as "s[0]"; zero as "0".
    std::string to_string() const;

private:
    std::map<Partition, Rational> terms_;
};

/// Expands a polynomial in the formal h-variables into the Schur basis with
/// at most rank+1 rows, by iterated Pieri steps from the empty shape.  The
/// input table must be h1..hM for some M.
SchurExpansion schur_expand(const Polynomial& p_in_h, int rank);

/// The expansion of h1^k (equivalently sigma_1^k): the coefficient of each
/// shape is its standard-tableau count.
SchurExpansion sigma1_power(int k, int rank);

} // namespace wronsk
