#pragma once

#include "wronsk/polynomial.hpp"

#include <vector>

namespace wronsk {

// Truncated power series in the divided-power presentation: coeffs()[n] holds
// a_n where f = sum_n a_n t^n / n!.  Under this convention differentiation is
// a pure index shift and multiplication is the binomial convolution
//   (fg)_n = sum_k C(n,k) f_k g_{n-k},
// so everything stays integral whenever the inputs are.  Coefficients are
// polynomials over one shared symbol table (the empty table for plain
// rational series).  A series of order N certifies coefficients 0..N and
// nothing beyond; binary operations truncate to the smaller order.
class DividedSeries {
public:
    DividedSeries(SymbolsPtr symbols, std::vector<Polynomial> coeffs);

    static DividedSeries zero(SymbolsPtr symbols, int order);
    static DividedSeries constant(const Polynomial& value, int order);
    static DividedSeries from_rationals(const std::vector<Rational>& coeffs);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const SymbolsPtr& symbols() const noexcept { return symbols_; }
    const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
    /// Throws TruncationError past the certified order.
    const Polynomial& coeff(int n) const;
    bool is_zero() const;

    /// k-th derivative: an index shift dropping the order by k.
    /// Throws TruncationError when k exceeds the order.
    DividedSeries derived(int k = 1) const;
    DividedSeries truncated(int new_order) const;
    /// Multiplication by an element of the coefficient ring (constant in t).
    DividedSeries scaled(const Polynomial& factor) const;
    DividedSeries scaled(const Rational& factor) const;
    /// Coefficient-wise ring map.
    DividedSeries mapped(const Substitution& sub) const;

    DividedSeries operator-() const;
    friend DividedSeries operator+(const DividedSeries& a, const DividedSeries& b);
    friend DividedSeries operator-(const DividedSeries& a, const DividedSeries& b);
    friend DividedSeries operator*(const DividedSeries& a, const DividedSeries& b);

    /// Strict: same table, same order, same coefficients.
    friend bool operator==(const DividedSeries& a, const DividedSeries& b);

private:
    SymbolsPtr symbols_;
    std::vector<Polynomial> coeffs_;
};

/// Coefficients 0..upto agree (both orders must reach upto).
bool series_agree(const DividedSeries& a, const DividedSeries& b, int upto);

// Linear differential operator c_0 + c_1 D + ... + c_m D^m with coefficients
// constant in t.
class DifferentialOperator {
public:
    DifferentialOperator(SymbolsPtr symbols, std::vector<Polynomial> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const SymbolsPtr& symbols() const noexcept { return symbols_; }
    const Polynomial& coeff(int k) const;

    /// Applies the operator; the result order is f.order() - degree().
    DividedSeries apply(const DividedSeries& f) const;

private:
    SymbolsPtr symbols_;
    std::vector<Polynomial> coeffs_;
};

} // namespace wronsk
