#pragma once

#include "wronsk/poly_matrix.hpp"
#include "wronsk/series.hpp"

#include <memory>
#include <span>
#include <vector>

namespace wronsk {

// The universal rank-r setting: the coefficient ring Q[e1..e{r+1}] with the
// complete-homogeneous sequence h_j cached up to a working order.  Everything
// about the order-(r+1) equation
//
//   u^(r+1) - e1 u^(r) + e2 u^(r-1) - ... + (-1)^{r+1} e_{r+1} u = 0
//
// with generic symbolic coefficients is phrased against one of these.
// Copies are cheap (shared immutable data).
class UniversalContext {
public:
    /// order >= rank + 1 so that at least one full recurrence step exists.
    UniversalContext(int rank, int order);

    int rank() const noexcept;
    int order() const noexcept;
    const SymbolsPtr& symbols() const;

    /// h_j: h_0 = 1, h_j = 0 for j < 0, then the signed e-recurrence.
    /// Throws TruncationError past the working order.
    const Polynomial& h(int j) const;

    /// e_0 = 1, e_1..e_{rank+1} the variables, 0 beyond.
    Polynomial e(int i) const;

    /// D^{r+1} - e1 D^r + ... + (-1)^{r+1} e_{r+1}.
    DifferentialOperator universal_operator() const;

    /// Same ring, working order at least the given one.
    UniversalContext extended(int order) const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// The h-sequence h_0..h_order over a fresh Q[e1..e{rank+1}] table.
std::vector<Polynomial> h_sequence(int rank, int order);

/// The universal fundamental system u_0..u_r at the given order:
/// u_j = sum_{n >= j} h_{n-j} t^n/n!.
std::vector<DividedSeries> universal_solutions(const UniversalContext& ctx, int order);

struct KernelReport {
    bool satisfied;
    int first_violation; // coefficient index of the first failure; -1 if none
};

/// Checks the kernel recurrence x_{n+1} = e1 x_n - e2 x_{n-1} + ... starting
/// at n = rank, against the universal coefficients.  The series may live over
/// any table that contains e1..e{rank+1} by name.
KernelReport kernel_check(const UniversalContext& ctx, const DividedSeries& f);

/// Same recurrence with explicit coefficients a_1..a_{r+1} over f's own ring.
KernelReport kernel_check(std::span<const Polynomial> coeffs, const DividedSeries& f);

struct CauchySolution {
    DividedSeries series;
    std::vector<Polynomial> lambda; // the combination g = sum_j lambda_j u_j
};

/// The unique kernel element with prescribed initial coefficients
/// x_0..x_r: g = sum_j Lambda_j u_j, Lambda_j = sum_{i<=j} (-1)^i e_i x_{j-i}.
/// Initial values may live over any ring containing e1..e{rank+1} by name.
CauchySolution cauchy_solve(const UniversalContext& ctx,
                            std::span<const Polynomial> inits, int order);
CauchySolution cauchy_solve(const UniversalContext& ctx,
                            std::span<const Rational> inits, int order);

/// Fully symbolic initial conditions y0..y{rank} over Q[e.., y..].
CauchySolution symbolic_cauchy_solution(const UniversalContext& ctx, int order);

/// Solves U_{r+1}(D) g = rhs with prescribed x_0..x_r, by the particular
/// solution p (p_0..p_r = 0, then the shifted driven recurrence) plus the
/// Cauchy solution for the initial values.  Needs rhs order >= order - rank - 1.
DividedSeries solve_nonhomogeneous(const UniversalContext& ctx, const DividedSeries& rhs,
                                   std::span<const Polynomial> inits, int order);

/// Coefficient-wise specialization of a solution system.
std::vector<DividedSeries> specialize_system(const std::vector<DividedSeries>& system,
                                             const Substitution& images);

/// C[i][j] = coefficient j of solution i, square in the system size.
PolyMatrix initial_condition_matrix(std::span<const DividedSeries> solutions);

enum class SystemClass { fundamental, independent_not_fundamental, dependent };

struct FundamentalReport {
    Polynomial det;
    SystemClass verdict;
};

/// det == 0: dependent.  det a nonzero constant: fundamental (the initial
/// matrix is invertible over the ring).  Otherwise: independent, but the
/// determinant is a non-unit, so the system is not fundamental.
FundamentalReport fundamental_check(std::span<const DividedSeries> solutions);

// Element of the quotient algebra Q[e..][T] / (T^{r+1} - e1 T^r + ... ),
// written on the basis 1, alpha, ..., alpha^r where alpha is the class of T.
// This is the exact substitute for a generic root of the characteristic
// polynomial: no splitting field is ever constructed.
class AlgebraElement {
public:
    AlgebraElement(UniversalContext ctx, std::vector<Polynomial> coords);

    static AlgebraElement unit(const UniversalContext& ctx);
    static AlgebraElement root(const UniversalContext& ctx); // alpha itself

    const std::vector<Polynomial>& coords() const noexcept { return coords_; }
    const UniversalContext& context() const noexcept { return ctx_; }

    AlgebraElement scaled(const Polynomial& factor) const;
    AlgebraElement pow(int n) const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    UniversalContext ctx_;
    std::vector<Polynomial> coords_; // size rank+1
};

/// Lambda_j evaluated at alpha, j = 0..rank.
std::vector<AlgebraElement> lambda_elements(const UniversalContext& ctx);

/// Verifies exp(alpha t) = sum_j Lambda_j(alpha) u_j coefficient-by-coefficient
/// up to the given order: alpha^n == sum_j Lambda_j(alpha) h_{n-j} in the
/// quotient algebra.
bool universal_exp_check(const UniversalContext& ctx, int order);

} // namespace wronsk
