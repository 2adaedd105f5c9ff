#include "wronsk/ode.hpp"

#include "wronsk/errors.hpp"

#include <algorithm>

namespace wronsk {

struct UniversalContext::Data {
    int rank;
    int order;
    SymbolsPtr symbols;
    std::vector<Polynomial> h; // h_0..h_order
    Polynomial zero;           // over `symbols`, handed out for h(j < 0)
};

namespace {

std::vector<Polynomial> build_h(int rank, int order, const SymbolsPtr& symbols) {
    std::vector<Polynomial> h;
    h.reserve(static_cast<std::size_t>(order) + 1);
    h.push_back(Polynomial::constant(symbols, Rational(1)));
    for (int n = 1; n <= order; ++n) {
        Polynomial next(symbols);
        for (int i = 1; i <= rank + 1 && i <= n; ++i) {
            const Polynomial ei = Polynomial::variable(symbols, static_cast<std::size_t>(i - 1));
            const Polynomial prod = ei * h[static_cast<std::size_t>(n - i)];
            if (i % 2 == 1)
                next += prod;
            else
                next -= prod;
        }
        h.push_back(std::move(next));
    }
    return h;
}

} // namespace

UniversalContext::UniversalContext(int rank, int order) {
    if (rank < 0) throw UsageError("rank must be nonnegative");
    if (order < rank + 1)
        throw UsageError("working order must be at least rank + 1");
    auto data = std::make_shared<Data>();
    data->rank = rank;
    data->order = order;
    data->symbols = SymbolTable::ode_coefficients(rank);
    data->h = build_h(rank, order, data->symbols);
    data->zero = Polynomial(data->symbols);
    data_ = std::move(data);
}

int UniversalContext::rank() const noexcept { return data_->rank; }
int UniversalContext::order() const noexcept { return data_->order; }
const SymbolsPtr& UniversalContext::symbols() const { return data_->symbols; }

const Polynomial& UniversalContext::h(int j) const {
    if (j < 0) return data_->zero;
    if (j > data_->order)
        throw TruncationError("h_" + std::to_string(j) +
                              " is beyond the working order " +
                              std::to_string(data_->order));
    return data_->h[static_cast<std::size_t>(j)];
}

Polynomial UniversalContext::e(int i) const {
    if (i < 0) throw UsageError("negative elementary index");
    if (i == 0) return Polynomial::constant(data_->symbols, Rational(1));
    if (i > data_->rank + 1) return Polynomial(data_->symbols);
    return Polynomial::variable(data_->symbols, static_cast<std::size_t>(i - 1));
}

DifferentialOperator UniversalContext::universal_operator() const {
    const int r = data_->rank;
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(r) + 2,
                                   Polynomial(data_->symbols));
    coeffs[static_cast<std::size_t>(r + 1)] =
        Polynomial::constant(data_->symbols, Rational(1));
    for (int i = 1; i <= r + 1; ++i) {
        Polynomial c = e(i);
        if (i % 2 == 1) c = -c;
        coeffs[static_cast<std::size_t>(r + 1 - i)] = std::move(c);
    }
    return DifferentialOperator(data_->symbols, std::move(coeffs));
}

UniversalContext UniversalContext::extended(int order) const {
    if (order <= data_->order) return *this;
    UniversalContext out(*this);
    auto data = std::make_shared<Data>();
    data->rank = data_->rank;
    data->order = order;
    data->symbols = data_->symbols; // same table: polynomials stay compatible
    data->h = build_h(data->rank, order, data->symbols);
    data->zero = Polynomial(data->symbols);
    out.data_ = std::move(data);
    return out;
}

std::vector<Polynomial> h_sequence(int rank, int order) {
    if (rank < 0) throw UsageError("rank must be nonnegative");
    if (order < 0) throw UsageError("order must be nonnegative");
    return build_h(rank, order, SymbolTable::ode_coefficients(rank));
}

std::vector<DividedSeries> universal_solutions(const UniversalContext& ctx, int order) {
    if (order < ctx.rank())
        throw UsageError("order too small to hold the fundamental system");
    const UniversalContext c = ctx.extended(order);
    std::vector<DividedSeries> out;
    out.reserve(static_cast<std::size_t>(c.rank()) + 1);
    for (int j = 0; j <= c.rank(); ++j) {
        std::vector<Polynomial> coeffs;
        coeffs.reserve(static_cast<std::size_t>(order) + 1);
        for (int n = 0; n <= order; ++n)
            coeffs.push_back(n < j ? Polynomial(c.symbols()) : c.h(n - j));
        out.emplace_back(c.symbols(), std::move(coeffs));
    }
    return out;
}

KernelReport kernel_check(std::span<const Polynomial> coeffs, const DividedSeries& f) {
    const int r = static_cast<int>(coeffs.size()) - 1;
    if (r < 0) throw UsageError("kernel check needs at least one coefficient");
    for (const Polynomial& c : coeffs)
        if (!same_symbols(c.symbols(), f.symbols()))
            throw UsageError("recurrence coefficients over the wrong symbol table");
    // x_{n+1} = a_1 x_n - a_2 x_{n-1} + ... + (-1)^r a_{r+1} x_{n-r}, n >= r.
    for (int m = r + 1; m <= f.order(); ++m) {
        Polynomial expected(f.symbols());
        for (int i = 1; i <= r + 1; ++i) {
            const Polynomial prod = coeffs[static_cast<std::size_t>(i - 1)] * f.coeff(m - i);
            if (i % 2 == 1)
                expected += prod;
            else
                expected -= prod;
        }
        if (!(f.coeff(m) == expected)) return {false, m};
    }
    return {true, -1};
}

namespace {

// e1..e{rank+1} as polynomials over an arbitrary table containing them by name.
std::vector<Polynomial> embedded_e(const SymbolsPtr& table, int rank) {
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(rank) + 1);
    for (int i = 1; i <= rank + 1; ++i) {
        const std::string name = "e" + std::to_string(i);
        if (!table->find(name))
            throw UsageError("coefficient ring lacks the symbol " + name);
        out.push_back(Polynomial::variable(table, name));
    }
    return out;
}

} // namespace

KernelReport kernel_check(const UniversalContext& ctx, const DividedSeries& f) {
    return kernel_check(embedded_e(f.symbols(), ctx.rank()), f);
}

CauchySolution cauchy_solve(const UniversalContext& ctx,
                            std::span<const Polynomial> inits, int order) {
    const int r = ctx.rank();
    if (static_cast<int>(inits.size()) != r + 1)
        throw UsageError("need exactly rank+1 initial values");
    const SymbolsPtr& working = inits[0].symbols();
    for (const Polynomial& x : inits)
        if (!same_symbols(x.symbols(), working))
            throw UsageError("initial values over different symbol tables");
    const std::vector<Polynomial> es = embedded_e(working, r);

    // Lambda_j = sum_{i=0..j} (-1)^i e_i x_{j-i}.
    std::vector<Polynomial> lambda;
    lambda.reserve(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) {
        Polynomial acc = inits[static_cast<std::size_t>(j)];
        for (int i = 1; i <= j; ++i) {
            const Polynomial prod =
                es[static_cast<std::size_t>(i - 1)] * inits[static_cast<std::size_t>(j - i)];
            if (i % 2 == 1)
                acc -= prod;
            else
                acc += prod;
        }
        lambda.push_back(std::move(acc));
    }

    const std::vector<DividedSeries> base = universal_solutions(ctx, order);
    const Substitution embed = Substitution::rename(ctx.symbols(), working);
    DividedSeries g = DividedSeries::zero(working, order);
    for (int j = 0; j <= r; ++j)
        g = g + base[static_cast<std::size_t>(j)].mapped(embed).scaled(
                    lambda[static_cast<std::size_t>(j)]);
    return {std::move(g), std::move(lambda)};
}

CauchySolution cauchy_solve(const UniversalContext& ctx,
                            std::span<const Rational> inits, int order) {
    std::vector<Polynomial> polys;
    polys.reserve(inits.size());
    for (const Rational& x : inits)
        polys.push_back(Polynomial::constant(ctx.symbols(), x));
    return cauchy_solve(ctx, polys, order);
}

CauchySolution symbolic_cauchy_solution(const UniversalContext& ctx, int order) {
    const SymbolsPtr table = SymbolTable::ode_with_inits(ctx.rank());
    std::vector<Polynomial> inits;
    inits.reserve(static_cast<std::size_t>(ctx.rank()) + 1);
    for (int j = 0; j <= ctx.rank(); ++j)
        inits.push_back(Polynomial::variable(table, "y" + std::to_string(j)));
    return cauchy_solve(ctx, inits, order);
}

DividedSeries solve_nonhomogeneous(const UniversalContext& ctx, const DividedSeries& rhs,
                                   std::span<const Polynomial> inits, int order) {
    const int r = ctx.rank();
    const SymbolsPtr& working = rhs.symbols();
    if (order < r + 1) throw UsageError("order too small for rank");
    if (rhs.order() < order - r - 1)
        throw TruncationError("right-hand side order " + std::to_string(rhs.order()) +
                              " cannot certify a solution of order " +
                              std::to_string(order));
    const std::vector<Polynomial> es = embedded_e(working, r);

    // Particular solution: p_0..p_r = 0, then the driven recurrence
    // p_{r+1+n} = a_n + e1 p_{r+n} - e2 p_{r+n-1} + ...
    std::vector<Polynomial> p(static_cast<std::size_t>(order) + 1, Polynomial(working));
    for (int m = r + 1; m <= order; ++m) {
        Polynomial acc = rhs.coeff(m - r - 1);
        for (int i = 1; i <= r + 1; ++i) {
            const Polynomial prod =
                es[static_cast<std::size_t>(i - 1)] * p[static_cast<std::size_t>(m - i)];
            if (i % 2 == 1)
                acc += prod;
            else
                acc -= prod;
        }
        p[static_cast<std::size_t>(m)] = std::move(acc);
    }
    DividedSeries particular(working, std::move(p));
    if (inits.empty()) return particular;

    std::vector<Polynomial> lifted(inits.begin(), inits.end());
    for (Polynomial& x : lifted)
        if (!same_symbols(x.symbols(), working))
            throw UsageError("initial values over the wrong symbol table");
    return particular + cauchy_solve(ctx, lifted, order).series;
}

std::vector<DividedSeries> specialize_system(const std::vector<DividedSeries>& system,
                                             const Substitution& images) {
    std::vector<DividedSeries> out;
    out.reserve(system.size());
    for (const DividedSeries& f : system) out.push_back(f.mapped(images));
    return out;
}

PolyMatrix initial_condition_matrix(std::span<const DividedSeries> solutions) {
    if (solutions.empty()) throw UsageError("empty solution system");
    const std::size_t k = solutions.size();
    const SymbolsPtr& table = solutions[0].symbols();
    PolyMatrix out(k, k, table);
    for (std::size_t i = 0; i < k; ++i) {
        if (!same_symbols(solutions[i].symbols(), table))
            throw UsageError("solutions over different symbol tables");
        if (solutions[i].order() < static_cast<int>(k) - 1)
            throw TruncationError("solution order too small for the initial matrix");
        for (std::size_t j = 0; j < k; ++j)
            out.at(i, j) = solutions[i].coeff(static_cast<int>(j));
    }
    return out;
}

FundamentalReport fundamental_check(std::span<const DividedSeries> solutions) {
    Polynomial det = matrix_det(initial_condition_matrix(solutions));
    SystemClass verdict;
    if (det.is_zero())
        verdict = SystemClass::dependent;
    else if (det.is_constant())
        verdict = SystemClass::fundamental;
    else
        verdict = SystemClass::independent_not_fundamental;
    return {std::move(det), verdict};
}

// ---------------------------------------------------------------------------
// Quotient algebra

AlgebraElement::AlgebraElement(UniversalContext ctx, std::vector<Polynomial> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != ctx_.rank() + 1)
        throw UsageError("algebra element needs rank+1 coordinates");
    for (const Polynomial& c : coords_)
        if (!same_symbols(c.symbols(), ctx_.symbols()))
            throw UsageError("algebra coordinate over the wrong symbol table");
}

AlgebraElement AlgebraElement::unit(const UniversalContext& ctx) {
    std::vector<Polynomial> coords(static_cast<std::size_t>(ctx.rank()) + 1,
                                   Polynomial(ctx.symbols()));
    coords[0] = Polynomial::constant(ctx.symbols(), Rational(1));
    return AlgebraElement(ctx, std::move(coords));
}

AlgebraElement AlgebraElement::root(const UniversalContext& ctx) {
    std::vector<Polynomial> coords(static_cast<std::size_t>(ctx.rank()) + 1,
                                   Polynomial(ctx.symbols()));
    if (ctx.rank() >= 1)
        coords[1] = Polynomial::constant(ctx.symbols(), Rational(1));
    else
        coords[0] = ctx.e(1); // rank 0: T = e1 in the quotient
    return AlgebraElement(ctx, std::move(coords));
}

AlgebraElement AlgebraElement::scaled(const Polynomial& factor) const {
    std::vector<Polynomial> coords;
    coords.reserve(coords_.size());
    for (const Polynomial& c : coords_) coords.push_back(c * factor);
    return AlgebraElement(ctx_, std::move(coords));
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (!same_symbols(a.ctx_.symbols(), b.ctx_.symbols()) ||
        a.ctx_.rank() != b.ctx_.rank())
        throw UsageError("algebra elements from different contexts");
    std::vector<Polynomial> coords;
    coords.reserve(a.coords_.size());
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        coords.push_back(a.coords_[i] + b.coords_[i]);
    return AlgebraElement(a.ctx_, std::move(coords));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    if (!same_symbols(a.ctx_.symbols(), b.ctx_.symbols()) ||
        a.ctx_.rank() != b.ctx_.rank())
        throw UsageError("algebra elements from different contexts");
    std::vector<Polynomial> coords;
    coords.reserve(a.coords_.size());
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        coords.push_back(a.coords_[i] - b.coords_[i]);
    return AlgebraElement(a.ctx_, std::move(coords));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (!same_symbols(a.ctx_.symbols(), b.ctx_.symbols()) ||
        a.ctx_.rank() != b.ctx_.rank())
        throw UsageError("algebra elements from different contexts");
    const UniversalContext& ctx = a.ctx_;
    const int r = ctx.rank();
    const SymbolsPtr& table = ctx.symbols();

    // Plain convolution in T, then reduce T^m for m > r with
    // T^{r+1} = e1 T^r - e2 T^{r-1} + ... + (-1)^r e_{r+1}.
    std::vector<Polynomial> conv(2 * static_cast<std::size_t>(r) + 1, Polynomial(table));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j)
            conv[i + j] += a.coords_[i] * b.coords_[j];
    }
    for (int m = 2 * r; m >= r + 1; --m) {
        Polynomial top = std::move(conv[static_cast<std::size_t>(m)]);
        conv[static_cast<std::size_t>(m)] = Polynomial(table);
        if (top.is_zero()) continue;
        for (int i = 1; i <= r + 1; ++i) {
            const Polynomial prod = ctx.e(i) * top;
            if (i % 2 == 1)
                conv[static_cast<std::size_t>(m - i)] += prod;
            else
                conv[static_cast<std::size_t>(m - i)] -= prod;
        }
    }
    conv.resize(static_cast<std::size_t>(r) + 1);
    return AlgebraElement(ctx, std::move(conv));
}

AlgebraElement AlgebraElement::pow(int n) const {
    if (n < 0) throw UsageError("negative algebra power");
    AlgebraElement result = unit(ctx_);
    AlgebraElement base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ctx_.rank() == b.ctx_.rank() &&
           same_symbols(a.ctx_.symbols(), b.ctx_.symbols()) && a.coords_ == b.coords_;
}

std::vector<AlgebraElement> lambda_elements(const UniversalContext& ctx) {
    const AlgebraElement alpha = AlgebraElement::root(ctx);
    std::vector<AlgebraElement> powers{AlgebraElement::unit(ctx)};
    for (int j = 1; j <= ctx.rank(); ++j) powers.push_back(powers.back() * alpha);

    std::vector<AlgebraElement> out;
    out.reserve(static_cast<std::size_t>(ctx.rank()) + 1);
    for (int j = 0; j <= ctx.rank(); ++j) {
        AlgebraElement acc = powers[static_cast<std::size_t>(j)];
        for (int i = 1; i <= j; ++i) {
            const AlgebraElement term =
                powers[static_cast<std::size_t>(j - i)].scaled(ctx.e(i));
            if (i % 2 == 1)
                acc = acc - term;
            else
                acc = acc + term;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

bool universal_exp_check(const UniversalContext& ctx, int order) {
    const UniversalContext c = ctx.extended(order);
    const AlgebraElement alpha = AlgebraElement::root(c);
    const std::vector<AlgebraElement> lambda = lambda_elements(c);

    AlgebraElement alpha_n = AlgebraElement::unit(c);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) alpha_n = alpha_n * alpha;
        // Coefficient n of sum_j Lambda_j(alpha) u_j is sum_j Lambda_j(alpha) h_{n-j}.
        AlgebraElement rhs = lambda[0].scaled(c.h(n));
        for (int j = 1; j <= std::min(c.rank(), n); ++j)
            rhs = rhs + lambda[static_cast<std::size_t>(j)].scaled(c.h(n - j));
        if (!(alpha_n == rhs)) return false;
    }
    return true;
}

} // namespace wronsk
