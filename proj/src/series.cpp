#include "wronsk/series.hpp"

#include "wronsk/errors.hpp"

#include <algorithm>

namespace wronsk {

DividedSeries::DividedSeries(SymbolsPtr symbols, std::vector<Polynomial> coeffs)
    : symbols_(std::move(symbols)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw UsageError("a series needs at least the order-0 coefficient");
    for (const Polynomial& c : coeffs_)
        if (!same_symbols(c.symbols(), symbols_))
            throw UsageError("series coefficient over the wrong symbol table");
}

DividedSeries DividedSeries::zero(SymbolsPtr symbols, int order) {
    if (order < 0) throw UsageError("negative series order");
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(order) + 1,
                                   Polynomial(symbols));
    return DividedSeries(std::move(symbols), std::move(coeffs));
}

DividedSeries DividedSeries::constant(const Polynomial& value, int order) {
    DividedSeries out = zero(value.symbols(), order);
    out.coeffs_[0] = value;
    return out;
}

DividedSeries DividedSeries::from_rationals(const std::vector<Rational>& coeffs) {
    const SymbolsPtr& table = SymbolTable::scalars();
    std::vector<Polynomial> polys;
    polys.reserve(coeffs.size());
    for (const Rational& c : coeffs) polys.push_back(Polynomial::constant(table, c));
    return DividedSeries(table, std::move(polys));
}

const Polynomial& DividedSeries::coeff(int n) const {
    if (n < 0) throw UsageError("negative series index");
    if (n > order())
        throw TruncationError("coefficient " + std::to_string(n) +
                              " requested from a series of order " +
                              std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n)];
}

bool DividedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Polynomial& c) { return c.is_zero(); });
}

DividedSeries DividedSeries::derived(int k) const {
    if (k < 0) throw UsageError("negative derivative count");
    if (k > order())
        throw TruncationError("derivative past the certified order: D^" +
                              std::to_string(k) + " of a series of order " +
                              std::to_string(order()));
    DividedSeries out(*this);
    out.coeffs_.erase(out.coeffs_.begin(), out.coeffs_.begin() + k);
    return out;
}

DividedSeries DividedSeries::truncated(int new_order) const {
    if (new_order < 0) throw UsageError("negative series order");
    if (new_order > order())
        throw TruncationError("cannot extend a truncated series");
    DividedSeries out(*this);
    out.coeffs_.resize(static_cast<std::size_t>(new_order) + 1);
    return out;
}

DividedSeries DividedSeries::scaled(const Polynomial& factor) const {
    if (!same_symbols(factor.symbols(), symbols_))
        throw UsageError("scale factor over the wrong symbol table");
    DividedSeries out(*this);
    for (Polynomial& c : out.coeffs_) c = c * factor;
    return out;
}

DividedSeries DividedSeries::scaled(const Rational& factor) const {
    DividedSeries out(*this);
    for (Polynomial& c : out.coeffs_) c = c.scaled(factor);
    return out;
}

DividedSeries DividedSeries::mapped(const Substitution& sub) const {
    std::vector<Polynomial> coeffs;
    coeffs.reserve(coeffs_.size());
    for (const Polynomial& c : coeffs_) coeffs.push_back(sub.apply(c));
    return DividedSeries(sub.target(), std::move(coeffs));
}

DividedSeries DividedSeries::operator-() const {
    DividedSeries out(*this);
    for (Polynomial& c : out.coeffs_) c = -c;
    return out;
}

namespace {

void check_same_ring(const DividedSeries& a, const DividedSeries& b) {
    if (!same_symbols(a.symbols(), b.symbols()))
        throw UsageError("series over different symbol tables");
}

} // namespace

DividedSeries operator+(const DividedSeries& a, const DividedSeries& b) {
    check_same_ring(a, b);
    const int n = std::min(a.order(), b.order());
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return DividedSeries(a.symbols_, std::move(coeffs));
}

DividedSeries operator-(const DividedSeries& a, const DividedSeries& b) {
    check_same_ring(a, b);
    const int n = std::min(a.order(), b.order());
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return DividedSeries(a.symbols_, std::move(coeffs));
}

DividedSeries operator*(const DividedSeries& a, const DividedSeries& b) {
    check_same_ring(a, b);
    const int n = std::min(a.order(), b.order());
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Polynomial acc(a.symbols_);
        for (int k = 0; k <= m; ++k) {
            const Rational factor{binomial(m, k)};
            acc += mul_scaled(a.coeffs_[k], b.coeffs_[m - k], factor);
        }
        coeffs.push_back(std::move(acc));
    }
    return DividedSeries(a.symbols_, std::move(coeffs));
}

bool operator==(const DividedSeries& a, const DividedSeries& b) {
    return same_symbols(a.symbols_, b.symbols_) && a.coeffs_ == b.coeffs_;
}

bool series_agree(const DividedSeries& a, const DividedSeries& b, int upto) {
    if (!same_symbols(a.symbols(), b.symbols())) return false;
    if (upto > a.order() || upto > b.order())
        throw TruncationError("comparison reaches past a certified order");
    for (int i = 0; i <= upto; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
}

DifferentialOperator::DifferentialOperator(SymbolsPtr symbols,
                                           std::vector<Polynomial> coeffs)
    : symbols_(std::move(symbols)), coeffs_(std::move(coeffs)) {
    for (const Polynomial& c : coeffs_)
        if (!same_symbols(c.symbols(), symbols_))
            throw UsageError("operator coefficient over the wrong symbol table");
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Polynomial(symbols_));
}

const Polynomial& DifferentialOperator::coeff(int k) const {
    if (k < 0 || k > degree()) throw UsageError("operator coefficient out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

DividedSeries DifferentialOperator::apply(const DividedSeries& f) const {
    if (!same_symbols(f.symbols(), symbols_))
        throw UsageError("operator applied to a series over the wrong table");
    const int out_order = f.order() - degree();
    if (out_order < 0)
        throw TruncationError("series order too small for this operator");
    DividedSeries acc = DividedSeries::zero(symbols_, out_order);
    for (int k = 0; k <= degree(); ++k) {
        if (coeffs_[static_cast<std::size_t>(k)].is_zero()) continue;
        acc = acc + f.derived(k).truncated(out_order).scaled(
                        coeffs_[static_cast<std::size_t>(k)]);
    }
    return acc;
}

} // namespace wronsk
