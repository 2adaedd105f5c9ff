#include "wronsk/poly_matrix.hpp"

#include "wronsk/detail/laplace_det.hpp"
#include "wronsk/errors.hpp"

namespace wronsk {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, SymbolsPtr symbols)
    : rows_(rows), cols_(cols), symbols_(std::move(symbols)),
      entries_(rows * cols, Polynomial(symbols_)) {}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw UsageError("matrix shape mismatch in addition");
    if (!same_symbols(a.symbols_, b.symbols_))
        throw UsageError("matrices over different symbol tables");
    PolyMatrix out(a.rows_, a.cols_, a.symbols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix shape mismatch in product");
    if (!same_symbols(a.symbols_, b.symbols_))
        throw UsageError("matrices over different symbol tables");
    PolyMatrix out(a.rows_, b.cols_, a.symbols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Polynomial acc(a.symbols_);
            for (std::size_t k = 0; k < a.cols_; ++k)
                acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           same_symbols(a.symbols_, b.symbols_) && a.entries_ == b.entries_;
}

Polynomial matrix_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
    if (m.rows() == 0) return Polynomial::constant(m.symbols(), Rational(1));
    return detail::laplace_det<Polynomial>(
        m.rows(), [&m](std::size_t i, std::size_t j) { return m.at(i, j); });
}

} // namespace wronsk
