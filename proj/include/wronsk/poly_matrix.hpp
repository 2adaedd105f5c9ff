#pragma once

#include "wronsk/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace wronsk {

// Dense matrix with Polynomial entries, row-major.  All entries share one
// symbol table.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, SymbolsPtr symbols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const SymbolsPtr& symbols() const noexcept { return symbols_; }

    Polynomial& at(std::size_t i, std::size_t j);
    const Polynomial& at(std::size_t i, std::size_t j) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    std::size_t rows_, cols_;
    SymbolsPtr symbols_;
    std::vector<Polynomial> entries_;
};

/// Division-free determinant (memoized Laplace expansion).  Square only.
Polynomial matrix_det(const PolyMatrix& m);

} // namespace wronsk
