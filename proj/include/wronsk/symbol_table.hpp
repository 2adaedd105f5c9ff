#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wronsk {

class SymbolTable;
using SymbolsPtr = std::shared_ptr<const SymbolTable>;

// An ordered list of distinct variable names.  Polynomials store exponent
// vectors positionally against one of these, shared by pointer; two tables
// with the same names are interchangeable.
class SymbolTable {
public:
    /// Names must be nonempty, distinct, and free of the characters used by
    /// the text format ('*', '^', '+', '-', '/', whitespace, digits first).
    static SymbolsPtr make(std::vector<std::string> names);

    /// The empty table: polynomials over it are plain rationals.
    static const SymbolsPtr& scalars();

    /// e1..e{rank+1}, the coefficient symbols of a rank-r operator.
    static SymbolsPtr ode_coefficients(int rank);

    /// e1..e{rank+1} followed by y0..y{rank} (symbolic initial conditions).
    static SymbolsPtr ode_with_inits(int rank);

    /// prefix1..prefixN, e.g. prefixed("h", 3) -> h1, h2, h3.
    static SymbolsPtr prefixed(const std::string& prefix, int count);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_[index]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
        return a.names_ == b.names_;
    }

private:
    explicit SymbolTable(std::vector<std::string> names);
    std::vector<std::string> names_;
};

/// True when the two tables list the same names (pointer fast path).
bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b);

} // namespace wronsk
