#pragma once

#include "wronsk/rational.hpp"
#include "wronsk/symbol_table.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wronsk {

// Exponent vector against a fixed symbol table, with the total degree cached.
// Width always equals the table size of the polynomial holding it.
class Monomial {
public:
    using Exponents = boost::container::small_vector<std::uint16_t, 10>;

    Monomial() = default;
    explicit Monomial(std::size_t width) : exps_(width, 0) {}

    static Monomial from_exponents(std::span<const int> exps);
    static Monomial variable(std::size_t width, std::size_t index, int power = 1);

    std::size_t width() const noexcept { return exps_.size(); }
    int exponent(std::size_t i) const { return static_cast<int>(exps_[i]); }
    int degree() const noexcept { return degree_; }
    bool is_constant() const noexcept { return degree_ == 0; }
    long long weighted_degree(std::span<const int> weights) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

private:
    Exponents exps_;
    int degree_ = 0;
};

/// Three-way graded-lexicographic comparison: total degree first, then
/// lexicographic on the exponent vector.  Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q.  Terms are kept canonical: sorted in
// descending graded-lexicographic order, no zero coefficients, no duplicate
// monomials.  The symbol table is shared, never copied.
class Polynomial {
public:
    Polynomial() : symbols_(SymbolTable::scalars()) {}
    explicit Polynomial(SymbolsPtr symbols) : symbols_(std::move(symbols)) {}

    static Polynomial constant(SymbolsPtr symbols, Rational value);
    static Polynomial variable(SymbolsPtr symbols, std::string_view name, int power = 1);
    static Polynomial variable(SymbolsPtr symbols, std::size_t index, int power = 1);
    /// Canonicalizes: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(SymbolsPtr symbols, std::vector<Term> terms);

    const SymbolsPtr& symbols() const noexcept { return symbols_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// The value of a constant polynomial (0 for the zero polynomial).
    /// Throws UsageError when a variable actually occurs.
    Rational constant_value() const;
    Rational coefficient(const Monomial& mono) const;
    Rational coefficient(std::span<const int> exps) const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    /// Max over terms of sum(exp_i * weights[i]); -1 for the zero polynomial.
    long long weighted_degree(std::span<const int> weights) const;
    /// True when every term has the same weighted degree (vacuously true for 0).
    bool is_homogeneous(std::span<const int> weights) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& factor) const;
    Polynomial pow(int exponent) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text form, e.g. "e1^2 - e2", "2*e1*e2^2 + 1/2", "0".
    std::string to_string() const;

private:
    SymbolsPtr symbols_;
    std::vector<Term> terms_;
};

/// a * b * factor in one pass; cheaper than scaled(mul(...)).
Polynomial mul_scaled(const Polynomial& a, const Polynomial& b, const Rational& factor);

/// Parses the canonical text form (and harmless variants: extra whitespace,
/// explicit "1*" factors, coefficients in any factor position).
Polynomial parse_polynomial(const SymbolsPtr& symbols, std::string_view text);

// Ring map determined by images of the source variables.  Variables without
// an image may not occur in the argument.  apply() is the unique Q-algebra
// homomorphism extending the assignment.
class Substitution {
public:
    Substitution(SymbolsPtr source, SymbolsPtr target);

    /// Name-based embedding: every source symbol maps to the target variable
    /// of the same name, which must exist.
    static Substitution rename(SymbolsPtr source, SymbolsPtr target);

    void set(std::string_view name, Polynomial image);
    void set(std::size_t index, Polynomial image);

    const SymbolsPtr& source() const noexcept { return source_; }
    const SymbolsPtr& target() const noexcept { return target_; }

    Polynomial apply(const Polynomial& p) const;

private:
    SymbolsPtr source_;
    SymbolsPtr target_;
    std::vector<std::optional<Polynomial>> images_;
};

/// Evaluates p at the given point (values in table order).
Rational evaluate(const Polynomial& p, std::span<const Rational> values);

} // namespace wronsk
