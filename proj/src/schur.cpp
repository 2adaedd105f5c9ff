#include "wronsk/schur.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/poly_matrix.hpp"

#include <sstream>

namespace wronsk {

GradedSequence::GradedSequence(SymbolsPtr symbols, std::vector<Polynomial> values,
                               bool zero_beyond)
    : symbols_(std::move(symbols)), values_(std::move(values)), zero_beyond_(zero_beyond) {
    if (values_.empty() || !(values_[0] == Polynomial::constant(symbols_, Rational(1))))
        throw UsageError("a graded sequence starts with x_0 = 1");
    for (const Polynomial& v : values_)
        if (!same_symbols(v.symbols(), symbols_))
            throw UsageError("graded sequence value over the wrong symbol table");
}

GradedSequence GradedSequence::from_values(SymbolsPtr symbols,
                                           std::vector<Polynomial> values,
                                           bool zero_beyond) {
    return GradedSequence(std::move(symbols), std::move(values), zero_beyond);
}

GradedSequence GradedSequence::h_values(const UniversalContext& ctx) {
    std::vector<Polynomial> values;
    values.reserve(static_cast<std::size_t>(ctx.order()) + 1);
    for (int j = 0; j <= ctx.order(); ++j) values.push_back(ctx.h(j));
    return GradedSequence(ctx.symbols(), std::move(values), false);
}

GradedSequence GradedSequence::formal(const std::string& prefix, int count,
                                      bool zero_beyond) {
    SymbolsPtr table = SymbolTable::prefixed(prefix, count);
    std::vector<Polynomial> values;
    values.reserve(static_cast<std::size_t>(count) + 1);
    values.push_back(Polynomial::constant(table, Rational(1)));
    for (int j = 1; j <= count; ++j)
        values.push_back(Polynomial::variable(table, static_cast<std::size_t>(j - 1)));
    return GradedSequence(std::move(table), std::move(values), zero_beyond);
}

Polynomial GradedSequence::at(int j) const {
    if (j < 0) return Polynomial(symbols_);
    if (j > max_index()) {
        if (zero_beyond_) return Polynomial(symbols_);
        throw TruncationError("graded sequence index " + std::to_string(j) +
                              " beyond the stored range " + std::to_string(max_index()));
    }
    return values_[static_cast<std::size_t>(j)];
}

Polynomial jacobi_trudi(std::span<const int> shape, const GradedSequence& x, int rank) {
    if (static_cast<int>(shape.size()) != rank + 1)
        throw UsageError("shape tuple must have exactly rank+1 entries");
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    PolyMatrix m(n, n, x.symbols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int index = shape[n - 1 - j] + static_cast<int>(j) - static_cast<int>(i);
            m.at(i, j) = x.at(index);
        }
    return matrix_det(m);
}

Polynomial jacobi_trudi(const Partition& shape, const GradedSequence& x, int rank) {
    return jacobi_trudi(shape.padded(rank + 1), x, rank);
}

std::vector<Polynomial> e_from_h(int count) {
    const SymbolsPtr table = SymbolTable::prefixed("h", count);
    std::vector<Polynomial> e;
    e.reserve(static_cast<std::size_t>(count) + 1);
    e.push_back(Polynomial::constant(table, Rational(1)));
    // From sum_{i=0..k} (-1)^i e_i h_{k-i} = 0:
    //   e_k = (-1)^{k+1} sum_{i=0..k-1} (-1)^i e_i h_{k-i}.
    for (int k = 1; k <= count; ++k) {
        Polynomial acc(table);
        for (int i = 0; i < k; ++i) {
            const Polynomial hk_i =
                Polynomial::variable(table, static_cast<std::size_t>(k - i - 1));
            const Polynomial prod = e[static_cast<std::size_t>(i)] * hk_i;
            const bool positive = ((k + 1) + i) % 2 == 0;
            if (positive)
                acc += prod;
            else
                acc -= prod;
        }
        e.push_back(std::move(acc));
    }
    return e;
}

namespace {

// Checks that the table is prefix1..prefixN in order; returns N.
int prefixed_size(const SymbolsPtr& table, const std::string& prefix) {
    const int n = static_cast<int>(table->size());
    for (int i = 0; i < n; ++i)
        if (table->name(static_cast<std::size_t>(i)) != prefix + std::to_string(i + 1))
            throw UsageError("expected the symbol table " + prefix + "1.." + prefix +
                             std::to_string(n));
    return n;
}

} // namespace

Polynomial rewrite_in_h(const Polynomial& p) {
    const int k = prefixed_size(p.symbols(), "e");
    const std::vector<Polynomial> images = e_from_h(k);
    Substitution sub(p.symbols(), images[0].symbols());
    for (int i = 1; i <= k; ++i)
        sub.set(static_cast<std::size_t>(i - 1), images[static_cast<std::size_t>(i)]);
    return sub.apply(p);
}

Polynomial rewrite_in_e(const Polynomial& p) {
    const int k = prefixed_size(p.symbols(), "h");
    // h_j over e1..eK is the universal h-sequence of rank K-1.
    const std::vector<Polynomial> images = h_sequence(k - 1, k);
    Substitution sub(p.symbols(), images[0].symbols());
    for (int i = 1; i <= k; ++i)
        sub.set(static_cast<std::size_t>(i - 1), images[static_cast<std::size_t>(i)]);
    return sub.apply(p);
}

void SchurExpansion::add(const Partition& shape, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(shape, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SchurExpansion::coeff(const Partition& shape) const {
    const auto it = terms_.find(shape);
    return it == terms_.end() ? Rational(0) : it->second;
}

SchurExpansion SchurExpansion::scaled(const Rational& factor) const {
    SchurExpansion out;
    if (factor == 0) return out;
    for (const auto& [shape, c] : terms_) out.terms_.emplace(shape, c * factor);
    return out;
}

SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out = a;
    for (const auto& [shape, c] : b.terms_) out.add(shape, c);
    return out;
}

SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out = a;
    for (const auto& [shape, c] : b.terms_) out.add(shape, -c);
    return out;
}

std::string SchurExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [shape, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = negative ? Rational(-c) : c;
        if (mag != 1) out << wronsk::to_string(mag) << '*';
        out << "s[" << shape.to_string() << ']';
    }
    return out.str();
}

SchurExpansion schur_expand(const Polynomial& p_in_h, int rank) {
    prefixed_size(p_in_h.symbols(), "h");
    SchurExpansion out;
    for (const Term& t : p_in_h.terms()) {
        // One Pieri chain per monomial: multiply the unit class by h_k once
        // per factor, larger k first (fewer intermediate shapes).
        SchurExpansion acc;
        acc.add(Partition(), t.coeff);
        for (std::size_t i = t.mono.width(); i-- > 0;) {
            const int k = static_cast<int>(i) + 1;
            for (int rep = 0; rep < t.mono.exponent(i); ++rep) {
                SchurExpansion next;
                for (const auto& [shape, c] : acc.terms())
                    for (const Partition& succ : pieri_successors(shape, k, rank))
                        next.add(succ, c);
                acc = std::move(next);
            }
        }
        for (const auto& [shape, c] : acc.terms()) out.add(shape, c);
    }
    return out;
}

SchurExpansion sigma1_power(int k, int rank) {
    if (k < 0) throw UsageError("negative power");
    SchurExpansion acc;
    acc.add(Partition(), Rational(1));
    for (int step = 0; step < k; ++step) {
        SchurExpansion next;
        for (const auto& [shape, c] : acc.terms())
            for (const Partition& succ : pieri_successors(shape, 1, rank))
                next.add(succ, c);
        acc = std::move(next);
    }
    return acc;
}

} // namespace wronsk
