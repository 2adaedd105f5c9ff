#include "wronsk/polynomial.hpp"

#include "wronsk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wronsk {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_exponents(std::span<const int> exps) {
    Monomial m;
    m.exps_.reserve(exps.size());
    for (int e : exps) {
        if (e < 0) throw UsageError("negative exponent");
        if (e > 0xffff) throw UsageError("exponent too large");
        m.exps_.push_back(static_cast<std::uint16_t>(e));
        m.degree_ += e;
    }
    return m;
}

Monomial Monomial::variable(std::size_t width, std::size_t index, int power) {
    if (index >= width) throw UsageError("variable index out of range");
    if (power < 0) throw UsageError("negative exponent");
    Monomial m(width);
    m.exps_[index] = static_cast<std::uint16_t>(power);
    m.degree_ = power;
    return m;
}

long long Monomial::weighted_degree(std::span<const int> weights) const {
    if (weights.size() != exps_.size())
        throw UsageError("weight vector width mismatch");
    long long acc = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        acc += static_cast<long long>(exps_[i]) * weights[i];
    return acc;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.width() != b.width()) throw UsageError("monomial width mismatch");
    Monomial out = a;
    for (std::size_t i = 0; i < b.exps_.size(); ++i) {
        const unsigned sum = static_cast<unsigned>(out.exps_[i]) + b.exps_[i];
        if (sum > 0xffff) throw InternalError("monomial exponent overflow");
        out.exps_[i] = static_cast<std::uint16_t>(sum);
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.width() != b.width()) throw UsageError("monomial width mismatch");
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.width(); ++i)
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? -1 : 1;
    return 0;
}

namespace {

bool grlex_greater(const Monomial& a, const Monomial& b) {
    return grlex_compare(a, b) > 0;
}

} // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(SymbolsPtr symbols, Rational value) {
    Polynomial p(std::move(symbols));
    if (value != 0)
        p.terms_.push_back({Monomial(p.symbols_->size()), std::move(value)});
    return p;
}

Polynomial Polynomial::variable(SymbolsPtr symbols, std::string_view name, int power) {
    const auto index = symbols->find(name);
    if (!index) throw UsageError("unknown symbol: " + std::string(name));
    return variable(std::move(symbols), *index, power);
}

Polynomial Polynomial::variable(SymbolsPtr symbols, std::size_t index, int power) {
    Polynomial p(std::move(symbols));
    Monomial m = Monomial::variable(p.symbols_->size(), index, power);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(SymbolsPtr symbols, std::vector<Term> terms) {
    const std::size_t width = symbols->size();
    for (const Term& t : terms)
        if (t.mono.width() != width) throw UsageError("term width mismatch");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return grlex_greater(a.mono, b.mono);
    });
    Polynomial p(std::move(symbols));
    p.terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
        throw UsageError("polynomial is not constant: " + to_string());
    return terms_[0].coeff;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    // Canonical order is descending, so binary-search with the reversed order.
    const auto it = std::lower_bound(
        terms_.begin(), terms_.end(), mono,
        [](const Term& t, const Monomial& m) { return grlex_compare(t.mono, m) > 0; });
    if (it != terms_.end() && it->mono == mono) return it->coeff;
    return Rational(0);
}

Rational Polynomial::coefficient(std::span<const int> exps) const {
    if (exps.size() != symbols_->size()) throw UsageError("exponent width mismatch");
    return coefficient(Monomial::from_exponents(exps));
}

int Polynomial::degree() const noexcept {
    return terms_.empty() ? -1 : terms_[0].mono.degree();
}

long long Polynomial::weighted_degree(std::span<const int> weights) const {
    long long best = -1;
    for (const Term& t : terms_)
        best = std::max(best, t.mono.weighted_degree(weights));
    return best;
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
    if (terms_.empty()) return true;
    const long long w = terms_[0].mono.weighted_degree(weights);
    for (const Term& t : terms_)
        if (t.mono.weighted_degree(weights) != w) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(symbols_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
}

namespace {

// Merge of two canonical term lists; negate_b flips the sign of b's terms.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const int cmp = grlex_compare(a[i].mono, b[j].mono);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({b[j].mono, negate_b ? -b[j].coeff : b[j].coeff});
            ++j;
        } else {
            Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff)
                                  : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({b[j].mono, negate_b ? -b[j].coeff : b[j].coeff});
    return out;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_symbols(a.symbols(), b.symbols()))
        throw UsageError("polynomials over different symbol tables");
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    *this = *this + other;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    *this = *this - other;
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial out(a.symbols_);
    out.terms_ = merge_terms(a.terms_, b.terms_, false);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial out(a.symbols_);
    out.terms_ = merge_terms(a.terms_, b.terms_, true);
    return out;
}

Polynomial mul_scaled(const Polynomial& a, const Polynomial& b, const Rational& factor) {
    check_same_ring(a, b);
    if (factor == 0 || a.is_zero() || b.is_zero()) return Polynomial(a.symbols());
    std::vector<Term> prods;
    prods.reserve(a.terms().size() * b.terms().size());
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms())
            prods.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff * factor});
    return Polynomial::from_terms(a.symbols(), std::move(prods));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return mul_scaled(a, b, Rational(1));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor == 0) return Polynomial(symbols_);
    Polynomial out(symbols_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono, t.coeff * factor});
    return out;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw UsageError("negative polynomial power");
    Polynomial result = constant(symbols_, Rational(1));
    Polynomial base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_symbols(a.symbols_, b.symbols_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) ||
            a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (t.mono.is_constant()) {
            out << wronsk::to_string(mag);
        } else {
            bool printed = false;
            if (mag != 1) {
                out << wronsk::to_string(mag);
                printed = true;
            }
            for (std::size_t i = 0; i < t.mono.width(); ++i) {
                const int e = t.mono.exponent(i);
                if (e == 0) continue;
                if (printed) out << '*';
                out << symbols_->name(i);
                if (e > 1) out << '^' << e;
                printed = true;
            }
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Text parser

namespace {

struct Parser {
    const SymbolsPtr& symbols;
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw UsageError("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    Integer parse_digits() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected digits");
        return Integer(std::string(text.substr(start, pos - start)));
    }

    Rational parse_number() {
        Integer num = parse_digits();
        if (peek() == '/') {
            ++pos;
            Integer den = parse_digits();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string parse_name() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a symbol name or number");
        return std::string(text.substr(start, pos - start));
    }

    // factor := number | name ['^' digits]
    void parse_factor(Rational& coeff, std::vector<int>& exps) {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_number();
            return;
        }
        const std::string name = parse_name();
        const auto index = symbols->find(name);
        if (!index) fail("unknown symbol '" + name + "'");
        int power = 1;
        if (peek() == '^') {
            ++pos;
            const Integer p = parse_digits();
            if (p > 0xffff) fail("exponent too large");
            power = static_cast<int>(p);
        }
        exps[*index] += power;
    }

    Term parse_term(bool negated) {
        Rational coeff = negated ? Rational(-1) : Rational(1);
        std::vector<int> exps(symbols->size(), 0);
        parse_factor(coeff, exps);
        while (peek() == '*') {
            ++pos;
            parse_factor(coeff, exps);
        }
        return {Monomial::from_exponents(exps), std::move(coeff)};
    }

    Polynomial parse() {
        std::vector<Term> terms;
        bool negated = false;
        if (peek() == '-') {
            ++pos;
            negated = true;
        } else if (peek() == '+') {
            ++pos;
        }
        terms.push_back(parse_term(negated));
        while (!done()) {
            const char c = peek();
            if (c == '+') {
                ++pos;
                terms.push_back(parse_term(false));
            } else if (c == '-') {
                ++pos;
                terms.push_back(parse_term(true));
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        return Polynomial::from_terms(symbols, std::move(terms));
    }
};

} // namespace

Polynomial parse_polynomial(const SymbolsPtr& symbols, std::string_view text) {
    Parser parser{symbols, text};
    if (parser.done()) throw UsageError("empty polynomial text");
    return parser.parse();
}

// ---------------------------------------------------------------------------
// Substitution

Substitution::Substitution(SymbolsPtr source, SymbolsPtr target)
    : source_(std::move(source)), target_(std::move(target)),
      images_(source_->size()) {}

Substitution Substitution::rename(SymbolsPtr source, SymbolsPtr target) {
    Substitution sub(source, target);
    for (std::size_t i = 0; i < source->size(); ++i)
        sub.set(i, Polynomial::variable(target, source->name(i)));
    return sub;
}

void Substitution::set(std::string_view name, Polynomial image) {
    const auto index = source_->find(name);
    if (!index) throw UsageError("unknown symbol: " + std::string(name));
    set(*index, std::move(image));
}

void Substitution::set(std::size_t index, Polynomial image) {
    if (index >= images_.size()) throw UsageError("variable index out of range");
    if (!same_symbols(image.symbols(), target_))
        throw UsageError("substitution image lives over the wrong symbol table");
    images_[index] = std::move(image);
}

Polynomial Substitution::apply(const Polynomial& p) const {
    if (!same_symbols(p.symbols(), source_))
        throw UsageError("substitution applied to a polynomial over the wrong table");
    // Lazily extended power tables keep repeated exponents cheap.
    std::vector<std::vector<Polynomial>> powers(images_.size());
    auto image_power = [&](std::size_t i, int e) -> const Polynomial& {
        if (!images_[i])
            throw UsageError("no image for symbol " + source_->name(i));
        auto& table = powers[i];
        if (table.empty()) table.push_back(*images_[i]);
        while (static_cast<int>(table.size()) < e)
            table.push_back(table.back() * *images_[i]);
        return table[static_cast<std::size_t>(e) - 1];
    };

    Polynomial acc(target_);
    for (const Term& t : p.terms()) {
        Polynomial term = Polynomial::constant(target_, t.coeff);
        for (std::size_t i = 0; i < t.mono.width(); ++i) {
            const int e = t.mono.exponent(i);
            if (e > 0) term = term * image_power(i, e);
        }
        acc += term;
    }
    return acc;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> values) {
    if (values.size() != p.symbols()->size())
        throw UsageError("evaluation point has the wrong dimension");
    Rational acc(0);
    for (const Term& t : p.terms()) {
        Rational term = t.coeff;
        for (std::size_t i = 0; i < t.mono.width(); ++i) {
            const int e = t.mono.exponent(i);
            for (int k = 0; k < e; ++k) term *= values[i];
        }
        acc += term;
    }
    return acc;
}

} // namespace wronsk
