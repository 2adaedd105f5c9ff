#include "wronsk/rational.hpp"

#include "wronsk/errors.hpp"

#include <numeric>

namespace wronsk {

Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw UsageError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw UsageError("empty rational literal");
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view part) -> Integer {
        if (part.empty()) throw UsageError("empty integer literal");
        std::size_t i = part[0] == '-' ? 1 : 0;
        if (i == part.size()) throw UsageError("sign without digits in rational literal");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw UsageError("invalid character in rational literal: '" +
                                 std::string(part) + "'");
        return Integer(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in rational literal");
    return make_rational(std::move(num), std::move(den));
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Integer to_integer(const Rational& value) {
    if (!is_integer(value))
        throw InternalError("expected an integer, got " + to_string(value));
    return numerator(value);
}

Integer factorial(int n) {
    if (n < 0) throw UsageError("factorial of a negative number");
    Integer acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i; // exact: acc is C(n-k+i, i) * i! / i! at each step
    }
    return acc;
}

Integer multinomial(int n, std::span<const int> parts) {
    int total = 0;
    Integer acc = 1;
    for (int p : parts) {
        if (p < 0) throw UsageError("negative part in multinomial");
        total += p;
        acc *= binomial(total, p);
    }
    if (total != n) throw UsageError("multinomial parts do not sum to n");
    return acc;
}

} // namespace wronsk
