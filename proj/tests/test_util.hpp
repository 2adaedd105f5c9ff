#pragma once

#include "wronsk/partition.hpp"
#include "wronsk/poly_matrix.hpp"
#include "wronsk/polynomial.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

using namespace wronsk;

inline Polynomial P(const SymbolsPtr& table, const std::string& text) {
    return parse_polynomial(table, text);
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    return Rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const SymbolsPtr& table,
                                    int max_terms = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> exps(table->size());
        for (auto& e : exps) e = exp(rng);
        terms.push_back({Monomial::from_exponents(exps), random_rational(rng)});
    }
    return Polynomial::from_terms(table, std::move(terms));
}

inline Partition random_partition(std::mt19937_64& rng, int max_weight, int max_rows) {
    std::uniform_int_distribution<int> w(0, max_weight);
    const auto all = partitions_in_box(w(rng), max_rows);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

// O(n!) permutation-expansion determinant: the independent oracle for the
// memoized implementation.
inline Polynomial naive_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Polynomial acc(m.symbols());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial prod = Polynomial::constant(m.symbols(), Rational(1));
        for (std::size_t i = 0; i < n; ++i) prod = prod * m.at(i, perm[i]);
        if (inversions % 2 == 0)
            acc += prod;
        else
            acc -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace testutil
