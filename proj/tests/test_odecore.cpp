#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/ode.hpp"

#include <random>

using namespace wronsk;
using testutil::P;

namespace {

Substitution spec_to_scalars(const SymbolsPtr& src, const std::vector<Rational>& values) {
    Substitution sub(src, SymbolTable::scalars());
    for (std::size_t i = 0; i < values.size(); ++i)
        sub.set(i, Polynomial::constant(SymbolTable::scalars(), values[i]));
    return sub;
}

} // namespace

TEST_CASE("h sequence: pinned polynomials") {
    auto h = h_sequence(2, 3);
    REQUIRE(h.size() == 4);
    CHECK(h[0].to_string() == "1");
    CHECK(h[1].to_string() == "e1");
    CHECK(h[2].to_string() == "e1^2 - e2");
    CHECK(h[3].to_string() == "e1^3 - 2*e1*e2 + e3");

    // Rank 0: h_n = e1^n.
    auto h0 = h_sequence(0, 5);
    for (int n = 0; n <= 5; ++n)
        CHECK(h0[static_cast<std::size_t>(n)] ==
              Polynomial::variable(SymbolTable::ode_coefficients(0), "e1").pow(n));
}

TEST_CASE("h_n is isobaric of weight n") {
    for (int rank = 0; rank <= 3; ++rank) {
        std::vector<int> weights;
        for (int i = 1; i <= rank + 1; ++i) weights.push_back(i);
        auto h = h_sequence(rank, 8);
        for (int n = 0; n <= 8; ++n) {
            CHECK(h[static_cast<std::size_t>(n)].is_homogeneous(weights));
            CHECK(h[static_cast<std::size_t>(n)].weighted_degree(weights) == (n == 0 ? 0 : n));
        }
    }
}

TEST_CASE("universal context accessors") {
    UniversalContext ctx(2, 6);
    CHECK(ctx.rank() == 2);
    CHECK(ctx.order() == 6);
    CHECK(ctx.symbols()->names() == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(ctx.h(-3).is_zero());
    CHECK(ctx.h(0).to_string() == "1");
    CHECK(ctx.h(6).weighted_degree(std::vector<int>{1, 2, 3}) == 6);
    CHECK_THROWS_AS(ctx.h(7), TruncationError);
    CHECK(ctx.e(0).to_string() == "1");
    CHECK(ctx.e(2).to_string() == "e2");
    CHECK(ctx.e(4).is_zero());

    auto wider = ctx.extended(10);
    CHECK(wider.order() == 10);
    CHECK(wider.symbols() == ctx.symbols()); // same shared table
    CHECK(wider.h(6) == ctx.h(6));
    CHECK(ctx.extended(3).order() == 6); // never shrinks

    CHECK_THROWS_AS(UniversalContext(1, 1), UsageError);
    CHECK_THROWS_AS(UniversalContext(-1, 4), UsageError);
}

TEST_CASE("universal solutions: coefficients are shifted h values") {
    UniversalContext ctx(2, 9);
    auto u = universal_solutions(ctx, 9);
    REQUIRE(u.size() == 3);
    for (int j = 0; j <= 2; ++j) {
        CHECK(u[static_cast<std::size_t>(j)].order() == 9);
        for (int n = 0; n <= 9; ++n)
            CHECK(u[static_cast<std::size_t>(j)].coeff(n) == ctx.h(n - j));
    }
    // In particular the initial segment is the identity pattern.
    CHECK(u[1].coeff(0).is_zero());
    CHECK(u[1].coeff(1).to_string() == "1");
    CHECK(u[2].coeff(2).to_string() == "1");
}

TEST_CASE("universal operator annihilates the fundamental system") {
    for (int rank = 0; rank <= 3; ++rank) {
        UniversalContext ctx(rank, 10);
        auto op = ctx.universal_operator();
        CHECK(op.degree() == rank + 1);
        for (const auto& u : universal_solutions(ctx, 10)) {
            auto residual = op.apply(u);
            CHECK(residual.order() == 10 - rank - 1);
            CHECK(residual.is_zero());
        }
    }
}

TEST_CASE("kernel recurrence holds and violations are located") {
    UniversalContext ctx(1, 8);
    auto u = universal_solutions(ctx, 8);
    for (const auto& f : u) {
        auto report = kernel_check(ctx, f);
        CHECK(report.satisfied);
        CHECK(report.first_violation == -1);
    }
    // Any linear combination stays in the kernel.
    auto combo = u[0].scaled(P(ctx.symbols(), "e1 - 2")) + u[1].scaled(Rational(5));
    CHECK(kernel_check(ctx, combo).satisfied);

    // Corrupt one coefficient and the first violation points at it.
    auto coeffs = combo.coeffs();
    coeffs[5] += Polynomial::constant(ctx.symbols(), Rational(1));
    auto broken = DividedSeries(ctx.symbols(), coeffs);
    auto report = kernel_check(ctx, broken);
    CHECK(!report.satisfied);
    CHECK(report.first_violation == 5);
}

TEST_CASE("kernel check with explicit numeric coefficients") {
    // x'' = 5x' - 6x has exp(2t) and exp(3t) as solutions.
    auto t = SymbolTable::scalars();
    std::vector<Polynomial> coeffs{Polynomial::constant(t, Rational(5)),
                                   Polynomial::constant(t, Rational(6))};
    auto exp_of = [](const Rational& a, int order) {
        std::vector<Rational> c;
        Rational pw = 1;
        for (int n = 0; n <= order; ++n) { c.push_back(pw); pw *= a; }
        return DividedSeries::from_rationals(c);
    };
    CHECK(kernel_check(coeffs, exp_of(Rational(2), 8)).satisfied);
    CHECK(kernel_check(coeffs, exp_of(Rational(3), 8)).satisfied);
    auto bad = kernel_check(coeffs, exp_of(Rational(4), 8));
    CHECK(!bad.satisfied);
    CHECK(bad.first_violation == 2);
}

TEST_CASE("symbolic Cauchy data: pinned combination weights") {
    UniversalContext ctx(1, 6);
    auto sol = symbolic_cauchy_solution(ctx, 6);
    auto wide = sol.series.symbols();
    CHECK(wide->names() == std::vector<std::string>{"e1", "e2", "y0", "y1"});
    CHECK(sol.series.coeff(0) == P(wide, "y0"));
    CHECK(sol.series.coeff(1) == P(wide, "y1"));
    REQUIRE(sol.lambda.size() == 2);
    CHECK(sol.lambda[0] == P(wide, "y0"));
    CHECK(sol.lambda[1] == P(wide, "y1 - e1*y0"));
    // The solution solves the equation over the extended ring.
    CHECK(kernel_check(ctx, sol.series).satisfied);
    // Coefficient 2 follows from the recurrence: e1 y1 - e2 y0.
    CHECK(sol.series.coeff(2) == P(wide, "e1*y1 - e2*y0"));
}

TEST_CASE("worked example: rank 1 with e = (3, 2)") {
    UniversalContext ctx(1, 4);
    auto spec = spec_to_scalars(ctx.symbols(), {Rational(3), Rational(2)});

    // The first basis solution specializes to 1, 3, 7, 15, 31.
    auto u = universal_solutions(ctx, 4);
    auto v0 = u[0].mapped(spec);
    const int expect[] = {1, 3, 7, 15, 31};
    for (int n = 0; n <= 4; ++n)
        CHECK(v0.coeff(n).constant_value() == Rational(expect[n]));

    // Initial data (1,1) picks out exp(t): weights (1, -2), all coefficients 1.
    const std::vector<Rational> ones{Rational(1), Rational(1)};
    auto sol1 = cauchy_solve(ctx, ones, 4);
    CHECK(sol1.lambda[0].to_string() == "1");
    CHECK(sol1.lambda[1].to_string() == "-e1 + 1");
    auto g1 = sol1.series.mapped(spec);
    for (int n = 0; n <= 4; ++n) CHECK(g1.coeff(n).constant_value() == Rational(1));

    // Initial data (1,2) picks out exp(2t): weights (1, -1), coefficients 2^n.
    const std::vector<Rational> two{Rational(1), Rational(2)};
    auto g2 = cauchy_solve(ctx, two, 4).series.mapped(spec);
    for (int n = 0; n <= 4; ++n)
        CHECK(g2.coeff(n).constant_value() == Rational(Integer(1) << n));

    // Specialized solutions satisfy the specialized recurrence.
    std::vector<Polynomial> num{Polynomial::constant(SymbolTable::scalars(), Rational(3)),
                                Polynomial::constant(SymbolTable::scalars(), Rational(2))};
    CHECK(kernel_check(num, v0).satisfied);
    CHECK(kernel_check(num, g1).satisfied);
    CHECK(kernel_check(num, g2).satisfied);
}

TEST_CASE("Cauchy solutions reproduce their initial data") {
    std::mt19937_64 rng(0xcafe01);
    for (int rank = 0; rank <= 3; ++rank) {
        UniversalContext ctx(rank, 8);
        std::vector<Rational> inits;
        for (int j = 0; j <= rank; ++j) inits.push_back(testutil::random_rational(rng));
        auto sol = cauchy_solve(ctx, inits, 8);
        for (int j = 0; j <= rank; ++j)
            CHECK(sol.series.coeff(j) ==
                  Polynomial::constant(ctx.symbols(), inits[static_cast<std::size_t>(j)]));
        CHECK(kernel_check(ctx, sol.series).satisfied);
        // Uniqueness: it agrees with the lambda-weighted basis combination.
        auto u = universal_solutions(ctx, 8);
        auto recomposed = DividedSeries::zero(ctx.symbols(), 8);
        for (int j = 0; j <= rank; ++j)
            recomposed = recomposed +
                         u[static_cast<std::size_t>(j)].scaled(sol.lambda[static_cast<std::size_t>(j)]);
        CHECK(recomposed == sol.series);
    }
}

TEST_CASE("specialization commutes with solving") {
    // Solve universally, then specialize -- versus checking the specialized
    // recurrence directly.  Rank 2 with a fractional point.
    UniversalContext ctx(2, 7);
    const std::vector<Rational> point{Rational(1, 2), Rational(-2), Rational(3, 4)};
    auto spec = spec_to_scalars(ctx.symbols(), point);
    auto u = universal_solutions(ctx, 7);
    auto v = specialize_system(u, spec);
    REQUIRE(v.size() == 3);
    std::vector<Polynomial> num;
    for (const auto& c : point)
        num.push_back(Polynomial::constant(SymbolTable::scalars(), c));
    for (const auto& f : v) CHECK(kernel_check(num, f).satisfied);
    CHECK(v[0].coeff(3).constant_value() ==
          evaluate(ctx.h(3), point));
}

TEST_CASE("fundamental classification") {
    // The universal system is fundamental: the initial matrix is unitriangular.
    for (int rank = 0; rank <= 3; ++rank) {
        UniversalContext ctx(rank, 6);
        auto u = universal_solutions(ctx, 6);
        auto m = initial_condition_matrix(u);
        CHECK(m.rows() == static_cast<std::size_t>(rank + 1));
        auto report = fundamental_check(u);
        CHECK(report.verdict == SystemClass::fundamental);
        CHECK(report.det.to_string() == "1");
    }

    // exp(a t), exp(b t) over Q[a, b]: independent but det = b - a is not a unit.
    auto ab = SymbolTable::make({"a", "b"});
    std::vector<Polynomial> fa, fb;
    for (int n = 0; n <= 5; ++n) {
        fa.push_back(Polynomial::variable(ab, "a").pow(n));
        fb.push_back(Polynomial::variable(ab, "b").pow(n));
    }
    std::vector<DividedSeries> pair{DividedSeries(ab, fa), DividedSeries(ab, fb)};
    auto report = fundamental_check(pair);
    CHECK(report.verdict == SystemClass::independent_not_fundamental);
    CHECK(report.det == P(ab, "b - a"));

    // A proportional pair is dependent.
    std::vector<DividedSeries> dep{pair[0], pair[0].scaled(Rational(2))};
    CHECK(fundamental_check(dep).verdict == SystemClass::dependent);

    // Specialized universal system stays fundamental (det is specialized too).
    UniversalContext ctx(1, 5);
    auto spec = spec_to_scalars(ctx.symbols(), {Rational(3), Rational(2)});
    auto v = specialize_system(universal_solutions(ctx, 5), spec);
    CHECK(fundamental_check(v).verdict == SystemClass::fundamental);
}

TEST_CASE("nonhomogeneous: unit forcing term gives shifted h values") {
    UniversalContext ctx(1, 6);
    auto rhs = DividedSeries::constant(Polynomial::constant(ctx.symbols(), Rational(1)), 6);
    std::vector<Polynomial> zero_inits{Polynomial(ctx.symbols()), Polynomial(ctx.symbols())};
    auto g = solve_nonhomogeneous(ctx, rhs, zero_inits, 6);
    CHECK(g.coeff(0).is_zero());
    CHECK(g.coeff(1).is_zero());
    // p_{n+2} = h_n: the particular solution replays the h sequence.
    for (int n = 0; n + 2 <= 6; ++n) CHECK(g.coeff(n + 2) == ctx.h(n));

    // The residual is exactly the forcing term.
    auto residual = ctx.universal_operator().apply(g);
    CHECK(residual == rhs.truncated(6 - 2));
}

TEST_CASE("nonhomogeneous: random forcing terms, exact residuals and inits") {
    std::mt19937_64 rng(0xcafe02);
    for (int rank = 0; rank <= 2; ++rank) {
        UniversalContext ctx(rank, 9);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Polynomial> rhs_coeffs, inits;
            for (int n = 0; n <= 9; ++n)
                rhs_coeffs.push_back(testutil::random_polynomial(rng, ctx.symbols(), 2, 1));
            for (int j = 0; j <= rank; ++j)
                inits.push_back(testutil::random_polynomial(rng, ctx.symbols(), 2, 1));
            DividedSeries rhs(ctx.symbols(), rhs_coeffs);
            auto g = solve_nonhomogeneous(ctx, rhs, inits, 9);
            for (int j = 0; j <= rank; ++j)
                CHECK(g.coeff(j) == inits[static_cast<std::size_t>(j)]);
            auto residual = ctx.universal_operator().apply(g);
            CHECK(residual == rhs.truncated(9 - rank - 1));
        }
    }

    // A forcing term that is too short to certify the requested order throws.
    UniversalContext ctx(1, 8);
    auto rhs = DividedSeries::zero(ctx.symbols(), 4);
    std::vector<Polynomial> inits{Polynomial(ctx.symbols()), Polynomial(ctx.symbols())};
    CHECK_THROWS_AS(solve_nonhomogeneous(ctx, rhs, inits, 8), TruncationError);
}

TEST_CASE("quotient algebra: pinned cube of the generator") {
    UniversalContext ctx(1, 4);
    auto alpha = AlgebraElement::root(ctx);
    auto cube = alpha.pow(3);
    // alpha^3 = (e1^2 - e2) alpha - e1 e2.
    REQUIRE(cube.coords().size() == 2);
    CHECK(cube.coords()[0] == P(ctx.symbols(), "-e1*e2"));
    CHECK(cube.coords()[1] == P(ctx.symbols(), "e1^2 - e2"));
    CHECK(alpha.pow(3) == alpha * alpha * alpha);
    CHECK(AlgebraElement::unit(ctx).coords()[0].to_string() == "1");

    // Rank 0: the algebra is the base ring and alpha = e1.
    UniversalContext line(0, 3);
    CHECK(AlgebraElement::root(line).coords()[0] == P(line.symbols(), "e1"));
    CHECK(AlgebraElement::root(line).pow(3).coords()[0] == P(line.symbols(), "e1^3"));
}

TEST_CASE("quotient algebra is a commutative ring") {
    UniversalContext ctx(2, 5);
    std::mt19937_64 rng(0xcafe03);
    auto random_element = [&]() {
        std::vector<Polynomial> coords;
        for (int j = 0; j <= 2; ++j)
            coords.push_back(testutil::random_polynomial(rng, ctx.symbols(), 2, 2));
        return AlgebraElement(ctx, std::move(coords));
    };
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_element(), b = random_element(), c = random_element();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * AlgebraElement::unit(ctx) == a);
        CHECK((a - a) * b == b.scaled(Polynomial(ctx.symbols())));
    }
}

TEST_CASE("lambda weights at the generator, and the exponential identity") {
    UniversalContext ctx(1, 4);
    auto lam = lambda_elements(ctx);
    REQUIRE(lam.size() == 2);
    CHECK(lam[0] == AlgebraElement::unit(ctx));
    // Lambda_1(alpha) = alpha - e1.
    CHECK(lam[1].coords()[0] == P(ctx.symbols(), "-e1"));
    CHECK(lam[1].coords()[1].to_string() == "1");

    for (int rank = 0; rank <= 3; ++rank) {
        UniversalContext c(rank, 10);
        CHECK(universal_exp_check(c, 10));
    }
}
