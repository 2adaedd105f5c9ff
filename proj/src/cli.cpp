#include "wronsk/cli.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/grassmann.hpp"
#include "wronsk/json_io.hpp"
#include "wronsk/ode.hpp"
#include "wronsk/partition.hpp"
#include "wronsk/schur.hpp"
#include "wronsk/series.hpp"
#include "wronsk/wronskian.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace wronsk {

namespace {

std::vector<Rational> parse_rational_list(const std::string& text, int expected,
                                          const char* what) {
    std::vector<Rational> out;
    std::string chunk;
    std::istringstream in{text};
    while (std::getline(in, chunk, ',')) out.push_back(parse_rational(chunk));
    if (static_cast<int>(out.size()) != expected)
        throw UsageError(std::string(what) + " needs exactly " +
                         std::to_string(expected) + " comma-separated values");
    return out;
}

// Maps e1..e{rank+1} to the given constants and keeps every other symbol of
// the working table as a variable of the shrunken target table.
Substitution specialize_es(const SymbolsPtr& working, int rank,
                           const std::vector<Rational>& values) {
    std::vector<std::string> kept;
    for (const std::string& name : working->names()) {
        bool is_e = false;
        for (int i = 1; i <= rank + 1; ++i)
            if (name == "e" + std::to_string(i)) is_e = true;
        if (!is_e) kept.push_back(name);
    }
    SymbolsPtr target =
        kept.empty() ? SymbolTable::scalars() : SymbolTable::make(kept);
    Substitution sub(working, target);
    for (int i = 1; i <= rank + 1; ++i) {
        const std::string name = "e" + std::to_string(i);
        if (!working->find(name))
            throw UsageError("working ring lacks the symbol " + name);
        sub.set(name, Polynomial::constant(target, values[static_cast<std::size_t>(i - 1)]));
    }
    for (const std::string& name : kept)
        sub.set(name, Polynomial::variable(target, name));
    return sub;
}

void print_series_text(std::ostream& out, const DividedSeries& f) {
    for (int n = 0; n <= f.order(); ++n)
        out << 'a' << n << " = " << f.coeff(n).to_string() << '\n';
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

// Adds 1 to the constant coefficient: the mutation hook behind --inject-fault.
DividedSeries perturb(const DividedSeries& f) {
    std::vector<Polynomial> coeffs = f.coeffs();
    coeffs[0] += Polynomial::constant(f.symbols(), Rational(1));
    return DividedSeries(f.symbols(), std::move(coeffs));
}

struct CheckCase {
    std::string name;
    bool ok;
};

class CheckRunner {
public:
    explicit CheckRunner(bool inject) : inject_(inject) {}

    // The fault is injected into the first case only; one failing case is
    // enough to prove the comparisons have teeth.
    bool take_fault() {
        if (inject_ && !used_) {
            used_ = true;
            return true;
        }
        return false;
    }

    void record(const std::string& name, bool ok) { cases_.push_back({name, ok}); }
    const std::vector<CheckCase>& cases() const { return cases_; }
    bool all_ok() const {
        for (const CheckCase& c : cases_)
            if (!c.ok) return false;
        return true;
    }

private:
    bool inject_;
    bool used_ = false;
    std::vector<CheckCase> cases_;
};

void check_giambelli(CheckRunner& run, int rank, int order, int max_weight) {
    const int slack = rank + max_weight;
    const UniversalContext ctx(rank, order + slack + 1);
    const std::vector<DividedSeries> u = universal_solutions(ctx, order + slack);
    const DividedSeries w0 = generalized_wronskian(u, Partition(), order);
    const GradedSequence h = GradedSequence::h_values(ctx);
    for (int w = 1; w <= max_weight; ++w)
        for (const Partition& shape : partitions_in_box(w, rank + 1)) {
            DividedSeries wl = generalized_wronskian(u, shape, order);
            if (run.take_fault()) wl = perturb(wl);
            const Polynomial ratio = jacobi_trudi(shape, h, rank);
            run.record("giambelli[" + shape.to_string() + "]", wl == w0.scaled(ratio));
        }
}

void check_pieri(CheckRunner& run, int rank, int order, int max_weight, int max_k) {
    const int slack = rank + max_weight + max_k;
    const UniversalContext ctx(rank, order + slack + 1);
    const std::vector<DividedSeries> u = universal_solutions(ctx, order + slack);
    for (int w = 0; w <= max_weight; ++w)
        for (const Partition& shape : partitions_in_box(w, rank + 1))
            for (int k = 1; k <= max_k; ++k) {
                DividedSeries lhs =
                    generalized_wronskian(u, shape, order).scaled(ctx.h(k));
                if (run.take_fault()) lhs = perturb(lhs);
                DividedSeries rhs = DividedSeries::zero(ctx.symbols(), order);
                for (const Partition& succ : pieri_successors(shape, k, rank))
                    rhs = rhs + generalized_wronskian(u, succ, order);
                run.record("pieri[" + shape.to_string() + ";k=" + std::to_string(k) + "]",
                           lhs == rhs);
            }
}

void check_derivative(CheckRunner& run, int rank, int order, int max_k) {
    const int worder = std::max(order, max_k + rank + 1);
    const UniversalContext ctx(rank, worder + 1);
    const std::vector<DividedSeries> u = universal_solutions(ctx, worder);
    for (int k = 1; k <= max_k; ++k) {
        const int compared = worder - rank - k;
        DividedSeries dk =
            generalized_wronskian(u, Partition(), worder - rank).derived(k);
        if (run.take_fault()) dk = perturb(dk);
        const SchurExpansion expansion = schur_expand(rewrite_in_h(dk.coeff(0)), rank);
        bool ok = true;
        DividedSeries rhs = DividedSeries::zero(ctx.symbols(), compared);
        for (const auto& [shape, c] : expansion.terms()) {
            if (shape.weight() != k) ok = false;
            rhs = rhs + generalized_wronskian(u, shape, compared)
                            .scaled(Polynomial::constant(ctx.symbols(), c));
        }
        ok = ok && dk.truncated(compared) == rhs;
        // The coefficients must be the standard-tableau counts.
        for (const auto& [shape, c] : expansion.terms())
            if (ok && !(c == Rational(syt_count_hook(shape)))) ok = false;
        run.record("derivative[k=" + std::to_string(k) + "]", ok);
    }
}

void check_euler(CheckRunner& run, int rank, int order) {
    const UniversalContext ctx(rank, std::max(order, rank + 1));

    // The universal identity in the root algebra.
    run.record("euler-universal-exp", universal_exp_check(ctx, std::min(order, 10)));

    // Specializing e_{r+1} = (-1)^{r+1}, others 0, turns every u_j into the
    // signed lattice pattern a_{j+k(r+1)} = (-1)^k.
    std::vector<Rational> values(static_cast<std::size_t>(rank) + 1, Rational(0));
    values.back() = (rank + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    // (-1)^{r+1}: even r+1 -> +1.
    const Substitution sub = specialize_es(ctx.symbols(), rank, values);
    const std::vector<DividedSeries> v =
        specialize_system(universal_solutions(ctx, std::max(order, rank + 1)), sub);
    bool pattern_ok = true;
    const bool flip = run.take_fault();
    for (int j = 0; j <= rank && pattern_ok; ++j)
        for (int n = 0; n <= v[static_cast<std::size_t>(j)].order(); ++n) {
            Rational expected(0);
            if ((n - j) % (rank + 1) == 0 && n >= j) {
                const int k = (n - j) / (rank + 1);
                expected = (k % 2 == 0) ? Rational(1) : Rational(-1);
            }
            if (flip && n == 0 && j == 0) expected += 1;
            if (!(v[static_cast<std::size_t>(j)].coeff(n).constant_value() == expected)) {
                pattern_ok = false;
                break;
            }
        }
    run.record("euler-signed-pattern", pattern_ok);

    if (rank == 1) {
        // The worked splitting: e = (3,2) gives exp(t) and exp(2t), and their
        // product is exp(3t) — the addition formula, exactly.
        const std::vector<Rational> spec{Rational(3), Rational(2)};
        const Substitution phi = specialize_es(ctx.symbols(), 1, spec);
        const std::vector<DividedSeries> w =
            specialize_system(universal_solutions(ctx, std::max(order, 2)), phi);
        DividedSeries f1 = w[0] - w[1].scaled(Rational(2)); // exp(t)
        const DividedSeries f2 = w[0] - w[1];               // exp(2t)
        if (run.take_fault()) f1 = perturb(f1);
        const DividedSeries product = f1 * f2;              // exp(3t)
        bool ok = true;
        Rational pow2(1), pow3(1);
        for (int n = 0; n <= product.order(); ++n) {
            if (!(f1.coeff(n).constant_value() == 1)) ok = false;
            if (!(f2.coeff(n).constant_value() == pow2)) ok = false;
            if (!(product.coeff(n).constant_value() == pow3)) ok = false;
            pow2 *= 2;
            pow3 *= 3;
        }
        run.record("euler-exp-addition", ok);
    }
}

void check_nonhom(CheckRunner& run, int rank, int order) {
    const UniversalContext ctx(rank, std::max(order, rank + 1));
    const int n = std::max(order, rank + 1);
    const DifferentialOperator op = ctx.universal_operator();

    // Pinned case: rhs = 1 with zero initial conditions.
    {
        const DividedSeries rhs = DividedSeries::constant(
            Polynomial::constant(ctx.symbols(), Rational(1)), n);
        const std::vector<Polynomial> zeros(static_cast<std::size_t>(rank) + 1,
                                            Polynomial(ctx.symbols()));
        DividedSeries g = solve_nonhomogeneous(ctx, rhs, zeros, n);
        if (run.take_fault()) g = perturb(g);
        const bool ok = op.apply(g) == rhs.truncated(n - rank - 1);
        run.record("nonhom-unit-rhs", ok);
    }

    // Randomized cases, fixed seed: residual and initial conditions.
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Polynomial> coeffs;
        for (int i = 0; i <= n; ++i)
            coeffs.push_back(Polynomial::constant(
                ctx.symbols(), Rational(num(rng), den(rng))));
        const DividedSeries rhs(ctx.symbols(), std::move(coeffs));
        std::vector<Polynomial> inits;
        for (int j = 0; j <= rank; ++j)
            inits.push_back(Polynomial::constant(
                ctx.symbols(), Rational(num(rng), den(rng))));
        DividedSeries g = solve_nonhomogeneous(ctx, rhs, inits, n);
        if (run.take_fault()) g = perturb(g);
        bool ok = op.apply(g) == rhs.truncated(n - rank - 1);
        for (int j = 0; j <= rank; ++j)
            if (!(g.coeff(j) == inits[static_cast<std::size_t>(j)])) ok = false;
        run.record("nonhom-random-" + std::to_string(trial), ok);
    }
}

// ---------------------------------------------------------------------------

struct Options {
    int rank = 0;
    int order = 10;
    int k = 1;
    int dim = 0;
    int max_weight = 4;
    int max_k = 3;
    std::string partition;
    std::string with;
    std::string inits;
    std::string spec;
    std::string rhs_path;
    std::string format = "text";
    bool inject_fault = false;
};

int dispatch(const std::string& command, const std::string& check_name,
             const Options& opt, std::ostream& out) {
    const bool json = opt.format == "json";

    if (command == "hseq") {
        const std::vector<Polynomial> h = h_sequence(opt.rank, opt.order);
        if (json) {
            Json j;
            j["status"] = "ok";
            j["rank"] = opt.rank;
            j["order"] = opt.order;
            Json values = Json::array();
            for (const Polynomial& p : h) values.push_back(p.to_string());
            j["h"] = std::move(values);
            out << j.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < h.size(); ++i)
                out << 'h' << i << " = " << h[i].to_string() << '\n';
        }
        return 0;
    }

    if (command == "solve") {
        const UniversalContext ctx(opt.rank, std::max(opt.order, opt.rank + 1));
        CauchySolution sol =
            opt.inits.empty()
                ? symbolic_cauchy_solution(ctx, opt.order)
                : cauchy_solve(ctx,
                               parse_rational_list(opt.inits, opt.rank + 1, "--inits"),
                               opt.order);
        if (!opt.spec.empty()) {
            const Substitution sub =
                specialize_es(sol.series.symbols(), opt.rank,
                              parse_rational_list(opt.spec, opt.rank + 1, "--spec"));
            sol.series = sol.series.mapped(sub);
            for (Polynomial& l : sol.lambda) l = sub.apply(l);
        }
        if (json) {
            Json j;
            j["status"] = "ok";
            j["rank"] = opt.rank;
            j["order"] = opt.order;
            Json lambdas = Json::array();
            for (const Polynomial& l : sol.lambda) lambdas.push_back(l.to_string());
            j["lambda"] = std::move(lambdas);
            j["series"] = series_to_json(sol.series);
            out << j.dump() << '\n';
        } else {
            for (std::size_t jdx = 0; jdx < sol.lambda.size(); ++jdx)
                out << "lambda" << jdx << " = " << sol.lambda[jdx].to_string() << '\n';
            print_series_text(out, sol.series);
        }
        return 0;
    }

    if (command == "solve-nonhom") {
        const UniversalContext ctx(opt.rank, std::max(opt.order, opt.rank + 1));
        std::ifstream file(opt.rhs_path);
        if (!file) throw UsageError("cannot open right-hand side file: " + opt.rhs_path);
        Json parsed;
        try {
            parsed = Json::parse(file);
        } catch (const Json::parse_error& e) {
            throw UsageError(std::string("right-hand side is not valid JSON: ") + e.what());
        }
        DividedSeries rhs = series_from_json(parsed);
        // Embed the right-hand side into the universal ring by name.
        rhs = rhs.mapped(Substitution::rename(rhs.symbols(), ctx.symbols()));
        std::vector<Polynomial> inits;
        if (opt.inits.empty()) {
            inits.assign(static_cast<std::size_t>(opt.rank) + 1, Polynomial(ctx.symbols()));
        } else {
            for (const Rational& x :
                 parse_rational_list(opt.inits, opt.rank + 1, "--inits"))
                inits.push_back(Polynomial::constant(ctx.symbols(), x));
        }
        DividedSeries g = solve_nonhomogeneous(ctx, rhs, inits, opt.order);
        if (!opt.spec.empty())
            g = g.mapped(specialize_es(g.symbols(), opt.rank,
                                       parse_rational_list(opt.spec, opt.rank + 1,
                                                           "--spec")));
        if (json) {
            Json j;
            j["status"] = "ok";
            j["rank"] = opt.rank;
            j["order"] = opt.order;
            j["series"] = series_to_json(g);
            out << j.dump() << '\n';
        } else {
            print_series_text(out, g);
        }
        return 0;
    }

    if (command == "wronskian") {
        const Partition shape = Partition::parse(opt.partition);
        const UniversalContext ctx(opt.rank, std::max(opt.order, opt.rank + 1));
        const int needed = opt.order + opt.rank + shape.part(0);
        const std::vector<DividedSeries> u =
            universal_solutions(ctx, std::max(needed, opt.rank));
        DividedSeries w = generalized_wronskian(u, shape, opt.order);
        if (!opt.spec.empty())
            w = w.mapped(specialize_es(w.symbols(), opt.rank,
                                       parse_rational_list(opt.spec, opt.rank + 1,
                                                           "--spec")));
        if (json) {
            Json j;
            j["status"] = "ok";
            j["rank"] = opt.rank;
            j["partition"] = partition_json(shape);
            j["order"] = opt.order;
            j["series"] = series_to_json(w);
            out << j.dump() << '\n';
        } else {
            print_series_text(out, w);
        }
        return 0;
    }

    if (command == "schur") {
        const Partition shape = Partition::parse(opt.partition);
        const int needed = std::max(shape.part(0) + opt.rank, opt.rank + 1);
        const UniversalContext ctx(opt.rank, needed);
        const Polynomial value =
            jacobi_trudi(shape, GradedSequence::h_values(ctx), opt.rank);
        if (json) {
            Json j;
            j["status"] = "ok";
            j["rank"] = opt.rank;
            j["partition"] = partition_json(shape);
            j["polynomial"] = polynomial_to_json(value);
            out << j.dump() << '\n';
        } else {
            out << value.to_string() << '\n';
        }
        return 0;
    }

    if (command == "pieri") {
        const Partition shape = Partition::parse(opt.partition);
        std::optional<int> bound;
        if (opt.dim > 0) bound = opt.dim - opt.rank;
        const std::vector<Partition> succ =
            pieri_successors(shape, opt.k, opt.rank, bound);
        if (json) {
            Json j;
            j["status"] = "ok";
            j["partition"] = partition_json(shape);
            j["k"] = opt.k;
            Json list = Json::array();
            for (const Partition& m : succ) list.push_back(partition_json(m));
            j["successors"] = std::move(list);
            out << j.dump() << '\n';
        } else {
            for (const Partition& m : succ) out << m.to_string() << '\n';
        }
        return 0;
    }

    if (command == "syt") {
        const Partition shape = Partition::parse(opt.partition);
        const Integer count = syt_count_hook(shape);
        if (json) {
            Json j;
            j["status"] = "ok";
            j["partition"] = partition_json(shape);
            j["count"] = count.str();
            out << j.dump() << '\n';
        } else {
            out << count.str() << '\n';
        }
        return 0;
    }

    if (command == "degree") {
        if (opt.dim <= opt.rank)
            throw UsageError("--dim must exceed --rank");
        const Integer deg = grassmann_degree(opt.rank, opt.dim);
        if (json) {
            Json j;
            j["status"] = "ok";
            j["rank"] = opt.rank;
            j["dim"] = opt.dim;
            j["degree"] = deg.str();
            out << j.dump() << '\n';
        } else {
            out << deg.str() << '\n';
        }
        return 0;
    }

    if (command == "product") {
        if (opt.dim <= opt.rank)
            throw UsageError("--dim must exceed --rank");
        const GrassmannRing g(opt.rank, opt.dim);
        const Partition a = Partition::parse(opt.partition);
        const Partition b = Partition::parse(opt.with);
        const SchurExpansion prod = grassmann_product(g, a, b);
        if (json) {
            Json j;
            j["status"] = "ok";
            j["a"] = partition_json(a);
            j["b"] = partition_json(b);
            j["expansion"] = expansion_to_json(prod);
            out << j.dump() << '\n';
        } else {
            out << prod.to_string() << '\n';
        }
        return 0;
    }

    if (command == "check") {
        CheckRunner run(opt.inject_fault);
        if (check_name == "giambelli")
            check_giambelli(run, opt.rank, opt.order, opt.max_weight);
        else if (check_name == "pieri")
            check_pieri(run, opt.rank, opt.order, opt.max_weight, opt.max_k);
        else if (check_name == "derivative")
            check_derivative(run, opt.rank, opt.order, opt.max_k);
        else if (check_name == "euler")
            check_euler(run, opt.rank, opt.order);
        else if (check_name == "nonhom")
            check_nonhom(run, opt.rank, opt.order);
        else
            throw UsageError("unknown check: " + check_name);

        const bool all_ok = run.all_ok();
        if (json) {
            Json j;
            j["status"] = all_ok ? "ok" : "verification-failed";
            j["check"] = check_name;
            Json cases = Json::array();
            for (const CheckCase& c : run.cases()) {
                Json one;
                one["name"] = c.name;
                one["ok"] = c.ok;
                cases.push_back(std::move(one));
            }
            j["cases"] = std::move(cases);
            out << j.dump() << '\n';
        } else {
            for (const CheckCase& c : run.cases())
                out << (c.ok ? "ok   " : "FAIL ") << c.name << '\n';
            out << (all_ok ? "all checks passed" : "counterexample found") << '\n';
        }
        return all_ok ? 0 : 3;
    }

    throw InternalError("unhandled command: " + command);
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;

    CLI::App app{"Exact calculator for the universal linear ODE and the "
                 "Wronski-Schubert calculus"};
    app.require_subcommand(1);

    Options opt;
    std::string check_name;

    auto add_rank = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--rank", opt.rank, "rank r (equation order r+1)")
                      ->check(CLI::Range(0, 8));
        if (required) o->required();
    };
    auto add_order = [&](CLI::App* sub, int lo = 1) {
        sub->add_option("--order", opt.order, "truncation order (default 10)")
            ->check(CLI::Range(lo, 64));
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* hseq = app.add_subcommand("hseq", "print h_0..h_N");
    add_rank(hseq);
    add_order(hseq, 0);
    add_format(hseq);

    CLI::App* solve = app.add_subcommand(
        "solve", "Cauchy problem for the universal equation");
    add_rank(solve);
    add_order(solve);
    add_format(solve);
    solve->add_option("--inits", opt.inits, "x_0..x_r as rationals, e.g. \"1,1\"");
    solve->add_option("--spec", opt.spec, "specialize e_1..e_{r+1}, e.g. \"3,2\"");

    CLI::App* nonhom = app.add_subcommand(
        "solve-nonhom", "driven equation with a JSON series right-hand side");
    add_rank(nonhom);
    add_order(nonhom);
    add_format(nonhom);
    nonhom->add_option("--rhs", opt.rhs_path, "path to a JSON DividedSeries")->required();
    nonhom->add_option("--inits", opt.inits, "x_0..x_r as rationals (default zeros)");
    nonhom->add_option("--spec", opt.spec, "specialize e_1..e_{r+1}");

    CLI::App* wronskian = app.add_subcommand(
        "wronskian", "generalized Wronskian of the universal system");
    add_rank(wronskian);
    add_order(wronskian);
    add_format(wronskian);
    wronskian->add_option("--partition", opt.partition, "shape, e.g. \"2,1\" (0 = empty)")
        ->required();
    wronskian->add_option("--spec", opt.spec, "specialize e_1..e_{r+1}");

    CLI::App* schur = app.add_subcommand(
        "schur", "Schur determinant of the h-sequence, as a polynomial in the e's");
    add_rank(schur);
    add_format(schur);
    schur->add_option("--partition", opt.partition, "shape")->required();

    CLI::App* pieri = app.add_subcommand("pieri", "Pieri successors of a shape");
    add_rank(pieri);
    add_format(pieri);
    pieri->add_option("--partition", opt.partition, "shape")->required();
    pieri->add_option("--k", opt.k, "degree of the special class")
        ->required()
        ->check(CLI::Range(0, 64));
    pieri->add_option("--dim", opt.dim, "bound shapes to the G(rank, P^dim) box")
        ->check(CLI::Range(1, 64));

    CLI::App* syt = app.add_subcommand("syt", "standard tableau count (hook formula)");
    syt->add_option("--partition", opt.partition, "shape")->required();
    add_format(syt);

    CLI::App* degree = app.add_subcommand("degree", "Pluecker degree of G(rank, P^dim)");
    add_rank(degree);
    degree->add_option("--dim", opt.dim, "ambient projective dimension")
        ->required()
        ->check(CLI::Range(1, 64));
    add_format(degree);

    CLI::App* product = app.add_subcommand(
        "product", "product of two Schubert classes in G(rank, P^dim)");
    add_rank(product);
    product->add_option("--dim", opt.dim, "ambient projective dimension")
        ->required()
        ->check(CLI::Range(1, 64));
    product->add_option("--partition", opt.partition, "first class")->required();
    product->add_option("--with", opt.with, "second class")->required();
    add_format(product);

    CLI::App* check = app.add_subcommand("check", "identity verification suites");
    check->add_option("name", check_name, "giambelli|pieri|derivative|euler|nonhom")
        ->required()
        ->check(CLI::IsMember({"giambelli", "pieri", "derivative", "euler", "nonhom"}));
    add_rank(check);
    add_order(check);
    add_format(check);
    check->add_option("--max-weight", opt.max_weight, "largest shape weight")
        ->check(CLI::Range(0, 8));
    check->add_option("--max-k", opt.max_k, "largest special-class degree")
        ->check(CLI::Range(1, 8));
    check->add_flag("--inject-fault", opt.inject_fault)->group(""); // hidden

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("wronsk");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(full.size());
    for (std::string& s : full) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Prints help text for help requests (code 0) or the error otherwise.
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        const int code = dispatch(command, check_name, opt, out);
        return {code, out.str(), err.str()};
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return {2, out.str(), err.str()};
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << '\n';
        return {2, out.str(), err.str()};
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return {1, out.str(), err.str()};
    }
}

} // namespace wronsk
