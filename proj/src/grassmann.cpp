#include "wronsk/grassmann.hpp"

#include "wronsk/errors.hpp"

#include <algorithm>

namespace wronsk {

GrassmannRing::GrassmannRing(int rank, int dim) : rank_(rank), dim_(dim) {
    if (rank < 0) throw UsageError("rank must be nonnegative");
    if (dim <= rank)
        throw UsageError("ambient projective dimension must exceed the rank");
}

bool GrassmannRing::fits(const Partition& shape) const {
    return shape.rows() <= rank_ + 1 && shape.part(0) <= cols();
}

Partition GrassmannRing::box() const {
    return Partition(std::vector<int>(static_cast<std::size_t>(rank_) + 1, cols()));
}

Partition GrassmannRing::complement(const Partition& shape) const {
    if (!fits(shape)) throw UsageError("shape does not fit in the box");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(rank_) + 1);
    for (int i = rank_; i >= 0; --i) parts.push_back(cols() - shape.part(i));
    return Partition(std::move(parts));
}

std::vector<Partition> GrassmannRing::basis() const {
    std::vector<Partition> out;
    for (int w = 0; w <= total_weight(); ++w) {
        std::vector<Partition> layer = partitions_in_box(w, rank_ + 1, cols());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

SchurExpansion reduce_to_box(const SchurExpansion& x, const GrassmannRing& g) {
    SchurExpansion out;
    for (const auto& [shape, c] : x.terms())
        if (g.fits(shape)) out.add(shape, c);
    return out;
}

SchurExpansion grassmann_product(const GrassmannRing& g, const Partition& a,
                                 const Partition& b) {
    if (!g.fits(a) || !g.fits(b))
        throw UsageError("product factors must fit in the box");
    // Giambelli on b over the special classes s_1..s_{cols} (zero beyond),
    // then each resulting monomial acts on a by bounded Pieri steps.
    const GradedSequence sigma = GradedSequence::formal("s", g.cols(), true);
    const Polynomial expanded = jacobi_trudi(b, sigma, g.rank());
    SchurExpansion out;
    for (const Term& t : expanded.terms()) {
        SchurExpansion acc;
        acc.add(a, t.coeff);
        for (std::size_t i = t.mono.width(); i-- > 0;) {
            const int k = static_cast<int>(i) + 1;
            for (int rep = 0; rep < t.mono.exponent(i); ++rep) {
                SchurExpansion next;
                for (const auto& [shape, c] : acc.terms())
                    for (const Partition& succ :
                         pieri_successors(shape, k, g.rank(), g.cols()))
                        next.add(succ, c);
                acc = std::move(next);
            }
        }
        for (const auto& [shape, c] : acc.terms()) out.add(shape, c);
    }
    return out;
}

SchurExpansion grassmann_product(const GrassmannRing& g, const SchurExpansion& a,
                                 const SchurExpansion& b) {
    SchurExpansion out;
    for (const auto& [sb, cb] : b.terms())
        for (const auto& [sa, ca] : a.terms()) {
            const SchurExpansion part = grassmann_product(g, sa, sb);
            for (const auto& [shape, c] : part.terms()) out.add(shape, c * ca * cb);
        }
    return out;
}

SchurExpansion cap_action(const GrassmannRing& g, int k, const SchurExpansion& cycles) {
    SchurExpansion out;
    for (const auto& [shape, c] : cycles.terms()) {
        if (!g.fits(shape)) throw UsageError("cycle class outside the box");
        for (const Partition& succ : pieri_successors(shape, k, g.rank(), g.cols()))
            out.add(succ, c);
    }
    return out;
}

Rational integral(const GrassmannRing& g, const SchurExpansion& x) {
    return x.coeff(g.box());
}

Integer grassmann_degree(int rank, int dim) {
    const GrassmannRing g(rank, dim);
    SchurExpansion acc;
    acc.add(Partition(), Rational(1));
    for (int step = 0; step < g.total_weight(); ++step) acc = cap_action(g, 1, acc);
    return to_integer(integral(g, acc));
}

SchurExpansion grassmann_image(const Polynomial& p_in_e, const GrassmannRing& g) {
    return reduce_to_box(schur_expand(rewrite_in_h(p_in_e), g.rank()), g);
}

} // namespace wronsk
