#include "ncdisc/morphisms.hpp"

#include <sstream>

#include "ncdisc/errors.hpp"

namespace ncdisc {

std::string GeneratorMap::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) out << ", ";
        out << "x" << (i + 1) << " -> " << images[i].to_string();
    }
    return out.str();
}

GeneratorMap make_generator_map(AlgebraSpecPtr domain, AlgebraSpecPtr codomain,
                                std::vector<NCPoly> images) {
    if (images.size() != static_cast<size_t>(domain->gen_count()))
        throw DimensionMismatchError("expected one image per generator");
    for (const auto& f : images) require_same_algebra(codomain, f.spec());
    require_same_field(domain->field(), codomain->field());
    return GeneratorMap{std::move(domain), std::move(codomain),
                        std::move(images)};
}

GeneratorMap monomial_map(const AlgebraSpecPtr& spec,
                          const std::vector<int>& sigma,
                          const std::vector<Coefficient>& r) {
    const int n = spec->gen_count();
    if (sigma.size() != static_cast<size_t>(n) ||
        r.size() != static_cast<size_t>(n))
        throw DimensionMismatchError("permutation/scaling length mismatch");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int s : sigma) {
        if (s < 0 || s >= n) throw IndexError("permutation value out of range");
        if (seen[static_cast<size_t>(s)])
            throw PreconditionViolationError("not a permutation");
        seen[static_cast<size_t>(s)] = true;
    }
    std::vector<NCPoly> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        images.push_back(NCPoly::generator(spec, sigma[static_cast<size_t>(i)]) *
                         r[static_cast<size_t>(i)]);
    return make_generator_map(spec, spec, std::move(images));
}

NCPoly apply_map(const GeneratorMap& g, const NCPoly& f) {
    require_same_algebra(g.domain, f.spec());
    NCPoly acc(g.codomain);
    for (const auto& [e, c] : f.terms()) {
        NCPoly prod = NCPoly::constant(g.codomain, c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int rep = 0; rep < e[i]; ++rep) prod *= g.images[i];
        acc += prod;
    }
    return acc;
}

GeneratorMap compose(const GeneratorMap& g, const GeneratorMap& h) {
    require_same_algebra(g.domain, h.codomain);
    std::vector<NCPoly> images;
    images.reserve(h.images.size());
    for (const auto& f : h.images) images.push_back(apply_map(g, f));
    return make_generator_map(h.domain, g.codomain, std::move(images));
}

HomomorphismCheck verify_homomorphism(const GeneratorMap& g) {
    HomomorphismCheck out{true, {}};
    const AlgebraSpec& dom = *g.domain;
    for (int j = 1; j < dom.gen_count(); ++j) {
        for (int i = 0; i < j; ++i) {
            NCPoly lhs = g.images[static_cast<size_t>(j)] *
                         g.images[static_cast<size_t>(i)];
            NCPoly rhs = g.images[static_cast<size_t>(i)] *
                             g.images[static_cast<size_t>(j)] * dom.q(i, j) +
                         NCPoly::constant(g.codomain, dom.a(i, j));
            if (lhs != rhs) {
                out.ok = false;
                out.failures.emplace_back(i + 1, j + 1);
            }
        }
    }
    return out;
}

void require_homomorphism(const GeneratorMap& g) {
    HomomorphismCheck check = verify_homomorphism(g);
    if (check.ok) return;
    std::ostringstream out;
    out << "relation not preserved for pairs:";
    for (auto [i, j] : check.failures) out << " (" << i << "," << j << ")";
    throw NotAHomomorphismError(out.str());
}

bool verify_inverse_pair(const GeneratorMap& g, const GeneratorMap& h) {
    if (!same_algebra(g.domain, h.codomain) ||
        !same_algebra(h.domain, g.codomain))
        return false;
    for (int i = 0; i < g.domain->gen_count(); ++i) {
        NCPoly xi = NCPoly::generator(g.domain, i);
        if (apply_map(h, apply_map(g, xi)) != xi) return false;
    }
    for (int i = 0; i < h.domain->gen_count(); ++i) {
        NCPoly yi = NCPoly::generator(h.domain, i);
        if (apply_map(g, apply_map(h, yi)) != yi) return false;
    }
    return true;
}

bool is_affine(const GeneratorMap& g) {
    for (const auto& f : g.images)
        if (f.filtration_degree() > 1) return false;
    return true;
}

} // namespace ncdisc
