// Algebra maps given by generator images, with mechanical verification that
// the defining relations are preserved.

#ifndef NCDISC_MORPHISMS_HPP
#define NCDISC_MORPHISMS_HPP

#include <utility>
#include <vector>

#include "ncdisc/algebra.hpp"

namespace ncdisc {

struct GeneratorMap {
    AlgebraSpecPtr domain;
    AlgebraSpecPtr codomain;
    std::vector<NCPoly> images; // images[i] = image of x_{i+1}, in codomain

    std::string to_string() const;
};

GeneratorMap make_generator_map(AlgebraSpecPtr domain, AlgebraSpecPtr codomain,
                                std::vector<NCPoly> images);

// Monomial map x_i -> r_i * x_{sigma(i)} on a single algebra.
GeneratorMap monomial_map(const AlgebraSpecPtr& spec,
                          const std::vector<int>& sigma,
                          const std::vector<Coefficient>& r);

NCPoly apply_map(const GeneratorMap& g, const NCPoly& f);

GeneratorMap compose(const GeneratorMap& g, const GeneratorMap& h); // g after h

struct HomomorphismCheck {
    bool ok;
    std::vector<std::pair<int, int>> failures; // 1-based violating pairs (i, j)
};

// Checks g(xj)g(xi) == q_ij g(xi)g(xj) + a_ij for every pair i < j.
HomomorphismCheck verify_homomorphism(const GeneratorMap& g);

// Requires g to preserve relations; throws NotAHomomorphism otherwise.
void require_homomorphism(const GeneratorMap& g);

// True when g and h are mutually inverse endomorphisms.
bool verify_inverse_pair(const GeneratorMap& g, const GeneratorMap& h);

// Every generator image has filtration degree <= 1.
bool is_affine(const GeneratorMap& g);

} // namespace ncdisc

#endif
