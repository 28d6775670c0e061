// Algebras on generators x1..xn with defining relations
//     xj * xi = q_ij * xi * xj + a_ij   (i < j, q_ij a unit, a_ij a scalar)
// and the ordered monomials x1^e1 * ... * xn^en as a module basis. NCPoly
// values are always kept in normal form; multiplication rewrites products
// onto the ordered basis.

#ifndef NCDISC_ALGEBRA_HPP
#define NCDISC_ALGEBRA_HPP

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ncdisc/comm_poly.hpp"
#include "ncdisc/monomial.hpp"
#include "ncdisc/number_field.hpp"

namespace ncdisc {

class AlgebraSpec;
using AlgebraSpecPtr = std::shared_ptr<const AlgebraSpec>;

class NCPoly;

class AlgebraSpec {
public:
    // q_upper/a_upper are indexed by pairs i < j (0-based) in the order
    // (0,1), (0,2), (1,2), (0,3), ... i.e. pair_index(i,j) = j(j-1)/2 + i.
    AlgebraSpec(std::string name, int n, FieldPtr field,
                std::vector<Coefficient> q_upper,
                std::vector<Coefficient> a_upper, std::vector<int> degrees);

    static size_t pair_index(int i, int j) {
        return static_cast<size_t>(j) * (j - 1) / 2 + static_cast<size_t>(i);
    }

    const std::string& name() const { return name_; }
    int gen_count() const { return n_; }
    const FieldPtr& field() const { return field_; }
    const Coefficient& q(int i, int j) const; // 0-based, i < j
    const Coefficient& a(int i, int j) const;
    int degree_of(int i) const { return degrees_[static_cast<size_t>(i)]; }
    const std::vector<int>& degrees() const { return degrees_; }

    // Structural equality; the name is cosmetic.
    bool same_structure(const AlgebraSpec& other) const;

    std::string describe() const;

    // X_e * x_i in normal form (memoized).
    NCPoly right_mul_generator(const AlgebraSpecPtr& self,
                               const ExponentVector& e, int i) const;

private:
    std::string name_;
    int n_;
    FieldPtr field_;
    std::vector<Coefficient> q_;
    std::vector<Coefficient> a_;
    std::vector<int> degrees_;

    mutable std::shared_mutex memo_mutex_;
    mutable std::map<std::pair<ExponentVector, int>,
                     std::map<ExponentVector, Coefficient, TermOrderDesc>>
        memo_;
};

AlgebraSpecPtr make_algebra(std::string name, int n, FieldPtr field,
                            std::vector<Coefficient> q_upper,
                            std::vector<Coefficient> a_upper,
                            std::vector<int> degrees = {});

bool same_algebra(const AlgebraSpecPtr& a, const AlgebraSpecPtr& b);
const AlgebraSpecPtr& require_same_algebra(const AlgebraSpecPtr& a,
                                           const AlgebraSpecPtr& b);

class NCPoly {
public:
    using TermMap = std::map<ExponentVector, Coefficient, TermOrderDesc>;

    explicit NCPoly(AlgebraSpecPtr spec); // zero

    static NCPoly zero(const AlgebraSpecPtr& spec);
    static NCPoly one(const AlgebraSpecPtr& spec);
    static NCPoly constant(const AlgebraSpecPtr& spec, const Coefficient& c);
    static NCPoly generator(const AlgebraSpecPtr& spec, int i); // 0-based
    static NCPoly monomial(const AlgebraSpecPtr& spec, const ExponentVector& e,
                           const Coefficient& c);

    const AlgebraSpecPtr& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Coefficient coefficient(const ExponentVector& e) const;

    // Filtration degree with deg(x_i) = spec degree; -1 for zero.
    long filtration_degree() const;

    void add_term(const ExponentVector& e, const Coefficient& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& rhs);
    NCPoly& operator-=(const NCPoly& rhs);
    NCPoly& operator*=(const NCPoly& rhs);
    NCPoly& operator*=(const Coefficient& c);

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }
    friend NCPoly operator*(NCPoly a, const NCPoly& b) { a *= b; return a; }
    friend NCPoly operator*(NCPoly a, const Coefficient& c) { a *= c; return a; }
    friend NCPoly operator*(const Coefficient& c, NCPoly a) { a *= c; return a; }

    bool operator==(const NCPoly& rhs) const;
    bool operator!=(const NCPoly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    AlgebraSpecPtr spec_;
    TermMap terms_;

    void check_compatible(const NCPoly& rhs) const;
};

NCPoly pow(const NCPoly& f, unsigned e);

// Antisymmetrized product: sum over permutations sigma of sign(sigma) *
// f_{sigma(1)} * ... * f_{sigma(w)}. SizeLimit above the factor bound.
NCPoly antisymmetrized_product(const std::vector<NCPoly>& factors,
                               int max_factors = 8);

// The tensor product algebra A (x) B: generators of A first, the cross
// relations commute exactly.
AlgebraSpecPtr tensor_algebra(const AlgebraSpecPtr& a, const AlgebraSpecPtr& b);
NCPoly tensor_embed_left(const AlgebraSpecPtr& t, const NCPoly& f);
NCPoly tensor_embed_right(const AlgebraSpecPtr& t, const AlgebraSpecPtr& a,
                          const NCPoly& g);

// The opposite algebra: q' = q^{-1}, a' = -q^{-1} a over the same basis.
AlgebraSpecPtr opposite_algebra(const AlgebraSpecPtr& a);

// The q = -1 family x_i x_j + x_j x_i = a_ij with the given constants.
AlgebraSpecPtr make_skew_symmetric(std::string name, int n,
                                   const FieldPtr& field,
                                   std::vector<Coefficient> a_upper);
AlgebraSpecPtr make_wn(int n, const FieldPtr& field);       // all a = 1
AlgebraSpecPtr make_kminus1(int n, const FieldPtr& field);  // all a = 0

} // namespace ncdisc

#endif
