#ifndef NCDISC_EXPR_HPP
#define NCDISC_EXPR_HPP

#include <string>

#include "ncdisc/algebra.hpp"
#include "ncdisc/comm_poly.hpp"

namespace ncdisc {

// Expression grammar shared by the three parsers:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | symbol | '(' expr ')'
//   rational := uint ('/' uint)?
// Symbols: x<k> are algebra generators, z<k> are central variables, a bare
// z is the generator of the coefficient field. Each parser accepts the
// symbols that make sense for its target type and rejects the others.

NCPoly parse_ncpoly(const std::string& text, const AlgebraSpecPtr& spec);

CommPoly parse_commpoly(const std::string& text, int var_count,
                        const FieldPtr& field);

Coefficient parse_coefficient(const std::string& text, const FieldPtr& field);

} // namespace ncdisc

#endif
