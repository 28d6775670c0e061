#ifndef NCDISC_ALGEBRA_FILE_HPP
#define NCDISC_ALGEBRA_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncdisc/algebra.hpp"

namespace ncdisc {

struct LoadedAlgebra {
    AlgebraSpecPtr algebra;
    std::optional<std::vector<int>> center_powers;
};

// Key-value document, one entry per line, '#' starts a comment:
//   name  <text>
//   n     <generator count>                 (required, before q/a/degrees)
//   minpoly <c0> <c1> ... <ck>              (ascending, monic; default z - 1)
//   q <i> <j> <coefficient literal>         (1 <= i < j <= n; default 1)
//   a <i> <j> <coefficient literal>         (default 0)
//   degrees <d1> ... <dn>                   (default all 1)
//   center_powers <p1> ... <pn>             (optional)
LoadedAlgebra parse_algebra_text(const std::string& text);

// Accepts a built-in preset ("Wn:<n>", "kminus1:<n>", "Aq:<rational>",
// "Ex5.9:<ell>") or a path to an algebra document.
LoadedAlgebra load_algebra(const std::string& source);

bool is_preset_name(const std::string& source);

} // namespace ncdisc

#endif
