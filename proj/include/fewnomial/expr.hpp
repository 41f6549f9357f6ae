#ifndef FEWNOMIAL_EXPR_HPP
#define FEWNOMIAL_EXPR_HPP

#include <string>

#include "fewnomial/dense_poly.hpp"
#include "fewnomial/multi_poly.hpp"
#include "fewnomial/sparse_poly.hpp"

namespace fewnomial {

// Grammar (shared by the CLI and file formats):
//   expr     := [sign] term (sign term)*
//   term     := factor ('*' factor)*
//   factor   := rational | variable ['^' integer]
//   rational := integer ['/' natural]
// Variables: 'x' in the univariate context; 't1'..'tl' and 'y' in the
// multivariate context. Exponents are arbitrary-precision decimal integers,
// negatives allowed. ParseError carries the offset and what was expected.
SparsePoly parse_sparse(const std::string& text);
MultiPoly parse_multi(const std::string& text, int l);

// Largest t-variable index appearing in the text (0 when none).
int infer_var_count(const std::string& text);

std::string to_string(const SparsePoly& p);
std::string to_string(const MultiPoly& f);
std::string to_string(const DensePoly& p);

} // namespace fewnomial

#endif
