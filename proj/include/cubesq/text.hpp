#ifndef CUBESQ_TEXT_HPP
#define CUBESQ_TEXT_HPP

#include <optional>
#include <string>

#include "cubesq/binary_form.hpp"

namespace cubesq {

// Parses an expression such as "z^24 + w^24", "zeta3*z^8", or
// "(1-2*zeta3)*z^2*w^6 - 3/4*w^8" into an exact form.
//
//   form    := ['-'] term ( ('+'|'-') term )*
//   term    := coeff [ '*' monom ] | monom
//   coeff   := rat | rat '*' 'zeta3' | 'zeta3' | '(' rat [ ('+'|'-') rat '*'? 'zeta3' ] ')'
//   rat     := integer [ '/' positive-integer ]
//   monom   := var [ '^' positive-integer ] [ '*'? var [ '^' positive-integer ] ]
//   var     := 'z' | 'w'
//
// Whitespace is insignificant.  Terms with a nonzero coefficient must all
// have the same total degree (InhomogeneousInput otherwise); when
// expected_degree is given the common degree must match it (DegreeMismatch).
CycForm parse_form(const std::string& text, std::optional<int> expected_degree = std::nullopt);

// Human-readable printing: descending powers of z, rationals as p/q,
// zeta3 spelled out.  parse_form(to_text(f)) == f for every form.
std::string to_text(const CycForm& f);
std::string to_text(const CycRat& c);

}  // namespace cubesq

#endif
