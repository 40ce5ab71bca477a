#ifndef CUBESQ_SQUAREFREE_HPP
#define CUBESQ_SQUAREFREE_HPP

#include <vector>

#include "cubesq/binary_form.hpp"

namespace cubesq {

// Dense univariate polynomial over Q(zeta3): coeff[i] * t^i, highest
// coefficient nonzero; the zero polynomial is the empty vector.
using UniPoly = std::vector<CycRat>;

int uni_degree(const UniPoly& p);  // -1 for the zero polynomial
UniPoly uni_trim(UniPoly p);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_derivative(const UniPoly& p);
UniPoly uni_monic(UniPoly p);
// Remainder of a modulo b (b nonzero).
UniPoly uni_mod(UniPoly a, const UniPoly& b);
// Exact quotient; throws Error if the division leaves a remainder.
UniPoly uni_div_exact(UniPoly a, const UniPoly& b);
// Monic gcd via the Euclidean algorithm.
UniPoly uni_gcd(UniPoly a, UniPoly b);

struct SquareFreeFactor {
    UniPoly factor;  // monic, square-free, nonconstant
    int multiplicity;
};

// Yun's algorithm: p = unit * prod factor_i ^ multiplicity_i with the
// factors pairwise coprime and square-free.
std::vector<SquareFreeFactor> squarefree_decompose(const UniPoly& p);

// Square-free structure of a nonzero binary form: the special points
// [0:1], [1:0] carry exact multiplicities read off the coefficient span,
// the rest lives in the dehomogenization of the middle part (whose
// square-free factors all have nonzero constant term).
struct FormFactorization {
    int mult_at_zero;      // order of the root [0:1]
    int mult_at_infinity;  // order of the root [1:0]
    std::vector<SquareFreeFactor> finite;
};

FormFactorization squarefree_decompose(const CycForm& f);

// Exact vanishing order bookkeeping used by the fiber classifier: splits a
// square-free polynomial s into pieces on which a second form has constant
// vanishing order.
struct OrderPiece {
    UniPoly part;  // square-free factor of s
    int order;     // vanishing order of the reference form on its roots
};
std::vector<OrderPiece> split_by_order(const UniPoly& s, const FormFactorization& ref);

}  // namespace cubesq

#endif
