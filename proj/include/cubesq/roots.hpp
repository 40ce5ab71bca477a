#ifndef CUBESQ_ROOTS_HPP
#define CUBESQ_ROOTS_HPP

#include <vector>

#include "cubesq/binary_form.hpp"

namespace cubesq {

// Point on the projective line: [value : 1], or [1 : 0] when at_infinity.
struct P1Point {
    bool at_infinity = false;
    ComplexF value{0.0, 0.0};

    static P1Point infinity() { return {true, {0.0, 0.0}}; }
    static P1Point finite(ComplexF v) { return {false, v}; }
};

bool p1_less(const P1Point& a, const P1Point& b);

struct RootCluster {
    P1Point location;
    int multiplicity;
};

inline constexpr double kClusterTol = 1e-6;  // relative clustering tolerance

// All roots of a nonzero form on P^1 with multiplicities summing to the
// degree: the multiplicity at [1:0] is read off the trailing coefficients,
// the rest come from the dehomogenized polynomial p(z,1) via
// companion-matrix eigenvalues, Newton polish, and relative clustering.
// Throws ZeroForm on the zero form.
std::vector<RootCluster> roots(const CForm& p, double cluster_tol = kClusterTol);

// Roots of a dense univariate polynomial sum c[i] t^i (c.back() != 0).
std::vector<ComplexF> poly_roots(const std::vector<ComplexF>& c);

}  // namespace cubesq

#endif
