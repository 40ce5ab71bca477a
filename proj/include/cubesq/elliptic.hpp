#ifndef CUBESQ_ELLIPTIC_HPP
#define CUBESQ_ELLIPTIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubesq/binary_form.hpp"
#include "cubesq/rational.hpp"
#include "cubesq/roots.hpp"

namespace cubesq {

// Weierstrass model y^2 = 4x^3 - g8 x - g12 over P^1.
struct WeierstrassK3 {
    CycForm g8;
    CycForm g12;
    WeierstrassK3(CycForm g8_, CycForm g12_);
};

// The auxiliary general-type surface y^2 = -x^3 + h for a degree-24 form h.
struct AuxSurface {
    CycForm h;
    explicit AuxSurface(CycForm h_);
};

enum class FiberType { Smooth, In, II, III, IV, InStar, IVStar, IIIStar, IIStar };

std::string fiber_type_name(FiberType t, int n);  // "I3", "I0*", "IV", ...

// One singular fiber.  Vanishing orders are those of the minimal model at
// the location (the classification table reads them directly); ord_a or
// ord_b is nullopt when the corresponding coefficient form is identically
// zero.  euler follows the standard table: I_n -> n, II -> 2, III -> 3,
// IV -> 4, I*_n -> n+6, IV* -> 8, III* -> 9, II* -> 10.
struct KodairaFiber {
    P1Point location;
    std::optional<int> ord_a;
    std::optional<int> ord_b;
    int ord_delta = 0;
    FiberType type = FiberType::Smooth;
    int n = 0;  // index for In / InStar
    int euler = 0;
};

// Classification from vanishing orders of (A, B, Delta) in y^2 = x^3+Ax+B;
// applies minimal-model reduction (a>=4, b>=6, d>=12 simultaneously) first.
KodairaFiber classify_orders(std::optional<int> ord_a, std::optional<int> ord_b, int ord_delta);

CycForm discriminant(const WeierstrassK3& m);  // g8^3 - 27 g12^2, degree 24
CycForm discriminant(const AuxSurface& s);     // h^2, degree 48

std::vector<KodairaFiber> classify_fibers(const WeierstrassK3& m);
std::vector<KodairaFiber> classify_fibers(const AuxSurface& s);

int euler_total(const std::vector<KodairaFiber>& fibers);
int betti2(int euler_total);  // euler_total - 2, requires euler_total >= 2

struct SurfaceInvariants {
    int euler_total;
    int b2;
    int K_squared;
    long d_sq;
    long d_dot_K;
};
SurfaceInvariants surface_invariants(const std::vector<KodairaFiber>& fibers, int K_squared,
                                     long d_sq = -2, long d_dot_K = 0);

// chi(O(d)) = (d^2 - d.K)/2 + (K^2 + c2)/12, exact.
Rat riemann_roch_chi(long d_sq, long d_dot_K, long K_sq, long c2);

long totient(long n);
// 46 - 2*phi(33); the upper bound for the Picard number of the degenerate
// family member, which must come out to 6.
int picard_bound_check();

// The pencil f = a w^8, g = w (z^11 + b w^11).  h factors through two
// degree-11 clusters: h = w^2 (z^11 - a' w^11)(z^11 - b' w^11) with
// a' + b' = -2b and a' b' = a^3 + b^2; a', b' are generically irrational,
// so `verified` asserts the expanded exact identity
// h = w^2 (z^22 + 2b z^11 w^11 + (a^3+b^2) w^22) instead.
struct Family {
    CycForm f;
    CycForm g;
    CycForm h;
    ComplexF a_prime;
    ComplexF b_prime;
    bool verified;
};
Family family(const CycRat& a, const CycRat& b);

}  // namespace cubesq

#endif
