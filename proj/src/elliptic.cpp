#include "cubesq/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "cubesq/squarefree.hpp"

namespace cubesq {

WeierstrassK3::WeierstrassK3(CycForm g8_, CycForm g12_) : g8(std::move(g8_)), g12(std::move(g12_)) {
    if (g8.degree() != 8) throw DegreeMismatch("g8 must have degree 8");
    if (g12.degree() != 12) throw DegreeMismatch("g12 must have degree 12");
}

AuxSurface::AuxSurface(CycForm h_) : h(std::move(h_)) {
    if (h.degree() != 24) throw DegreeMismatch("h must have degree 24");
    if (h.is_zero()) throw ZeroForm("h must not be identically zero");
}

CycForm discriminant(const WeierstrassK3& m) {
    return m.g8.pow(3) - CycRat(27) * m.g12.pow(2);
}

CycForm discriminant(const AuxSurface& s) { return s.h * s.h; }

std::string fiber_type_name(FiberType t, int n) {
    switch (t) {
        case FiberType::Smooth: return "smooth";
        case FiberType::In: return "I" + std::to_string(n);
        case FiberType::II: return "II";
        case FiberType::III: return "III";
        case FiberType::IV: return "IV";
        case FiberType::InStar: return "I" + std::to_string(n) + "*";
        case FiberType::IVStar: return "IV*";
        case FiberType::IIIStar: return "III*";
        case FiberType::IIStar: return "II*";
    }
    return "?";
}

KodairaFiber classify_orders(std::optional<int> ord_a, std::optional<int> ord_b, int ord_delta) {
    auto at_least = [](const std::optional<int>& v, int k) { return !v || *v >= k; };

    std::optional<int> a = ord_a, b = ord_b;
    int d = ord_delta;
    while (at_least(a, 4) && at_least(b, 6) && d >= 12) {
        if (a) *a -= 4;
        if (b) *b -= 6;
        d -= 12;
    }

    KodairaFiber fb;
    fb.ord_a = a;
    fb.ord_b = b;
    fb.ord_delta = d;

    auto set = [&](FiberType t, int n, int euler) {
        fb.type = t;
        fb.n = n;
        fb.euler = euler;
    };

    if (d == 0) {
        set(FiberType::Smooth, 0, 0);
        return fb;
    }
    if (a && *a == 0) {
        if (!b || *b != 0) throw Error("inconsistent vanishing orders (multiplicative case)");
        set(FiberType::In, d, d);
        return fb;
    }
    // additive: a >= 1 (or A == 0) and b >= 1 (or B == 0)
    if (b && *b == 0) throw Error("inconsistent vanishing orders (additive case)");
    if (a && b && *a == 2 && *b == 3) {
        if (d < 6) throw Error("inconsistent vanishing orders (I* case)");
        set(FiberType::InStar, d - 6, d);
        return fb;
    }
    switch (d) {
        case 2: set(FiberType::II, 0, 2); break;
        case 3: set(FiberType::III, 0, 3); break;
        case 4: set(FiberType::IV, 0, 4); break;
        case 6: set(FiberType::InStar, 0, 6); break;
        case 8: set(FiberType::IVStar, 0, 8); break;
        case 9: set(FiberType::IIIStar, 0, 9); break;
        case 10: set(FiberType::IIStar, 0, 10); break;
        default: throw Error("vanishing orders match no Kodaira type: delta order " + std::to_string(d));
    }
    return fb;
}

namespace {

// Orders of a form at the two coordinate points; nullopt when the form is 0.
struct SpecialOrders {
    std::optional<int> at_zero, at_infinity;
};

SpecialOrders special_orders(const CycForm& f) {
    if (f.is_zero()) return {std::nullopt, std::nullopt};
    return {f.ord_at_zero(), f.ord_at_infinity()};
}

std::vector<KodairaFiber> classify_impl(const CycForm& a_form, const CycForm& b_form,
                                        const CycForm& delta) {
    if (delta.is_zero())
        throw NotAnEllipticFibration("discriminant is identically zero");

    const bool a_zero = a_form.is_zero();
    const bool b_zero = b_form.is_zero();

    FormFactorization fd = squarefree_decompose(delta);
    FormFactorization fa, fbv;
    if (!a_zero) fa = squarefree_decompose(a_form);
    if (!b_zero) fbv = squarefree_decompose(b_form);

    SpecialOrders sa = special_orders(a_form);
    SpecialOrders sb = special_orders(b_form);

    std::vector<KodairaFiber> out;

    auto emit_special = [&](bool at_infinity, int d_ord, std::optional<int> a_ord,
                            std::optional<int> b_ord) {
        if (d_ord <= 0) return;
        KodairaFiber fb = classify_orders(a_ord, b_ord, d_ord);
        fb.location = at_infinity ? P1Point::infinity() : P1Point::finite({0.0, 0.0});
        out.push_back(fb);
    };

    emit_special(true, fd.mult_at_infinity, sa.at_infinity, sb.at_infinity);
    emit_special(false, fd.mult_at_zero, sa.at_zero, sb.at_zero);

    for (const auto& dk : fd.finite) {
        // constant-order pieces: first split by the order of A, then of B
        std::vector<OrderPiece> by_a;
        if (a_zero) by_a.push_back({dk.factor, -1});  // order irrelevant, A == 0
        else by_a = split_by_order(dk.factor, fa);

        for (const auto& pa : by_a) {
            std::vector<OrderPiece> by_b;
            if (b_zero) by_b.push_back({pa.part, -1});
            else by_b = split_by_order(pa.part, fbv);

            for (const auto& pb : by_b) {
                std::optional<int> a_ord = a_zero ? std::nullopt : std::optional<int>(pa.order);
                std::optional<int> b_ord = b_zero ? std::nullopt : std::optional<int>(pb.order);
                KodairaFiber base = classify_orders(a_ord, b_ord, dk.multiplicity);

                std::vector<ComplexF> coeffs(pb.part.size());
                for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = pb.part[i].embed();
                for (const ComplexF& r : poly_roots(coeffs)) {
                    KodairaFiber fb = base;
                    fb.location = P1Point::finite(r);
                    out.push_back(fb);
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const KodairaFiber& x, const KodairaFiber& y) {
        return p1_less(x.location, y.location);
    });
    return out;
}

}  // namespace

std::vector<KodairaFiber> classify_fibers(const WeierstrassK3& m) {
    // Kodaira type depends only on vanishing orders, which are invariant
    // under the rescaling between y^2 = 4x^3 - g8 x - g12 and
    // y^2 = x^3 + Ax + B; so classify straight from (g8, g12, Delta).
    return classify_impl(m.g8, m.g12, discriminant(m));
}

std::vector<KodairaFiber> classify_fibers(const AuxSurface& s) {
    return classify_impl(CycForm(8), s.h, discriminant(s));
}

int euler_total(const std::vector<KodairaFiber>& fibers) {
    int e = 0;
    for (const auto& f : fibers) e += f.euler;
    return e;
}

int betti2(int euler_total) {
    if (euler_total < 2) throw Error("Euler number must be >= 2");
    return euler_total - 2;
}

SurfaceInvariants surface_invariants(const std::vector<KodairaFiber>& fibers, int K_squared,
                                     long d_sq, long d_dot_K) {
    int e = euler_total(fibers);
    return {e, betti2(e), K_squared, d_sq, d_dot_K};
}

Rat riemann_roch_chi(long d_sq, long d_dot_K, long K_sq, long c2) {
    return Rat(d_sq - d_dot_K, 2) + Rat(K_sq + c2, 12);
}

long totient(long n) {
    if (n < 1) throw Error("totient requires n >= 1");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int picard_bound_check() { return static_cast<int>(46 - 2 * totient(33)); }

Family family(const CycRat& a, const CycRat& b) {
    Family out{CycForm(8), CycForm(12), CycForm(24), {}, {}, false};
    out.f = CycForm::monomial(8, 0, a);                  // a w^8
    out.g = CycForm::monomial(12, 11, CycRat(1));        // z^11 w
    out.g[0] = b;                                        // + b w^12
    out.h = out.f.pow(3) + out.g.pow(2);

    // expected: w^2 (z^22 + 2b z^11 w^11 + (a^3+b^2) w^22)
    CycForm expected(24);
    expected[22] = CycRat(1);
    expected[11] = CycRat(2) * b;
    expected[0] = a * a * a + b * b;
    out.verified = (out.h == expected);

    // a', b' = roots of t^2 + 2bt + (a^3 + b^2): -b -+ sqrt(-a^3)
    ComplexF ac = a.embed();
    ComplexF bc = b.embed();
    ComplexF s = std::sqrt(-(ac * ac * ac));
    out.a_prime = -bc + s;
    out.b_prime = -bc - s;
    return out;
}

}  // namespace cubesq
