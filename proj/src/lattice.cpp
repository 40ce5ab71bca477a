#include "cubesq/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace cubesq {

DivisorClass DivisorClass::fiber() {
    DivisorClass d;
    d.coords[0] = Rat(1);
    return d;
}

DivisorClass DivisorClass::section(int i) {
    if (i < 0 || i > 6) throw Error("section index out of range");
    DivisorClass d;
    d.coords[static_cast<std::size_t>(i) + 1] = Rat(1);
    return d;
}

DivisorClass DivisorClass::canonical() {
    DivisorClass d;
    d.coords[0] = Rat(2);
    return d;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    DivisorClass r;
    for (std::size_t k = 0; k < 8; ++k) r.coords[k] = coords[k] + o.coords[k];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    DivisorClass r;
    for (std::size_t k = 0; k < 8; ++k) r.coords[k] = coords[k] - o.coords[k];
    return r;
}

DivisorClass DivisorClass::scaled(const Rat& s) const {
    DivisorClass r;
    for (std::size_t k = 0; k < 8; ++k) r.coords[k] = coords[k] * s;
    return r;
}

PairingTable standard_pairing() {
    PairingTable t{};
    // basis order: e, sigma0, sigma1..sigma6
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) t[i][j] = 0;
    for (int s = 1; s <= 7; ++s) {
        t[0][s] = t[s][0] = 1;  // e.sigma_i = 1
        t[s][s] = -4;           // sigma_i^2 = -4
    }
    t[0][0] = 0;
    // sections 1..6 index pairs: sigma_k = (zeta3^((k-1)%3) f, +g) for k=1..3,
    // (zeta3^((k-4)%3) f, -g) for k=4..6
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            int cube_i = (i - 1) % 3, cube_j = (j - 1) % 3;
            bool same_sign = ((i - 1) / 3) == ((j - 1) / 3);
            bool same_cube = cube_i == cube_j;
            long v = 0;
            if (same_sign && !same_cube) v = 8;    // deg f
            else if (same_cube && !same_sign) v = 12;  // deg g
            t[i + 1][j + 1] = v;
        }
    }
    return t;
}

Rat pair(const DivisorClass& x, const DivisorClass& y, const PairingTable& table) {
    Rat acc;
    for (std::size_t i = 0; i < 8; ++i) {
        if (x.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            long tij = table[i][j];
            if (tij == 0 || y.coords[j].is_zero()) continue;
            acc += x.coords[i] * Rat(tij) * y.coords[j];
        }
    }
    return acc;
}

DivisorClass tau(int i) {
    if (i < 1 || i > 6) throw Error("tau index must be in 1..6");
    return DivisorClass::section(i) - DivisorClass::section(0) -
           DivisorClass::fiber().scaled(Rat(4));
}

std::vector<RelationCheck> verify_relations(const PairingTable& table) {
    std::vector<RelationCheck> out;
    auto check = [&](const std::string& name, const Rat& value, const Rat& expected) {
        out.push_back({name, value, expected, value == expected});
    };

    DivisorClass e = DivisorClass::fiber();
    DivisorClass s0 = DivisorClass::section(0);
    for (int i = 1; i <= 6; ++i) {
        DivisorClass ti = tau(i);
        check("tau" + std::to_string(i) + "^2", pair(ti, ti, table), Rat(-8));
        check("tau" + std::to_string(i) + ".e", pair(ti, e, table), Rat(0));
        check("tau" + std::to_string(i) + ".sigma0", pair(ti, s0, table), Rat(0));
    }
    check("tau1.tau2", pair(tau(1), tau(2), table), Rat(4));

    auto self_zero = [&](const std::string& name, const DivisorClass& v) {
        check(name, pair(v, v, table), Rat(0));
    };
    self_zero("(tau1+tau4)^2", tau(1) + tau(4));
    self_zero("(tau2+tau5)^2", tau(2) + tau(5));
    self_zero("(tau3+tau6)^2", tau(3) + tau(6));
    self_zero("(tau1+tau2+tau3)^2", tau(1) + tau(2) + tau(3));
    self_zero("(tau4+tau5+tau6)^2", tau(4) + tau(5) + tau(6));
    return out;
}

namespace {

// integer square root (floor), exact
mpz_class isqrt_mpz(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

std::vector<std::array<Rat, 2>> enumerate_norm_vectors(const GramLattice& L, const Rat& norm) {
    const long g11 = L.gram[0][0], g12 = L.gram[0][1];
    const long g21 = L.gram[1][0], g22 = L.gram[1][1];
    if (g12 != g21) throw InvalidLattice("Gram matrix must be symmetric");
    const long det = g11 * g22 - g12 * g21;
    if (!(g11 < 0 && det > 0)) throw InvalidLattice("Gram matrix must be negative definite");
    if (!(norm < Rat(0))) throw Error("norm must be negative");

    // rho = G^{-1} n with n = (rho.tau1, rho.tau2) integral; then
    // rho.rho = n^T G^{-1} n = -(n^T Q n)/det with Q = -adj(G) positive
    // definite, so we need Q(n) = -det*norm.
    const long q11 = -g22, q12 = g12, q22 = -g11;  // -adj(G)
    Rat target = Rat(-det) * norm;
    if (!target.is_integer() || target.sign() < 0) return {};
    mpz_class c = target.num();

    std::vector<std::array<Rat, 2>> out;

    // ellipse bound from the smallest eigenvalue of Q
    double tr = static_cast<double>(q11 + q22);
    double dif = static_cast<double>(q11 - q22);
    double lam_min = (tr - std::sqrt(dif * dif + 4.0 * static_cast<double>(q12) * static_cast<double>(q12))) / 2.0;
    long bound = static_cast<long>(std::ceil(std::sqrt(c.get_d() / lam_min))) + 1;

    for (long n1 = -bound; n1 <= bound; ++n1) {
        // q22 n2^2 + 2 q12 n1 n2 + (q11 n1^2 - c) = 0
        mpz_class A(q22), B(mpz_class(2 * q12) * n1), C(mpz_class(q11) * n1 * n1 - c);
        mpz_class disc = B * B - 4 * A * C;
        if (disc < 0) continue;
        mpz_class s = isqrt_mpz(disc);
        if (s * s != disc) continue;
        for (int sign : {-1, 1}) {
            mpz_class num = -B + sign * s;
            if (num % (2 * A) != 0) continue;
            mpz_class n2 = num / (2 * A);
            // rho = adj(G) n / det
            mpz_class r1 = g22 * n1 - g12 * n2;
            mpz_class r2 = -g21 * n1 + g11 * n2;
            out.push_back({Rat(r1, mpz_class(det)), Rat(r2, mpz_class(det))});
            if (s == 0) break;  // double root
        }
    }

    auto less = [](const std::array<Rat, 2>& x, const std::array<Rat, 2>& y) {
        for (std::size_t k = 0; k < 2; ++k) {
            if (x[k].num() != y[k].num()) return x[k].num() < y[k].num();
            if (x[k].den() != y[k].den()) return x[k].den() < y[k].den();
        }
        return false;
    };
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const std::array<Rat, 2>& x, const std::array<Rat, 2>& y) {
                              return x[0] == y[0] && x[1] == y[1];
                          }),
              out.end());
    return out;
}

}  // namespace cubesq
