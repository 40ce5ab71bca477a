#ifndef CUBESQ_LATTICE_HPP
#define CUBESQ_LATTICE_HPP

#include <array>
#include <string>
#include <vector>

#include "cubesq/rational.hpp"

namespace cubesq {

// Rational divisor class in the ordered basis (e, sigma0, sigma1, ..., sigma6).
struct DivisorClass {
    std::array<Rat, 8> coords{};

    static DivisorClass fiber();          // e
    static DivisorClass section(int i);   // sigma_i, 0 <= i <= 6
    static DivisorClass canonical();      // K = 2e

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass scaled(const Rat& s) const;
};

using PairingTable = std::array<std::array<long, 8>, 8>;

// e.e = 0, e.sigma_i = 1, sigma_i^2 = -4, sigma_0.sigma_i = 0 (i >= 1);
// among sections i, j >= 1: 8 when they share the sign of g (deg f), 12 when
// they share the cube-root factor (deg g), 0 when they differ in both.
PairingTable standard_pairing();

Rat pair(const DivisorClass& x, const DivisorClass& y, const PairingTable& table = standard_pairing());

// tau(sigma_i) = sigma_i - sigma_0 - 4e for i in 1..6.
DivisorClass tau(int i);

struct RelationCheck {
    std::string name;
    Rat value;
    Rat expected;
    bool pass;
};

// The intersection identities behind the rank-2 lattice: tau_i^2 = -8,
// tau_i orthogonal to e and sigma_0, tau_1.tau_2 = 4, and the vanishing
// self-pairings of tau_1+tau_4, tau_2+tau_5, tau_3+tau_6, tau_1+tau_2+tau_3,
// tau_4+tau_5+tau_6.
std::vector<RelationCheck> verify_relations(const PairingTable& table = standard_pairing());

struct GramLattice {
    std::array<std::array<long, 2>, 2> gram{};

    static GramLattice of(long g11, long g12, long g21, long g22) {
        GramLattice L;
        L.gram[0] = {g11, g12};
        L.gram[1] = {g21, g22};
        return L;
    }
    static GramLattice standard() { return of(-8, 4, 4, -8); }
};

// All rho in the dual lattice (rho.M integral) with rho.rho = norm, as exact
// rational coordinates in the basis of M, sorted lexicographically on
// (numerator, denominator) pairs.  norm must be negative and the lattice
// negative definite (InvalidLattice otherwise).
std::vector<std::array<Rat, 2>> enumerate_norm_vectors(const GramLattice& L, const Rat& norm);

}  // namespace cubesq

#endif
