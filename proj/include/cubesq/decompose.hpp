#ifndef CUBESQ_DECOMPOSE_HPP
#define CUBESQ_DECOMPOSE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

#include "cubesq/binary_form.hpp"

namespace cubesq {

inline constexpr int kPhiDegree = 8;
inline constexpr int kPsiDegree = 12;
inline constexpr int kHDegree = 24;

// h = f^3 + g^2, exact.
CycForm forward(const CycForm& f, const CycForm& g);
CForm forward(const CForm& f, const CForm& g);

// The six symmetry images (zeta3^k phi, +-psi), exact duplicates collapsed
// (2 pairs when phi = 0, 3 when psi = 0).
std::vector<std::pair<CycForm, CycForm>> orbit(const CycForm& phi, const CycForm& psi);
std::vector<std::pair<CForm, CForm>> orbit(const CForm& phi, const CForm& psi);

// Relative residual max|coeffs(phi^3 + psi^2 - h)| / max|coeffs(h)|.
double residual(const CForm& h, const CForm& phi, const CForm& psi);

// true iff the residual is <= tol.
std::pair<bool, double> verify(const CForm& h, const CForm& phi, const CForm& psi, double tol);
// Exact check: equality of forms; the float residual is reported alongside.
std::pair<bool, double> verify(const CycForm& h, const CycForm& phi, const CycForm& psi);

struct SolverConfig {
    int starts = 200;
    int max_iters = 200;
    double tol_accept = 1e-8;
    double tol_orbit = 1e-4;
    std::uint64_t seed = 0;
    double damping = 1e-3;     // initial Levenberg parameter
    int threads = 0;           // 0: hardware concurrency
    bool subspace_starts = true;  // deterministic phi-only / psi-only seeds

    void validate() const;
};

struct Solution {
    CForm phi{kPhiDegree};
    CForm psi{kPsiDegree};
    double residual = 0.0;
};

struct Orbit {
    Solution representative;
    int orbit_size = 6;     // 6 generically, 2 when phi = 0, 3 when psi = 0
    int members_found = 0;  // distinct symmetry images seen among converged starts
};

struct SolveReport {
    std::vector<Orbit> orbits;
    std::vector<Solution> suspect;  // residual in (tol_accept, tol_orbit]
    int starts_total = 0;
    int starts_converged = 0;
};

// Multi-start Levenberg-Marquardt inversion of h = phi^3 + psi^2.  h is
// scaled to unit max coefficient before solving and solutions are scaled
// back.  Orbits are sorted by a canonical key; identical seeds give
// identical reports whether starts run serial or parallel.
SolveReport solve(const CForm& h, const SolverConfig& cfg = {});
SolveReport solve(const CycForm& h, const SolverConfig& cfg = {});

// Minimal distance min over symmetry images of
// max|coeffs(image(a) - b)| / scale, the metric used for orbit grouping.
double orbit_distance(const Solution& a, const Solution& b);

struct TrialOutcome {
    int orbits = 0;
    int members = 0;
    double best_match = 0.0;  // aligned coefficient distance to the planted pair
    double residual = 0.0;
    bool success = false;  // exactly one orbit, six members, matched plant
};

struct ExperimentReport {
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    double max_residual = 0.0;
    int spurious_orbit_trials = 0;  // trials with a second orbit at accept residual
    std::vector<TrialOutcome> outcomes;
};

// Samples integer (f, g) with entries in [-coeff_bound, coeff_bound],
// solves forward(f, g), and tallies recovery of the planted orbit.
ExperimentReport experiment_six_to_one(int trials, int coeff_bound, const SolverConfig& cfg);

// Internals exposed for tests: the packed unknown vector is
// (phi coeffs, psi coeffs) in C^22 and the residual map lands in C^25.
namespace solver_detail {

Eigen::VectorXcd pack(const CForm& phi, const CForm& psi);
std::pair<CForm, CForm> unpack(const Eigen::VectorXcd& x);
Eigen::VectorXcd residual_vector(const Eigen::VectorXcd& x, const CForm& h);
// Holomorphic Jacobian d(residual)/dx in C^{25 x 22}.
Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x);

}  // namespace solver_detail

}  // namespace cubesq

#endif
