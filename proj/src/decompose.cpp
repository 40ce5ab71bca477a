#include "cubesq/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "cubesq/rng.hpp"

namespace cubesq {

namespace {

const ComplexF kZeta3{-0.5, 0.86602540378443864676};

void check_degrees(int dh, int dphi, int dpsi) {
    if (dh != kHDegree) throw DegreeMismatch("h must have degree 24");
    if (dphi != kPhiDegree) throw DegreeMismatch("phi must have degree 8");
    if (dpsi != kPsiDegree) throw DegreeMismatch("psi must have degree 12");
}

}  // namespace

CycForm forward(const CycForm& f, const CycForm& g) {
    if (f.degree() != kPhiDegree) throw DegreeMismatch("f must have degree 8");
    if (g.degree() != kPsiDegree) throw DegreeMismatch("g must have degree 12");
    return f.pow(3) + g.pow(2);
}

CForm forward(const CForm& f, const CForm& g) {
    if (f.degree() != kPhiDegree) throw DegreeMismatch("f must have degree 8");
    if (g.degree() != kPsiDegree) throw DegreeMismatch("g must have degree 12");
    return f.pow(3) + g.pow(2);
}

template <class Form, class Scalar>
static std::vector<std::pair<Form, Form>> orbit_impl(const Form& phi, const Form& psi,
                                                     const Scalar& zeta) {
    std::vector<std::pair<Form, Form>> out;
    Form cur = phi;
    for (int k = 0; k < 3; ++k) {
        if (k > 0) cur = zeta * cur;
        for (const Form& s : {psi, -psi}) {
            std::pair<Form, Form> cand{cur, s};
            bool dup = false;
            for (const auto& p : out)
                if (p.first == cand.first && p.second == cand.second) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back(std::move(cand));
        }
    }
    return out;
}

std::vector<std::pair<CycForm, CycForm>> orbit(const CycForm& phi, const CycForm& psi) {
    return orbit_impl(phi, psi, CycRat::zeta3());
}

std::vector<std::pair<CForm, CForm>> orbit(const CForm& phi, const CForm& psi) {
    return orbit_impl(phi, psi, kZeta3);
}

double residual(const CForm& h, const CForm& phi, const CForm& psi) {
    check_degrees(h.degree(), phi.degree(), psi.degree());
    double hn = max_abs(h);
    if (hn == 0.0) throw ZeroForm("residual relative to the zero form is undefined");
    return max_abs(forward(phi, psi) - h) / hn;
}

std::pair<bool, double> verify(const CForm& h, const CForm& phi, const CForm& psi, double tol) {
    double r = residual(h, phi, psi);
    return {r <= tol, r};
}

std::pair<bool, double> verify(const CycForm& h, const CycForm& phi, const CycForm& psi) {
    check_degrees(h.degree(), phi.degree(), psi.degree());
    bool exact = (forward(phi, psi) == h);
    double r = exact ? 0.0 : residual(embed(h), embed(phi), embed(psi));
    return {exact, r};
}

void SolverConfig::validate() const {
    if (starts < 1) throw Error("starts must be >= 1");
    if (max_iters < 1) throw Error("max_iters must be >= 1");
    if (!(0.0 < tol_accept && tol_accept < tol_orbit && tol_orbit < 1.0))
        throw Error("tolerances must satisfy 0 < tol_accept < tol_orbit < 1");
    if (!(damping > 0.0)) throw Error("damping must be positive");
}

namespace solver_detail {

Eigen::VectorXcd pack(const CForm& phi, const CForm& psi) {
    Eigen::VectorXcd x(22);
    for (int i = 0; i <= kPhiDegree; ++i) x(i) = phi[i];
    for (int i = 0; i <= kPsiDegree; ++i) x(9 + i) = psi[i];
    return x;
}

std::pair<CForm, CForm> unpack(const Eigen::VectorXcd& x) {
    CForm phi(kPhiDegree), psi(kPsiDegree);
    for (int i = 0; i <= kPhiDegree; ++i) phi[i] = x(i);
    for (int i = 0; i <= kPsiDegree; ++i) psi[i] = x(9 + i);
    return {phi, psi};
}

Eigen::VectorXcd residual_vector(const Eigen::VectorXcd& x, const CForm& h) {
    auto [phi, psi] = unpack(x);
    CForm r = forward(phi, psi) - h;
    Eigen::VectorXcd v(kHDegree + 1);
    for (int i = 0; i <= kHDegree; ++i) v(i) = r[i];
    return v;
}

Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x) {
    auto [phi, psi] = unpack(x);
    CForm phi2 = phi * phi;
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(kHDegree + 1, 22);
    for (int j = 0; j <= kPhiDegree; ++j)
        for (int i = 0; i <= 2 * kPhiDegree; ++i) J(i + j, j) = 3.0 * phi2[i];
    for (int j = 0; j <= kPsiDegree; ++j)
        for (int i = 0; i <= kPsiDegree; ++i) J(i + j, 9 + j) = 2.0 * psi[i];
    return J;
}

}  // namespace solver_detail

namespace {

using solver_detail::jacobian;
using solver_detail::pack;
using solver_detail::residual_vector;
using solver_detail::unpack;

struct StartResult {
    Eigen::VectorXcd x;
    double rel_residual = 1.0;
};

// Damped Gauss-Newton on |phi^3 + psi^2 - h|^2; the residual map is
// holomorphic, so the complex normal equations coincide with the real ones.
StartResult run_lm(const CForm& h, Eigen::VectorXcd x, const SolverConfig& cfg) {
    const double hn = max_abs(h);
    auto rel = [&](const Eigen::VectorXcd& r) { return r.cwiseAbs().maxCoeff() / hn; };

    Eigen::VectorXcd r = residual_vector(x, h);
    double cost = r.squaredNorm();
    double lambda = cfg.damping;

    for (int iter = 0; iter < cfg.max_iters && rel(r) > 1e-12; ++iter) {
        Eigen::MatrixXcd J = jacobian(x);
        Eigen::MatrixXcd A = J.adjoint() * J;
        Eigen::VectorXcd g = J.adjoint() * r;
        bool accepted = false;
        while (lambda < 1e18) {
            Eigen::MatrixXcd Areg = A;
            Areg.diagonal().array() += lambda;
            Eigen::VectorXcd step = Areg.ldlt().solve(-g);
            Eigen::VectorXcd xn = x + step;
            Eigen::VectorXcd rn = residual_vector(xn, h);
            double cn = rn.squaredNorm();
            if (cn < cost) {
                x = std::move(xn);
                r = std::move(rn);
                cost = cn;
                lambda = std::max(lambda / 3.0, 1e-14);
                accepted = true;
                break;
            }
            lambda *= 10.0;  // rejected step
        }
        if (!accepted) break;
    }
    return {std::move(x), rel(r)};
}

// Scales a random form so its cube (or square) has max coefficient ~1.
void scale_part(Eigen::VectorXcd& x, int offset, int count, int power) {
    double m = 0.0;
    CForm f = power == 3 ? unpack(x).first : unpack(x).second;
    m = max_abs(power == 3 ? f * f * f : f * f);
    if (m <= 0.0) return;
    double s = std::pow(m, -1.0 / power);
    for (int i = 0; i < count; ++i) x(offset + i) *= s;
}

Eigen::VectorXcd initial_point(Rng& rng, int kind) {
    // kind 0: full random; 1: psi = 0 (pure cube); 2: phi = 0 (pure square)
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(22);
    if (kind != 2)
        for (int i = 0; i < 9; ++i) x(i) = rng.complex_normal();
    if (kind != 1)
        for (int i = 0; i < 13; ++i) x(9 + i) = rng.complex_normal();
    if (kind != 2) scale_part(x, 0, 9, 3);
    if (kind != 1) scale_part(x, 9, 13, 2);
    return x;
}

struct GroupSolution {
    CForm phi{kPhiDegree};
    CForm psi{kPsiDegree};
    double residual = 0.0;
};

double pair_norm(const CForm& phi, const CForm& psi) {
    return std::max(max_abs(phi), max_abs(psi));
}

double pair_dist(const CForm& pa, const CForm& sa, const CForm& pb, const CForm& sb) {
    return std::max(max_abs(pa - pb), max_abs(sa - sb));
}

std::vector<GroupSolution> images_of(const GroupSolution& s, double tol) {
    std::vector<GroupSolution> out;
    double scale = std::max(pair_norm(s.phi, s.psi), 1e-300);
    CForm cur = s.phi;
    for (int k = 0; k < 3; ++k) {
        if (k > 0) cur = kZeta3 * cur;
        for (const CForm& ps : {s.psi, -s.psi}) {
            bool dup = false;
            for (const auto& e : out)
                if (pair_dist(cur, ps, e.phi, e.psi) / scale <= tol) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back({cur, ps, s.residual});
        }
    }
    return out;
}

std::vector<long long> canonical_key(const GroupSolution& s) {
    std::vector<long long> key;
    key.reserve(44);
    auto push = [&](const CForm& f) {
        for (const auto& c : f.coeffs()) {
            key.push_back(std::llround(c.real() * 1e9));
            key.push_back(std::llround(c.imag() * 1e9));
        }
    };
    push(s.phi);
    push(s.psi);
    return key;
}

GroupSolution canonical_image(const GroupSolution& s, double tol) {
    std::vector<GroupSolution> im = images_of(s, tol);
    const GroupSolution* best = &im[0];
    std::vector<long long> best_key = canonical_key(im[0]);
    for (std::size_t i = 1; i < im.size(); ++i) {
        std::vector<long long> k = canonical_key(im[i]);
        if (k < best_key) {
            best_key = std::move(k);
            best = &im[i];
        }
    }
    return *best;
}

// Zeroing a nearly-zero phi (or psi) keeps singular-zero orbits honest: the
// solver approaches phi = 0 only at a cubic-flat rate, so accept the exact
// degenerate solution whenever it still meets tol_accept.
void snap_degenerate(GroupSolution& s, const CForm& h, double tol_accept) {
    double scale = std::max(pair_norm(s.phi, s.psi), 1e-300);
    if (max_abs(s.phi) / scale < 1e-2) {
        double r = residual(h, CForm(kPhiDegree), s.psi);
        if (r <= tol_accept) {
            s.phi = CForm(kPhiDegree);
            s.residual = r;
            return;
        }
    }
    if (max_abs(s.psi) / scale < 1e-2) {
        double r = residual(h, s.phi, CForm(kPsiDegree));
        if (r <= tol_accept) {
            s.psi = CForm(kPsiDegree);
            s.residual = r;
        }
    }
}

struct OrbitAcc {
    GroupSolution anchor;                  // first member found; grouping reference
    std::vector<GroupSolution> images;     // collapsed symmetry images of the anchor
    std::vector<bool> found;
    GroupSolution best;                    // lowest-residual member
};

Solution to_solution(const GroupSolution& s, double phi_scale, double psi_scale) {
    Solution out;
    out.phi = ComplexF(phi_scale, 0.0) * s.phi;
    out.psi = ComplexF(psi_scale, 0.0) * s.psi;
    out.residual = s.residual;
    return out;
}

template <class Fn>
void parallel_for_index(int n, int threads, Fn&& fn) {
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

double orbit_distance(const Solution& a, const Solution& b) {
    double scale = std::max({pair_norm(a.phi, a.psi), pair_norm(b.phi, b.psi), 1e-300});
    GroupSolution ga{a.phi, a.psi, a.residual};
    double best = std::numeric_limits<double>::infinity();
    for (const auto& im : images_of(ga, 0.0))
        best = std::min(best, pair_dist(im.phi, im.psi, b.phi, b.psi) / scale);
    return best;
}

SolveReport solve(const CForm& h, const SolverConfig& cfg) {
    cfg.validate();
    if (h.degree() != kHDegree) throw DegreeMismatch("h must have degree 24");
    if (h.is_zero())
        throw ZeroForm("h == 0 admits the one-parameter family (phi, psi) = (-t^2, t^3)");

    const double hscale = max_abs(h);
    const CForm hh = ComplexF(1.0 / hscale, 0.0) * h;

    const int total = cfg.starts + (cfg.subspace_starts ? 2 : 0);
    std::vector<StartResult> results(static_cast<std::size_t>(total));

    int threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    parallel_for_index(total, std::max(1, threads), [&](int idx) {
        Rng rng(cfg.seed ^ static_cast<std::uint64_t>(idx));
        int kind = idx < cfg.starts ? 0 : (idx == cfg.starts ? 1 : 2);
        results[static_cast<std::size_t>(idx)] = run_lm(hh, initial_point(rng, kind), cfg);
    });

    SolveReport report;
    report.starts_total = total;

    std::vector<OrbitAcc> groups;
    std::vector<GroupSolution> suspects;

    for (const StartResult& sr : results) {  // ascending start index: deterministic
        if (sr.rel_residual > cfg.tol_orbit) continue;
        auto [phi, psi] = unpack(sr.x);
        GroupSolution sol{phi, psi, sr.rel_residual};

        if (sr.rel_residual > cfg.tol_accept) {
            bool dup = false;
            for (auto& s : suspects)
                if (orbit_distance({s.phi, s.psi, 0}, {sol.phi, sol.psi, 0}) <= cfg.tol_orbit) {
                    if (sol.residual < s.residual) s = sol;
                    dup = true;
                    break;
                }
            if (!dup) suspects.push_back(sol);
            continue;
        }

        ++report.starts_converged;
        snap_degenerate(sol, hh, cfg.tol_accept);

        bool assigned = false;
        for (auto& grp : groups) {
            double scale = std::max({pair_norm(grp.anchor.phi, grp.anchor.psi),
                                     pair_norm(sol.phi, sol.psi), 1e-300});
            std::size_t best_j = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < grp.images.size(); ++j) {
                double d = pair_dist(grp.images[j].phi, grp.images[j].psi, sol.phi, sol.psi) / scale;
                if (d < best_d) {
                    best_d = d;
                    best_j = j;
                }
            }
            if (best_d <= cfg.tol_orbit) {
                grp.found[best_j] = true;
                if (sol.residual < grp.best.residual) grp.best = sol;
                assigned = true;
                break;
            }
        }
        if (!assigned) {
            OrbitAcc grp{sol, images_of(sol, cfg.tol_orbit), {}, sol};
            grp.found.assign(grp.images.size(), false);
            grp.found[0] = true;  // the anchor is the identity image
            groups.push_back(std::move(grp));
        }
    }

    const double phi_scale = std::cbrt(hscale);
    const double psi_scale = std::sqrt(hscale);

    for (const auto& grp : groups) {
        GroupSolution rep = canonical_image(grp.best, cfg.tol_orbit);
        Orbit orb;
        orb.representative = to_solution(rep, phi_scale, psi_scale);
        orb.orbit_size = static_cast<int>(images_of(rep, cfg.tol_orbit).size());
        orb.members_found = static_cast<int>(std::count(grp.found.begin(), grp.found.end(), true));
        orb.members_found = std::min(orb.members_found, orb.orbit_size);
        report.orbits.push_back(std::move(orb));
    }

    std::sort(report.orbits.begin(), report.orbits.end(), [](const Orbit& a, const Orbit& b) {
        GroupSolution ga{a.representative.phi, a.representative.psi, 0};
        GroupSolution gb{b.representative.phi, b.representative.psi, 0};
        return canonical_key(ga) < canonical_key(gb);
    });

    for (const auto& s : suspects) report.suspect.push_back(to_solution(s, phi_scale, psi_scale));
    return report;
}

SolveReport solve(const CycForm& h, const SolverConfig& cfg) {
    if (h.degree() != kHDegree) throw DegreeMismatch("h must have degree 24");
    if (h.is_zero())
        throw ZeroForm("h == 0 admits the one-parameter family (phi, psi) = (-t^2, t^3)");
    return solve(embed(h), cfg);
}

ExperimentReport experiment_six_to_one(int trials, int coeff_bound, const SolverConfig& cfg) {
    if (trials < 1) throw Error("trials must be >= 1");
    if (coeff_bound < 1) throw Error("coeff_bound must be >= 1");
    cfg.validate();

    ExperimentReport rep;
    rep.trials = trials;

    for (int t = 0; t < trials; ++t) {
        Rng rng(mix64(cfg.seed, 0x7261696c ^ static_cast<std::uint64_t>(t)));
        CycForm f(kPhiDegree), g(kPsiDegree);
        for (int i = 0; i <= kPhiDegree; ++i) f[i] = CycRat(rng.uniform_int(-coeff_bound, coeff_bound));
        for (int i = 0; i <= kPsiDegree; ++i) g[i] = CycRat(rng.uniform_int(-coeff_bound, coeff_bound));

        CycForm h = forward(f, g);
        SolverConfig scfg = cfg;
        scfg.seed = mix64(cfg.seed, static_cast<std::uint64_t>(t));

        TrialOutcome oc;
        if (h.is_zero()) {
            rep.outcomes.push_back(oc);
            continue;
        }
        SolveReport sr = solve(h, scfg);

        oc.orbits = static_cast<int>(sr.orbits.size());
        Solution planted{embed(f), embed(g), 0.0};
        double best_match = std::numeric_limits<double>::infinity();
        const Orbit* matched = nullptr;
        for (const auto& orb : sr.orbits) {
            oc.residual = std::max(oc.residual, orb.representative.residual);
            double d = orbit_distance(orb.representative, planted);
            if (d < best_match) {
                best_match = d;
                matched = &orb;
            }
        }
        oc.best_match = best_match;
        oc.members = matched ? matched->members_found : 0;
        oc.success = (oc.orbits == 1 && oc.members == 6 && best_match <= 1e-6);
        if (oc.orbits > 1) ++rep.spurious_orbit_trials;
        rep.max_residual = std::max(rep.max_residual, oc.residual);
        if (oc.success) ++rep.successes;
        rep.outcomes.push_back(oc);
    }
    rep.success_rate = static_cast<double>(rep.successes) / static_cast<double>(trials);
    return rep;
}

}  // namespace cubesq
