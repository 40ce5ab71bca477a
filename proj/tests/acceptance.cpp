// Acceptance suite: runs each headline requirement at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cubesq/decompose.hpp"
#include "cubesq/elliptic.hpp"
#include "cubesq/json_io.hpp"
#include "cubesq/lattice.hpp"
#include "cubesq/mordell.hpp"
#include "cubesq/rng.hpp"
#include "cubesq/text.hpp"
#include "support/oracles.hpp"

using namespace cubesq;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;  // 0 = no budget
    std::function<bool(std::string&)> fn;
};

bool reps_equal(const std::vector<Representation>& got,
                const std::vector<std::pair<long, long>>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i].x != want[i].first || got[i].y != want[i].second) return false;
    return true;
}

constexpr std::uint64_t kSeed = 20240817;

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1. integer representation fixtures (17, 65, 89, 1025; min 3-way = 1025)", 1.0,
                        [](std::string& d) {
                            bool ok = reps_equal(representations(17), {{1, 4}, {2, 3}});
                            ok = ok && reps_equal(representations(65), {{1, 8}, {4, 1}});
                            ok = ok && reps_equal(representations(89), {{2, 9}, {4, 5}});
                            auto r1025 = representations(1025);
                            ok = ok && reps_equal(r1025, {{1, 32}, {4, 31}, {5, 30}, {10, 5}});
                            auto m = min_with_reps(3, 2000);
                            ok = ok && m.has_value() && *m == 1025;
                            d = "min(3,2000) = " + (m ? m->get_str() : std::string("none"));
                            return ok;
                        }});

    criteria.push_back({"2. dual-lattice enumeration matches the brute-force oracle", 1.0,
                        [](std::string& d) {
                            GramLattice L = GramLattice::standard();
                            auto got = enumerate_norm_vectors(L, Rat(-8));
                            std::vector<std::array<Rat, 2>> want = {
                                {Rat(-1), Rat(-1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)},
                                {Rat(0), Rat(1)},   {Rat(1), Rat(0)},  {Rat(1), Rat(1)}};
                            bool ok = got.size() == 6 && got == want;
                            ok = ok && got == test::brute_force_norm_vectors(L, Rat(-8), 16);
                            for (long n = 2; n <= 12 && ok; ++n)
                                ok = enumerate_norm_vectors(L, Rat(-n)) ==
                                     test::brute_force_norm_vectors(L, Rat(-n));
                            d = "norm -8 has exactly 6 vectors; oracle agrees on norms -2..-12";
                            return ok;
                        }});

    criteria.push_back({"3. intersection calculus identities", 0.0, [](std::string& d) {
                            bool ok = true;
                            for (int i = 1; i <= 6; ++i) {
                                ok = ok && pair(tau(i), tau(i)) == Rat(-8);
                                ok = ok && pair(tau(i), DivisorClass::fiber()) == Rat(0);
                                ok = ok && pair(tau(i), DivisorClass::section(0)) == Rat(0);
                            }
                            ok = ok && pair(tau(1), tau(2)) == Rat(4);
                            DivisorClass a = tau(1) + tau(4);
                            DivisorClass b = tau(1) + tau(2) + tau(3);
                            ok = ok && pair(a, a) == Rat(0) && pair(b, b) == Rat(0);
                            d = "tau_i^2 = -8, tau_1.tau_2 = 4, null combinations vanish";
                            return ok;
                        }});

    criteria.push_back({"4. Kodaira fiber classification (aux, pencil member, K3)", 5.0,
                        [](std::string& d) {
                            auto aux = classify_fibers(AuxSurface(parse_form("z^24 + w^24", 24)));
                            int ii = 0;
                            for (const auto& f : aux) ii += f.type == FiberType::II;
                            bool ok = aux.size() == 24 && ii == 24 && euler_total(aux) == 48;

                            auto fam = classify_fibers(AuxSurface(family(CycRat(2), CycRat(3)).h));
                            bool iv = !fam.empty() && fam.front().location.at_infinity &&
                                      fam.front().type == FiberType::IV;
                            int ii2 = 0;
                            for (const auto& f : fam) ii2 += f.type == FiberType::II;
                            ok = ok && iv && ii2 == 22 && euler_total(fam) == 48 &&
                                 betti2(euler_total(fam)) == 46;

                            auto k3 = classify_fibers(WeierstrassK3(
                                parse_form("z^8 + w^8", 8),
                                parse_form("z^12 + z*w^11 + 2*w^12", 12)));
                            int i1 = 0;
                            for (const auto& f : k3) i1 += f.type == FiberType::In && f.n == 1;
                            ok = ok && k3.size() == 24 && i1 == 24 && euler_total(k3) == 24;
                            d = "aux: 24xII e=48; pencil: IV@[1:0]+22xII e=48 b2=46; K3: 24xI1 e=24";
                            return ok;
                        }});

    criteria.push_back({"5. invariant arithmetic (chi = 3, phi(33) = 20, bound = 6)", 0.0,
                        [](std::string& d) {
                            bool ok = riemann_roch_chi(-2, 0, 0, 48) == Rat(3);
                            ok = ok && totient(33) == 20 && picard_bound_check() == 6;
                            d = "chi(-2,0,0,48) = 3, 46 - 2*phi(33) = 6";
                            return ok;
                        }});

    criteria.push_back(
        {"6. forward-inverse round trip: 50 trials, one orbit of six, no spurious orbits", 600.0,
         [](std::string& d) {
             SolverConfig cfg;
             cfg.starts = 200;
             cfg.seed = kSeed;
             ExperimentReport r = experiment_six_to_one(50, 5, cfg);
             char buf[160];
             std::snprintf(buf, sizeof buf,
                           "success %d/%d (%.1f%%), max residual %.2e, spurious-orbit trials %d",
                           r.successes, r.trials, 100.0 * r.success_rate, r.max_residual,
                           r.spurious_orbit_trials);
             d = buf;
             return r.success_rate >= 0.95 && r.spurious_orbit_trials == 0;
         }});

    criteria.push_back(
        {"7. non-uniqueness fixtures: (uv(u+v))^2 both ways, w^24 both pure powers", 120.0,
         [](std::string& d) {
             SolverConfig cfg;
             cfg.starts = 200;
             cfg.seed = kSeed + 1;

             CycForm u = parse_form("z^4 + w^4", 4);
             CycForm v = parse_form("z^4 - z*w^3 + 2*w^4", 4);
             CycForm uv = u * v;
             CycForm psi0 = uv * (u + v);
             SolveReport r = solve(psi0 * psi0, cfg);
             bool zero_phi = false, cbrt_phi = false;
             CForm target = ComplexF(std::cbrt(4.0), 0.0) * embed(uv);
             Solution alt{target, embed(uv * (u - v)), 0.0};
             for (const auto& orb : r.orbits) {
                 if (orb.representative.residual > 1e-8) continue;
                 if (orb.representative.phi.is_zero()) zero_phi = true;
                 if (orbit_distance(orb.representative, alt) <= 1e-6) cbrt_phi = true;
             }

             SolveReport rw = solve(parse_form("w^24", 24), cfg);
             bool cube = false, square = false;
             Solution pure_cube{embed(parse_form("w^8", 8)), CForm(12), 0.0};
             Solution pure_square{CForm(8), embed(parse_form("w^12", 12)), 0.0};
             for (const auto& orb : rw.orbits) {
                 if (orb.representative.residual > 1e-8) continue;
                 if (orbit_distance(orb.representative, pure_cube) <= 1e-6) cube = true;
                 if (orbit_distance(orb.representative, pure_square) <= 1e-6) square = true;
             }
             char buf[160];
             std::snprintf(buf, sizeof buf,
                           "(uv(u+v))^2: %zu orbits [phi=0 %s, phi=cbrt(4)uv %s]; w^24: %zu orbits "
                           "[cube %s, square %s]",
                           r.orbits.size(), zero_phi ? "yes" : "no", cbrt_phi ? "yes" : "no",
                           rw.orbits.size(), cube ? "yes" : "no", square ? "yes" : "no");
             d = buf;
             return r.orbits.size() >= 2 && zero_phi && cbrt_phi && cube && square;
         }});

    criteria.push_back({"8. pencil identity and root relations for 100 random parameters", 10.0,
                        [](std::string& d) {
                            Rng rng(kSeed + 2);
                            bool ok = true;
                            for (int t = 0; t < 100 && ok; ++t) {
                                CycRat a(Rat(rng.uniform_int(-10, 10)));
                                CycRat b(Rat(rng.uniform_int(-10, 10)));
                                Family fam = family(a, b);
                                ok = fam.verified;
                                double av = a.embed().real(), bv = b.embed().real();
                                double sum_err = std::abs(fam.a_prime + fam.b_prime -
                                                          ComplexF(-2 * bv, 0));
                                double prod_err = std::abs(fam.a_prime * fam.b_prime -
                                                           ComplexF(av * av * av + bv * bv, 0));
                                ok = ok && sum_err <= 1e-10 * (1 + std::abs(2 * bv)) &&
                                     prod_err <= 1e-10 * (1 + std::abs(av * av * av + bv * bv));
                            }
                            d = "exact expanded identity and a'+b' = -2b, a'b' = a^3+b^2";
                            return ok;
                        }});

    criteria.push_back(
        {"9. numerics hygiene: Jacobian vs central differences, byte-stable reports", 120.0,
         [](std::string& d) {
             Rng rng(kSeed + 3);
             CForm h(24);
             for (int i = 0; i <= 24; ++i) h[i] = rng.complex_normal();
             bool ok = true;
             double worst = 0.0;
             for (int t = 0; t < 20; ++t) {
                 Eigen::VectorXcd x(22);
                 for (int i = 0; i < 22; ++i) x(i) = rng.complex_normal();
                 Eigen::MatrixXd J = test::analytic_real_jacobian(x);
                 Eigen::MatrixXd Jfd = test::fd_real_jacobian(x, h, 1e-6);
                 double rel = (J - Jfd).norm() / Jfd.norm();
                 worst = std::max(worst, rel);
                 ok = ok && rel <= 1e-5;
             }

             CycForm hh = forward(parse_form("z^8 - 3*w^8", 8), parse_form("z^12 + w^12", 12));
             SolverConfig cfg;
             cfg.starts = 80;
             cfg.seed = kSeed + 4;
             cfg.threads = 1;
             std::string serial = to_json(solve(hh, cfg)).dump();
             std::string serial2 = to_json(solve(hh, cfg)).dump();
             cfg.threads = 4;
             std::string parallel = to_json(solve(hh, cfg)).dump();
             ok = ok && serial == serial2 && serial == parallel;
             char buf[96];
             std::snprintf(buf, sizeof buf, "max Jacobian deviation %.2e; reports byte-identical",
                           worst);
             d = buf;
             return ok;
         }});

    int failed = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
            ok = false;
            detail += " [over time budget]";
        }
        std::printf("[%s] %s (%.2fs) -- %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                    detail.c_str());
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed;
}
