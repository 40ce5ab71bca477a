#include <doctest.h>

#include <cmath>

#include "cubesq/decompose.hpp"
#include "cubesq/json_io.hpp"
#include "cubesq/rng.hpp"
#include "cubesq/text.hpp"
#include "support/oracles.hpp"

using namespace cubesq;

namespace {

CycForm random_int_form(Rng& rng, int degree, long bound) {
    CycForm f(degree);
    for (int i = 0; i <= degree; ++i) f[i] = CycRat(Rat(rng.uniform_int(-bound, bound)));
    return f;
}

SolverConfig quick_cfg(std::uint64_t seed, int starts = 60) {
    SolverConfig cfg;
    cfg.starts = starts;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("forward fixtures") {
    CHECK(forward(parse_form("z^8", 8), parse_form("w^12", 12)) == parse_form("z^24 + w^24"));
    CHECK_THROWS_AS(forward(parse_form("z^4", 4), parse_form("w^12", 12)), DegreeMismatch);

    Rng rng(59);
    CycForm f = random_int_form(rng, 8, 5), g = random_int_form(rng, 12, 5);
    CHECK(forward(CycRat::zeta3() * f, g) == forward(f, g));
    CHECK(forward(f, -g) == forward(f, g));

    // matches the degenerate pencil construction
    Family fam = family(CycRat(3), CycRat(-2));
    CHECK(forward(fam.f, fam.g) == fam.h);
}

TEST_CASE("orbit enumeration and degeneracies") {
    auto six = orbit(parse_form("z^8", 8), parse_form("w^12", 12));
    CHECK(six.size() == 6);
    auto two = orbit(CycForm(8), parse_form("w^12", 12));
    CHECK(two.size() == 2);
    auto three = orbit(parse_form("w^8", 8), CycForm(12));
    CHECK(three.size() == 3);
    auto one = orbit(CycForm(8), CycForm(12));
    CHECK(one.size() == 1);

    // every member reproduces the same h exactly
    Rng rng(61);
    CycForm f = random_int_form(rng, 8, 3), g = random_int_form(rng, 12, 3);
    CycForm h = forward(f, g);
    for (const auto& [phi, psi] : orbit(f, g)) CHECK(forward(phi, psi) == h);
}

TEST_CASE("verify exact and float") {
    CycForm f = parse_form("z^8 - w^8", 8), g = parse_form("z^12 + 2*w^12", 12);
    CycForm h = forward(f, g);
    auto [ok, res] = verify(h, f, g);
    CHECK(ok);
    CHECK(res == 0.0);

    auto [bad, res2] = verify(parse_form("z^24 + w^24"), parse_form("z^8", 8),
                              parse_form("z^12", 12));
    CHECK(!bad);
    CHECK(res2 > 0.1);

    auto [okf, res3] = verify(embed(h), embed(f), embed(g), 1e-8);
    CHECK(okf);
    CHECK(res3 < 1e-12);
}

TEST_CASE("analytic Jacobian matches central differences") {
    Rng rng(67);
    CForm h(24);
    for (int i = 0; i <= 24; ++i) h[i] = rng.complex_normal();
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXcd x(22);
        for (int i = 0; i < 22; ++i) x(i) = rng.complex_normal();
        Eigen::MatrixXd J = test::analytic_real_jacobian(x);
        Eigen::MatrixXd Jfd = test::fd_real_jacobian(x, h, 1e-6);
        double rel = (J - Jfd).norm() / Jfd.norm();
        CHECK(rel <= 1e-5);
    }
}

TEST_CASE("round trip on a planted decomposition") {
    Rng rng(71);
    CycForm f = random_int_form(rng, 8, 5), g = random_int_form(rng, 12, 5);
    CycForm h = forward(f, g);
    SolveReport r = solve(h, quick_cfg(1001, 120));
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits[0].orbit_size == 6);
    CHECK(r.orbits[0].members_found == 6);
    CHECK(r.orbits[0].representative.residual <= 1e-8);
    Solution planted{embed(f), embed(g), 0.0};
    CHECK(orbit_distance(r.orbits[0].representative, planted) <= 1e-6);

    // every regenerated member verifies, and the symmetry preserves the
    // residual to near machine precision
    const auto& rep = r.orbits[0].representative;
    CForm hf = embed(h);
    for (const auto& [phi, psi] : orbit(rep.phi, rep.psi)) {
        auto [ok, res] = verify(hf, phi, psi, 1e-8);
        CHECK(ok);
        CHECK(std::abs(res - rep.residual) <= 1e-12);
    }
}

TEST_CASE("pure powers expose the degenerate orbits") {
    SolveReport r = solve(parse_form("w^24", 24), quick_cfg(77, 40));
    bool cube = false, square = false;
    for (const auto& orb : r.orbits) {
        if (orb.representative.psi.is_zero() && orb.orbit_size == 3) {
            Solution want{embed(parse_form("w^8", 8)), CForm(12), 0.0};
            if (orbit_distance(orb.representative, want) <= 1e-6) cube = true;
        }
        if (orb.representative.phi.is_zero() && orb.orbit_size == 2) {
            Solution want{CForm(8), embed(parse_form("w^12", 12)), 0.0};
            if (orbit_distance(orb.representative, want) <= 1e-6) square = true;
        }
    }
    CHECK(cube);
    CHECK(square);
}

TEST_CASE("zero form is rejected with the reason") {
    CHECK_THROWS_AS(solve(CycForm(24), quick_cfg(1)), ZeroForm);
    CHECK_THROWS_AS(solve(CForm(24), quick_cfg(1)), ZeroForm);
}

TEST_CASE("scaling gauge: orbit count is invariant under h -> c h") {
    Rng rng(79);
    CycForm f = random_int_form(rng, 8, 3), g = random_int_form(rng, 12, 3);
    CForm h = embed(forward(f, g));
    std::size_t base = solve(h, quick_cfg(5, 80)).orbits.size();
    for (double c : {2.0, 10.0}) {
        CForm hc = ComplexF(c, 0.0) * h;
        SolveReport r = solve(hc, quick_cfg(5, 80));
        CHECK(r.orbits.size() == base);
        // a solution of c h rescales to a solution of h
        if (!r.orbits.empty()) {
            const auto& rep = r.orbits[0].representative;
            CForm back_phi = ComplexF(std::pow(c, -1.0 / 3.0), 0.0) * rep.phi;
            CForm back_psi = ComplexF(std::pow(c, -0.5), 0.0) * rep.psi;
            auto [ok, res] = verify(h, back_phi, back_psi, 1e-7);
            CHECK(ok);
        }
    }
}

TEST_CASE("identical seeds give identical serialized reports") {
    CycForm h = forward(parse_form("z^8 + 2*w^8", 8), parse_form("z^12 - w^12", 12));
    SolverConfig cfg = quick_cfg(424242, 50);
    cfg.threads = 1;
    std::string serial = to_json(solve(h, cfg)).dump();
    cfg.threads = 4;
    std::string parallel = to_json(solve(h, cfg)).dump();
    CHECK(serial == parallel);
    std::string again = to_json(solve(h, cfg)).dump();
    CHECK(parallel == again);
}

TEST_CASE("experiment tallies a planted recovery") {
    SolverConfig cfg = quick_cfg(31337, 120);
    ExperimentReport r = experiment_six_to_one(3, 5, cfg);
    CHECK(r.trials == 3);
    CHECK(r.successes >= 2);
    CHECK(r.max_residual <= 1e-8);
    CHECK(r.outcomes.size() == 3);
}

TEST_CASE("solver config is validated") {
    SolverConfig cfg;
    cfg.starts = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SolverConfig{};
    cfg.tol_accept = 1e-3;  // above tol_orbit
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SolverConfig{};
    cfg.tol_orbit = 2.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}
