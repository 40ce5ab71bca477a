#include "cubesq/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "cubesq/decompose.hpp"
#include "cubesq/elliptic.hpp"
#include "cubesq/lattice.hpp"
#include "cubesq/mordell.hpp"
#include "cubesq/text.hpp"

namespace cubesq {

namespace {

struct Runner {
    std::vector<FixtureResult> results;

    void add(const std::string& name, const std::function<bool(std::string&)>& fn) {
        FixtureResult r{name, false, ""};
        try {
            r.pass = fn(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

bool reps_equal(const std::vector<Representation>& got,
                const std::vector<std::pair<long, long>>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i].x != want[i].first || got[i].y != want[i].second) return false;
    return true;
}

std::string fmt_reps(const std::vector<Representation>& reps) {
    std::ostringstream os;
    for (const auto& r : reps) os << "(" << r.x << "," << r.y << ") ";
    return os.str();
}

}  // namespace

std::vector<FixtureResult> run_selftest(const SelftestOptions& opts) {
    Runner run;

    // --- integer representations ---------------------------------------
    run.add("mordell: 17 = 1^3+4^2 = 2^3+3^2", [](std::string& d) {
        auto reps = representations(17);
        d = fmt_reps(reps);
        return reps_equal(reps, {{1, 4}, {2, 3}});
    });
    run.add("mordell: 65 = 1^3+8^2 = 4^3+1^2", [](std::string& d) {
        auto reps = representations(65);
        d = fmt_reps(reps);
        return reps_equal(reps, {{1, 8}, {4, 1}});
    });
    run.add("mordell: 89 = 2^3+9^2 = 4^3+5^2", [](std::string& d) {
        auto reps = representations(89);
        d = fmt_reps(reps);
        return reps_equal(reps, {{2, 9}, {4, 5}});
    });
    run.add("mordell: 1025 four ways", [](std::string& d) {
        auto reps = representations(1025);
        d = fmt_reps(reps);
        return reps_equal(reps, {{1, 32}, {4, 31}, {5, 30}, {10, 5}});
    });
    run.add("mordell: smallest n with three representations = 1025", [](std::string& d) {
        auto n = min_with_reps(3, 2000);
        d = n ? n->get_str() : "none";
        return n && *n == 1025;
    });

    // --- intersection calculus ------------------------------------------
    PairingTable table = standard_pairing();
    GramLattice gram = GramLattice::standard();
    if (opts.corrupt_gram) {
        table[3][6] += 1;  // sigma2.sigma5
        table[6][3] += 1;
        gram.gram[0][1] += 1;
        gram.gram[1][0] += 1;
    }

    run.add("lattice: e.e = 0 and sigma1.sigma4 = deg g = 12", [&](std::string& d) {
        Rat ee = pair(DivisorClass::fiber(), DivisorClass::fiber(), table);
        Rat s14 = pair(DivisorClass::section(1), DivisorClass::section(4), table);
        d = "e.e=" + ee.str() + " sigma1.sigma4=" + s14.str();
        return ee == Rat(0) && s14 == Rat(12);
    });
    run.add("lattice: intersection relations of tau_1..tau_6", [&](std::string& d) {
        auto checks = verify_relations(table);
        int fails = 0;
        for (const auto& c : checks)
            if (!c.pass) {
                ++fails;
                d += c.name + "=" + c.value.str() + " ";
            }
        if (!fails) d = std::to_string(checks.size()) + " identities hold";
        return fails == 0;
    });
    run.add("lattice: norm -8 dual vectors are exactly the six tau classes", [&](std::string& d) {
        auto vecs = enumerate_norm_vectors(gram, Rat(-8));
        d = std::to_string(vecs.size()) + " vectors";
        std::vector<std::array<Rat, 2>> want = {{Rat(-1), Rat(-1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)},
                                                {Rat(0), Rat(1)},  {Rat(1), Rat(0)},  {Rat(1), Rat(1)}};
        return vecs == want;
    });

    // --- fibers and invariants --------------------------------------------
    run.add("fibers: h = z^24 + w^24 gives 24 type II fibers, Euler 48", [](std::string& d) {
        AuxSurface s(parse_form("z^24 + w^24", 24));
        auto fibers = classify_fibers(s);
        int ii = 0;
        for (const auto& f : fibers) ii += (f.type == FiberType::II) ? 1 : 0;
        int e = euler_total(fibers);
        d = std::to_string(fibers.size()) + " fibers, " + std::to_string(ii) + " of type II, Euler " +
            std::to_string(e);
        return fibers.size() == 24 && ii == 24 && e == 48;
    });
    run.add("fibers: degenerate pencil member has a type IV fiber at [1:0]", [](std::string& d) {
        Family fam = family(CycRat(2), CycRat(3));
        auto fibers = classify_fibers(AuxSurface(fam.h));
        bool iv_at_inf = false;
        for (const auto& f : fibers)
            if (f.location.at_infinity && f.type == FiberType::IV && f.ord_b == 2 && f.ord_delta == 4)
                iv_at_inf = true;
        int e = euler_total(fibers);
        d = "euler " + std::to_string(e) + ", betti2 " + std::to_string(betti2(e));
        return iv_at_inf && e == 48 && betti2(e) == 46;
    });
    run.add("invariants: chi(O(d)) = 3 for d^2 = -2, c2 = 48", [](std::string& d) {
        Rat chi = riemann_roch_chi(-2, 0, 0, 48);
        d = "chi = " + chi.str();
        return chi == Rat(3);
    });
    run.add("invariants: phi(33) = 20 and Picard bound 46 - 2*20 = 6", [](std::string& d) {
        long t = totient(33);
        int b = picard_bound_check();
        d = "phi(33)=" + std::to_string(t) + ", bound=" + std::to_string(b);
        return t == 20 && b == 6;
    });
    run.add("family: h = w^2(z^22 + 2b z^11 w^11 + (a^3+b^2) w^22) and root identities", [](std::string& d) {
        bool ok = true;
        for (long a = -3; a <= 3 && ok; ++a)
            for (long b = -3; b <= 3 && ok; ++b) {
                Family fam = family(CycRat(a), CycRat(b));
                ok = fam.verified;
                ComplexF sum = fam.a_prime + fam.b_prime;
                ComplexF prod = fam.a_prime * fam.b_prime;
                double as = static_cast<double>(a), bs = static_cast<double>(b);
                ok = ok && std::abs(sum - ComplexF(-2 * bs, 0)) < 1e-10 &&
                     std::abs(prod - ComplexF(as * as * as + bs * bs, 0)) < 1e-10;
            }
        d = "49 integer samples";
        return ok;
    });

    // --- decomposition ---------------------------------------------------
    run.add("forward: (z^8)^3 + (w^12)^2 = z^24 + w^24", [](std::string& d) {
        CycForm h = forward(parse_form("z^8", 8), parse_form("w^12", 12));
        d = to_text(h);
        return h == parse_form("z^24 + w^24", 24);
    });
    run.add("orbit: six distinct symmetry images of (z^8, w^12)", [](std::string& d) {
        auto pairs = orbit(parse_form("z^8", 8), parse_form("w^12", 12));
        d = std::to_string(pairs.size()) + " pairs";
        return pairs.size() == 6;
    });

    SolverConfig cfg;
    cfg.starts = opts.solver_starts;
    cfg.seed = opts.seed;
    cfg.threads = opts.threads;

    run.add("solve: h = f^3 + g^2 recovered as one orbit of six", [&](std::string& d) {
        CycForm f = parse_form("z^8", 8), g = parse_form("w^12", 12);
        SolveReport r = solve(forward(f, g), cfg);
        d = std::to_string(r.orbits.size()) + " orbits";
        if (r.orbits.size() != 1) return false;
        d += ", " + std::to_string(r.orbits[0].members_found) + " members";
        Solution planted{embed(f), embed(g), 0.0};
        return r.orbits[0].members_found == 6 &&
               orbit_distance(r.orbits[0].representative, planted) <= 1e-6;
    });
    run.add("solve: 4(uv)^3 + (uv(u-v))^2 = (uv(u+v))^2 is found both ways", [&](std::string& d) {
        // u = z^4 + w^4, v = z^4 - z w^3 + 2 w^4
        CycForm u = parse_form("z^4 + w^4", 4);
        CycForm v = parse_form("z^4 - z*w^3 + 2*w^4", 4);
        CycForm uv = u * v;
        CycForm psi0 = uv * (u + v);
        CycForm h = psi0 * psi0;
        SolveReport r = solve(h, cfg);
        d = std::to_string(r.orbits.size()) + " orbits";
        bool zero_phi = false, cbrt4_phi = false;
        CForm target = std::pow(4.0, 1.0 / 3.0) * ComplexF(1.0, 0.0) * embed(uv);
        for (const auto& orb : r.orbits) {
            if (orb.representative.residual > 1e-8) return false;
            if (orb.representative.phi.is_zero()) zero_phi = true;
            Solution alt{target, embed(uv * (u - v)), 0.0};
            if (orbit_distance(orb.representative, alt) <= 1e-6) cbrt4_phi = true;
        }
        d += zero_phi ? ", phi=0 found" : ", phi=0 missing";
        d += cbrt4_phi ? ", phi=cbrt(4)uv found" : ", phi=cbrt(4)uv missing";
        return zero_phi && cbrt4_phi;
    });

    return run.results;
}

}  // namespace cubesq
