// cubesq command-line tool: forward/inverse decomposition of degree-24
// binary forms as a cube plus a square, fiber classification, lattice
// enumeration, and the integer representation search.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubesq/decompose.hpp"
#include "cubesq/elliptic.hpp"
#include "cubesq/json_io.hpp"
#include "cubesq/lattice.hpp"
#include "cubesq/mordell.hpp"
#include "cubesq/selftest.hpp"
#include "cubesq/text.hpp"

namespace {

using namespace cubesq;

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_source(const std::string& arg) {
    if (arg == "-") return slurp(std::cin);
    if (arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0) {
        std::ifstream f(arg);
        if (!f) throw Error("cannot open file: " + arg);
        return slurp(f);
    }
    return arg;
}

bool looks_like_json(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

// ".json" files use the JSON encoding; anything else is an expression.
CycForm read_exact_form(const std::string& arg, std::optional<int> degree) {
    std::string src = read_source(arg);
    if (looks_like_json(src)) {
        CycForm f = cycform_from_json(Json::parse(src));
        if (degree && f.degree() != *degree)
            throw DegreeMismatch("form has degree " + std::to_string(f.degree()) + ", expected " +
                                 std::to_string(*degree));
        return f;
    }
    return parse_form(src, degree);
}

struct FormInput {
    bool exact;
    CycForm exact_form{0};
    CForm complex_form{0};
};

FormInput read_any_form(const std::string& arg, int degree) {
    std::string src = read_source(arg);
    if (looks_like_json(src)) {
        Json j = Json::parse(src);
        if (json_form_is_exact(j)) return {true, cycform_from_json(j), CForm(0)};
        CForm f = cform_from_json(j);
        if (f.degree() != degree)
            throw DegreeMismatch("form has degree " + std::to_string(f.degree()) + ", expected " +
                                 std::to_string(degree));
        return {false, CycForm(0), f};
    }
    return {true, parse_form(src, degree), CForm(0)};
}

void emit(const Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file: " + path);
    f << j.dump(2) << "\n";
}

std::string fmt_complex(const ComplexF& c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
    return buf;
}

std::string fmt_cform(const CForm& f) {
    std::string s = "[";
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) s += ", ";
        s += fmt_complex(f[i]);
    }
    return s + "]";
}

std::string fmt_point(const P1Point& p) {
    if (p.at_infinity) return "[1:0]";
    return "[" + fmt_complex(p.value) + ":1]";
}

std::string fmt_ord(const std::optional<int>& o) { return o ? std::to_string(*o) : "inf"; }

void print_fibers(const std::vector<KodairaFiber>& fibers) {
    for (const auto& fb : fibers) {
        std::printf("%-28s ord_A=%-4s ord_B=%-4s ord_Delta=%-4d type %-5s euler %d\n",
                    fmt_point(fb.location).c_str(), fmt_ord(fb.ord_a).c_str(),
                    fmt_ord(fb.ord_b).c_str(), fb.ord_delta,
                    fiber_type_name(fb.type, fb.n).c_str(), fb.euler);
    }
    int e = euler_total(fibers);
    std::printf("fibers: %zu, Euler total: %d", fibers.size(), e);
    if (e >= 2) std::printf(", b2: %d", betti2(e));
    std::printf("\n");
}

void print_solve_report(const SolveReport& r) {
    std::printf("orbits: %zu (starts converged %d/%d)\n", r.orbits.size(), r.starts_converged,
                r.starts_total);
    int idx = 0;
    for (const auto& o : r.orbits) {
        std::printf("orbit %d: size %d, members found %d, residual %.3e\n", ++idx, o.orbit_size,
                    o.members_found, o.representative.residual);
        std::printf("  phi = %s\n", fmt_cform(o.representative.phi).c_str());
        std::printf("  psi = %s\n", fmt_cform(o.representative.psi).c_str());
    }
    if (!r.suspect.empty())
        std::printf("suspect solutions (residual above accept tolerance): %zu\n", r.suspect.size());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numerical decomposition h = f^3 + g^2 for binary forms"};
    app.require_subcommand(1);
    // --h is a documented option on several subcommands, so help is --help only
    app.set_help_flag("--help", "print help");
    app.set_help_all_flag("--help-all", "print help for all subcommands");

    std::uint64_t seed = 0;
    int threads = 0;
    app.add_option("--seed", seed, "RNG seed (env CUBESQ_SEED)")->envname("CUBESQ_SEED");
    app.add_option("--threads", threads, "max worker threads (0 = hardware)");

    int exit_code = 0;

    // ---- forward ----
    auto* fwd = app.add_subcommand("forward", "h = f^3 + g^2 exactly");
    std::string fwd_f, fwd_g, fwd_json;
    fwd->add_option("--f", fwd_f, "degree-8 form (expression or .json)")->required();
    fwd->add_option("--g", fwd_g, "degree-12 form (expression or .json)")->required();
    auto* fwd_j = fwd->add_option("--json", fwd_json, "JSON output (optionally to a file)")->expected(0, 1);
    fwd->callback([&] {
        CycForm h = forward(read_exact_form(fwd_f, 8), read_exact_form(fwd_g, 12));
        if (fwd_j->count()) emit(to_json(h), fwd_json);
        else std::cout << to_text(h) << "\n";
    });

    // ---- decompose ----
    auto* dec = app.add_subcommand("decompose", "find all decompositions of a degree-24 form");
    std::string dec_h, dec_json;
    SolverConfig dec_cfg;
    dec->add_option("--h", dec_h, "degree-24 form (expression or .json)")->required();
    dec->add_option("--starts", dec_cfg.starts, "random multi-starts");
    dec->add_option("--max-iters", dec_cfg.max_iters, "LM iteration cap per start");
    dec->add_option("--tol-accept", dec_cfg.tol_accept, "accept residual");
    dec->add_option("--tol-orbit", dec_cfg.tol_orbit, "orbit grouping tolerance");
    dec->add_option("--damping", dec_cfg.damping, "initial Levenberg parameter");
    dec->add_flag("--no-subspace-starts", "disable the pure-cube / pure-square seeds")
        ->group("");
    auto* dec_j = dec->add_option("--json", dec_json, "JSON output (optionally to a file)")->expected(0, 1);
    dec->callback([&] {
        dec_cfg.seed = seed;
        dec_cfg.threads = threads;
        dec_cfg.subspace_starts = dec->count("--no-subspace-starts") == 0;
        FormInput in = read_any_form(dec_h, 24);
        SolveReport r = in.exact ? solve(in.exact_form, dec_cfg) : solve(in.complex_form, dec_cfg);
        if (dec_j->count()) emit(to_json(r), dec_json);
        else print_solve_report(r);
    });

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "planted round-trip recovery statistics");
    int exp_trials = 50, exp_bound = 5;
    std::string exp_json;
    SolverConfig exp_cfg;
    exp->add_option("--trials", exp_trials, "number of trials");
    exp->add_option("--coeff-bound", exp_bound, "integer coefficient bound");
    exp->add_option("--starts", exp_cfg.starts, "random multi-starts per trial");
    exp->add_option("--max-iters", exp_cfg.max_iters, "LM iteration cap per start");
    auto* exp_j = exp->add_option("--json", exp_json, "JSON output (optionally to a file)")->expected(0, 1);
    exp->callback([&] {
        exp_cfg.seed = seed;
        exp_cfg.threads = threads;
        ExperimentReport r = experiment_six_to_one(exp_trials, exp_bound, exp_cfg);
        if (exp_j->count()) emit(to_json(r), exp_json);
        else
            std::printf("trials %d, successes %d (rate %.3f), max residual %.3e, spurious-orbit trials %d\n",
                        r.trials, r.successes, r.success_rate, r.max_residual,
                        r.spurious_orbit_trials);
    });

    // ---- fibers ----
    auto* fib = app.add_subcommand("fibers", "Kodaira classification of singular fibers");
    std::string fib_g8, fib_g12, fib_h, fib_json;
    fib->add_option("--g8", fib_g8, "degree-8 form of y^2 = 4x^3 - g8 x - g12");
    fib->add_option("--g12", fib_g12, "degree-12 form of y^2 = 4x^3 - g8 x - g12");
    fib->add_option("--h", fib_h, "degree-24 form of y^2 = -x^3 + h");
    auto* fib_j = fib->add_option("--json", fib_json, "JSON output (optionally to a file)")->expected(0, 1);
    fib->callback([&] {
        std::vector<KodairaFiber> fibers;
        if (!fib_h.empty()) {
            if (!fib_g8.empty() || !fib_g12.empty())
                throw Error("give either --h or the pair --g8/--g12, not both");
            fibers = classify_fibers(AuxSurface(read_exact_form(fib_h, 24)));
        } else if (!fib_g8.empty() && !fib_g12.empty()) {
            fibers = classify_fibers(
                WeierstrassK3(read_exact_form(fib_g8, 8), read_exact_form(fib_g12, 12)));
        } else {
            throw Error("give either --h or the pair --g8/--g12");
        }
        if (fib_j->count()) emit(to_json(fibers), fib_json);
        else print_fibers(fibers);
    });

    // ---- lattice ----
    auto* lat = app.add_subcommand("lattice", "dual-lattice vectors of a given norm");
    std::string lat_norm = "-8", lat_json;
    std::vector<long> lat_gram;
    lat->add_option("--norm", lat_norm, "target self-pairing (rational, e.g. -8 or -8/3)");
    lat->add_option("--gram", lat_gram, "Gram matrix entries g11 g12 g21 g22")->expected(4);
    auto* lat_j = lat->add_option("--json", lat_json, "JSON output (optionally to a file)")->expected(0, 1);
    lat->callback([&] {
        GramLattice L = GramLattice::standard();
        if (!lat_gram.empty())
            L = GramLattice::of(lat_gram[0], lat_gram[1], lat_gram[2], lat_gram[3]);
        Rat norm = rat_from_string(lat_norm);
        auto vecs = enumerate_norm_vectors(L, norm);
        if (lat_j->count()) emit(to_json(L, norm, vecs), lat_json);
        else {
            std::printf("%zu vectors with self-pairing %s:\n", vecs.size(), norm.str().c_str());
            for (const auto& v : vecs)
                std::printf("  (%s, %s)\n", v[0].str().c_str(), v[1].str().c_str());
        }
    });

    // ---- family ----
    auto* fam_cmd = app.add_subcommand("family", "the degenerate pencil f = a w^8, g = w(z^11 + b w^11)");
    std::string fam_a = "1", fam_b = "0", fam_json;
    fam_cmd->add_option("--a", fam_a, "scalar a (rational or a+b*zeta3)");
    fam_cmd->add_option("--b", fam_b, "scalar b");
    auto* fam_j = fam_cmd->add_option("--json", fam_json, "JSON output (optionally to a file)")->expected(0, 1);
    fam_cmd->callback([&] {
        CycRat a = parse_form(fam_a, 0)[0];
        CycRat b = parse_form(fam_b, 0)[0];
        Family fam = family(a, b);
        if (fam_j->count()) emit(to_json(fam), fam_json);
        else {
            std::cout << "f = " << to_text(fam.f) << "\n";
            std::cout << "g = " << to_text(fam.g) << "\n";
            std::cout << "h = " << to_text(fam.h) << "\n";
            std::cout << "a' = " << fmt_complex(fam.a_prime) << ", b' = " << fmt_complex(fam.b_prime)
                      << "\n";
            std::cout << "factored identity verified: " << (fam.verified ? "yes" : "no") << "\n";
        }
    });

    // ---- mordell ----
    auto* mor = app.add_subcommand("mordell", "integer representations n = x^3 + y^2");
    mor->require_subcommand(1);
    bool mor_zero = false;
    mor->add_flag("--allow-zero", mor_zero, "allow x = 0 or y = 0");

    auto* mor_reps = mor->add_subcommand("reps", "list representations of n");
    std::string mor_n, mor_reps_json;
    mor_reps->add_option("--n", mor_n, "positive integer")->required();
    auto* mor_reps_j =
        mor_reps->add_option("--json", mor_reps_json, "JSON output (optionally to a file)")->expected(0, 1);
    mor_reps->callback([&] {
        mpz_class n;
        if (n.set_str(mor_n, 10) != 0) throw Error("invalid integer: " + mor_n);
        auto reps = representations(n, mor_zero);
        if (mor_reps_j->count()) {
            emit(Json{{"n", n.get_str()}, {"count", reps.size()}, {"representations", to_json(reps)}},
                 mor_reps_json);
        } else {
            for (const auto& r : reps)
                std::cout << r.x.get_str() << "^3 + " << r.y.get_str() << "^2 = " << n.get_str()
                          << "\n";
            std::cout << reps.size() << " representation(s)\n";
        }
    });

    auto* mor_min = mor->add_subcommand("min", "smallest n <= limit with k representations");
    int mor_k = 3;
    std::string mor_limit = "2000", mor_min_json;
    mor_min->add_option("--k", mor_k, "representation count")->required();
    mor_min->add_option("--limit", mor_limit, "search bound")->required();
    auto* mor_min_j =
        mor_min->add_option("--json", mor_min_json, "JSON output (optionally to a file)")->expected(0, 1);
    mor_min->callback([&] {
        mpz_class limit;
        if (limit.set_str(mor_limit, 10) != 0) throw Error("invalid integer: " + mor_limit);
        auto n = min_with_reps(mor_k, limit, mor_zero);
        if (mor_min_j->count()) {
            Json j{{"k", mor_k}, {"limit", limit.get_str()}};
            j["n"] = n ? Json(n->get_str()) : Json(nullptr);
            if (n) j["representations"] = to_json(representations(*n, mor_zero));
            emit(j, mor_min_json);
        } else if (n) {
            std::cout << n->get_str() << "\n";
        } else {
            std::cout << "none\n";
            exit_code = 1;
        }
    });

    // ---- selftest ----
    auto* st = app.add_subcommand("selftest", "run the bundled reference fixtures");
    std::string st_json;
    SelftestOptions st_opts;
    st->add_option("--starts", st_opts.solver_starts, "multi-starts for the solver fixtures");
    st->add_flag("--corrupt-gram", st_opts.corrupt_gram)->group("");  // negative-control hook
    auto* st_j = st->add_option("--json", st_json, "JSON output (optionally to a file)")->expected(0, 1);
    st->callback([&] {
        st_opts.seed = seed;
        st_opts.threads = threads;
        auto results = run_selftest(st_opts);
        int failed = 0;
        if (st_j->count()) {
            Json arr = Json::array();
            for (const auto& r : results) {
                arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                failed += r.pass ? 0 : 1;
            }
            emit(Json{{"fixtures", std::move(arr)}, {"failed", failed}}, st_json);
        } else {
            for (const auto& r : results) {
                std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                            r.detail.empty() ? "" : " -- ", r.detail.c_str());
                failed += r.pass ? 0 : 1;
            }
            std::printf("%zu fixtures, %d failed\n", results.size(), failed);
        }
        if (failed) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly, usage errors map to 2
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
