// pybind11 surface for the cubesq core: exact forward construction, the
// multi-start inverse solver, fiber classification, lattice enumeration,
// and the integer representation search.  Forms cross the boundary as
// expression strings or (degree, coeffs) pairs; reports come back as plain
// dicts mirroring the CLI JSON schemas.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubesq/decompose.hpp"
#include "cubesq/elliptic.hpp"
#include "cubesq/json_io.hpp"
#include "cubesq/lattice.hpp"
#include "cubesq/mordell.hpp"
#include "cubesq/selftest.hpp"
#include "cubesq/text.hpp"

namespace py = pybind11;
using namespace cubesq;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

CForm cform_from_obj(const py::object& obj, int degree) {
    if (py::isinstance<py::str>(obj)) return embed(parse_form(obj.cast<std::string>(), degree));
    auto coeffs = obj.cast<std::vector<ComplexF>>();
    if (static_cast<int>(coeffs.size()) != degree + 1)
        throw Error("expected " + std::to_string(degree + 1) + " coefficients");
    return CForm(degree, std::move(coeffs));
}

SolverConfig make_config(int starts, int max_iters, double tol_accept, double tol_orbit,
                         std::uint64_t seed, double damping, int threads) {
    SolverConfig cfg;
    cfg.starts = starts;
    cfg.max_iters = max_iters;
    cfg.tol_accept = tol_accept;
    cfg.tol_orbit = tol_orbit;
    cfg.seed = seed;
    cfg.damping = damping;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_cubesq, m) {
    m.doc() = "decomposition h = f^3 + g^2 for binary forms, with the surrounding "
              "fiber/lattice/integer machinery";

    py::register_exception<Error>(m, "CubesqError");

    m.def(
        "forward",
        [](const std::string& f, const std::string& g) {
            return to_text(forward(parse_form(f, 8), parse_form(g, 12)));
        },
        py::arg("f"), py::arg("g"),
        "Exact h = f^3 + g^2 from degree-8 and degree-12 expressions.");

    m.def(
        "forward_json",
        [](const std::string& f, const std::string& g) {
            return json_to_py(to_json(forward(parse_form(f, 8), parse_form(g, 12))));
        },
        py::arg("f"), py::arg("g"));

    m.def(
        "parse",
        [](const std::string& text, std::optional<int> degree) {
            return json_to_py(to_json(parse_form(text, degree)));
        },
        py::arg("text"), py::arg("degree") = std::nullopt,
        "Parse an expression into the exact JSON form encoding.");

    m.def(
        "solve",
        [](const py::object& h, int starts, int max_iters, double tol_accept, double tol_orbit,
           std::uint64_t seed, double damping, int threads) {
            SolverConfig cfg =
                make_config(starts, max_iters, tol_accept, tol_orbit, seed, damping, threads);
            SolveReport r;
            if (py::isinstance<py::str>(h)) r = solve(parse_form(h.cast<std::string>(), 24), cfg);
            else r = solve(cform_from_obj(h, 24), cfg);
            return json_to_py(to_json(r));
        },
        py::arg("h"), py::arg("starts") = 200, py::arg("max_iters") = 200,
        py::arg("tol_accept") = 1e-8, py::arg("tol_orbit") = 1e-4, py::arg("seed") = 0,
        py::arg("damping") = 1e-3, py::arg("threads") = 0,
        "Multi-start inversion of h = phi^3 + psi^2; returns the orbit report dict.");

    m.def(
        "verify",
        [](const py::object& h, const py::object& phi, const py::object& psi, double tol) {
            auto [ok, res] = verify(cform_from_obj(h, 24), cform_from_obj(phi, 8),
                                    cform_from_obj(psi, 12), tol);
            return py::make_tuple(ok, res);
        },
        py::arg("h"), py::arg("phi"), py::arg("psi"), py::arg("tol") = 1e-8);

    m.def(
        "experiment",
        [](int trials, int coeff_bound, int starts, std::uint64_t seed, int threads) {
            SolverConfig cfg;
            cfg.starts = starts;
            cfg.seed = seed;
            cfg.threads = threads;
            return json_to_py(to_json(experiment_six_to_one(trials, coeff_bound, cfg)));
        },
        py::arg("trials"), py::arg("coeff_bound") = 5, py::arg("starts") = 200,
        py::arg("seed") = 0, py::arg("threads") = 0);

    m.def(
        "fibers",
        [](std::optional<std::string> h, std::optional<std::string> g8,
           std::optional<std::string> g12) {
            std::vector<KodairaFiber> fibers;
            if (h) fibers = classify_fibers(AuxSurface(parse_form(*h, 24)));
            else if (g8 && g12)
                fibers = classify_fibers(WeierstrassK3(parse_form(*g8, 8), parse_form(*g12, 12)));
            else throw Error("give either h or the pair (g8, g12)");
            return json_to_py(to_json(fibers));
        },
        py::arg("h") = std::nullopt, py::arg("g8") = std::nullopt, py::arg("g12") = std::nullopt,
        "Kodaira fiber classification for y^2 = -x^3 + h or y^2 = 4x^3 - g8 x - g12.");

    m.def("euler_total", [](const std::string& h) {
        return euler_total(classify_fibers(AuxSurface(parse_form(h, 24))));
    });
    m.def("betti2", &betti2, py::arg("euler_total"));
    m.def(
        "riemann_roch_chi",
        [](long d_sq, long d_dot_K, long K_sq, long c2) {
            return riemann_roch_chi(d_sq, d_dot_K, K_sq, c2).str();
        },
        py::arg("d_sq"), py::arg("d_dot_K"), py::arg("K_sq"), py::arg("c2"));
    m.def("totient", &totient, py::arg("n"));
    m.def("picard_bound_check", &picard_bound_check);

    m.def(
        "family",
        [](const std::string& a, const std::string& b) {
            return json_to_py(to_json(family(parse_form(a, 0)[0], parse_form(b, 0)[0])));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "lattice_vectors",
        [](const std::string& norm, std::optional<std::array<std::array<long, 2>, 2>> gram) {
            GramLattice L = GramLattice::standard();
            if (gram) L.gram = *gram;
            Rat q = rat_from_string(norm);
            return json_to_py(to_json(L, q, enumerate_norm_vectors(L, q)));
        },
        py::arg("norm") = "-8", py::arg("gram") = std::nullopt,
        "Dual-lattice vectors of the given self-pairing, exact rationals as p/q strings.");

    m.def("verify_relations", [] {
        return json_to_py(to_json(verify_relations()));
    });

    m.def(
        "mordell_representations",
        [](const std::string& n, bool allow_zero) {
            mpz_class v;
            if (v.set_str(n, 10) != 0) throw Error("invalid integer: " + n);
            py::list out;
            for (const auto& r : representations(v, allow_zero))
                out.append(py::make_tuple(py::int_(py::str(r.x.get_str())),
                                          py::int_(py::str(r.y.get_str()))));
            return out;
        },
        py::arg("n"), py::arg("allow_zero") = false);

    m.def(
        "mordell_min_with_reps",
        [](int k, const std::string& limit, bool allow_zero) -> py::object {
            mpz_class v;
            if (v.set_str(limit, 10) != 0) throw Error("invalid integer: " + limit);
            auto n = min_with_reps(k, v, allow_zero);
            if (!n) return py::none();
            return py::int_(py::str(n->get_str()));
        },
        py::arg("k"), py::arg("limit"), py::arg("allow_zero") = false);

    m.def(
        "selftest",
        [](int starts, std::uint64_t seed) {
            SelftestOptions opts;
            opts.solver_starts = starts;
            opts.seed = seed;
            py::list out;
            for (const auto& r : run_selftest(opts))
                out.append(py::dict(py::arg("name") = r.name, py::arg("pass") = r.pass,
                                    py::arg("detail") = r.detail));
            return out;
        },
        py::arg("starts") = 80, py::arg("seed") = 0);
}
