#include "cubesq/json_io.hpp"

#include "cubesq/text.hpp"

namespace cubesq {

namespace {

Json complex_to_json(const ComplexF& c) { return Json::array({c.real(), c.imag()}); }

ComplexF complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json point_to_json(const P1Point& p) {
    if (p.at_infinity) return Json::array({Json::array({1.0, 0.0}), Json::array({0.0, 0.0})});
    return Json::array({complex_to_json(p.value), Json::array({1.0, 0.0})});
}

Json ord_to_json(const std::optional<int>& o) {
    if (!o) return Json("inf");
    return Json(*o);
}

}  // namespace

Json to_json(const CycForm& f) {
    Json coeffs = Json::array();
    for (const CycRat& c : f.coeffs())
        coeffs.push_back(Json::array({c.a().num().get_str(), c.a().den().get_str(),
                                      c.b().num().get_str(), c.b().den().get_str()}));
    return Json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const CForm& f) {
    Json coeffs = Json::array();
    for (const ComplexF& c : f.coeffs()) coeffs.push_back(complex_to_json(c));
    return Json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

bool json_form_is_exact(const Json& j) {
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty()) throw Error("missing coeffs array");
    const Json& c = coeffs.front();
    return c.is_array() && c.size() == 4;
}

CycForm cycform_from_json(const Json& j) {
    int d = j.at("degree").get<int>();
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != d + 1)
        throw Error("coefficient count does not match degree");
    CycForm f(d);
    for (int i = 0; i <= d; ++i) {
        const Json& c = coeffs[static_cast<std::size_t>(i)];
        if (!c.is_array() || c.size() != 4) throw Error("expected [a_num, a_den, b_num, b_den]");
        f[i] = CycRat(Rat::from_strings(c[0].get<std::string>(), c[1].get<std::string>()),
                      Rat::from_strings(c[2].get<std::string>(), c[3].get<std::string>()));
    }
    return f;
}

CForm cform_from_json(const Json& j) {
    int d = j.at("degree").get<int>();
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != d + 1)
        throw Error("coefficient count does not match degree");
    CForm f(d);
    for (int i = 0; i <= d; ++i) f[i] = complex_from_json(coeffs[static_cast<std::size_t>(i)]);
    return f;
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(s, 10) != 0) throw Error("invalid rational: " + s);
        return Rat(std::move(n), mpz_class(1));
    }
    mpz_class n, d;
    if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
        throw Error("invalid rational: " + s);
    if (d <= 0) throw Error("denominator must be positive: " + s);
    return Rat(std::move(n), std::move(d));
}

Json to_json(const std::vector<KodairaFiber>& fibers) {
    Json arr = Json::array();
    for (const auto& fb : fibers) {
        arr.push_back(Json{{"location", point_to_json(fb.location)},
                           {"ord_A", ord_to_json(fb.ord_a)},
                           {"ord_B", ord_to_json(fb.ord_b)},
                           {"ord_Delta", fb.ord_delta},
                           {"type", fiber_type_name(fb.type, fb.n)},
                           {"euler", fb.euler}});
    }
    return arr;
}

Json to_json(const GramLattice& L, const Rat& norm, const std::vector<std::array<Rat, 2>>& vectors) {
    Json vecs = Json::array();
    for (const auto& v : vectors) vecs.push_back(Json::array({v[0].str(), v[1].str()}));
    return Json{{"gram", Json::array({Json::array({L.gram[0][0], L.gram[0][1]}),
                                      Json::array({L.gram[1][0], L.gram[1][1]})})},
                {"norm", norm.str()},
                {"vectors", std::move(vecs)}};
}

namespace {

Json solution_to_json(const Solution& s) {
    return Json{{"phi", to_json(s.phi)["coeffs"]},
                {"psi", to_json(s.psi)["coeffs"]},
                {"residual", s.residual}};
}

}  // namespace

Json to_json(const SolveReport& r) {
    Json orbits = Json::array();
    for (const auto& o : r.orbits) {
        Json j = Json{{"size", o.orbit_size}};
        Json sol = solution_to_json(o.representative);
        j["phi"] = sol["phi"];
        j["psi"] = sol["psi"];
        j["residual"] = sol["residual"];
        j["members_found"] = o.members_found;
        orbits.push_back(std::move(j));
    }
    Json suspect = Json::array();
    for (const auto& s : r.suspect) suspect.push_back(solution_to_json(s));
    return Json{{"orbits", std::move(orbits)},
                {"suspect", std::move(suspect)},
                {"starts_converged", r.starts_converged},
                {"starts_total", r.starts_total}};
}

Json to_json(const ExperimentReport& r) {
    Json outcomes = Json::array();
    for (const auto& oc : r.outcomes)
        outcomes.push_back(Json{{"orbits", oc.orbits},
                                {"members", oc.members},
                                {"best_match", oc.best_match},
                                {"residual", oc.residual},
                                {"success", oc.success}});
    return Json{{"trials", r.trials},
                {"successes", r.successes},
                {"success_rate", r.success_rate},
                {"max_residual", r.max_residual},
                {"spurious_orbit_trials", r.spurious_orbit_trials},
                {"outcomes", std::move(outcomes)}};
}

Json to_json(const std::vector<Representation>& reps) {
    Json arr = Json::array();
    for (const auto& r : reps)
        arr.push_back(Json{{"x", r.x.get_str()}, {"y", r.y.get_str()}});
    return arr;
}

Json to_json(const Family& fam) {
    return Json{{"f", to_json(fam.f)},
                {"g", to_json(fam.g)},
                {"h", to_json(fam.h)},
                {"h_text", to_text(fam.h)},
                {"a_prime", complex_to_json(fam.a_prime)},
                {"b_prime", complex_to_json(fam.b_prime)},
                {"verified", fam.verified}};
}

Json to_json(const std::vector<RelationCheck>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back(Json{{"name", c.name},
                           {"value", c.value.str()},
                           {"expected", c.expected.str()},
                           {"pass", c.pass}});
    return arr;
}

}  // namespace cubesq
