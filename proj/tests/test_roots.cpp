#include <doctest.h>

#include <cmath>

#include "cubesq/roots.hpp"
#include "cubesq/rng.hpp"
#include "cubesq/text.hpp"

using namespace cubesq;

namespace {

int mult_sum(const std::vector<RootCluster>& rs) {
    int s = 0;
    for (const auto& r : rs) s += r.multiplicity;
    return s;
}

}  // namespace

TEST_CASE("24th roots of unity") {
    CForm p = embed(parse_form("z^24 - w^24"));
    auto rs = roots(p);
    CHECK(rs.size() == 24);
    CHECK(mult_sum(rs) == 24);
    for (const auto& r : rs) {
        CHECK(r.multiplicity == 1);
        CHECK(!r.location.at_infinity);
        CHECK(std::abs(std::abs(r.location.value) - 1.0) < 1e-9);
        CHECK(std::abs(evaluate(p, r.location.value, {1.0, 0.0})) < 1e-9);
    }
}

TEST_CASE("root at [1:0] read off the coefficients") {
    // w^2 (z^22 + w^22)
    CForm p = embed(parse_form("z^22*w^2 + w^24"));
    auto rs = roots(p);
    CHECK(mult_sum(rs) == 24);
    REQUIRE(rs.front().location.at_infinity);
    CHECK(rs.front().multiplicity == 2);
    int simple = 0;
    for (std::size_t i = 1; i < rs.size(); ++i) simple += rs[i].multiplicity == 1;
    CHECK(simple == 22);
}

TEST_CASE("z^8 vanishes only at [0:1]") {
    auto rs = roots(embed(parse_form("z^8")));
    REQUIRE(rs.size() == 1);
    CHECK(!rs.front().location.at_infinity);
    CHECK(std::abs(rs.front().location.value) < 1e-12);
    CHECK(rs.front().multiplicity == 8);
}

TEST_CASE("double root clusters to multiplicity two") {
    // (z - 3w)^2 (z^2 + w^2): double root at 3, simple at +-i
    CycForm f = parse_form("z - 3*w", 1);
    CycForm g = parse_form("z^2 + w^2", 2);
    auto rs = roots(embed(f * f * g));
    CHECK(mult_sum(rs) == 4);
    bool found_double = false;
    for (const auto& r : rs)
        if (r.multiplicity == 2) {
            found_double = true;
            CHECK(std::abs(r.location.value - ComplexF(3.0, 0.0)) < 1e-6);
        }
    CHECK(found_double);
}

TEST_CASE("multiplicities sum to the degree on random forms") {
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        CForm p(10);
        for (int i = 0; i <= 10; ++i) p[i] = rng.complex_normal();
        CHECK(mult_sum(roots(p)) == 10);
    }
}

TEST_CASE("zero form is rejected") {
    CHECK_THROWS_AS(roots(CForm(24)), ZeroForm);
}

TEST_CASE("computed roots satisfy the polynomial") {
    // degree-24 with moderate integer coefficients
    CycForm h = parse_form("z^24 + 3*z^13*w^11 - 7*z^5*w^19 + 2*w^24");
    CForm p = embed(h);
    for (const auto& r : roots(p)) {
        REQUIRE(!r.location.at_infinity);
        CHECK(std::abs(evaluate(p, r.location.value, {1.0, 0.0})) < 1e-7);
    }
}
