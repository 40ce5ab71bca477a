#include <doctest.h>

#include "cubesq/json_io.hpp"
#include "cubesq/rng.hpp"
#include "cubesq/text.hpp"

using namespace cubesq;

TEST_CASE("exact form JSON round trip") {
    Rng rng(83);
    for (int t = 0; t < 20; ++t) {
        CycForm f(7);
        for (int i = 0; i <= 7; ++i)
            f[i] = CycRat(Rat(rng.uniform_int(-99, 99), rng.uniform_int(1, 9)),
                          Rat(rng.uniform_int(-99, 99), rng.uniform_int(1, 9)));
        Json j = to_json(f);
        CHECK(json_form_is_exact(j));
        CHECK(cycform_from_json(j) == f);
        // survives a serialize/parse cycle as text too
        CHECK(cycform_from_json(Json::parse(j.dump())) == f);
    }
}

TEST_CASE("big coefficients stay exact through JSON") {
    CycForm f(1);
    f[0] = CycRat(Rat::from_strings("123456789123456789123456789", "1000000007"), Rat(0));
    f[1] = CycRat(Rat(0), Rat::from_strings("-987654321987654321", "13"));
    CHECK(cycform_from_json(Json::parse(to_json(f).dump())) == f);
}

TEST_CASE("complex form JSON round trip") {
    Rng rng(89);
    CForm f(24);
    for (int i = 0; i <= 24; ++i) f[i] = rng.complex_normal();
    Json j = to_json(f);
    CHECK(!json_form_is_exact(j));
    CForm g = cform_from_json(j);
    CHECK(f == g);  // exact double round trip
}

TEST_CASE("rational string forms") {
    CHECK(rat_from_string("-8") == Rat(-8));
    CHECK(rat_from_string("-8/3") == Rat(-8, 3));
    CHECK(rat_from_string("0") == Rat(0));
    CHECK_THROWS_AS(rat_from_string("8/-3"), Error);
    CHECK_THROWS_AS(rat_from_string("abc"), Error);
}

TEST_CASE("form JSON validates shape") {
    Json j = to_json(parse_form("z^2 + w^2"));
    j["coeffs"].erase(0);
    CHECK_THROWS_AS(cycform_from_json(j), Error);
}

TEST_CASE("fiber report schema") {
    auto fibers = classify_fibers(AuxSurface(parse_form("z^24 + w^24", 24)));
    Json j = to_json(fibers);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 24);
    for (const auto& e : j) {
        CHECK(e.contains("location"));
        CHECK(e["ord_A"] == "inf");
        CHECK(e["ord_B"] == 1);
        CHECK(e["ord_Delta"] == 2);
        CHECK(e["type"] == "II");
        CHECK(e["euler"] == 2);
    }
}

TEST_CASE("lattice report schema") {
    GramLattice L = GramLattice::standard();
    auto vecs = enumerate_norm_vectors(L, Rat(-8));
    Json j = to_json(L, Rat(-8), vecs);
    CHECK(j["gram"][0][0] == -8);
    CHECK(j["norm"] == "-8");
    REQUIRE(j["vectors"].size() == 6);
    CHECK(j["vectors"][0][0] == "-1");
}
