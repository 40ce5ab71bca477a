#include <doctest.h>

#include "cubesq/squarefree.hpp"
#include "cubesq/text.hpp"

using namespace cubesq;

namespace {

UniPoly uni(std::initializer_list<long> cs) {
    UniPoly p;
    for (long c : cs) p.push_back(CycRat(c));
    return uni_trim(std::move(p));
}

}  // namespace

TEST_CASE("univariate division and gcd") {
    // (t+1)(t+2) = t^2 + 3t + 2
    UniPoly a = uni({2, 3, 1});
    UniPoly b = uni({1, 1});
    CHECK(uni_mod(a, b).empty());
    CHECK(uni_div_exact(a, b) == uni({2, 1}));
    CHECK(uni_gcd(a, uni({2, 1})) == uni({2, 1}));  // gcd with t+2, monic
    CHECK(uni_gcd(uni({1, 0, 1}), uni({1, 1})).size() == 1);  // coprime
    CHECK_THROWS_AS(uni_div_exact(uni({1, 1, 1}), b), Error);
}

TEST_CASE("gcd over Q(zeta3) uses field division") {
    UniPoly zeta_lin{CycRat(1), CycRat::zeta3()};  // zeta3 t + 1
    UniPoly prod = uni_mul(zeta_lin, uni({3, 1}));
    UniPoly g = uni_gcd(prod, zeta_lin);
    CHECK(uni_degree(g) == 1);
    // monic normalization: t + 1/zeta3 = t + zeta3^2
    CHECK(g.back() == CycRat(1));
    CHECK(g.front() == CycRat::zeta3().inv());
}

TEST_CASE("Yun decomposition of a planted factorization") {
    // p = (t+1)^1 (t+2)^2 (t+3)^3
    UniPoly p = uni({1, 1});
    p = uni_mul(p, uni_mul(uni({2, 1}), uni({2, 1})));
    for (int i = 0; i < 3; ++i) p = uni_mul(p, uni({3, 1}));
    auto sf = squarefree_decompose(p);
    REQUIRE(sf.size() == 3);
    CHECK(sf[0].multiplicity == 1);
    CHECK(sf[0].factor == uni({1, 1}));
    CHECK(sf[1].multiplicity == 2);
    CHECK(sf[1].factor == uni({2, 1}));
    CHECK(sf[2].multiplicity == 3);
    CHECK(sf[2].factor == uni({3, 1}));
}

TEST_CASE("square-free input returns itself") {
    UniPoly p = uni({6, 11, 6, 1});  // (t+1)(t+2)(t+3)
    auto sf = squarefree_decompose(p);
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].multiplicity == 1);
    CHECK(uni_degree(sf[0].factor) == 3);
}

TEST_CASE("form factorization keeps the coordinate points exact") {
    // z^3 w^2 (z + w)^2 (z - w)
    CycForm f = parse_form("z", 1).pow(3) * parse_form("w", 1).pow(2) *
                parse_form("z + w", 1).pow(2) * parse_form("z - w", 1);
    auto fac = squarefree_decompose(f);
    CHECK(fac.mult_at_zero == 3);
    CHECK(fac.mult_at_infinity == 2);
    REQUIRE(fac.finite.size() == 2);
    CHECK(fac.finite[0].multiplicity == 1);
    CHECK(fac.finite[1].multiplicity == 2);
    CHECK(uni_degree(fac.finite[0].factor) == 1);
    CHECK(uni_degree(fac.finite[1].factor) == 1);
}

TEST_CASE("split by order against a reference form") {
    // s = (t+1)(t+2)(t+5); ref vanishes to order 2 at -1 and order 1 at -2
    UniPoly s = uni_mul(uni({1, 1}), uni_mul(uni({2, 1}), uni({5, 1})));
    CycForm ref = parse_form("z + w", 1).pow(2) * parse_form("z + 2*w", 1) *
                  parse_form("z + 7*w", 1);
    auto pieces = split_by_order(s, squarefree_decompose(ref));
    REQUIRE(pieces.size() == 3);
    int seen[3] = {0, 0, 0};
    for (const auto& p : pieces) {
        REQUIRE(uni_degree(p.part) == 1);
        if (p.part == uni({1, 1})) { CHECK(p.order == 2); seen[0]++; }
        if (p.part == uni({2, 1})) { CHECK(p.order == 1); seen[1]++; }
        if (p.part == uni({5, 1})) { CHECK(p.order == 0); seen[2]++; }
    }
    CHECK((seen[0] == 1 && seen[1] == 1 && seen[2] == 1));
}
