#include "cubesq/squarefree.hpp"

namespace cubesq {

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_trim(UniPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return uni_trim(std::move(r));
}

UniPoly uni_derivative(const UniPoly& p) {
    if (p.size() < 2) return {};
    UniPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = CycRat(Rat(static_cast<long>(i))) * p[i];
    return uni_trim(std::move(r));
}

UniPoly uni_monic(UniPoly p) {
    p = uni_trim(std::move(p));
    if (p.empty()) return p;
    CycRat inv = p.back().inv();
    for (auto& c : p) c *= inv;
    return p;
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw Error("polynomial modulo zero");
    a = uni_trim(std::move(a));
    const int db = uni_degree(b);
    CycRat lead_inv = b.back().inv();
    while (uni_degree(a) >= db) {
        const int da = uni_degree(a);
        CycRat q = a.back() * lead_inv;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= q * b[static_cast<std::size_t>(i)];
        a = uni_trim(std::move(a));
    }
    return a;
}

UniPoly uni_div_exact(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw Error("polynomial division by zero");
    a = uni_trim(std::move(a));
    const int db = uni_degree(b);
    const int da = uni_degree(a);
    if (a.empty()) return {};
    if (da < db) throw Error("inexact polynomial division");
    UniPoly q(static_cast<std::size_t>(da - db) + 1);
    CycRat lead_inv = b.back().inv();
    while (uni_degree(a) >= db) {
        const int cur = uni_degree(a);
        CycRat c = a.back() * lead_inv;
        q[static_cast<std::size_t>(cur - db)] = c;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(cur - db + i)] -= c * b[static_cast<std::size_t>(i)];
        a = uni_trim(std::move(a));
    }
    if (!a.empty()) throw Error("inexact polynomial division");
    return uni_trim(std::move(q));
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        UniPoly r = uni_mod(std::move(a), b);
        a = std::move(b);
        b = uni_monic(std::move(r));  // normalize each step to tame coefficient growth
    }
    return uni_monic(std::move(a));
}

std::vector<SquareFreeFactor> squarefree_decompose(const UniPoly& p_in) {
    std::vector<SquareFreeFactor> out;
    UniPoly p = uni_monic(uni_trim(p_in));
    if (uni_degree(p) < 1) return out;

    // Yun's algorithm.
    UniPoly dp = uni_derivative(p);
    UniPoly a = uni_gcd(p, dp);
    UniPoly b = uni_div_exact(p, a);
    UniPoly c = uni_div_exact(dp, a);
    UniPoly d = uni_trim([&] {
        UniPoly db = uni_derivative(b);
        UniPoly r(std::max(c.size(), db.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < c.size()) r[i] += c[i];
            if (i < db.size()) r[i] -= db[i];
        }
        return r;
    }());

    for (int i = 1; uni_degree(b) > 0; ++i) {
        UniPoly g = uni_gcd(b, d);
        if (uni_degree(g) > 0) out.push_back({g, i});
        b = uni_div_exact(b, g);
        UniPoly t = uni_div_exact(d, g);
        UniPoly db = uni_derivative(b);
        UniPoly nd(std::max(t.size(), db.size()));
        for (std::size_t k = 0; k < nd.size(); ++k) {
            if (k < t.size()) nd[k] += t[k];
            if (k < db.size()) nd[k] -= db[k];
        }
        d = uni_trim(std::move(nd));
    }
    return out;
}

FormFactorization squarefree_decompose(const CycForm& f) {
    if (f.is_zero()) throw ZeroForm("cannot factor the zero form");
    const int lo = f.ord_at_zero();
    const int hi_ord = f.ord_at_infinity();
    const int d = f.degree();

    FormFactorization out;
    out.mult_at_zero = lo;
    out.mult_at_infinity = hi_ord;

    // middle part: coefficients lo .. d-hi_ord, dehomogenized in t = z/w
    UniPoly mid;
    for (int i = lo; i <= d - hi_ord; ++i) mid.push_back(f[i]);
    mid = uni_trim(std::move(mid));
    if (uni_degree(mid) >= 1) out.finite = squarefree_decompose(mid);
    return out;
}

std::vector<OrderPiece> split_by_order(const UniPoly& s, const FormFactorization& ref) {
    std::vector<OrderPiece> out;
    UniPoly rest = uni_monic(s);
    for (const auto& sf : ref.finite) {
        if (uni_degree(rest) < 1) break;
        UniPoly g = uni_gcd(rest, sf.factor);
        if (uni_degree(g) > 0) {
            // ref's square-free factors are pairwise coprime, so the order is
            // exactly sf.multiplicity on the roots of g
            out.push_back({g, sf.multiplicity});
            rest = uni_div_exact(rest, g);
        }
    }
    if (uni_degree(rest) > 0) out.push_back({rest, 0});
    return out;
}

}  // namespace cubesq
