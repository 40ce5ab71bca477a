#include "cubesq/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cubesq {

bool p1_less(const P1Point& a, const P1Point& b) {
    if (a.at_infinity != b.at_infinity) return a.at_infinity;  // [1:0] sorts first
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
}

namespace {

ComplexF horner(const std::vector<ComplexF>& c, ComplexF t) {
    ComplexF acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * t + c[i];
    return acc;
}

// A couple of Newton steps per root; keep the step only if it reduces |p|.
void polish(const std::vector<ComplexF>& c, std::vector<ComplexF>& roots) {
    std::vector<ComplexF> dc(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) dc[i - 1] = static_cast<double>(i) * c[i];
    for (auto& r : roots) {
        for (int it = 0; it < 4; ++it) {
            ComplexF p = horner(c, r);
            ComplexF dp = horner(dc, r);
            if (dp == ComplexF(0.0, 0.0)) break;
            ComplexF rn = r - p / dp;
            if (std::abs(horner(c, rn)) < std::abs(p)) r = rn;
            else break;
        }
    }
}

}  // namespace

std::vector<ComplexF> poly_roots(const std::vector<ComplexF>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return {};
    if (n == 1) return {-c[0] / c[1]};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(n)];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
    std::vector<ComplexF> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    polish(c, out);
    return out;
}

std::vector<RootCluster> roots(const CForm& p, double cluster_tol) {
    if (p.is_zero()) throw ZeroForm("roots of the zero form are undefined");

    const int d = p.degree();
    const double maxc = max_abs(p);
    // Coefficients below this are treated as zero when reading off the order
    // at [1:0]; exact embeddings produce exact zeros so fixtures are unaffected.
    const double trim = 1e-14 * maxc;

    int top = d;
    while (top > 0 && std::abs(p[top]) <= trim) --top;
    const int ord_infinity = d - top;

    std::vector<RootCluster> out;
    if (ord_infinity > 0) out.push_back({P1Point::infinity(), ord_infinity});

    if (top > 0) {
        std::vector<ComplexF> c(static_cast<std::size_t>(top) + 1);
        for (int i = 0; i <= top; ++i) c[static_cast<std::size_t>(i)] = p[i];
        std::vector<ComplexF> rts = poly_roots(c);

        // Union-find clustering at relative tolerance.
        const std::size_t m = rts.size();
        std::vector<std::size_t> parent(m);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                double scale = std::max({1.0, std::abs(rts[i]), std::abs(rts[j])});
                if (std::abs(rts[i] - rts[j]) <= cluster_tol * scale) parent[find(i)] = find(j);
            }
        std::vector<std::vector<std::size_t>> groups(m);
        for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);
        for (const auto& g : groups) {
            if (g.empty()) continue;
            ComplexF centroid{0.0, 0.0};
            for (std::size_t i : g) centroid += rts[i];
            centroid /= static_cast<double>(g.size());
            out.push_back({P1Point::finite(centroid), static_cast<int>(g.size())});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const RootCluster& a, const RootCluster& b) { return p1_less(a.location, b.location); });
    return out;
}

}  // namespace cubesq
