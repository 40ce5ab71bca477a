#ifndef CUBESQ_BINARY_FORM_HPP
#define CUBESQ_BINARY_FORM_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "cubesq/cycrat.hpp"
#include "cubesq/errors.hpp"

namespace cubesq {

using ComplexF = std::complex<double>;

namespace detail {
inline bool coeff_is_zero(const Rat& c) { return c.is_zero(); }
inline bool coeff_is_zero(const CycRat& c) { return c.is_zero(); }
inline bool coeff_is_zero(const ComplexF& c) { return c == ComplexF(0.0, 0.0); }
}  // namespace detail

// Homogeneous polynomial of fixed degree d in (z, w); coeffs[i] multiplies
// z^i w^(d-i).  The coefficient vector always has length d+1; the zero form
// keeps its declared degree.  Values are immutable in spirit: arithmetic
// returns fresh forms, and nothing here mutates shared state.
template <class C>
class BinaryForm {
  public:
    explicit BinaryForm(int degree) : degree_(check_degree_(degree)), c_(degree + 1) {}

    BinaryForm(int degree, std::vector<C> coeffs) : degree_(check_degree_(degree)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != degree_ + 1)
            throw Error("coefficient count does not match degree");
    }

    static BinaryForm monomial(int degree, int zpow, C coeff = C(1)) {
        BinaryForm f(degree);
        if (zpow < 0 || zpow > degree) throw Error("monomial exponent out of range");
        f.c_[static_cast<std::size_t>(zpow)] = std::move(coeff);
        return f;
    }

    int degree() const { return degree_; }
    const std::vector<C>& coeffs() const { return c_; }

    const C& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    C& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const C& x) { return detail::coeff_is_zero(x); });
    }

    // Vanishing order at [0:1] (z = 0): index of the lowest nonzero coefficient.
    // Returns degree+1 for the zero form.
    int ord_at_zero() const {
        for (int i = 0; i <= degree_; ++i)
            if (!detail::coeff_is_zero(c_[static_cast<std::size_t>(i)])) return i;
        return degree_ + 1;
    }

    // Vanishing order at [1:0] (w = 0).
    int ord_at_infinity() const {
        for (int i = degree_; i >= 0; --i)
            if (!detail::coeff_is_zero(c_[static_cast<std::size_t>(i)])) return degree_ - i;
        return degree_ + 1;
    }

    BinaryForm operator-() const {
        BinaryForm r(degree_);
        for (int i = 0; i <= degree_; ++i) r.c_[i] = -c_[i];
        return r;
    }

    friend BinaryForm operator+(const BinaryForm& x, const BinaryForm& y) {
        require_same_degree_(x, y, "+");
        BinaryForm r(x.degree_);
        for (int i = 0; i <= x.degree_; ++i) r.c_[i] = x.c_[i] + y.c_[i];
        return r;
    }

    friend BinaryForm operator-(const BinaryForm& x, const BinaryForm& y) {
        require_same_degree_(x, y, "-");
        BinaryForm r(x.degree_);
        for (int i = 0; i <= x.degree_; ++i) r.c_[i] = x.c_[i] - y.c_[i];
        return r;
    }

    friend BinaryForm operator*(const BinaryForm& x, const BinaryForm& y) {
        BinaryForm r(x.degree_ + y.degree_);
        for (int i = 0; i <= x.degree_; ++i) {
            if (detail::coeff_is_zero(x.c_[i])) continue;
            for (int j = 0; j <= y.degree_; ++j)
                r.c_[i + j] += x.c_[i] * y.c_[j];
        }
        return r;
    }

    friend BinaryForm operator*(const C& s, const BinaryForm& x) {
        BinaryForm r(x.degree_);
        for (int i = 0; i <= x.degree_; ++i) r.c_[i] = s * x.c_[i];
        return r;
    }

    BinaryForm pow(int e) const {
        if (e < 0) throw Error("negative exponent");
        BinaryForm acc = BinaryForm::monomial(0, 0, C(1));
        for (int k = 0; k < e; ++k) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const BinaryForm& x, const BinaryForm& y) {
        return x.degree_ == y.degree_ && x.c_ == y.c_;
    }
    friend bool operator!=(const BinaryForm& x, const BinaryForm& y) { return !(x == y); }

  private:
    static int check_degree_(int d) {
        if (d < 0) throw Error("negative degree");
        return d;
    }
    static void require_same_degree_(const BinaryForm& x, const BinaryForm& y, const char* op) {
        if (x.degree_ != y.degree_)
            throw DegreeMismatch(std::string("degree mismatch in '") + op + "': " +
                                 std::to_string(x.degree_) + " vs " + std::to_string(y.degree_));
    }

    int degree_;
    std::vector<C> c_;
};

using RatForm = BinaryForm<Rat>;
using CycForm = BinaryForm<CycRat>;
using CForm = BinaryForm<ComplexF>;

inline CForm embed(const CycForm& p) {
    std::vector<ComplexF> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].embed();
    return CForm(p.degree(), std::move(c));
}

inline double max_abs(const CForm& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

// Horner evaluation; the larger-magnitude variable is factored out so the
// inner argument has modulus <= 1.
inline ComplexF evaluate(const CForm& p, ComplexF z, ComplexF w) {
    const auto& c = p.coeffs();
    const int d = p.degree();
    if (std::abs(z) <= std::abs(w)) {
        if (w == ComplexF(0.0, 0.0)) return d == 0 ? c[0] : ComplexF(0.0, 0.0);
        ComplexF t = z / w, acc = c[static_cast<std::size_t>(d)];
        for (int i = d - 1; i >= 0; --i) acc = acc * t + c[static_cast<std::size_t>(i)];
        return acc * std::pow(w, d);
    }
    ComplexF s = w / z, acc = c[0];
    for (int i = 1; i <= d; ++i) acc = acc * s + c[static_cast<std::size_t>(i)];
    return acc * std::pow(z, d);
}

}  // namespace cubesq

#endif
