#ifndef CUBESQ_CYCRAT_HPP
#define CUBESQ_CYCRAT_HPP

#include <complex>
#include <iosfwd>
#include <utility>

#include "cubesq/rational.hpp"

namespace cubesq {

// Element a + b*zeta3 of Q(zeta3), zeta3 = exp(2*pi*i/3).  Multiplication
// reduces with zeta3^2 = -1 - zeta3.  This is a field.
class CycRat {
  public:
    CycRat() = default;
    CycRat(long n) : a_(n) {}  // NOLINT: implicit integer promotion
    CycRat(Rat a) : a_(std::move(a)) {}  // NOLINT
    CycRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static CycRat zeta3() { return CycRat(Rat(0), Rat(1)); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    CycRat operator-() const { return CycRat(-a_, -b_); }

    CycRat& operator+=(const CycRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
    CycRat& operator-=(const CycRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }

    CycRat& operator*=(const CycRat& o) {
        // (a1 + b1 z)(a2 + b2 z) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 - b1 b2) z
        Rat a = a_ * o.a_ - b_ * o.b_;
        Rat b = a_ * o.b_ + o.a_ * b_ - b_ * o.b_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    // Field norm N(a + b z) = (a + b z)(a + b z^2) = a^2 - a b + b^2.
    Rat norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    // Conjugate over Q: a + b z^2 = (a - b) - b z.
    CycRat conj() const { return CycRat(a_ - b_, -b_); }

    CycRat inv() const {
        if (is_zero()) throw Error("division by zero in Q(zeta3)");
        Rat n = norm();
        CycRat c = conj();
        return CycRat(c.a() / n, c.b() / n);
    }

    CycRat& operator/=(const CycRat& o) { return *this *= o.inv(); }

    friend CycRat operator+(CycRat x, const CycRat& y) { return x += y; }
    friend CycRat operator-(CycRat x, const CycRat& y) { return x -= y; }
    friend CycRat operator*(CycRat x, const CycRat& y) { return x *= y; }
    friend CycRat operator/(CycRat x, const CycRat& y) { return x /= y; }

    friend bool operator==(const CycRat& x, const CycRat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const CycRat& x, const CycRat& y) { return !(x == y); }

    // zeta3 |-> (-1/2, sqrt(3)/2)
    std::complex<double> embed() const {
        static const double root3_half = 0.86602540378443864676;
        double a = a_.to_double(), b = b_.to_double();
        return {a - 0.5 * b, root3_half * b};
    }

    friend std::ostream& operator<<(std::ostream& os, const CycRat& x);

  private:
    Rat a_, b_;
};

}  // namespace cubesq

#endif
