#ifndef LCK_SCALAR_HPP
#define LCK_SCALAR_HPP

// Exact scalar arithmetic: arbitrary-precision rationals and Gaussian
// rationals (elements of Q(i)).  Every coefficient in the library is a
// Scalar; there is no floating point anywhere.
//
// The integer/rational backends come from Boost.Multiprecision, which is the
// standard exact-arithmetic choice and keeps this header free of hand-rolled
// bignum code.  Normalisation (gcd reduction, positive denominator) is
// guaranteed by cpp_rational.
//
// Serialisation contract: to_string() always prints both components with
// explicit denominators, e.g. "0/1-1/1*i" or "1/2+0/1*i".  This is the exact
// string format used by the JSON reports and is covered by golden tests.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lck/error.hpp"

namespace lck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with the denominator always present and positive.
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// A Gaussian rational re + im*i with exact rational components.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long long value) : re(value), im(0) {}  // NOLINT: implicit by design
    Scalar(const Rational& real_part) : re(real_part), im(0) {}  // NOLINT
    Scalar(Rational real_part, Rational imag_part)
        : re(std::move(real_part)), im(std::move(imag_part)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    // |z|^2 = z * conj(z), a nonnegative rational.
    Rational norm2() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        const Rational new_re = re * o.re - im * o.im;
        const Rational new_im = re * o.im + im * o.re;
        re = new_re;
        im = new_im;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw domain_error("division by zero scalar");
        const Rational n2 = o.norm2();
        const Rational new_re = (re * o.re + im * o.im) / n2;
        const Rational new_im = (im * o.re - re * o.im) / n2;
        re = new_re;
        im = new_im;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) {
        return !(a == b);
    }

    // Exact serialisation "p/q+r/s*i" (sign of the imaginary part folded
    // into the middle operator).
    std::string to_string() const {
        std::string out = rational_to_string(re);
        if (im < 0) {
            out += "-" + rational_to_string(-im);
        } else {
            out += "+" + rational_to_string(im);
        }
        out += "*i";
        return out;
    }
};

inline Scalar conj(const Scalar& z) { return z.conj(); }

}  // namespace lck

#endif  // LCK_SCALAR_HPP
