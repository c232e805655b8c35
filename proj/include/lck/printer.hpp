#ifndef LCK_PRINTER_HPP
#define LCK_PRINTER_HPP

// Canonical text printer for forms and scalars.
//
// The output is always re-parseable by the expression parser, and parsing a
// printed form returns it unchanged (parse . print = identity); this
// round-trip is part of the test suite.  Coefficient spellings:
//
//   1        ->  "t1^t2"            (coefficient omitted)
//   -1       ->  "- t1^t2"          (sign folded into the join)
//   3/4      ->  "3/4 t1"
//   i, -i    ->  "i t1", "- i t1"
//   3/4 i    ->  "3/4 i t1"
//   general  ->  "(1/2 + 3/4 i) t1"
//
// Degree-0 terms print as bare scalars; the zero form prints as "0".

#include <string>

#include "lck/exterior.hpp"
#include "lck/scalar.hpp"

namespace lck {

namespace detail {

// "p/q" shortened to "p" when the denominator is 1.
inline std::string pretty_rational(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

// Prints a scalar known to be nonzero with nonnegative leading sign (the
// caller folds the sign).  standalone = true when no monomial follows.
inline std::string pretty_scalar_magnitude(const Scalar& c, bool standalone) {
    if (c.im == 0) {
        if (c.re == 1 && !standalone) return "";
        return pretty_rational(c.re);
    }
    if (c.re == 0) {
        if (c.im == 1) return "i";
        return pretty_rational(c.im) + " i";
    }
    std::string out = "(" + pretty_rational(c.re);
    if (c.im < 0)
        out += " - " + (c.im == -1 ? std::string("i")
                                   : pretty_rational(-c.im) + " i");
    else
        out += " + " +
               (c.im == 1 ? std::string("i") : pretty_rational(c.im) + " i");
    return out + ")";
}

// A scalar "leads negative" when its first printed component would carry a
// minus sign; the printer then emits the term under a subtraction.
inline bool leads_negative(const Scalar& c) {
    if (c.re != 0) return c.re < 0;
    return c.im < 0;
}

}  // namespace detail

inline std::string print_scalar(const Scalar& c) {
    if (c.is_zero()) return "0";
    if (detail::leads_negative(c))
        return "-" + detail::pretty_scalar_magnitude(-c, true);
    return detail::pretty_scalar_magnitude(c, true);
}

inline std::string print_form(const Form& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : f.terms()) {
        const bool negative = detail::leads_negative(coeff);
        const Scalar magnitude = negative ? -coeff : coeff;
        if (first) {
            if (negative) out += "- ";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (mono.is_one()) {
            out += detail::pretty_scalar_magnitude(magnitude, true);
        } else {
            const std::string c = detail::pretty_scalar_magnitude(magnitude,
                                                                  false);
            if (!c.empty()) out += c + " ";
            out += mono.to_string();
        }
    }
    return out;
}

}  // namespace lck

#endif  // LCK_PRINTER_HPP
