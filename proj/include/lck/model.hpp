#ifndef LCK_MODEL_HPP
#define LCK_MODEL_HPP

// Computation models: a coframe with structure equations, a Lee form and a
// fundamental form, together with the exterior differential they generate,
// the twisted differentials d_{w*eta} = d - w*eta^, the Dolbeault pieces,
// axiom validation, and the built-in catalog of Inoue-surface models.
//
// A model declares the value of d on each theta^a; d on thetabar^a is the
// conjugate, and d extends to the whole algebra by the graded Leibniz rule.
// The locally conformally Kähler axiom is d omega = eta ^ omega, i.e. omega
// is closed for the weight-1 twist.
//
// Twist weights are exact rationals: d_{w eta} models the differential on
// sections of the w-th power of the flat line bundle determined by eta.
// All statements computed here are statements about this finite invariant
// subcomplex.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lck/error.hpp"
#include "lck/exterior.hpp"
#include "lck/printer.hpp"
#include "lck/scalar.hpp"

namespace lck {

struct Model {
    std::string name;
    int n = 0;                    // complex dimension
    std::vector<Form> d_theta;    // d_theta[a-1] = d(theta^a), degree 2
    Form eta;                     // Lee form, real, closed, degree 1
    Form omega;                   // fundamental form, real, type (1,1)
};

// ---------------------------------------------------------------------------
// Differentials
// ---------------------------------------------------------------------------

// d(thetabar^a) = conj(d(theta^a)).
inline Form d_generator(const Model& m, int a, bool holo) {
    const Form& dth = m.d_theta.at(static_cast<std::size_t>(a - 1));
    return holo ? dth : dth.conj();
}

// Exterior derivative by the graded Leibniz rule.  For a canonical monomial,
// d(xi_1^...^xi_k) = sum_i (-1)^{i-1} d(xi_i) ^ (xi_1^...without xi_i...);
// the interior product supplies exactly the sign (-1)^{i-1}, and the
// degree-2 factor d(xi_i) commutes to the front with no further sign.
inline Form d(const Model& m, const Form& f) {
    Form out;
    for (int a = 1; a <= m.n; ++a) {
        out += wedge(d_generator(m, a, true), interior(a, true, f));
        out += wedge(d_generator(m, a, false), interior(a, false, f));
    }
    return out;
}

// d_{w eta} = d - w eta^.
inline Form twisted_d(const Model& m, const Form& f, const Rational& w) {
    return d(m, f) - Scalar(w) * wedge(m.eta, f);
}

// Bidegree pieces of d: del keeps the (p+1,q) part of d on each (p,q)
// component, delbar the (p,q+1) part.  For an integrable coframe these two
// exhaust d.
inline Form del(const Model& m, const Form& f) {
    Form out;
    for (const auto& [mono, c] : f.terms()) {
        const Form piece = d(m, Form::monomial_term(mono, c));
        out += piece.component(mono.p() + 1, mono.q());
    }
    return out;
}

inline Form delbar(const Model& m, const Form& f) {
    Form out;
    for (const auto& [mono, c] : f.terms()) {
        const Form piece = d(m, Form::monomial_term(mono, c));
        out += piece.component(mono.p(), mono.q() + 1);
    }
    return out;
}

// Twisted Dolbeault operators del_{w eta} = del - w eta^{1,0}^ and
// delbar_{w eta} = delbar - w eta^{0,1}^ (uniform "-" convention, matching
// the twisted de Rham operator so that d_{w eta} = del_{w eta} +
// delbar_{w eta} on integrable models).
inline Form twisted_del(const Model& m, const Form& f, const Rational& w) {
    return del(m, f) - Scalar(w) * wedge(m.eta.component(1, 0), f);
}

inline Form twisted_delbar(const Model& m, const Form& f, const Rational& w) {
    return delbar(m, f) - Scalar(w) * wedge(m.eta.component(0, 1), f);
}

// omega^n / n! — the volume form of the model.
inline Form volume_form(const Model& m) {
    Form power = Form::one();
    Rational factorial = 1;
    for (int k = 1; k <= m.n; ++k) {
        power = wedge(power, m.omega);
        factorial *= k;
    }
    return Scalar(Rational(1) / factorial) * power;
}

// theta^1 ^ ... ^ theta^n.
inline Form theta_top(const Model& m) {
    Form out = Form::one();
    for (int a = 1; a <= m.n; ++a) out = wedge(out, Form::theta(a));
    return out;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when the check passes
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const ValidationCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline void push_check(ValidationReport& report, const std::string& name,
                       bool pass, const std::string& witness) {
    report.checks.push_back(ValidationCheck{name, pass, pass ? "" : witness});
}

}  // namespace detail

// Checks every model axiom and returns the full table of named checks with
// defect witnesses; validate(m).pass() is the admission test used by the
// catalog, the parser, and the CLI.
inline ValidationReport validate(const Model& m) {
    ValidationReport report;

    bool degrees_ok = m.n >= 1 && static_cast<int>(m.d_theta.size()) == m.n;
    std::string degree_witness =
        degrees_ok ? "" : "expected one structure equation per generator";
    if (degrees_ok) {
        for (int a = 1; a <= m.n; ++a) {
            const Form& dth = m.d_theta[static_cast<std::size_t>(a - 1)];
            if (!dth.is_homogeneous(2)) {
                degrees_ok = false;
                degree_witness = "d t" + std::to_string(a) +
                                 " is not homogeneous of degree 2: " +
                                 print_form(dth);
                break;
            }
        }
    }
    detail::push_check(report, "generators_degree", degrees_ok, degree_witness);
    if (!degrees_ok) return report;  // nothing else is well-posed

    for (int a = 1; a <= m.n; ++a) {
        const Form dd = d(m, d_generator(m, a, true));
        if (!dd.is_zero()) {
            detail::push_check(report, "d_squared_zero", false,
                               "d(d t" + std::to_string(a) +
                                   ") = " + print_form(dd));
            break;
        }
        if (a == m.n)
            detail::push_check(report, "d_squared_zero", true, "");
    }

    detail::push_check(report, "eta_degree_one",
                       m.eta.is_zero() || m.eta.is_homogeneous(1),
                       "eta = " + print_form(m.eta));
    detail::push_check(report, "eta_real", m.eta.is_real(),
                       "conj(eta) - eta = " +
                           print_form(m.eta.conj() - m.eta));
    detail::push_check(report, "eta_closed", d(m, m.eta).is_zero(),
                       "d eta = " + print_form(d(m, m.eta)));

    detail::push_check(report, "omega_real", m.omega.is_real(),
                       "conj(omega) - omega = " +
                           print_form(m.omega.conj() - m.omega));
    detail::push_check(report, "omega_type_11", m.omega.has_pure_bidegree(1, 1),
                       "omega = " + print_form(m.omega));

    Form omega_n = Form::one();
    for (int k = 0; k < m.n; ++k) omega_n = wedge(omega_n, m.omega);
    detail::push_check(report, "omega_nondegenerate", !omega_n.is_zero(),
                       "omega^n = 0");

    const Form lck_defect = d(m, m.omega) - wedge(m.eta, m.omega);
    detail::push_check(report, "lck_equation", lck_defect.is_zero(),
                       "d omega - eta ^ omega = " + print_form(lck_defect));

    for (int a = 1; a <= m.n; ++a) {
        const Form bad = d_generator(m, a, true).component(0, 2);
        if (!bad.is_zero()) {
            detail::push_check(report, "integrable_coframe", false,
                               "d t" + std::to_string(a) +
                                   " has a (0,2) part: " + print_form(bad));
            break;
        }
        if (a == m.n)
            detail::push_check(report, "integrable_coframe", true, "");
    }

    return report;
}

// ---------------------------------------------------------------------------
// Canonical twist
// ---------------------------------------------------------------------------

// The unique rational kappa with d(theta^1^...^theta^n) =
// kappa * eta ^ (theta^1^...^theta^n), i.e. the weight for which the
// canonical form theta^top is twisted-closed.  Returns nullopt when no such
// rational weight exists; returns 0 when theta^top is honestly closed.
inline std::optional<Rational> canonical_twist(const Model& m) {
    const Form top = theta_top(m);
    const Form d_top = d(m, top);
    const Form eta_top = wedge(m.eta, top);
    if (d_top.is_zero()) return Rational(0);
    if (eta_top.is_zero()) return std::nullopt;

    // Exact proportionality test with a real rational ratio.
    const auto& [mono, coeff] = *eta_top.terms().begin();
    const Scalar ratio = d_top.coefficient(mono) / coeff;
    if (!ratio.is_real()) return std::nullopt;
    if (d_top != ratio * eta_top) return std::nullopt;
    return ratio.re;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace detail {

inline Form inoue_eta() {
    // eta = (theta^1 - thetabar^1) / 2i = -(i/2) theta^1 + (i/2) thetabar^1.
    return Scalar(Rational(0), Rational(-1, 2)) * Form::theta(1) +
           Scalar(Rational(0), Rational(1, 2)) * Form::theta_bar(1);
}

inline Form inoue_omega() {
    // omega = -i (theta^1 ^ thetabar^1 + theta^2 ^ thetabar^2).
    const Scalar minus_i(Rational(0), Rational(-1));
    return minus_i * wedge(Form::theta(1), Form::theta_bar(1)) +
           minus_i * wedge(Form::theta(2), Form::theta_bar(2));
}

inline Form inoue_d_theta1() {
    // d theta^1 = (1/2i) thetabar^1 ^ theta^1 = (i/2) theta^1 ^ thetabar^1.
    return Scalar(Rational(0), Rational(1, 2)) *
           wedge(Form::theta(1), Form::theta_bar(1));
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
    return {"inoue_sm", "inoue_splus", "inoue_sminus"};
}

// The built-in Inoue-surface models.  All three share the Lee form
// eta = (theta^1 - thetabar^1)/2i, the fundamental form
// omega = -i(theta^1^thetabar^1 + theta^2^thetabar^2), and the structure
// equation d theta^1 = (1/2i) thetabar^1 ^ theta^1.  They differ in
// d theta^2:
//
//   inoue_sm     d theta^2 = (1/2) eta ^ theta^2
//   inoue_splus  d theta^2 = theta^1 ^ (1/2i)(theta^2 - thetabar^2)
//   inoue_sminus same coframe algebra as inoue_splus (the sminus surface is
//                double-covered by an splus surface; the invariant data
//                coincide, the distinction is manifold-level)
inline Model catalog(const std::string& name) {
    Model m;
    m.n = 2;
    m.name = name;
    m.eta = detail::inoue_eta();
    m.omega = detail::inoue_omega();
    m.d_theta.resize(2);
    m.d_theta[0] = detail::inoue_d_theta1();
    if (name == "inoue_sm") {
        // (1/2) eta ^ theta^2 = -(i/4) theta^1^theta^2 - (i/4) theta^2^thetabar^1
        m.d_theta[1] =
            Scalar(Rational(1, 2)) * wedge(detail::inoue_eta(), Form::theta(2));
    } else if (name == "inoue_splus" || name == "inoue_sminus") {
        // theta^1 ^ (1/2i)(theta^2 - thetabar^2)
        //   = -(i/2) theta^1^theta^2 + (i/2) theta^1^thetabar^2
        const Scalar half_over_i(Rational(0), Rational(-1, 2));
        m.d_theta[1] =
            wedge(Form::theta(1),
                  half_over_i * (Form::theta(2) - Form::theta_bar(2)));
    } else {
        throw domain_error("unknown catalog model: " + name);
    }
    return m;
}

// An n-dimensional model with vanishing structure equations and zero Lee
// form (invariant torus data); useful as the untwisted flat reference.
inline Model flat_model(int n) {
    Model m;
    m.name = "flat_torus";
    m.n = n;
    m.d_theta.assign(static_cast<std::size_t>(n), Form::zero());
    const Scalar minus_i(Rational(0), Rational(-1));
    for (int a = 1; a <= n; ++a)
        m.omega += minus_i * wedge(Form::theta(a), Form::theta_bar(a));
    return m;
}

}  // namespace lck

#endif  // LCK_MODEL_HPP
