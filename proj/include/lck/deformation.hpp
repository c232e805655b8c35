#ifndef LCK_DEFORMATION_HPP
#define LCK_DEFORMATION_HPP

// Order-by-order deformation of locally conformally Kähler structures.
//
// Given deformation directions for the complex structure (an E0-valued
// series a(t) = sum a_k t^k/k!) and optionally for the Lee form (a 1-form
// series etadot(t) = sum etadot_k t^k/k!), the recursion seeks a
// type-preserving correction series b(t) in real E1 with
//
//     ( d_{w eta} + sum_k (t^k/k!) etadot_k ^ )  e^{a(t)} e^{b(t)} . omega = 0
//
// coefficient by coefficient.  At each order k the unknown enters linearly:
// the t^k coefficient is (1/k!) d_w(b_k . omega) + Ob_k with Ob_k computed
// from solved lower orders, so the step is the exact linear solve
// d_w(beta_k) = -k! Ob_k over real (1,1) forms, followed by
// b_k = form_to_e1(beta_k).  Ob_k always lies in the real (2,1)+(1,2)
// space (asserted); when the solve fails the recursion stops and reports
// the harmonic part of Ob_k — its nonzero class in the restricted complex —
// as the order-k obstruction, locating the class in H^3 of the full twisted
// complex as well when it survives there.
//
// First-order obstruction maps are exposed separately: first_obstruction_ks
// for complex-structure directions (the class of d_w(a_1 . omega) in the
// restricted complex) and first_obstruction_lee for Lee directions (the
// class of etadot ^ omega in H^3).

#include <optional>
#include <string>
#include <vector>

#include "lck/cohomology.hpp"
#include "lck/endo.hpp"
#include "lck/error.hpp"
#include "lck/exterior.hpp"
#include "lck/model.hpp"
#include "lck/printer.hpp"
#include "lck/scalar.hpp"

namespace lck {

// ---------------------------------------------------------------------------
// First-order obstructions
// ---------------------------------------------------------------------------

namespace detail {

// The testable Kodaira-Spencer admissibility of a first-order direction:
// d_w(a1 . omega) may not leak into (3,0) or (0,3).  (For n = 2 this is
// automatic; the check matters for higher-dimensional models.)
inline void require_ks_direction(const Model& m, const FrameEndomorphism& a1,
                                 const Rational& w) {
    const Form rho = twisted_d(m, endo_action(m, a1, m.omega), w);
    const Form bad = rho.component(3, 0) + rho.component(0, 3);
    if (!bad.is_zero())
        throw domain_error(
            "a1 is not a Kodaira-Spencer direction: d_w(a1 . omega) has a "
            "(3,0)+(0,3) part " +
            print_form(bad));
}

inline void require_e0_real(const FrameEndomorphism& a,
                            const std::string& what) {
    if (!a.e1_part().is_zero())
        throw domain_error(what + " must lie in E0 (no type-preserving part)");
    if (!a.is_real()) throw domain_error(what + " must be real");
}

}  // namespace detail

// Class of d_w(a1 . omega) in the restricted real complex.  A zero verdict
// carries the deterministic (1,1) primitive beta with d_w(beta) = rho; the
// solving first-order correction is b1 = form_to_e1(-beta).
inline ClassVerdict first_obstruction_ks(const Model& m,
                                         const FrameEndomorphism& a1,
                                         const Rational& w) {
    detail::require_e0_real(a1, "a1");
    detail::require_ks_direction(m, a1, w);
    const Form rho = twisted_d(m, endo_action(m, a1, m.omega), w);
    return class_verdict(m, rho, ComplexSpec::restricted_real, w);
}

// Class of etadot ^ omega in H^3 of the full twisted complex.
inline ClassVerdict first_obstruction_lee(const Model& m, const Form& etadot,
                                          const Rational& w) {
    if (!etadot.is_zero() && !etadot.is_homogeneous(1))
        throw domain_error("etadot must be a 1-form");
    const Form defect = d(m, etadot);
    if (!defect.is_zero())
        throw domain_error("etadot is not closed; d(etadot) = " +
                           print_form(defect));
    return class_verdict(m, wedge(etadot, m.omega), ComplexSpec::full_de_rham,
                         w);
}

// ---------------------------------------------------------------------------
// The recursion
// ---------------------------------------------------------------------------

struct DeformationOrder {
    int k = 0;
    FrameEndomorphism b;  // solved coefficient b_k (factorial convention)
    Form beta;            // b_k . omega
};

struct DeformationReport {
    bool obstructed = false;
    int order = 0;  // requested truncation order

    // Solved data (all orders on success; orders below failing_order on
    // obstruction).
    std::vector<DeformationOrder> solved;
    FormSeries omega_series;  // plain t-coefficients of e^a e^b . omega

    // Obstruction data.
    int failing_order = 0;
    Form obstruction;           // Ob_k (exact, un-normalised)
    Form harmonic_obstruction;  // component orthogonal to im(d_w | (1,1)_R)
    std::string class_location; // "H3" if nonzero in the full complex, else
                                // "restricted"
};

// Iterates the order-by-order solve up to the requested order.
//
// Preconditions (each violation throws a domain_error naming the
// condition): omega must be d_{w eta}-closed (the order-0 equation); every
// a_k must be real and of pure E0 type with a_1 a Kodaira-Spencer
// direction; every etadot_k must be a closed real 1-form.
inline DeformationReport solve_lck_series(
    const Model& m, const EndoSeries& a,
    const std::optional<FormSeries>& etadot, int order, const Rational& w) {
    if (order < 0) throw domain_error("solve_lck_series: negative order");
    DeformationReport report;
    report.order = order;

    const Form seed_defect = twisted_d(m, m.omega, w);
    if (!seed_defect.is_zero())
        throw domain_error(
            "solve_lck_series: omega is not closed for the chosen twist "
            "weight (order-0 equation fails); d_w(omega) = " +
            print_form(seed_defect));

    if (!a.at(0).is_zero())
        throw domain_error(
            "solve_lck_series: the order-0 coefficient of a(t) must vanish");
    for (int k = 1; k <= a.max_order(); ++k) {
        const FrameEndomorphism a_k = a.at(k);
        if (a_k.is_zero()) continue;
        detail::require_e0_real(a_k, "a_" + std::to_string(k));
    }
    if (!a.at(1).is_zero()) detail::require_ks_direction(m, a.at(1), w);

    // Lee-direction coefficients etadot_k (factorial convention), checked
    // closed and real.
    std::vector<Form> lee(static_cast<std::size_t>(order) + 1);
    if (etadot) {
        for (std::size_t k = 1; k < etadot->size() && k <= static_cast<std::size_t>(order); ++k) {
            const Form& ed = (*etadot)[k];
            if (ed.is_zero()) continue;
            if (!ed.is_homogeneous(1))
                throw domain_error("solve_lck_series: etadot_" +
                                   std::to_string(k) + " is not a 1-form");
            if (!ed.is_real())
                throw domain_error("solve_lck_series: etadot_" +
                                   std::to_string(k) + " is not real");
            const Form defect = d(m, ed);
            if (!defect.is_zero())
                throw domain_error("solve_lck_series: etadot_" +
                                   std::to_string(k) +
                                   " is not closed; d(etadot) = " +
                                   print_form(defect));
            lee[k] = ed;
        }
        if (!etadot->empty() && !(*etadot)[0].is_zero())
            throw domain_error(
                "solve_lck_series: the order-0 Lee coefficient must vanish");
    }

    // The t^k coefficient of (d_w + sum (t^j/j!) etadot_j ^) Omega(t).
    const auto equation_coefficient = [&](const FormSeries& omega_t, int k) {
        Form out = twisted_d(m, omega_t[static_cast<std::size_t>(k)], w);
        Rational factorial = 1;
        for (int j = 1; j <= k; ++j) {
            factorial *= j;
            if (lee[static_cast<std::size_t>(j)].is_zero()) continue;
            out += Scalar(Rational(1) / factorial) *
                   wedge(lee[static_cast<std::size_t>(j)],
                         omega_t[static_cast<std::size_t>(k - j)]);
        }
        return out;
    };

    EndoSeries b = EndoSeries::zero(m.n);
    const auto expand = [&](int through) {
        return exp_action(m, a, exp_action(m, b, m.omega, through), through);
    };

    // Prepare the real (1,1) solve for d_w(beta) = rhs once per model.
    const auto real11 = real_basis_pq(m.n, 1, 1);
    const auto codomain3 = basis_of(m.n, 3);
    const Matrix d11 = detail::real_map_matrix(
        real11, codomain3, [&](const Form& f) { return twisted_d(m, f, w); });

    Rational k_factorial = 1;
    for (int k = 1; k <= order; ++k) {
        k_factorial *= k;
        const FormSeries omega_t = expand(k);  // b_k still zero here
        const Form ob = equation_coefficient(omega_t, k);

        if (!detail::in_middle_space(ob) || !ob.is_real())
            throw domain_error(
                "solve_lck_series: order-" + std::to_string(k) +
                " obstruction is not a real (2,1)+(1,2) form: " +
                print_form(ob));

        const Form rhs = Scalar(-k_factorial) * ob;
        const auto solution =
            solve_linear(d11, detail::real_rhs(rhs, codomain3));
        if (!solution) {
            report.obstructed = true;
            report.failing_order = k;
            report.obstruction = ob;

            // Harmonic part: project away the image of d_w on real (1,1).
            // The canonical monomials are orthonormal, so coordinate-space
            // least squares realises the metric orthogonal projection.
            std::vector<Form> images;
            for (const Form& f : real11) {
                const Form img = twisted_d(m, f, w);
                if (!img.is_zero()) images.push_back(img);
            }
            const Matrix v = matrix_of_forms(images, codomain3);
            const auto coeffs =
                projection_coefficients(v, to_coords(ob, codomain3));
            Form projection;
            for (std::size_t j = 0; j < images.size(); ++j)
                projection += coeffs[j] * images[j];
            report.harmonic_obstruction = ob - projection;

            // Locate the class: does it survive into full H^3?
            report.class_location = "restricted";
            if (twisted_d(m, ob, w).is_zero()) {
                const ClassVerdict full =
                    class_verdict(m, ob, ComplexSpec::full_de_rham, w);
                if (!full.is_zero) report.class_location = "H3";
            }
            report.omega_series = omega_t;
            return report;
        }

        DeformationOrder step;
        step.k = k;
        step.beta = detail::combine(real11, *solution);
        step.b = form_to_e1(m, step.beta);
        b.set(k, step.b);
        report.solved.push_back(std::move(step));
    }

    // Independent re-expansion: with all solved b_k substituted, every
    // coefficient of the defining equation through the requested order must
    // vanish identically.
    const FormSeries final_series = expand(order);
    for (int k = 1; k <= order; ++k) {
        const Form residual = equation_coefficient(final_series, k);
        if (!residual.is_zero())
            throw error(
                "solve_lck_series: internal re-expansion check failed at "
                "order " +
                std::to_string(k) + ": " + print_form(residual));
    }
    report.omega_series = final_series;
    return report;
}

}  // namespace lck

#endif  // LCK_DEFORMATION_HPP
