#ifndef LCK_HODGE_HPP
#define LCK_HODGE_HPP

// Metric structure on the invariant exterior algebra: Hermitian inner
// product, Hodge star, twisted adjoints, Laplacian, harmonic projection and
// Green operator.
//
// Metric convention (fixed once for the whole library): the coframe is
// unitary.  Writing theta^a = e^{2a-1} + i e^{2a} with (e^k) a real
// orthonormal coframe, the canonical theta-monomials form an orthonormal
// basis, so <alpha, beta> is simply the coefficientwise Hermitian dot
// product.  The Hodge star is the complex-linear extension of the real star
// of (e^k); expanding a theta-monomial into the e-basis, starring there and
// converting back keeps every coefficient in Q(i) and gives, on total
// degree j,
//
//     star = 2^{n-j} * star_e .
//
// Orientation: the positive volume form is vol = omega^n / n!.  Its e-basis
// expansion is (sign) * 2^n * e^1^...^e^{2n}; the sign orients the star.
// build() verifies vol is exactly the unit-norm positive volume form of the
// unitary metric and refuses models whose omega is scaled incompatibly —
// the star table would otherwise not satisfy its defining relation
// alpha ^ star(conj(beta)) = <alpha,beta> vol.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lck/error.hpp"
#include "lck/exterior.hpp"
#include "lck/linalg.hpp"
#include "lck/model.hpp"
#include "lck/printer.hpp"
#include "lck/scalar.hpp"

namespace lck {

namespace detail {

// Forms over the real coframe e^1..e^{2n}: bitmask -> coefficient.
using EForm = std::map<std::uint32_t, Scalar>;

inline int e_wedge_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    for (int x = 0; x < 32; ++x) {
        if (!(a & (1u << x))) continue;
        // count generators of b strictly below e^{x+1}
        inversions += std::popcount(b & ((1u << x) - 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

inline void e_add(EForm& f, std::uint32_t mask, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

inline EForm e_wedge_1(const EForm& f, std::uint32_t gen_mask,
                       const Scalar& coeff) {
    EForm out;
    for (const auto& [mask, c] : f) {
        if (mask & gen_mask) continue;
        e_add(out, mask | gen_mask,
              Scalar(Rational(e_wedge_sign(mask, gen_mask))) * c * coeff);
    }
    return out;
}

// Expansion of a theta-monomial over the e-basis via
// theta^a = e^{2a-1} + i e^{2a}, thetabar^a = e^{2a-1} - i e^{2a}.
inline EForm theta_monomial_to_e(const Monomial& m) {
    EForm acc;
    acc[0] = Scalar(1);
    auto mul_generator = [&acc](int a, bool holo) {
        const std::uint32_t odd = 1u << (2 * (a - 1));      // e^{2a-1}
        const std::uint32_t even = 1u << (2 * (a - 1) + 1);  // e^{2a}
        const Scalar im = holo ? Scalar::i() : -Scalar::i();
        EForm next = e_wedge_1(acc, odd, Scalar(1));
        const EForm other = e_wedge_1(acc, even, im);
        for (const auto& [mask, c] : other) e_add(next, mask, c);
        acc = std::move(next);
    };
    for (int a = 1; a <= 32; ++a)
        if (m.holo & (1u << (a - 1))) mul_generator(a, true);
    for (int a = 1; a <= 32; ++a)
        if (m.anti & (1u << (a - 1))) mul_generator(a, false);
    return acc;
}

// Conversion back: e^{2a-1} = (theta^a + thetabar^a)/2,
// e^{2a} = (theta^a - thetabar^a)/2i.
inline Form e_to_theta(const EForm& f, int n) {
    Form out;
    for (const auto& [mask, c] : f) {
        Form term = Form::constant(c);
        for (int k = 0; k < 2 * n; ++k) {
            if (!(mask & (1u << k))) continue;
            const int a = k / 2 + 1;
            Form gen;
            if (k % 2 == 0) {
                gen = Scalar(Rational(1, 2)) *
                      (Form::theta(a) + Form::theta_bar(a));
            } else {
                gen = Scalar(Rational(0), Rational(-1, 2)) *
                      (Form::theta(a) - Form::theta_bar(a));
            }
            term = wedge(term, gen);
        }
        out += term;
    }
    return out;
}

// Euclidean star of the oriented orthonormal frame: e_S -> sigma *
// sign(S, S^c) * e_{S^c}.
inline EForm star_e(const EForm& f, int two_n, int sigma) {
    const std::uint32_t full = (two_n == 32) ? ~0u : ((1u << two_n) - 1u);
    EForm out;
    for (const auto& [mask, c] : f) {
        const std::uint32_t comp = full & ~mask;
        const int sign = sigma * e_wedge_sign(mask, comp);
        e_add(out, comp, Scalar(Rational(sign)) * c);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// MetricData
// ---------------------------------------------------------------------------

struct MetricData {
    Model model;
    Form volume;      // omega^n / n!
    int orientation;  // sign of the e-lexicographic coefficient of omega^n
    std::map<Monomial, Form, MonomialLess> star_table;

    static MetricData build(const Model& m) {
        MetricData md;
        md.model = m;
        md.volume = volume_form(m);
        const int two_n = 2 * m.n;

        // Orientation from the top e-coefficient of vol.
        detail::EForm vol_e;
        for (const auto& [mono, c] : md.volume.terms()) {
            const detail::EForm piece = detail::theta_monomial_to_e(mono);
            for (const auto& [mask, ec] : piece)
                detail::e_add(vol_e, mask, c * ec);
        }
        const std::uint32_t full = (1u << two_n) - 1u;
        if (vol_e.size() != 1 || !vol_e.count(full))
            throw domain_error("volume form is degenerate");
        const Scalar top = vol_e.at(full);
        if (!top.is_real() || top.re == 0)
            throw domain_error("volume form is not real");
        md.orientation = top.re > 0 ? 1 : -1;

        // The unitary metric's unit volume form is sigma * 2^n * e^{1..2n};
        // refuse fundamental forms scaled incompatibly with the unitary
        // coframe declaration (the star relation could not hold).
        Rational expected(md.orientation);
        for (int k = 0; k < m.n; ++k) expected *= 2;
        if (top.re != expected)
            throw domain_error(
                "fundamental form is incompatible with the unitary coframe "
                "metric: omega^n/n! = " +
                print_scalar(top) + " e^top, expected " +
                rational_to_string(expected));

        // Precompute the star of every canonical monomial.
        for (int k = 0; k <= two_n; ++k) {
            Rational scale = 1;  // 2^{n-k}
            for (int j = 0; j < m.n - k; ++j) scale *= 2;
            for (int j = 0; j < k - m.n; ++j) scale /= 2;
            for (const Monomial& mono : basis_of(m.n, k)) {
                const detail::EForm e = detail::theta_monomial_to_e(mono);
                const detail::EForm starred =
                    detail::star_e(e, two_n, md.orientation);
                md.star_table[mono] =
                    Scalar(scale) * detail::e_to_theta(starred, m.n);
            }
        }
        return md;
    }
};

// ---------------------------------------------------------------------------
// Inner product and star
// ---------------------------------------------------------------------------

// Hermitian inner product; canonical monomials are orthonormal under the
// unitary coframe metric.  Conjugate-linear in the second argument.
inline Scalar inner_product(const MetricData& md, const Form& a,
                            const Form& b) {
    (void)md;  // the normalisation is global; md names the convention
    Scalar acc;
    for (const auto& [mono, c] : a.terms()) acc += c * b.coefficient(mono).conj();
    return acc;
}

inline Form hodge_star(const MetricData& md, const Form& a) {
    Form out;
    for (const auto& [mono, c] : a.terms())
        out += c * md.star_table.at(mono);
    return out;
}

// Inverse star: on a degree-q input, star_inverse = (-1)^{q(2n-q)} star.
inline Form star_inverse(const MetricData& md, const Form& a) {
    const int two_n = 2 * md.model.n;
    Form out;
    for (int q = 0; q <= two_n; ++q) {
        const Form comp = a.degree_component(q);
        if (comp.is_zero()) continue;
        const int sign = (q * (two_n - q)) % 2 == 0 ? 1 : -1;
        out += Scalar(Rational(sign)) * hodge_star(md, comp);
    }
    return out;
}

// Formal adjoint of d_{w eta}: on degree-k input,
// d_{w eta}^* = (-1)^k star^{-1} d_{-w eta} star   (degree-0 input -> 0).
inline Form twisted_adjoint(const MetricData& md, const Form& a,
                            const Rational& w) {
    const int two_n = 2 * md.model.n;
    Form out;
    for (int k = 1; k <= two_n; ++k) {
        const Form comp = a.degree_component(k);
        if (comp.is_zero()) continue;
        const Form inner = twisted_d(md.model, hodge_star(md, comp), -w);
        const int sign = k % 2 == 0 ? 1 : -1;
        out += Scalar(Rational(sign)) * star_inverse(md, inner);
    }
    return out;
}

// Twisted Hodge Laplacian Delta = d_w d_w^* + d_w^* d_w.
inline Form laplacian(const MetricData& md, const Form& a, const Rational& w) {
    return twisted_d(md.model, twisted_adjoint(md, a, w), w) +
           twisted_adjoint(md, twisted_d(md.model, a, w), w);
}

// Exact basis of ker Delta on total degree k (canonical kernel vectors of
// the Laplacian matrix over the canonical monomial basis).
inline std::vector<Form> harmonic_basis(const MetricData& md, int k,
                                        const Rational& w) {
    const std::vector<Monomial> basis = basis_of(md.model.n, k);
    std::vector<Form> images;
    images.reserve(basis.size());
    for (const Monomial& mono : basis)
        images.push_back(laplacian(md, Form::monomial_term(mono, Scalar(1)), w));
    const Matrix mat = matrix_of_forms(images, basis);
    std::vector<Form> out;
    for (const auto& v : kernel_basis(mat)) out.push_back(from_coords(v, basis));
    return out;
}

// Orthogonal projection onto ker Delta (per total degree).
inline Form harmonic_projection(const MetricData& md, const Form& a,
                                const Rational& w) {
    Form out;
    for (int k = 0; k <= 2 * md.model.n; ++k) {
        const Form comp = a.degree_component(k);
        if (comp.is_zero()) continue;
        const std::vector<Form> kernel = harmonic_basis(md, k, w);
        if (kernel.empty()) continue;
        const std::vector<Monomial> basis = basis_of(md.model.n, k);
        const Matrix v = matrix_of_forms(kernel, basis);
        const auto coeffs = projection_coefficients(v, to_coords(comp, basis));
        for (std::size_t j = 0; j < kernel.size(); ++j)
            out += coeffs[j] * kernel[j];
    }
    return out;
}

// Green operator on degree k: the unique solution of
// Delta(G a) = a - H(a) orthogonal to ker Delta; Delta G + H = identity.
inline Form green(const MetricData& md, const Form& a, int k,
                  const Rational& w) {
    if (!a.is_homogeneous(k))
        throw domain_error("green: form is not homogeneous of the stated degree");
    const std::vector<Monomial> basis = basis_of(md.model.n, k);
    const std::vector<Form> kernel = harmonic_basis(md, k, w);
    const Form rhs_form = a - harmonic_projection(md, a, w);

    // Stack Delta on top of the orthogonality constraints V^* x = 0.
    std::vector<Form> images;
    images.reserve(basis.size());
    for (const Monomial& mono : basis)
        images.push_back(laplacian(md, Form::monomial_term(mono, Scalar(1)), w));
    const Matrix delta = matrix_of_forms(images, basis);
    const Matrix vh = matrix_of_forms(kernel, basis).conj_transpose();

    Matrix stacked(delta.rows + vh.rows, delta.cols);
    std::vector<Scalar> rhs = to_coords(rhs_form, basis);
    rhs.resize(delta.rows + vh.rows);
    for (std::size_t r = 0; r < delta.rows; ++r)
        for (std::size_t c = 0; c < delta.cols; ++c)
            stacked.at(r, c) = delta.at(r, c);
    for (std::size_t r = 0; r < vh.rows; ++r)
        for (std::size_t c = 0; c < vh.cols; ++c)
            stacked.at(delta.rows + r, c) = vh.at(r, c);

    const auto solution = solve_linear(stacked, rhs);
    if (!solution)
        throw error("green: Hodge-theoretic system unexpectedly inconsistent");
    return from_coords(*solution, basis);
}

// ---------------------------------------------------------------------------
// Restricted adjoint (the middle map of the real three-term complex)
// ---------------------------------------------------------------------------

// Adjoint of d_eta: real (1,1) -> real (2,1)+(1,2), given by projecting the
// full twisted adjoint back to bidegree (1,1).  The input must live in the
// (2,1)+(1,2) space.
inline Form restricted_adjoint_11_weighted(const MetricData& md, const Form& a,
                                           const Rational& w) {
    for (const auto& [mono, c] : a.terms()) {
        const bool ok = (mono.p() == 2 && mono.q() == 1) ||
                        (mono.p() == 1 && mono.q() == 2);
        if (!ok)
            throw domain_error(
                "restricted_adjoint_11: input must lie in the (2,1)+(1,2) "
                "space; offending monomial " +
                mono.to_string());
    }
    return twisted_adjoint(md, a, w).component(1, 1);
}

inline Form restricted_adjoint_11(const MetricData& md, const Form& a) {
    return restricted_adjoint_11_weighted(md, a, Rational(1));
}

}  // namespace lck

#endif  // LCK_HODGE_HPP
