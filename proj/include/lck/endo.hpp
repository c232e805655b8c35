#ifndef LCK_ENDO_HPP
#define LCK_ENDO_HPP

// Frame endomorphisms and their action on forms.
//
// A FrameEndomorphism is sum c[xi][X] * (X tensor xi) over coframe
// covectors xi in {theta^1..theta^n, thetabar^1..thetabar^n} and frame
// vectors X in {X_1..X_n, Xbar_1..Xbar_n} dual to the coframe.  The action
// on forms is the degree-0 derivation
//
//     (X tensor xi) . alpha = xi ^ (interior product of X into alpha),
//
// the convention calibrated by (X_2 tensor thetabar^1) . omega =
// (1/i) thetabar^1 ^ thetabar^2 on the splus model.
//
// Type split: E0 collects the mixed terms (theta tensor Xbar and thetabar
// tensor X) — the directions that deform the complex structure; E1 collects
// the type-preserving terms.  Real E1 endomorphisms act on omega as real
// (1,1) forms; e1_to_form / form_to_e1 realise that correspondence with a
// deterministic preimage choice.
//
// Exponential actions of endomorphism series are expanded directly order by
// order (the composed exponential e^{a} e^{b} . omega is applied as two
// nested exponentials; no Campbell-Hausdorff bookkeeping).

#include <string>
#include <vector>

#include "lck/error.hpp"
#include "lck/exterior.hpp"
#include "lck/linalg.hpp"
#include "lck/model.hpp"
#include "lck/printer.hpp"
#include "lck/scalar.hpp"

namespace lck {

struct FrameEndomorphism {
    int n = 0;
    // Row-major (2n)x(2n): entry(xi, X).  Index 0..n-1 = holomorphic
    // (theta^a resp. X_a), n..2n-1 = conjugate (thetabar^a resp. Xbar_a).
    std::vector<Scalar> c;

    FrameEndomorphism() = default;
    explicit FrameEndomorphism(int dim)
        : n(dim), c(static_cast<std::size_t>(4 * dim * dim)) {}

    Scalar& entry(int xi, int x) {
        return c[static_cast<std::size_t>(xi * 2 * n + x)];
    }
    const Scalar& entry(int xi, int x) const {
        return c[static_cast<std::size_t>(xi * 2 * n + x)];
    }

    // Convenience accessor by generator index and type:
    // coefficient of (X_a or Xbar_a) tensor (theta^b or thetabar^b).
    Scalar& coeff(bool x_holo, int a, bool xi_holo, int b) {
        return entry(xi_holo ? b - 1 : n + b - 1, x_holo ? a - 1 : n + a - 1);
    }
    const Scalar& coeff(bool x_holo, int a, bool xi_holo, int b) const {
        return entry(xi_holo ? b - 1 : n + b - 1, x_holo ? a - 1 : n + a - 1);
    }

    // A single term c * (X tensor xi).
    static FrameEndomorphism single(int n, bool x_holo, int a, bool xi_holo,
                                    int b, const Scalar& value) {
        FrameEndomorphism out(n);
        out.coeff(x_holo, a, xi_holo, b) = value;
        return out;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    FrameEndomorphism operator-() const {
        FrameEndomorphism out = *this;
        for (auto& v : out.c) v = -v;
        return out;
    }
    FrameEndomorphism& operator+=(const FrameEndomorphism& o) {
        if (n != o.n) throw domain_error("endomorphism dimension mismatch");
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
        return *this;
    }
    FrameEndomorphism& operator-=(const FrameEndomorphism& o) {
        return *this += -o;
    }
    friend FrameEndomorphism operator+(FrameEndomorphism a,
                                       const FrameEndomorphism& b) {
        return a += b;
    }
    friend FrameEndomorphism operator-(FrameEndomorphism a,
                                       const FrameEndomorphism& b) {
        return a -= b;
    }
    friend FrameEndomorphism operator*(const Scalar& s,
                                       FrameEndomorphism a) {
        for (auto& v : a.c) v *= s;
        return a;
    }
    friend bool operator==(const FrameEndomorphism& a,
                           const FrameEndomorphism& b) {
        return a.n == b.n && a.c == b.c;
    }
    friend bool operator!=(const FrameEndomorphism& a,
                           const FrameEndomorphism& b) {
        return !(a == b);
    }

    // Conjugate endomorphism: the (Xbar_a tensor thetabar^b) coefficient of
    // the conjugate is conj of the (X_a tensor theta^b) coefficient, etc.
    FrameEndomorphism conj() const {
        FrameEndomorphism out(n);
        for (int xi = 0; xi < 2 * n; ++xi)
            for (int x = 0; x < 2 * n; ++x) {
                const int xi_bar = (xi + n) % (2 * n);
                const int x_bar = (x + n) % (2 * n);
                out.entry(xi_bar, x_bar) = entry(xi, x).conj();
            }
        return out;
    }

    bool is_real() const { return conj() == *this; }

    // Mixed-type part: theta tensor T^{0,1} plus thetabar tensor T^{1,0}.
    FrameEndomorphism e0_part() const {
        FrameEndomorphism out(n);
        for (int xi = 0; xi < 2 * n; ++xi)
            for (int x = 0; x < 2 * n; ++x)
                if ((xi < n) != (x < n)) out.entry(xi, x) = entry(xi, x);
        return out;
    }

    // Type-preserving part.
    FrameEndomorphism e1_part() const {
        FrameEndomorphism out(n);
        for (int xi = 0; xi < 2 * n; ++xi)
            for (int x = 0; x < 2 * n; ++x)
                if ((xi < n) == (x < n)) out.entry(xi, x) = entry(xi, x);
        return out;
    }
};

inline std::pair<FrameEndomorphism, FrameEndomorphism> split_e0_e1(
    const FrameEndomorphism& a) {
    return {a.e0_part(), a.e1_part()};
}

// Canonical re-parseable text, e.g. "X2 (x) tb1 + i Xb2 (x) t1"; terms are
// ordered by frame vector, then covector.
inline std::string print_endo(const FrameEndomorphism& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int x = 0; x < 2 * a.n; ++x)
        for (int xi = 0; xi < 2 * a.n; ++xi) {
            const Scalar& coeff = a.entry(xi, x);
            if (coeff.is_zero()) continue;
            const bool negative = detail::leads_negative(coeff);
            const Scalar magnitude = negative ? -coeff : coeff;
            if (first) {
                if (negative) out += "- ";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            const std::string c =
                detail::pretty_scalar_magnitude(magnitude, false);
            if (!c.empty()) out += c + " ";
            out += (x < a.n ? "X" + std::to_string(x + 1)
                            : "Xb" + std::to_string(x - a.n + 1)) +
                   " (x) " +
                   (xi < a.n ? "t" + std::to_string(xi + 1)
                             : "tb" + std::to_string(xi - a.n + 1));
        }
    return out;
}

// The derivation action sum c[xi][X] * xi ^ iota_X(f).
inline Form endo_action(const Model& m, const FrameEndomorphism& a,
                        const Form& f) {
    if (a.n != m.n) throw domain_error("endo_action: dimension mismatch");
    Form out;
    for (int xi = 0; xi < 2 * m.n; ++xi) {
        const bool xi_holo = xi < m.n;
        const int b = xi_holo ? xi + 1 : xi - m.n + 1;
        const Form cov = xi_holo ? Form::theta(b) : Form::theta_bar(b);
        for (int x = 0; x < 2 * m.n; ++x) {
            const Scalar& coeff = a.entry(xi, x);
            if (coeff.is_zero()) continue;
            const bool x_holo = x < m.n;
            const int idx = x_holo ? x + 1 : x - m.n + 1;
            out += coeff * wedge(cov, interior(idx, x_holo, f));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Real E1 endomorphisms <-> real (1,1) forms
// ---------------------------------------------------------------------------

namespace detail {

// Deterministic real basis of E1: for each (a,b), the pair
// u = X_a tensor theta^b + Xbar_a tensor thetabar^b and
// v = i X_a tensor theta^b - i Xbar_a tensor thetabar^b.
inline std::vector<FrameEndomorphism> e1_real_basis(int n) {
    std::vector<FrameEndomorphism> out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            out.push_back(
                FrameEndomorphism::single(n, true, a, true, b, Scalar(1)) +
                FrameEndomorphism::single(n, false, a, false, b, Scalar(1)));
            out.push_back(
                FrameEndomorphism::single(n, true, a, true, b, Scalar::i()) +
                FrameEndomorphism::single(n, false, a, false, b,
                                          -Scalar::i()));
        }
    return out;
}

}  // namespace detail

// b . omega for a real type-preserving endomorphism.
inline Form e1_to_form(const Model& m, const FrameEndomorphism& b) {
    if (!b.e0_part().is_zero())
        throw domain_error("e1_to_form: endomorphism has a mixed-type part");
    if (!b.is_real())
        throw domain_error("e1_to_form: endomorphism is not real");
    return endo_action(m, b, m.omega);
}

// Deterministic real E1 preimage of a real (1,1) form under (.) omega
// (free coefficients zeroed).  Requires omega nondegenerate.
inline FrameEndomorphism form_to_e1(const Model& m, const Form& beta) {
    if (!beta.is_real())
        throw domain_error("form_to_e1: input form is not real");
    if (!beta.is_zero() && !beta.has_pure_bidegree(1, 1))
        throw domain_error("form_to_e1: input form is not of type (1,1)");

    const auto basis = detail::e1_real_basis(m.n);
    const auto mono11 = basis_pq(m.n, 1, 1);
    // Real solve: split complex coordinates into re/im rows.
    Matrix mat(2 * mono11.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto coords = to_coords(endo_action(m, basis[c], m.omega), mono11);
        for (std::size_t r = 0; r < mono11.size(); ++r) {
            mat.at(2 * r, c) = Scalar(coords[r].re);
            mat.at(2 * r + 1, c) = Scalar(coords[r].im);
        }
    }
    const auto beta_coords = to_coords(beta, mono11);
    std::vector<Scalar> rhs(2 * mono11.size());
    for (std::size_t r = 0; r < mono11.size(); ++r) {
        rhs[2 * r] = Scalar(beta_coords[r].re);
        rhs[2 * r + 1] = Scalar(beta_coords[r].im);
    }
    const auto solution = solve_linear(mat, rhs);
    if (!solution)
        throw domain_error(
            "form_to_e1: form is not in the image of the E1 action "
            "(degenerate omega?)");
    FrameEndomorphism out(m.n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        out += (*solution)[k] * basis[k];
    return out;
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

// a(t) = sum_{k>=1} a_k t^k / k!  — coefficients[k] stores a_k (factorial
// convention); coefficient 0 must be absent or zero.
struct EndoSeries {
    int n = 0;
    std::vector<FrameEndomorphism> coefficients;  // index = order k

    static EndoSeries zero(int n) {
        EndoSeries s;
        s.n = n;
        return s;
    }

    FrameEndomorphism at(int k) const {
        if (k < 0 || k >= static_cast<int>(coefficients.size()))
            return FrameEndomorphism(n);
        return coefficients[static_cast<std::size_t>(k)];
    }

    void set(int k, const FrameEndomorphism& a) {
        if (k < 1) throw domain_error("series coefficients start at order 1");
        if (k >= static_cast<int>(coefficients.size()))
            coefficients.resize(static_cast<std::size_t>(k) + 1,
                                FrameEndomorphism(n));
        coefficients[static_cast<std::size_t>(k)] = a;
    }

    int max_order() const {
        return static_cast<int>(coefficients.size()) - 1;
    }
};

// Plain t-power coefficients of a form-valued series.
using FormSeries = std::vector<Form>;

inline FormSeries constant_series(const Form& f, int order) {
    FormSeries s(static_cast<std::size_t>(order) + 1);
    s[0] = f;
    return s;
}

namespace detail {

inline bool series_is_zero(const FormSeries& s) {
    for (const Form& f : s)
        if (!f.is_zero()) return false;
    return true;
}

// Applies the operator series O(t) = sum_{k>=1} (a_k/k!) t^k (acting by
// endo_action) to a form series, truncated at the given order.
inline FormSeries apply_operator_series(const Model& m, const EndoSeries& s,
                                        const FormSeries& x, int order) {
    FormSeries out(static_cast<std::size_t>(order) + 1);
    Rational factorial = 1;
    for (int k = 1; k <= order; ++k) {
        factorial *= k;
        const FrameEndomorphism a_k = s.at(k);
        if (a_k.is_zero()) continue;
        const FrameEndomorphism op = Scalar(Rational(1) / factorial) * a_k;
        for (int j = 0; k + j <= order; ++j) {
            if (static_cast<std::size_t>(j) >= x.size()) break;
            if (x[static_cast<std::size_t>(j)].is_zero()) continue;
            out[static_cast<std::size_t>(k + j)] +=
                endo_action(m, op, x[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

}  // namespace detail

// e^{a(t)} applied to a form series, truncated at the given order:
// sum_j (1/j!) (a(t).)^j, computed by the stable recursion
// S_0 = x, S_j = (1/j) O(S_{j-1}).
inline FormSeries exp_action(const Model& m, const EndoSeries& s,
                             const FormSeries& x, int order) {
    FormSeries current(x);
    current.resize(static_cast<std::size_t>(order) + 1);
    FormSeries total = current;
    for (int j = 1; j <= order; ++j) {
        FormSeries next = detail::apply_operator_series(m, s, current, order);
        const Scalar inv(Rational(1, j));
        for (Form& f : next) f = inv * f;
        current = std::move(next);
        if (detail::series_is_zero(current)) break;
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += current[k];
    }
    return total;
}

inline FormSeries exp_action(const Model& m, const EndoSeries& s,
                             const Form& f, int order) {
    return exp_action(m, s, constant_series(f, order), order);
}

}  // namespace lck

#endif  // LCK_ENDO_HPP
