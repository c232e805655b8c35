#ifndef LCK_EXTERIOR_HPP
#define LCK_EXTERIOR_HPP

// The complexified exterior algebra over an invariant coframe.
//
// Generators are theta^1..theta^n (holomorphic, written t1..tn) and their
// conjugates thetabar^1..thetabar^n (tb1..tbn).  A monomial is a wedge of
// distinct generators; its canonical word lists the theta factors by
// ascending index and then the thetabar factors by ascending index.  Signs
// are produced by counting inversions against that word, so the algebra is
// graded-commutative by construction.
//
// A Form is a finite Scalar-linear combination of canonical monomials with
// zero coefficients never stored, so Form equality is map equality.  The
// (p,q) bigrading, conjugation, real structure and the canonical bases used
// everywhere else in the library live here too.
//
// Canonical basis order (fixed once, used for every table and report):
// total degree ascending, then holomorphic degree p descending, then the
// theta word lexicographically, then the thetabar word lexicographically.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lck/error.hpp"
#include "lck/linalg.hpp"
#include "lck/scalar.hpp"

namespace lck {

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

struct Monomial {
    // Bit a-1 set in `holo` means the factor theta^a is present; same for
    // `anti` and thetabar^a.  Generator indices are 1-based throughout.
    std::uint32_t holo = 0;
    std::uint32_t anti = 0;

    int p() const { return std::popcount(holo); }
    int q() const { return std::popcount(anti); }
    int degree() const { return p() + q(); }
    bool is_one() const { return holo == 0 && anti == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.holo == b.holo && a.anti == b.anti;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

    // "t1^tb1"; the empty monomial prints as "1".
    std::string to_string() const {
        if (is_one()) return "1";
        std::string out;
        for (int a = 1; a <= 32; ++a)
            if (holo & (1u << (a - 1))) {
                if (!out.empty()) out += "^";
                out += "t" + std::to_string(a);
            }
        for (int a = 1; a <= 32; ++a)
            if (anti & (1u << (a - 1))) {
                if (!out.empty()) out += "^";
                out += "tb" + std::to_string(a);
            }
        return out;
    }
};

// Word-lexicographic comparison of two generator sets of equal size: the set
// containing the lowest generator in the symmetric difference comes first.
inline bool mask_word_less(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & ~(diff - 1))) != 0;
}

inline bool monomial_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.p() != b.p()) return a.p() > b.p();  // higher holomorphic type first
    if (a.holo != b.holo) return mask_word_less(a.holo, b.holo);
    return mask_word_less(a.anti, b.anti);
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b);
    }
};

namespace detail {

// Symbol codes ordering all generators along the canonical word:
// theta^a -> a, thetabar^a -> 64 + a.
inline void append_symbol_codes(const Monomial& m, std::vector<int>& codes) {
    for (int a = 1; a <= 32; ++a)
        if (m.holo & (1u << (a - 1))) codes.push_back(a);
    for (int a = 1; a <= 32; ++a)
        if (m.anti & (1u << (a - 1))) codes.push_back(64 + a);
}

}  // namespace detail

// Wedge of two canonical monomials: zero if a generator repeats, otherwise
// the canonical monomial together with the sign of sorting the concatenated
// word into canonical order.
struct MonomialWedge {
    bool zero = true;
    Monomial value;
    int sign = 1;
};

inline MonomialWedge wedge(const Monomial& a, const Monomial& b) {
    MonomialWedge out;
    if ((a.holo & b.holo) || (a.anti & b.anti)) return out;  // repeated factor
    out.zero = false;
    out.value = Monomial{a.holo | b.holo, a.anti | b.anti};
    std::vector<int> left, right;
    detail::append_symbol_codes(a, left);
    detail::append_symbol_codes(b, right);
    int inversions = 0;
    for (int x : left)
        for (int y : right)
            if (x > y) ++inversions;
    out.sign = (inversions % 2 == 0) ? 1 : -1;
    return out;
}

// conj(theta^I ^ thetabar^J) = (-1)^{|I||J|} theta^J ^ thetabar^I.
struct MonomialConj {
    Monomial value;
    int sign = 1;
};

inline MonomialConj conj(const Monomial& m) {
    MonomialConj out;
    out.value = Monomial{m.anti, m.holo};
    out.sign = (m.p() * m.q()) % 2 == 0 ? 1 : -1;
    return out;
}

// ---------------------------------------------------------------------------
// Forms
// ---------------------------------------------------------------------------

class Form {
  public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    Form() = default;

    static Form zero() { return Form(); }

    // The constant function 1 (empty monomial).
    static Form one() { return monomial_term(Monomial{}, Scalar(1)); }

    static Form constant(const Scalar& c) {
        return monomial_term(Monomial{}, c);
    }

    static Form monomial_term(const Monomial& m, const Scalar& c) {
        Form f;
        f.add_term(m, c);
        return f;
    }

    // Generator factories.
    static Form theta(int a) {
        return monomial_term(Monomial{1u << (a - 1), 0}, Scalar(1));
    }
    static Form theta_bar(int a) {
        return monomial_term(Monomial{0, 1u << (a - 1)}, Scalar(1));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Form operator-() const {
        Form out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    Form& operator+=(const Form& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Form& operator-=(const Form& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }

    friend Form operator*(const Scalar& c, const Form& f) {
        Form out;
        if (c.is_zero()) return out;
        for (const auto& [m, coeff] : f.terms_) out.terms_.emplace(m, c * coeff);
        return out;
    }

    friend bool operator==(const Form& a, const Form& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    // Largest total degree appearing (0 for the zero form).
    int max_degree() const {
        int deg = 0;
        for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
        return deg;
    }

    // True if every monomial has total degree k.
    bool is_homogeneous(int k) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != k) return false;
        return true;
    }

    bool has_pure_bidegree(int p, int q) const {
        for (const auto& [m, c] : terms_)
            if (m.p() != p || m.q() != q) return false;
        return true;
    }

    Form component(int p, int q) const {
        Form out;
        for (const auto& [m, c] : terms_)
            if (m.p() == p && m.q() == q) out.terms_.emplace(m, c);
        return out;
    }

    Form degree_component(int k) const {
        Form out;
        for (const auto& [m, c] : terms_)
            if (m.degree() == k) out.terms_.emplace(m, c);
        return out;
    }

    Form conj() const {
        Form out;
        for (const auto& [m, c] : terms_) {
            const MonomialConj mc = lck::conj(m);
            out.add_term(mc.value, Scalar(Rational(mc.sign)) * c.conj());
        }
        return out;
    }

    bool is_real() const { return conj() == *this; }

    std::vector<Monomial> support() const {
        std::vector<Monomial> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) out.push_back(m);
        return out;
    }

  private:
    TermMap terms_;
};

inline Form conj(const Form& f) { return f.conj(); }

inline Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const MonomialWedge w = wedge(ma, mb);
            if (w.zero) continue;
            out.add_term(w.value, Scalar(Rational(w.sign)) * ca * cb);
        }
    return out;
}

inline Form wedge(const Form& a, const Form& b, const Form& c) {
    return wedge(wedge(a, b), c);
}

// Interior product with the frame vector dual to theta^a (holo = true) or
// thetabar^a (holo = false): deletes the generator when present, with the
// sign of moving the vector past the preceding factors of the canonical
// word, and kills the monomial otherwise.
inline Form interior(int a, bool holo, const Form& f) {
    const std::uint32_t bit = 1u << (a - 1);
    Form out;
    for (const auto& [m, c] : f.terms()) {
        if (holo) {
            if (!(m.holo & bit)) continue;
            const int before = std::popcount(m.holo & (bit - 1));
            Monomial reduced{m.holo & ~bit, m.anti};
            const int sign = before % 2 == 0 ? 1 : -1;
            out.add_term(reduced, Scalar(Rational(sign)) * c);
        } else {
            if (!(m.anti & bit)) continue;
            const int before = m.p() + std::popcount(m.anti & (bit - 1));
            Monomial reduced{m.holo, m.anti & ~bit};
            const int sign = before % 2 == 0 ? 1 : -1;
            out.add_term(reduced, Scalar(Rational(sign)) * c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical bases
// ---------------------------------------------------------------------------

namespace detail {

// All index subsets of {1..n} of the given size, as bitmasks, in canonical
// word-lexicographic order.
inline void subsets_of_size(int n, int size, std::vector<std::uint32_t>& out) {
    std::vector<std::uint32_t> current;
    std::function<void(int, int, std::uint32_t)> rec =
        [&](int next, int remaining, std::uint32_t mask) {
            if (remaining == 0) {
                out.push_back(mask);
                return;
            }
            for (int a = next; a <= n - remaining + 1; ++a)
                rec(a + 1, remaining - 1, mask | (1u << (a - 1)));
        };
    rec(1, size, 0);
}

}  // namespace detail

// Canonical monomial basis of the (p,q) component.
inline std::vector<Monomial> basis_pq(int n, int p, int q) {
    std::vector<Monomial> out;
    if (p < 0 || q < 0 || p > n || q > n) return out;
    std::vector<std::uint32_t> holos, antis;
    detail::subsets_of_size(n, p, holos);
    detail::subsets_of_size(n, q, antis);
    for (const std::uint32_t h : holos)
        for (const std::uint32_t t : antis) out.push_back(Monomial{h, t});
    return out;
}

// Canonical monomial basis of total degree k (all bidegrees, p descending).
inline std::vector<Monomial> basis_of(int n, int k) {
    std::vector<Monomial> out;
    for (int p = std::min(k, n); p >= 0 && p >= k - n; --p) {
        const auto part = basis_pq(n, p, k - p);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Real basis of the real points of a conjugation-closed monomial span.
// For a self-conjugate monomial m (p = q up to factor sets): emits m when
// conj(m) = +m and i*m when conj(m) = -m.  For a conjugate pair {m, mbar}
// with m canonical-first: emits u = m + conj(m) and v = i*(m - conj(m)).
inline std::vector<Form> real_basis(const std::vector<Monomial>& support) {
    std::map<Monomial, bool, MonomialLess> in_support;
    for (const Monomial& m : support) in_support[m] = true;
    std::vector<Form> out;
    for (const auto& [m, unused] : in_support) {
        const MonomialConj mc = conj(m);
        if (!in_support.count(mc.value))
            throw domain_error(
                "real_basis: support is not closed under conjugation");
        if (mc.value == m) {
            const Form f = Form::monomial_term(m, Scalar(1));
            out.push_back(mc.sign == 1 ? f : Scalar::i() * f);
        } else if (monomial_less(m, mc.value)) {
            const Form f = Form::monomial_term(m, Scalar(1));
            out.push_back(f + f.conj());
            out.push_back(Scalar::i() * (f - f.conj()));
        }
    }
    return out;
}

// Real basis of ((p,q) + (q,p))_R; for p = q this is the real (p,p) space.
inline std::vector<Form> real_basis_pq(int n, int p, int q) {
    std::vector<Monomial> support = basis_pq(n, p, q);
    if (p != q) {
        const auto other = basis_pq(n, q, p);
        support.insert(support.end(), other.begin(), other.end());
    }
    return real_basis(support);
}

// Real basis of all real k-forms.
inline std::vector<Form> real_basis_deg(int n, int k) {
    return real_basis(basis_of(n, k));
}

// ---------------------------------------------------------------------------
// Coordinates
// ---------------------------------------------------------------------------

// Coordinate vector of f over an explicit monomial basis; throws if the
// support of f leaves the basis.
inline std::vector<Scalar> to_coords(const Form& f,
                                     const std::vector<Monomial>& basis) {
    std::vector<Scalar> coords(basis.size());
    Form remainder = f;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        coords[k] = f.coefficient(basis[k]);
        remainder.add_term(basis[k], -coords[k]);
    }
    if (!remainder.is_zero())
        throw domain_error("to_coords: form does not lie in the given span");
    return coords;
}

inline Form from_coords(const std::vector<Scalar>& coords,
                        const std::vector<Monomial>& basis) {
    if (coords.size() != basis.size())
        throw domain_error("from_coords: size mismatch");
    Form out;
    for (std::size_t k = 0; k < basis.size(); ++k)
        out.add_term(basis[k], coords[k]);
    return out;
}

// Matrix whose columns are the given forms expressed over row_basis.
inline Matrix matrix_of_forms(const std::vector<Form>& columns,
                              const std::vector<Monomial>& row_basis) {
    Matrix m(row_basis.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto coords = to_coords(columns[c], row_basis);
        for (std::size_t r = 0; r < row_basis.size(); ++r)
            m.at(r, c) = coords[r];
    }
    return m;
}

inline Integer binomial(int top, int bottom) {
    if (bottom < 0 || bottom > top) return 0;
    Integer result = 1;
    for (int k = 0; k < bottom; ++k) {
        result *= top - k;
        result /= k + 1;
    }
    return result;
}

}  // namespace lck

#endif  // LCK_EXTERIOR_HPP
