// Cohomology layer: twisted Betti numbers, Dolbeault dimensions, the
// del-delbar criterion, class membership certificates, the restricted real
// complex, Bott-Chern groups and the Hopf dimension table.

#include "helpers.hpp"

#include "lck/cohomology.hpp"
#include "lck/jsonio.hpp"

using lck::catalog;
using lck::ComplexSpec;
using lck::Form;
using lck::MetricData;
using lck::Model;
using lck::Rational;
using lck::Scalar;

namespace {

const std::vector<Rational> kWeights = {Rational(0), Rational(1), Rational(-1),
                                        Rational(1, 2), Rational(-1, 2)};

std::vector<Model> all_models() {
    std::vector<Model> out;
    for (const std::string& name : lck::catalog_names())
        out.push_back(catalog(name));
    out.push_back(lck::flat_model(2));
    return out;
}

// i * theta^1 ^ thetabar^1 ^ (theta^2 + thetabar^2): real, exact in the
// restricted complex.
Form splus_a_form() {
    const Form t1tb1 = wedge(Form::theta(1), Form::theta_bar(1));
    return Scalar::i() * (wedge(t1tb1, Form::theta(2)) +
                          wedge(t1tb1, Form::theta_bar(2)));
}

// theta^1 ^ thetabar^1 ^ (theta^2 - thetabar^2): real, closed, not exact
// from (1,1) forms.
Form splus_b_form() {
    const Form t1tb1 = wedge(Form::theta(1), Form::theta_bar(1));
    return wedge(t1tb1, Form::theta(2)) - wedge(t1tb1, Form::theta_bar(2));
}

}  // namespace

TEST_CASE("twisted Betti tables") {
    const auto& betti_doc = lck_test::oracle().at("betti");
    for (const Model& m : all_models()) {
        const MetricData md = MetricData::build(m);
        for (const Rational& w : kWeights) {
            const auto report = lck::twisted_betti(m, w);
            CHECK(report.weight == w);
            REQUIRE(report.entries.size() == 5);
            const auto& expected =
                betti_doc.at(m.name).at(lck::detail::pretty_rational(w));
            for (int k = 0; k <= 4; ++k) {
                const auto& entry = report.at(k);
                INFO(m.name << " w=" << lck::detail::pretty_rational(w)
                            << " k=" << k);
                CHECK(entry.dim == expected.at(k).get<std::size_t>());
                CHECK(entry.space_dim ==
                      static_cast<std::size_t>(lck::binomial(4, k)));
                CHECK(entry.dim == entry.kernel_dim - entry.incoming_rank);
                // Harmonic representatives: right count, closed, coclosed.
                CHECK(entry.harmonic.size() == entry.dim);
                for (const Form& h : entry.harmonic) {
                    CHECK(lck::twisted_d(m, h, w).is_zero());
                    CHECK(lck::laplacian(md, h, w).is_zero());
                }
            }
        }
    }
}

TEST_CASE("Euler characteristic vanishes at every weight") {
    for (const Model& m : all_models())
        for (const Rational& w : kWeights) {
            const auto report = lck::twisted_betti(m, w);
            long long euler = 0;
            for (int k = 0; k <= 4; ++k)
                euler += (k % 2 == 0 ? 1 : -1) *
                         static_cast<long long>(report.at(k).dim);
            CHECK(euler == 0);
        }
}

TEST_CASE("Poincare duality pairs opposite weights") {
    for (const Model& m : all_models())
        for (const Rational& w : {Rational(0), Rational(1), Rational(1, 2)}) {
            const auto plus = lck::twisted_betti(m, w);
            const auto minus = lck::twisted_betti(m, -w);
            for (int k = 0; k <= 4; ++k)
                CHECK(plus.at(k).dim == minus.at(4 - k).dim);
        }
}

TEST_CASE("Dolbeault dimensions") {
    const auto& dolbeault_doc = lck_test::oracle().at("dolbeault");
    for (const Model& m : all_models())
        for (const Rational& w : {Rational(0), Rational(1), Rational(-1)}) {
            const auto& grid =
                dolbeault_doc.at(m.name).at(lck::detail::pretty_rational(w));
            for (int p = 0; p <= 2; ++p)
                for (int q = 0; q <= 2; ++q) {
                    INFO(m.name << " w=" << lck::detail::pretty_rational(w) << " ("
                                << p << "," << q << ")");
                    CHECK(lck::dolbeault_dim(m, p, q, w) ==
                          grid.at(p).at(q).get<std::size_t>());
                }
        }
}

TEST_CASE("del-delbar criterion: failure with witness on inoue_splus") {
    const auto report =
        lck::ddbar_check(catalog("inoue_splus"), 0, 2, Rational(1));
    CHECK_FALSE(report.holds);
    CHECK(report.witness ==
          Form::monomial_term(lck::Monomial{0u, 0b11u}, Scalar(1)));
    CHECK(report.note.empty());
}

TEST_CASE("del-delbar criterion: certified success cases") {
    const std::vector<std::tuple<std::string, int, int, Rational>> cases = {
        {"inoue_splus", 0, 2, Rational(-1)},
        {"inoue_sm", 0, 2, Rational(1)},
        {"inoue_sm", 1, 1, Rational(1)},
        {"flat_torus", 1, 1, Rational(0)},
    };
    for (const auto& [name, p, q, w] : cases) {
        const Model m =
            name == "flat_torus" ? lck::flat_model(2) : catalog(name);
        const auto report = lck::ddbar_check(m, p, q, w);
        INFO(name << " (" << p << "," << q << ") w="
                  << lck::detail::pretty_rational(w));
        CHECK(report.holds);
        // Re-verify every certificate pair from scratch.
        for (const auto& [alpha, gamma] : report.certificates) {
            CHECK(lck::twisted_delbar(m, alpha, w).is_zero());
            CHECK(lck::twisted_del(
                      m, lck::twisted_delbar(m, gamma, w), w) ==
                  lck::twisted_del(m, alpha, w));
        }
    }
}

TEST_CASE("del-delbar criterion: degenerate bidegrees carry notes") {
    const auto at_q0 = lck::ddbar_check(catalog("inoue_sm"), 1, 0, Rational(1));
    CHECK(at_q0.holds);
    CHECK_FALSE(at_q0.note.empty());

    const auto vacuous =
        lck::ddbar_check(catalog("inoue_sm"), 3, 1, Rational(1));
    CHECK(vacuous.holds);
    CHECK_FALSE(vacuous.note.empty());
    CHECK(vacuous.certificates.empty());
}

TEST_CASE("class verdicts in the full twisted complex") {
    const Model sm = catalog("inoue_sm");
    const Form eta_omega = wedge(sm.eta, sm.omega);

    const auto nonzero = lck::class_verdict(sm, eta_omega,
                                            ComplexSpec::full_de_rham,
                                            Rational(1));
    CHECK_FALSE(nonzero.is_zero);
    CHECK(nonzero.certificate == eta_omega);
    CHECK(lck_test::oracle().at("classes").at("sm_eta_omega_exact_in_full") ==
          false);

    const Model sp = catalog("inoue_splus");
    const Form b = splus_b_form();
    const auto zero =
        lck::class_verdict(sp, b, ComplexSpec::full_de_rham, Rational(1));
    CHECK(zero.is_zero);
    CHECK(zero.certificate.is_real());
    CHECK(lck::twisted_d(sp, zero.certificate, Rational(1)) == b);
    CHECK(lck_test::oracle().at("classes").at("splus_B_exact_in_full") ==
          true);

    // The zero form is trivially zero with an empty certificate.
    const auto trivial = lck::class_verdict(sm, Form::zero(),
                                            ComplexSpec::full_de_rham,
                                            Rational(1));
    CHECK(trivial.is_zero);
    CHECK(trivial.certificate.is_zero());
}

TEST_CASE("class verdicts in the restricted real complex") {
    const Model sp = catalog("inoue_splus");

    const Form a = splus_a_form();
    REQUIRE(a.is_real());
    const auto exact = lck::class_verdict(sp, a, ComplexSpec::restricted_real,
                                          Rational(1));
    CHECK(exact.is_zero);
    CHECK(exact.certificate.is_real());
    CHECK(exact.certificate.has_pure_bidegree(1, 1));
    CHECK(lck::twisted_d(sp, exact.certificate, Rational(1)) == a);
    for (const auto& [mono, c] : exact.certificate.terms())
        CHECK((mono.to_string() == "t1^tb2" || mono.to_string() == "t2^tb1"));
    CHECK(lck_test::oracle().at("classes").at("splus_A_exact_in_11") == true);

    const Form b = splus_b_form();
    const auto stuck = lck::class_verdict(sp, b, ComplexSpec::restricted_real,
                                          Rational(1));
    CHECK_FALSE(stuck.is_zero);
    CHECK_FALSE(stuck.certificate.is_zero());
    CHECK(stuck.certificate.is_real());
    CHECK(lck::twisted_d(sp, stuck.certificate, Rational(1)).is_zero());
    // The representative is orthogonal to everything exact from real (1,1).
    const MetricData md = MetricData::build(sp);
    for (const Form& x : lck::real_basis_pq(2, 1, 1))
        CHECK(lck::inner_product(md, stuck.certificate,
                                 lck::twisted_d(sp, x, Rational(1))) ==
              Scalar(0));
    CHECK(lck_test::oracle().at("classes").at("splus_B_exact_in_11") == false);
}

TEST_CASE("class verdict preconditions") {
    const Model sm = catalog("inoue_sm");
    // Not closed.
    try {
        lck::class_verdict(sm, Form::theta(1), ComplexSpec::full_de_rham,
                           Rational(0));
        FAIL("expected a rejection for a non-closed input");
    } catch (const lck::domain_error& e) {
        CHECK(std::string(e.what()).find("not closed") != std::string::npos);
    }
    // Closed but not homogeneous.
    const Form mixed =
        Form::one() + wedge(Form::theta(1), Form::theta_bar(1));
    REQUIRE(lck::twisted_d(sm, mixed, Rational(0)).is_zero());
    CHECK_THROWS_AS(lck::class_verdict(sm, mixed, ComplexSpec::full_de_rham,
                                       Rational(0)),
                    lck::domain_error);
    // Restricted complex only accepts (2,1)+(1,2) forms.
    const Model flat = lck::flat_model(2);
    const Form wrong_space =
        Scalar::i() * wedge(Form::theta(1), Form::theta_bar(1));
    REQUIRE(lck::twisted_d(flat, wrong_space, Rational(0)).is_zero());
    CHECK_THROWS_AS(lck::class_verdict(flat, wrong_space,
                                       ComplexSpec::restricted_real,
                                       Rational(0)),
                    lck::domain_error);
}

TEST_CASE("restricted real complex cohomology") {
    const auto& restricted_doc = lck_test::oracle().at("restricted");
    for (const std::string& name : lck::catalog_names()) {
        const Model m = catalog(name);
        const auto report = lck::restricted_complex_cohomology(m, Rational(1));
        REQUIRE(report.entries.size() == 3);
        const auto& expected = restricted_doc.at(name);
        for (int pos = 0; pos <= 2; ++pos) {
            INFO(name << " slot " << pos);
            CHECK(report.at(pos).dim == expected.at(pos).get<std::size_t>());
            CHECK(report.at(pos).harmonic.size() == report.at(pos).dim);
        }
    }

    // Middle representatives on inoue_splus are the two canonical real
    // words.
    const Model sp = catalog("inoue_splus");
    const auto report = lck::restricted_complex_cohomology(sp, Rational(1));
    const auto& middle = report.at(1).harmonic;
    REQUIRE(middle.size() == 2);
    const Form u1 =
        Form::monomial_term(lck::Monomial{0b11u, 0b01u}, Scalar(1)) +
        Form::monomial_term(lck::Monomial{0b01u, 0b11u}, Scalar(1));
    const Form u2 =
        Form::monomial_term(lck::Monomial{0b11u, 0b10u}, Scalar(1)) +
        Form::monomial_term(lck::Monomial{0b10u, 0b11u}, Scalar(1));
    CHECK(middle[0] == u1);
    CHECK(middle[1] == u2);
    const MetricData md = MetricData::build(sp);
    for (const Form& h : middle) {
        CHECK(h.is_real());
        CHECK(lck::twisted_d(sp, h, Rational(1)).is_zero());
        for (const Form& x : lck::real_basis_pq(2, 1, 1))
            CHECK(lck::inner_product(md, h,
                                     lck::twisted_d(sp, x, Rational(1))) ==
                  Scalar(0));
    }

    // eta ^ omega sits on the u2 line on inoue_sm.
    const Model sm = catalog("inoue_sm");
    const auto sm_report = lck::restricted_complex_cohomology(sm, Rational(1));
    REQUIRE(sm_report.at(1).harmonic.size() == 1);
    CHECK(Scalar(Rational(-1, 2)) * sm_report.at(1).harmonic[0] ==
          wedge(sm.eta, sm.omega));
}

TEST_CASE("Bott-Chern groups of real (1,1) forms") {
    const auto& bc_doc = lck_test::oracle().at("bott_chern");
    for (const std::string& name : lck::catalog_names()) {
        const Model m = catalog(name);
        const auto report = lck::bott_chern_11(m, Rational(1));
        const auto& expected = bc_doc.at(name);
        INFO(name);
        CHECK(report.closed_dim == expected.at("closed").get<std::size_t>());
        CHECK(report.dim == expected.at("dim").get<std::size_t>());
        CHECK(lck::emit_form(report.i_del_delbar_one) == expected.at("phi"));
        CHECK_FALSE(report.omega_in_image);
        CHECK(report.representatives.size() == report.dim);
        for (const Form& rep : report.representatives) {
            CHECK(rep.is_real());
            CHECK(rep.has_pure_bidegree(1, 1));
            CHECK(lck::twisted_d(m, rep, Rational(1)).is_zero());
        }
    }

    const auto flat = lck::bott_chern_11(lck::flat_model(2), Rational(0));
    const auto& flat_expected = bc_doc.at("flat_torus_w0");
    CHECK(flat.closed_dim == flat_expected.at("closed").get<std::size_t>());
    CHECK(flat.dim == flat_expected.at("dim").get<std::size_t>());
    CHECK(flat.i_del_delbar_one.is_zero());
    CHECK_FALSE(flat.omega_in_image);
}

TEST_CASE("the distinguished Bott-Chern generator i del delbar (1)") {
    const Form t1tb1 = wedge(Form::theta(1), Form::theta_bar(1));
    for (const std::string& name : lck::catalog_names()) {
        const Model m = catalog(name);
        for (const Rational& w :
             {Rational(1), Rational(-1), Rational(2), Rational(1, 2),
              Rational(-3)}) {
            const auto report = lck::bott_chern_11(m, w);
            const Rational coeff = (w + w * w) / 4;
            CHECK(report.i_del_delbar_one ==
                  Scalar(Rational(0), coeff) * t1tb1);
            // Direct expansion of the same operator.
            CHECK(report.i_del_delbar_one ==
                  Scalar::i() * lck::twisted_del(
                                    m, lck::twisted_delbar(m, Form::one(), w),
                                    w));
        }
    }
}

TEST_CASE("Hopf manifold Bott-Chern dimension table") {
    const auto& hopf_doc = lck_test::oracle().at("hopf");
    for (int n = 2; n <= 4; ++n) {
        const auto& row = hopf_doc.at(std::to_string(n));
        for (long long lambda = 1; lambda <= 5; ++lambda)
            CHECK(lck::hopf_bc_dim(n, lambda) ==
                  lck::Integer(row.at(lambda - 1).get<long long>()));
    }
    CHECK(lck::hopf_bc_dim(2, 1) == 2);
    CHECK(lck::hopf_bc_dim(2, 3) == 4);
    CHECK(lck::hopf_bc_dim(3, 3) == 10);
    CHECK(lck::hopf_bc_dim(5, 7) == lck::binomial(11, 4));
    CHECK_THROWS_AS(lck::hopf_bc_dim(1, 1), lck::domain_error);
    CHECK_THROWS_AS(lck::hopf_bc_dim(2, 0), lck::domain_error);
}
