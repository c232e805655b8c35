// Frame endomorphisms: addressing, printing, the derivation action on
// forms, the E1 / real-(1,1) dictionary and exponential series.

#include "helpers.hpp"

#include "lck/endo.hpp"
#include "lck/parser.hpp"

using lck::catalog;
using lck::endo_action;
using lck::EndoSeries;
using lck::Form;
using lck::FrameEndomorphism;
using lck::Model;
using lck::Rational;
using lck::Scalar;

TEST_CASE("entry and coefficient addressing agree") {
    FrameEndomorphism a(2);
    a.coeff(true, 2, false, 1) = Scalar::i();
    // x = X2 is frame slot 1; xi = tb1 is coframe slot n + 0 = 2.
    CHECK(a.entry(2, 1) == Scalar::i());
    CHECK(a ==
          FrameEndomorphism::single(2, true, 2, false, 1, Scalar::i()));
    CHECK_FALSE(a.is_zero());
    CHECK(FrameEndomorphism(2).is_zero());
}

TEST_CASE("printing endomorphisms") {
    CHECK(lck::print_endo(FrameEndomorphism(2)) == "0");
    CHECK(lck::print_endo(FrameEndomorphism::single(2, true, 2, false, 1,
                                                    Scalar(1))) ==
          "X2 (x) tb1");
    const FrameEndomorphism mixed =
        FrameEndomorphism::single(2, true, 1, true, 2, Scalar::i()) -
        FrameEndomorphism::single(2, false, 1, false, 2, Scalar::i());
    CHECK(lck::print_endo(mixed) == "i X1 (x) t2 - i Xb1 (x) tb2");
}

TEST_CASE("printed endomorphisms parse back") {
    auto rng = lck_test::fixed_rng(40);
    for (int trial = 0; trial < 20; ++trial) {
        FrameEndomorphism a(2);
        for (int xi = 0; xi < 4; ++xi)
            for (int x = 0; x < 4; ++x)
                if (rng() % 3 == 0)
                    a.entry(xi, x) = lck_test::random_scalar(rng);
        CHECK(lck::parse_endo(lck::print_endo(a), 2) == a);
    }
}

TEST_CASE("conjugation and the E0/E1 split") {
    auto rng = lck_test::fixed_rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        FrameEndomorphism a(2);
        for (int xi = 0; xi < 4; ++xi)
            for (int x = 0; x < 4; ++x)
                a.entry(xi, x) = lck_test::random_scalar(rng);
        CHECK(a.conj().conj() == a);
        const auto [e0, e1] = lck::split_e0_e1(a);
        CHECK(e0 + e1 == a);
        CHECK(e0.e1_part().is_zero());
        CHECK(e1.e0_part().is_zero());
    }

    // E0 swaps types (X (x) tb), E1 preserves them (X (x) t).
    const auto keep = FrameEndomorphism::single(2, true, 1, true, 1,
                                                Scalar(1));
    const auto swap = FrameEndomorphism::single(2, true, 1, false, 1,
                                                Scalar(1));
    CHECK(keep.e1_part() == keep);
    CHECK(keep.e0_part().is_zero());
    CHECK(swap.e0_part() == swap);
    CHECK(swap.e1_part().is_zero());

    const auto real_pair =
        FrameEndomorphism::single(2, true, 2, false, 1, Scalar::i()) +
        FrameEndomorphism::single(2, false, 2, true, 1, -Scalar::i());
    CHECK(real_pair.is_real());
    CHECK_FALSE(swap.is_real());
}

TEST_CASE("the calibration value of the action") {
    const Model sp = catalog("inoue_splus");
    const auto a = FrameEndomorphism::single(2, true, 2, false, 1, Scalar(1));
    // (X2 (x) tb1) . omega = thetabar^1 ^ iota_{X2}(omega) = -i tb1^tb2.
    CHECK(endo_action(sp, a, sp.omega) ==
          -Scalar::i() *
              wedge(Form::theta_bar(1), Form::theta_bar(2)));
}

TEST_CASE("the action is a degree-zero derivation") {
    auto rng = lck_test::fixed_rng(42);
    const Model sm = catalog("inoue_sm");
    for (int trial = 0; trial < 10; ++trial) {
        FrameEndomorphism a(2);
        for (int xi = 0; xi < 4; ++xi)
            for (int x = 0; x < 4; ++x)
                if (rng() % 2 == 0)
                    a.entry(xi, x) = lck_test::random_scalar(rng);
        const Form f = lck_test::random_form(rng, 2, 1);
        const Form g = lck_test::random_form(rng, 2, 2);
        CHECK(endo_action(sm, a, wedge(f, g)) ==
              wedge(endo_action(sm, a, f), g) +
                  wedge(f, endo_action(sm, a, g)));
        CHECK(endo_action(sm, a, f).is_homogeneous(1));
        // Linearity in both slots.
        const Scalar s = lck_test::random_scalar(rng);
        CHECK(endo_action(sm, s * a, f) == s * endo_action(sm, a, f));
        CHECK(endo_action(sm, a, s * f) == s * endo_action(sm, a, f));
    }
    CHECK_THROWS_AS(endo_action(sm, FrameEndomorphism(3), Form::theta(1)),
                    lck::domain_error);
}

TEST_CASE("E1 endomorphisms carry omega onto real (1,1) forms") {
    auto rng = lck_test::fixed_rng(43);
    std::vector<Model> models = {catalog("inoue_sm"), catalog("inoue_splus"),
                                 catalog("inoue_sminus"), lck::flat_model(2)};
    for (const Model& m : models)
        for (int trial = 0; trial < 8; ++trial) {
            const Form beta = lck_test::random_real_11(rng, 2);
            const FrameEndomorphism b = lck::form_to_e1(m, beta);
            CHECK(b.e0_part().is_zero());
            CHECK(b.is_real());
            CHECK(lck::e1_to_form(m, b) == beta);
        }

    const Model sm = catalog("inoue_sm");
    // e1_to_form refuses E0 contamination and non-real input.
    const auto e0_real =
        FrameEndomorphism::single(2, true, 1, false, 1, Scalar(1)) +
        FrameEndomorphism::single(2, false, 1, true, 1, Scalar(1));
    REQUIRE(e0_real.is_real());
    CHECK_THROWS_AS(lck::e1_to_form(sm, e0_real), lck::domain_error);
    const auto not_real =
        FrameEndomorphism::single(2, true, 1, true, 1, Scalar::i());
    CHECK_THROWS_AS(lck::e1_to_form(sm, not_real), lck::domain_error);
    // form_to_e1 refuses non-real and non-(1,1) input.
    CHECK_THROWS_AS(lck::form_to_e1(sm, Form::theta(1)), lck::domain_error);
    CHECK_THROWS_AS(
        lck::form_to_e1(sm, wedge(Form::theta(1), Form::theta(2)) +
                                wedge(Form::theta_bar(1), Form::theta_bar(2))),
        lck::domain_error);
}

TEST_CASE("series bookkeeping") {
    EndoSeries s = EndoSeries::zero(2);
    CHECK(s.max_order() == -1);
    CHECK(s.at(3).is_zero());
    const auto a = FrameEndomorphism::single(2, true, 1, true, 1, Scalar(1));
    s.set(2, a);
    CHECK(s.max_order() == 2);
    CHECK(s.at(2) == a);
    CHECK(s.at(1).is_zero());
    CHECK_THROWS_AS(s.set(0, a), lck::domain_error);

    const lck::FormSeries c = lck::constant_series(Form::theta(1), 3);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == Form::theta(1));
    CHECK(c[1].is_zero());
}

TEST_CASE("exponential action of a zero series is the identity") {
    const Model sm = catalog("inoue_sm");
    const auto out =
        lck::exp_action(sm, EndoSeries::zero(2), sm.omega, 5);
    REQUIRE(out.size() == 6);
    CHECK(out[0] == sm.omega);
    for (std::size_t k = 1; k < out.size(); ++k) CHECK(out[k].is_zero());
}

TEST_CASE("exponential of an order-1 generator matches the power series") {
    const Model sp = catalog("inoue_splus");
    const auto a1 =
        FrameEndomorphism::single(2, true, 2, false, 1, Scalar::i()) +
        FrameEndomorphism::single(2, false, 2, true, 1, -Scalar::i());
    EndoSeries s = EndoSeries::zero(2);
    s.set(1, a1);

    const auto out = lck::exp_action(sp, s, sp.omega, 4);
    Form power = sp.omega;
    Rational factorial = 1;
    for (int j = 0; j <= 4; ++j) {
        CHECK(out[static_cast<std::size_t>(j)] ==
              Scalar(Rational(1) / factorial) * power);
        power = endo_action(sp, a1, power);
        factorial *= (j + 1);
    }
}

TEST_CASE("exponential of a pure order-2 coefficient") {
    const Model sm = catalog("inoue_sm");
    const auto a2 = FrameEndomorphism::single(2, true, 1, true, 1, Scalar(1));
    EndoSeries s = EndoSeries::zero(2);
    s.set(2, a2);

    const auto out = lck::exp_action(sm, s, sm.omega, 4);
    CHECK(out[0] == sm.omega);
    CHECK(out[1].is_zero());
    CHECK(out[3].is_zero());
    // x(t) = a2 t^2/2, so t^2 carries a2.omega/2 and t^4 carries a2^2.omega/8.
    CHECK(out[2] == Scalar(Rational(1, 2)) * endo_action(sm, a2, sm.omega));
    CHECK(out[4] ==
          Scalar(Rational(1, 8)) *
              endo_action(sm, a2, endo_action(sm, a2, sm.omega)));
}
