#ifndef LCK_TESTS_HELPERS_HPP
#define LCK_TESTS_HELPERS_HPP

// Shared test utilities: source-tree paths, the frozen oracle document,
// deterministic random form/endomorphism pools, and Catch2 string makers so
// failed assertions print canonical text instead of opaque objects.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include "lck/endo.hpp"
#include "lck/exterior.hpp"
#include "lck/model.hpp"
#include "lck/printer.hpp"
#include "lck/scalar.hpp"

namespace lck_test {

inline std::string source_path(const std::string& relative) {
    return std::string(LCK_SOURCE_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// The frozen output of the independent Python oracle
// (tests/oracle/expected.json); every derived golden in the suite is
// cross-checked against it.
inline const nlohmann::ordered_json& oracle() {
    static const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(
        read_file(source_path("tests/oracle/expected.json")));
    return doc;
}

// ---------------------------------------------------------------------------
// Deterministic random pools
// ---------------------------------------------------------------------------

inline std::mt19937 fixed_rng(unsigned salt = 0) {
    return std::mt19937(0x1c4f0e5eu ^ salt);
}

inline lck::Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> numerator(-4, 4);
    std::uniform_int_distribution<int> denominator(1, 3);
    return lck::Rational(numerator(rng), denominator(rng));
}

inline lck::Scalar random_scalar(std::mt19937& rng) {
    return lck::Scalar(random_rational(rng), random_rational(rng));
}

// Dense random form of one total degree.
inline lck::Form random_form(std::mt19937& rng, int n, int degree) {
    lck::Form out;
    for (const lck::Monomial& mono : lck::basis_of(n, degree))
        out.add_term(mono, random_scalar(rng));
    return out;
}

// Random real (1,1) form (rational coordinates over the canonical real
// basis).
inline lck::Form random_real_11(std::mt19937& rng, int n) {
    lck::Form out;
    for (const lck::Form& b : lck::real_basis_pq(n, 1, 1))
        out += lck::Scalar(random_rational(rng)) * b;
    return out;
}

// Random real E0 endomorphism (a complex-structure direction).
inline lck::FrameEndomorphism random_e0_real(std::mt19937& rng, int n) {
    lck::FrameEndomorphism out(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const lck::Scalar c = random_scalar(rng);
            out.coeff(true, a, false, b) = c;
            out.coeff(false, a, true, b) = c.conj();
        }
    return out;
}

}  // namespace lck_test

// ---------------------------------------------------------------------------
// Catch2 printers
// ---------------------------------------------------------------------------

namespace Catch {

template <>
struct StringMaker<lck::Scalar> {
    static std::string convert(const lck::Scalar& value) {
        return lck::print_scalar(value);
    }
};

template <>
struct StringMaker<lck::Form> {
    static std::string convert(const lck::Form& value) {
        return lck::print_form(value);
    }
};

template <>
struct StringMaker<lck::Monomial> {
    static std::string convert(const lck::Monomial& value) {
        return value.to_string();
    }
};

template <>
struct StringMaker<lck::FrameEndomorphism> {
    static std::string convert(const lck::FrameEndomorphism& value) {
        return lck::print_endo(value);
    }
};

}  // namespace Catch

#endif  // LCK_TESTS_HELPERS_HPP
