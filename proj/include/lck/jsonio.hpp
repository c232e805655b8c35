#ifndef LCK_JSONIO_HPP
#define LCK_JSONIO_HPP

// JSON emission for every report type.  All output is deterministic:
// object keys keep insertion order (nlohmann::ordered_json), forms are
// emitted as arrays of [monomial, scalar] pairs in canonical monomial
// order, and scalars always spell both components ("p/q+r/s*i").  The zero
// form is the empty array.

#include <string>

#include "json.hpp"

#include "lck/cohomology.hpp"
#include "lck/deformation.hpp"
#include "lck/endo.hpp"
#include "lck/exterior.hpp"
#include "lck/model.hpp"
#include "lck/scalar.hpp"

namespace lck {

using json = nlohmann::ordered_json;

inline std::string emit_rational(const Rational& r) {
    return rational_to_string(r);
}

inline json emit_form(const Form& f) {
    json out = json::array();
    for (const auto& [mono, coeff] : f.terms())
        out.push_back(json::array({mono.to_string(), coeff.to_string()}));
    return out;
}

inline json emit_endo(const FrameEndomorphism& a) {
    json out = json::array();
    for (int x = 0; x < 2 * a.n; ++x)
        for (int xi = 0; xi < 2 * a.n; ++xi) {
            const Scalar& coeff = a.entry(xi, x);
            if (coeff.is_zero()) continue;
            const std::string term =
                (x < a.n ? "X" + std::to_string(x + 1)
                         : "Xb" + std::to_string(x - a.n + 1)) +
                "(x)" +
                (xi < a.n ? "t" + std::to_string(xi + 1)
                          : "tb" + std::to_string(xi - a.n + 1));
            out.push_back(json::array({term, coeff.to_string()}));
        }
    return out;
}

inline json emit_validation(const ValidationReport& report) {
    json checks = json::array();
    for (const auto& check : report.checks) {
        json entry;
        entry["name"] = check.name;
        entry["pass"] = check.pass;
        if (!check.witness.empty()) entry["witness"] = check.witness;
        checks.push_back(std::move(entry));
    }
    json out;
    out["pass"] = report.pass();
    out["checks"] = std::move(checks);
    return out;
}

inline json emit_cohomology(const CohomologyReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json entry;
        entry["position"] = e.position;
        entry["space_dim"] = e.space_dim;
        entry["kernel_dim"] = e.kernel_dim;
        entry["incoming_rank"] = e.incoming_rank;
        entry["dim"] = e.dim;
        json harmonic = json::array();
        for (const Form& h : e.harmonic) harmonic.push_back(emit_form(h));
        entry["harmonic"] = std::move(harmonic);
        entries.push_back(std::move(entry));
    }
    json out;
    out["complex"] = report.complex_id;
    out["weight"] = emit_rational(report.weight);
    out["entries"] = std::move(entries);
    return out;
}

inline json emit_ddbar(const DdbarReport& report) {
    json out;
    out["holds"] = report.holds;
    out["p"] = report.p;
    out["q"] = report.q;
    out["weight"] = emit_rational(report.weight);
    if (!report.note.empty()) out["note"] = report.note;
    if (!report.holds) out["witness"] = emit_form(report.witness);
    json certificates = json::array();
    for (const auto& [alpha, gamma] : report.certificates)
        certificates.push_back(
            json{{"alpha", emit_form(alpha)}, {"gamma", emit_form(gamma)}});
    out["certificates"] = std::move(certificates);
    return out;
}

inline json emit_class(const ClassVerdict& verdict) {
    json out;
    out["is_zero"] = verdict.is_zero;
    out[verdict.is_zero ? "primitive" : "harmonic_representative"] =
        emit_form(verdict.certificate);
    return out;
}

inline json emit_bott_chern(const BottChernReport& report) {
    json out;
    out["weight"] = emit_rational(report.weight);
    out["closed_dim"] = report.closed_dim;
    out["dim"] = report.dim;
    json reps = json::array();
    for (const Form& f : report.representatives) reps.push_back(emit_form(f));
    out["representatives"] = std::move(reps);
    out["i_del_delbar_one"] = emit_form(report.i_del_delbar_one);
    out["omega_in_image"] = report.omega_in_image;
    return out;
}

inline json emit_deformation(const DeformationReport& report) {
    json out;
    out["obstructed"] = report.obstructed;
    out["order"] = report.order;
    json solved = json::array();
    for (const auto& step : report.solved) {
        json entry;
        entry["k"] = step.k;
        entry["b"] = emit_endo(step.b);
        entry["beta"] = emit_form(step.beta);
        solved.push_back(std::move(entry));
    }
    out["solved"] = std::move(solved);
    json series = json::array();
    for (const Form& f : report.omega_series) series.push_back(emit_form(f));
    out["omega_series"] = std::move(series);
    if (report.obstructed) {
        out["failing_order"] = report.failing_order;
        out["obstruction"] = emit_form(report.obstruction);
        out["harmonic_obstruction"] = emit_form(report.harmonic_obstruction);
        out["class_location"] = report.class_location;
    }
    return out;
}

}  // namespace lck

#endif  // LCK_JSONIO_HPP
