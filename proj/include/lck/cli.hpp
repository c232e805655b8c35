#ifndef LCK_CLI_HPP
#define LCK_CLI_HPP

// The lckforge command-line shell.
//
// run() is the whole program (the binary's main() only forwards argv), so
// tests drive the real interface through string streams.  Reports go to
// `out`, errors to `err`; exit codes are 0 (success), 1 (domain failure:
// invalid model, malformed expression, unsolvable request), 2 (usage).
// With --json every command prints one deterministic document
// { command, model, inputs, results, certificates }.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lck/cohomology.hpp"
#include "lck/deformation.hpp"
#include "lck/endo.hpp"
#include "lck/error.hpp"
#include "lck/hodge.hpp"
#include "lck/jsonio.hpp"
#include "lck/model.hpp"
#include "lck/parser.hpp"
#include "lck/printer.hpp"

namespace lck {

namespace detail {

inline Rational parse_weight(const std::string& text) {
    Lexer lex(text);
    bool negate = false;
    if (lex.peek().kind == TokKind::minus) {
        lex.next();
        negate = true;
    }
    const Token num = lex.next();
    if (num.kind != TokKind::number)
        throw parse_error(num.line, num.column, "expected a rational weight");
    Rational r(num.value);
    if (lex.peek().kind == TokKind::slash) {
        lex.next();
        const Token denom = lex.next();
        if (denom.kind != TokKind::number || denom.value == 0)
            throw parse_error(denom.line, denom.column,
                              "expected a nonzero denominator");
        r = Rational(num.value, denom.value);
    }
    expect_end(lex);
    return negate ? Rational(-r) : r;
}

inline Model load_model(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw domain_error("cannot read model file '" + arg + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return parse_model_text(text.str());
    }
    for (const auto& name : catalog_names())
        if (name == arg) return catalog(arg);
    throw domain_error("unknown model '" + arg +
                       "': neither a readable file nor a catalog name");
}

// The single output document of --json mode.
struct CliReport {
    std::string command;
    json model = nullptr;
    json inputs = json::object();
    json results = json::object();
    json certificates = json::array();

    void emit(std::ostream& out) const {
        json doc;
        doc["command"] = command;
        doc["model"] = model;
        doc["inputs"] = inputs;
        doc["results"] = results;
        doc["certificates"] = certificates;
        out << doc.dump(2) << "\n";
    }
};

// The text printer for a class verdict; echoes the user's expression when
// the certificate is exactly the parsed input.
inline std::string verdict_text(const ClassVerdict& verdict, const Form& input,
                                const std::string& input_text) {
    const std::string shown = verdict.certificate == input
                                  ? input_text
                                  : print_form(verdict.certificate);
    if (verdict.is_zero) return "zero; primitive: " + shown;
    return "nonzero; harmonic representative: " + shown;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"lckforge: exact invariant calculus on locally conformally "
                 "Kahler models"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit one JSON document");

    std::string model_arg, form_arg, endo_arg, etadot_arg, endo_series_arg,
        etadot_series_arg, weight_arg = "1";
    int p_arg = 0, q_arg = 0, deg_arg = 0, order_arg = 0, n_arg = 0;
    long long lambda_arg = 0;
    bool restricted = false;

    const auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("model", model_arg, "model file or catalog name")
            ->required();
    };
    const auto add_weight = [&](CLI::App* cmd) {
        cmd->add_option("--weight", weight_arg,
                        "twist weight w of d_w = d - w eta^ (default 1)");
    };

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check the model axioms");
    add_model(validate_cmd);

    CLI::App* cohom_cmd =
        app.add_subcommand("cohom", "twisted de Rham cohomology");
    add_model(cohom_cmd);
    add_weight(cohom_cmd);

    CLI::App* dolbeault_cmd =
        app.add_subcommand("dolbeault", "twisted Dolbeault dimension");
    add_model(dolbeault_cmd);
    dolbeault_cmd->add_option("--p", p_arg, "holomorphic degree")->required();
    dolbeault_cmd->add_option("--q", q_arg, "antiholomorphic degree")
        ->required();
    add_weight(dolbeault_cmd);

    CLI::App* ddbar_cmd =
        app.add_subcommand("ddbar", "del-delbar lemma check at (p,q)");
    add_model(ddbar_cmd);
    ddbar_cmd->add_option("--p", p_arg, "holomorphic degree")->required();
    ddbar_cmd->add_option("--q", q_arg, "antiholomorphic degree")->required();
    add_weight(ddbar_cmd);

    CLI::App* star_cmd = app.add_subcommand("star", "Hodge star of a form");
    add_model(star_cmd);
    star_cmd->add_option("--form", form_arg, "form expression")->required();

    CLI::App* harmonic_cmd =
        app.add_subcommand("harmonic", "harmonic forms of one degree");
    add_model(harmonic_cmd);
    harmonic_cmd->add_option("--deg", deg_arg, "form degree")->required();
    add_weight(harmonic_cmd);

    CLI::App* class_cmd =
        app.add_subcommand("class", "exactness verdict for a closed form");
    add_model(class_cmd);
    class_cmd->add_option("--form", form_arg, "form expression")->required();
    class_cmd->add_flag("--restricted", restricted,
                        "decide in the restricted real complex");
    add_weight(class_cmd);

    CLI::App* ks_cmd = app.add_subcommand(
        "obstruct-ks", "first-order obstruction of a complex-structure "
                       "direction");
    add_model(ks_cmd);
    ks_cmd->add_option("--endo", endo_arg, "E0 endomorphism expression")
        ->required();
    add_weight(ks_cmd);

    CLI::App* lee_cmd = app.add_subcommand(
        "obstruct-lee", "first-order obstruction of a Lee-form direction");
    add_model(lee_cmd);
    lee_cmd->add_option("--etadot", etadot_arg, "closed real 1-form")
        ->required();
    add_weight(lee_cmd);

    CLI::App* deform_cmd = app.add_subcommand(
        "deform", "order-by-order deformation recursion");
    add_model(deform_cmd);
    deform_cmd
        ->add_option("--endo-series", endo_series_arg,
                     "series \"t[^k]: EXPR; ...\" (factorial convention)")
        ->required();
    deform_cmd->add_option("--order", order_arg, "truncation order")
        ->required();
    deform_cmd->add_option("--etadot-series", etadot_series_arg,
                           "Lee-form series (factorial convention)");
    add_weight(deform_cmd);

    CLI::App* hopf_cmd = app.add_subcommand(
        "hopf-bc", "Bott-Chern-type dimension on the Hopf manifold");
    hopf_cmd->add_option("--n", n_arg, "complex dimension")->required();
    hopf_cmd->add_option("--lambda", lambda_arg, "weight lambda")->required();

    std::vector<const char*> argv;
    argv.push_back("lckforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        detail::CliReport report;

        if (*hopf_cmd) {
            report.command = "hopf-bc";
            report.inputs["n"] = n_arg;
            report.inputs["lambda"] = lambda_arg;
            const Integer value = hopf_bc_dim(n_arg, lambda_arg);
            report.results["dim"] = value.str();
            if (json_mode)
                report.emit(out);
            else
                out << value.str() << "\n";
            return 0;
        }

        if (*validate_cmd) {
            Model model;
            if (std::filesystem::exists(model_arg)) {
                std::ifstream in(model_arg);
                if (!in)
                    throw domain_error("cannot read model file '" + model_arg +
                                       "'");
                std::ostringstream text;
                text << in.rdbuf();
                model = parse_model_text_raw(text.str());
            } else {
                model = detail::load_model(model_arg);
            }
            const ValidationReport vr = validate(model);
            report.command = "validate";
            report.model = model.name;
            report.results = emit_validation(vr);
            for (const auto& check : vr.checks)
                if (!check.pass)
                    report.certificates.push_back(json{
                        {"check", check.name}, {"witness", check.witness}});
            if (json_mode) {
                report.emit(out);
            } else {
                out << "model " << model.name << " (n = " << model.n << ")\n";
                for (const auto& check : vr.checks) {
                    out << "  check " << check.name << ": "
                        << (check.pass ? "pass" : "FAIL") << "\n";
                    if (!check.pass && !check.witness.empty())
                        out << "    witness: " << check.witness << "\n";
                }
                out << "result: " << (vr.pass() ? "valid" : "invalid") << "\n";
            }
            return vr.pass() ? 0 : 1;
        }

        const Model model = detail::load_model(model_arg);
        report.model = model.name;
        const Rational w = detail::parse_weight(weight_arg);
        const auto weight_json = [&] { return emit_rational(w); };
        const auto weight_text = [&] { return detail::pretty_rational(w); };

        if (*cohom_cmd) {
            report.command = "cohom";
            report.inputs["weight"] = weight_json();
            const CohomologyReport r = twisted_betti(model, w);
            report.results = emit_cohomology(r);
            for (const auto& e : r.entries) {
                json c;
                c["position"] = e.position;
                json harmonic = json::array();
                for (const Form& h : e.harmonic)
                    harmonic.push_back(emit_form(h));
                c["harmonic"] = std::move(harmonic);
                report.certificates.push_back(std::move(c));
            }
            if (json_mode) {
                report.emit(out);
            } else {
                out << "twisted de Rham cohomology of " << model.name
                    << ", weight " << weight_text() << "\n";
                for (const auto& e : r.entries) {
                    out << "  H^" << e.position << ": dim " << e.dim << "\n";
                    for (const Form& h : e.harmonic)
                        out << "    harmonic: " << print_form(h) << "\n";
                }
            }
            return 0;
        }

        if (*dolbeault_cmd) {
            report.command = "dolbeault";
            report.inputs["p"] = p_arg;
            report.inputs["q"] = q_arg;
            report.inputs["weight"] = weight_json();
            const std::size_t dim = dolbeault_dim(model, p_arg, q_arg, w);
            report.results["dim"] = dim;
            if (json_mode)
                report.emit(out);
            else
                out << "dolbeault (p,q) = (" << p_arg << "," << q_arg
                    << "), weight " << weight_text() << ": dim " << dim
                    << "\n";
            return 0;
        }

        if (*ddbar_cmd) {
            report.command = "ddbar";
            report.inputs["p"] = p_arg;
            report.inputs["q"] = q_arg;
            report.inputs["weight"] = weight_json();
            const DdbarReport r = ddbar_check(model, p_arg, q_arg, w);
            report.results = emit_ddbar(r);
            for (const auto& [alpha, gamma] : r.certificates)
                report.certificates.push_back(json{
                    {"alpha", emit_form(alpha)}, {"gamma", emit_form(gamma)}});
            if (json_mode) {
                report.emit(out);
            } else {
                out << "ddbar lemma at (" << p_arg << "," << q_arg
                    << "), weight " << weight_text() << ": "
                    << (r.holds ? "holds" : "fails") << "\n";
                if (!r.note.empty()) out << "  note: " << r.note << "\n";
                if (!r.holds)
                    out << "  witness alpha = " << print_form(r.witness)
                        << "\n";
                for (const auto& [alpha, gamma] : r.certificates)
                    out << "  alpha = " << print_form(alpha)
                        << "  ->  gamma = " << print_form(gamma) << "\n";
            }
            return 0;
        }

        if (*star_cmd) {
            report.command = "star";
            report.inputs["form"] = form_arg;
            const ParseContext ctx = ParseContext::for_model(model);
            const Form f = parse_form(form_arg, ctx);
            const MetricData md = MetricData::build(model);
            const Form starred = hodge_star(md, f);
            report.results["star"] = emit_form(starred);
            if (json_mode)
                report.emit(out);
            else
                out << "*(" << form_arg << ") = " << print_form(starred)
                    << "\n";
            return 0;
        }

        if (*harmonic_cmd) {
            report.command = "harmonic";
            report.inputs["deg"] = deg_arg;
            report.inputs["weight"] = weight_json();
            if (deg_arg < 0 || deg_arg > 2 * model.n)
                throw domain_error("degree must be between 0 and 2n");
            const MetricData md = MetricData::build(model);
            const auto basis = harmonic_basis(md, deg_arg, w);
            json forms = json::array();
            for (const Form& f : basis) forms.push_back(emit_form(f));
            report.results["dim"] = basis.size();
            report.results["basis"] = forms;
            report.certificates = std::move(forms);
            if (json_mode) {
                report.emit(out);
            } else {
                out << "harmonic forms of " << model.name << ", degree "
                    << deg_arg << ", weight " << weight_text() << ": dim "
                    << basis.size() << "\n";
                for (const Form& f : basis)
                    out << "  " << print_form(f) << "\n";
            }
            return 0;
        }

        if (*class_cmd) {
            report.command = "class";
            report.inputs["form"] = form_arg;
            report.inputs["restricted"] = restricted;
            report.inputs["weight"] = weight_json();
            const ParseContext ctx = ParseContext::for_model(model);
            const Form f = parse_form(form_arg, ctx);
            const ClassVerdict verdict = class_verdict(
                model, f,
                restricted ? ComplexSpec::restricted_real
                           : ComplexSpec::full_de_rham,
                w);
            report.results = emit_class(verdict);
            report.certificates.push_back(emit_form(verdict.certificate));
            if (json_mode)
                report.emit(out);
            else
                out << detail::verdict_text(verdict, f, form_arg) << "\n";
            return 0;
        }

        if (*ks_cmd) {
            report.command = "obstruct-ks";
            report.inputs["endo"] = endo_arg;
            report.inputs["weight"] = weight_json();
            const FrameEndomorphism a1 = parse_endo(endo_arg, model.n);
            const ClassVerdict verdict = first_obstruction_ks(model, a1, w);
            report.results = emit_class(verdict);
            report.certificates.push_back(emit_form(verdict.certificate));
            if (verdict.is_zero) {
                const FrameEndomorphism b1 =
                    form_to_e1(model, -verdict.certificate);
                report.results["b1"] = emit_endo(b1);
                if (!json_mode) {
                    out << "unobstructed at first order; primitive: "
                        << print_form(verdict.certificate) << "\n";
                    out << "  b1 = " << print_endo(b1) << "\n";
                    return 0;
                }
            } else if (!json_mode) {
                out << "obstructed at first order; class: "
                    << print_form(verdict.certificate) << "\n";
                return 0;
            }
            report.emit(out);
            return 0;
        }

        if (*lee_cmd) {
            report.command = "obstruct-lee";
            report.inputs["etadot"] = etadot_arg;
            report.inputs["weight"] = weight_json();
            const ParseContext ctx = ParseContext::for_model(model);
            const Form etadot = parse_form(etadot_arg, ctx);
            const ClassVerdict verdict =
                first_obstruction_lee(model, etadot, w);
            report.results = emit_class(verdict);
            report.certificates.push_back(emit_form(verdict.certificate));
            if (json_mode) {
                report.emit(out);
            } else if (verdict.is_zero) {
                out << "unobstructed at first order; primitive: "
                    << print_form(verdict.certificate) << "\n";
            } else {
                out << "obstructed at first order; class in H^3: "
                    << print_form(verdict.certificate) << "\n";
            }
            return 0;
        }

        if (*deform_cmd) {
            report.command = "deform";
            report.inputs["endo_series"] = endo_series_arg;
            report.inputs["order"] = order_arg;
            if (!etadot_series_arg.empty())
                report.inputs["etadot_series"] = etadot_series_arg;
            report.inputs["weight"] = weight_json();

            EndoSeries a = EndoSeries::zero(model.n);
            for (const auto& [k, e] :
                 parse_endo_series(endo_series_arg, model.n))
                a.set(k, e);
            std::optional<FormSeries> etadot;
            if (!etadot_series_arg.empty()) {
                const ParseContext ctx = ParseContext::for_model(model);
                FormSeries series;
                for (const auto& [k, f] :
                     parse_form_series(etadot_series_arg, ctx)) {
                    if (static_cast<std::size_t>(k) >= series.size())
                        series.resize(static_cast<std::size_t>(k) + 1);
                    series[static_cast<std::size_t>(k)] = f;
                }
                etadot = std::move(series);
            }
            const DeformationReport r =
                solve_lck_series(model, a, etadot, order_arg, w);
            report.results = emit_deformation(r);
            if (r.obstructed)
                report.certificates.push_back(
                    emit_form(r.harmonic_obstruction));
            else
                for (const auto& step : r.solved)
                    report.certificates.push_back(emit_endo(step.b));
            if (json_mode) {
                report.emit(out);
            } else if (r.obstructed) {
                out << "obstructed at order " << r.failing_order << "\n";
                out << "  obstruction: " << print_form(r.obstruction) << "\n";
                out << "  harmonic part: "
                    << print_form(r.harmonic_obstruction) << "\n";
                out << "  class location: " << r.class_location << "\n";
            } else {
                out << "solved to order " << r.order << "\n";
                for (const auto& step : r.solved)
                    out << "  k=" << step.k << ": b = " << print_endo(step.b)
                        << "; beta = " << print_form(step.beta) << "\n";
                for (std::size_t k = 0; k < r.omega_series.size(); ++k)
                    out << "  omega[t^" << k
                        << "] = " << print_form(r.omega_series[k]) << "\n";
            }
            return 0;
        }

        err << "usage error: no command\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lck

#endif  // LCK_CLI_HPP
