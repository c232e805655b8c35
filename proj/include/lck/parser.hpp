#ifndef LCK_PARSER_HPP
#define LCK_PARSER_HPP

// Text front end: expressions, endomorphisms, series specifications, and
// model files.
//
// Form grammar (everything is a form; scalars are degree-0 forms and
// juxtaposition, '*', and '^' all mean wedge):
//
//   expr    :=  ['-'] product (('+' | '-') product)*
//   product :=  factor (['^' | '*'] factor)*
//   factor  :=  NUMBER ['/' NUMBER]          rational scalar
//            |  'i'                          imaginary unit
//            |  't<k>' | 'tb<k>'             coframe covectors
//            |  'eta' | 'omega'              named forms, when the context
//                                            provides them
//            |  '(' expr ')'
//
// "1/2i" is rejected at the lexer level (a number directly followed by a
// name is ambiguous — write "1/2 i"); the canonical printer always emits
// the space.
//
// Endomorphism grammar:
//
//   endo  :=  ['-'] term (('+' | '-') term)*
//   term  :=  scalar-factors  ('X<a>' | 'Xb<a>')  '(x)'  ('t<b>' | 'tb<b>')
//
// Series specifications are semicolon-separated clauses "t[^k]: EXPR" with
// "t" meaning "t^1"; duplicate orders are rejected.
//
// Model files are line oriented:
//
//   # comment
//   model <name>
//   generators <n>
//   d t<k> = <degree-2 expr>     (one line per generator)
//   eta = <degree-1 expr>
//   omega = <degree-2 expr>
//
// "model" and "generators" must come first, in that order; the remaining
// sections may be interleaved but must all be present.  All parse errors
// carry the 1-based line and column of the offending token.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "lck/endo.hpp"
#include "lck/error.hpp"
#include "lck/exterior.hpp"
#include "lck/model.hpp"
#include "lck/scalar.hpp"

namespace lck {

// Names and bounds available to the expression being parsed.  n bounds the
// generator indices; eta/omega resolve the named atoms when non-null (they
// are null inside model files, where the sections are still being defined).
struct ParseContext {
    int n = 0;
    const Form* eta = nullptr;
    const Form* omega = nullptr;

    static ParseContext for_model(const Model& m) {
        return ParseContext{m.n, &m.eta, &m.omega};
    }
};

namespace detail {

enum class TokKind {
    number,
    ident,
    plus,
    minus,
    wedge,
    star,
    slash,
    lparen,
    rparen,
    tensor,  // "(x)"
    equals,
    colon,
    semicolon,
    end,
};

struct Token {
    TokKind kind = TokKind::end;
    std::string text;
    Integer value = 0;
    int line = 1;
    int column = 1;
};

inline bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
  public:
    explicit Lexer(std::string_view text, int first_line = 1)
        : text_(text), line_(first_line) {
        scan();
    }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        scan();
        return t;
    }

  private:
    void scan() {
        // Skip whitespace and comments.
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                step();
            } else {
                break;
            }
        }
        current_ = Token{};
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) return;

        const char c = text_[pos_];
        if (is_digit(c)) {
            std::string digits;
            while (pos_ < text_.size() && is_digit(text_[pos_])) {
                digits += text_[pos_];
                step();
            }
            if (pos_ < text_.size() && is_ident_start(text_[pos_]))
                throw parse_error(
                    current_.line, current_.column,
                    "ambiguous juxtaposition of a number and a name; "
                    "separate them with a space (e.g. \"1/2 i\")");
            current_.kind = TokKind::number;
            current_.text = digits;
            current_.value = Integer(digits);
            return;
        }
        if (is_ident_start(c)) {
            std::string name;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                name += text_[pos_];
                step();
            }
            current_.kind = TokKind::ident;
            current_.text = std::move(name);
            return;
        }
        if (c == '(' && pos_ + 2 < text_.size() && text_[pos_ + 1] == 'x' &&
            text_[pos_ + 2] == ')') {
            step();
            step();
            step();
            current_.kind = TokKind::tensor;
            current_.text = "(x)";
            return;
        }
        switch (c) {
            case '+': current_.kind = TokKind::plus; break;
            case '-': current_.kind = TokKind::minus; break;
            case '^': current_.kind = TokKind::wedge; break;
            case '*': current_.kind = TokKind::star; break;
            case '/': current_.kind = TokKind::slash; break;
            case '(': current_.kind = TokKind::lparen; break;
            case ')': current_.kind = TokKind::rparen; break;
            case '=': current_.kind = TokKind::equals; break;
            case ':': current_.kind = TokKind::colon; break;
            case ';': current_.kind = TokKind::semicolon; break;
            default:
                throw parse_error(line_, column_,
                                  std::string("unexpected character '") + c +
                                      "'");
        }
        current_.text = std::string(1, c);
        step();
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int column_ = 1;
    Token current_;
};

// Classification of identifier atoms.
struct IdentInfo {
    enum Kind { theta, theta_bar, vec, vec_bar, word } kind = word;
    int index = 0;
};

inline IdentInfo classify_ident(const std::string& s) {
    const auto parse_index = [](std::string_view digits) -> std::optional<int> {
        if (digits.empty() || digits.size() > 3) return std::nullopt;
        int value = 0;
        for (const char c : digits) {
            if (!is_digit(c)) return std::nullopt;
            value = value * 10 + (c - '0');
        }
        return value;
    };
    IdentInfo info;
    const auto tag = [&](IdentInfo::Kind kind, std::size_t prefix) {
        if (const auto idx = parse_index(std::string_view(s).substr(prefix))) {
            info.kind = kind;
            info.index = *idx;
            return true;
        }
        return false;
    };
    if (s.size() > 2 && s[0] == 't' && s[1] == 'b' &&
        tag(IdentInfo::theta_bar, 2))
        return info;
    if (s.size() > 1 && s[0] == 't' && tag(IdentInfo::theta, 1)) return info;
    if (s.size() > 2 && s[0] == 'X' && s[1] == 'b' && tag(IdentInfo::vec_bar, 2))
        return info;
    if (s.size() > 1 && s[0] == 'X' && tag(IdentInfo::vec, 1)) return info;
    return info;
}

class ExpressionParser {
  public:
    ExpressionParser(Lexer& lex, const ParseContext& ctx)
        : lex_(lex), ctx_(ctx) {}

    Form parse_expression() {
        bool negate = false;
        if (lex_.peek().kind == TokKind::minus) {
            lex_.next();
            negate = true;
        }
        Form f = parse_product();
        if (negate) f = -f;
        while (lex_.peek().kind == TokKind::plus ||
               lex_.peek().kind == TokKind::minus) {
            const Token op = lex_.next();
            const Form g = parse_product();
            if (op.kind == TokKind::plus)
                f += g;
            else
                f -= g;
        }
        return f;
    }

    Form parse_factor() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case TokKind::number: {
                lex_.next();
                Rational r(t.value);
                if (lex_.peek().kind == TokKind::slash) {
                    lex_.next();
                    const Token denom = expect(TokKind::number,
                                               "expected a denominator");
                    if (denom.value == 0)
                        throw parse_error(denom.line, denom.column,
                                          "zero denominator in rational "
                                          "literal");
                    r = Rational(t.value, denom.value);
                }
                return Form::constant(Scalar(r));
            }
            case TokKind::lparen: {
                lex_.next();
                Form inner = parse_expression();
                expect(TokKind::rparen, "expected ')'");
                return inner;
            }
            case TokKind::ident:
                return parse_named_atom();
            default:
                throw parse_error(t.line, t.column,
                                  "expected a term (number, covector, or "
                                  "parenthesised expression)");
        }
    }

    // True when the upcoming token can begin a factor — the juxtaposition
    // test of the product loop.
    bool at_factor_start() const {
        switch (lex_.peek().kind) {
            case TokKind::number:
            case TokKind::lparen:
            case TokKind::ident:
                return true;
            default:
                return false;
        }
    }

  private:
    Form parse_product() {
        Form f = parse_factor();
        while (true) {
            const TokKind k = lex_.peek().kind;
            if (k == TokKind::wedge || k == TokKind::star) {
                lex_.next();
                f = wedge(f, parse_factor());
            } else if (at_factor_start()) {
                f = wedge(f, parse_factor());
            } else {
                break;
            }
        }
        return f;
    }

    Form parse_named_atom() {
        const Token t = lex_.next();
        const IdentInfo info = classify_ident(t.text);
        switch (info.kind) {
            case IdentInfo::theta:
                check_generator_index(t, info.index);
                return Form::theta(info.index);
            case IdentInfo::theta_bar:
                check_generator_index(t, info.index);
                return Form::theta_bar(info.index);
            case IdentInfo::vec:
            case IdentInfo::vec_bar:
                throw parse_error(t.line, t.column,
                                  "frame vector '" + t.text +
                                      "' cannot appear in a form expression");
            case IdentInfo::word:
                break;
        }
        if (t.text == "i") return Form::constant(Scalar::i());
        if (t.text == "eta") {
            if (ctx_.eta != nullptr) return *ctx_.eta;
            throw parse_error(t.line, t.column,
                              "the name 'eta' is not available here");
        }
        if (t.text == "omega") {
            if (ctx_.omega != nullptr) return *ctx_.omega;
            throw parse_error(t.line, t.column,
                              "the name 'omega' is not available here");
        }
        throw parse_error(t.line, t.column, "unknown name '" + t.text + "'");
    }

    void check_generator_index(const Token& t, int index) const {
        if (index < 1)
            throw parse_error(t.line, t.column,
                              "generator index must be at least 1");
        if (ctx_.n > 0 && index > ctx_.n)
            throw parse_error(t.line, t.column,
                              "generator index out of range (the model has " +
                                  std::to_string(ctx_.n) + " generators)");
    }

    Lexer& lex_;
    const ParseContext& ctx_;

    Token expect(TokKind kind, const std::string& message) {
        const Token t = lex_.peek();
        if (t.kind != kind) throw parse_error(t.line, t.column, message);
        return lex_.next();
    }
};

inline void expect_end(Lexer& lex) {
    const Token t = lex.peek();
    if (t.kind != TokKind::end)
        throw parse_error(t.line, t.column, "unexpected trailing input");
}

// One endomorphism term: scalar factors, a frame vector, "(x)", a covector.
inline FrameEndomorphism parse_endo_term(Lexer& lex, int n) {
    const ParseContext scalar_ctx{n, nullptr, nullptr};
    ExpressionParser scalars(lex, scalar_ctx);

    Form coefficient = Form::one();
    while (true) {
        const Token t = lex.peek();
        const bool scalar_start =
            t.kind == TokKind::number || t.kind == TokKind::lparen ||
            (t.kind == TokKind::ident && t.text == "i");
        if (!scalar_start) break;
        coefficient = wedge(coefficient, scalars.parse_factor());
        if (lex.peek().kind == TokKind::star) lex.next();
    }
    if (!coefficient.is_zero() && !coefficient.is_homogeneous(0)) {
        const Token t = lex.peek();
        throw parse_error(t.line, t.column,
                          "endomorphism coefficients must be scalars");
    }
    const Scalar c = coefficient.coefficient(Monomial());

    // A literal zero scalar is a complete (zero) term on its own.
    if (coefficient.is_zero() && lex.peek().kind != TokKind::ident)
        return FrameEndomorphism(n);

    const Token vec = lex.next();
    const IdentInfo vec_info =
        vec.kind == TokKind::ident ? classify_ident(vec.text) : IdentInfo{};
    if (vec.kind != TokKind::ident ||
        (vec_info.kind != IdentInfo::vec && vec_info.kind != IdentInfo::vec_bar))
        throw parse_error(vec.line, vec.column,
                          "expected a frame vector X<k> or Xb<k>");
    if (vec_info.index < 1 || (n > 0 && vec_info.index > n))
        throw parse_error(vec.line, vec.column,
                          "frame vector index out of range");

    const Token marker = lex.next();
    if (marker.kind != TokKind::tensor)
        throw parse_error(marker.line, marker.column,
                          "expected '(x)' after the frame vector");

    const Token cov = lex.next();
    const IdentInfo cov_info =
        cov.kind == TokKind::ident ? classify_ident(cov.text) : IdentInfo{};
    if (cov.kind != TokKind::ident || (cov_info.kind != IdentInfo::theta &&
                                       cov_info.kind != IdentInfo::theta_bar))
        throw parse_error(cov.line, cov.column,
                          "expected a coframe covector t<k> or tb<k>");
    if (cov_info.index < 1 || (n > 0 && cov_info.index > n))
        throw parse_error(cov.line, cov.column,
                          "covector index out of range");

    return FrameEndomorphism::single(
        n, vec_info.kind == IdentInfo::vec, vec_info.index,
        cov_info.kind == IdentInfo::theta, cov_info.index, c);
}

inline FrameEndomorphism parse_endo_expr(Lexer& lex, int n) {
    FrameEndomorphism out(n);
    bool negate = false;
    if (lex.peek().kind == TokKind::minus) {
        lex.next();
        negate = true;
    }
    FrameEndomorphism term = parse_endo_term(lex, n);
    out += negate ? -term : term;
    while (lex.peek().kind == TokKind::plus ||
           lex.peek().kind == TokKind::minus) {
        const Token op = lex.next();
        term = parse_endo_term(lex, n);
        out += op.kind == TokKind::minus ? -term : term;
    }
    return out;
}

// Series driver: clauses "t[^k]: <payload>" separated by ';'.
template <typename Payload, typename ClauseFn>
std::map<int, Payload> parse_series_spec(Lexer& lex, ClauseFn&& parse_payload) {
    std::map<int, Payload> out;
    while (true) {
        const Token head = lex.next();
        if (head.kind != TokKind::ident || head.text != "t")
            throw parse_error(head.line, head.column,
                              "expected a series clause \"t[^k]: ...\"");
        int order = 1;
        if (lex.peek().kind == TokKind::wedge) {
            lex.next();
            const Token num = lex.next();
            if (num.kind != TokKind::number)
                throw parse_error(num.line, num.column,
                                  "expected a series order after '^'");
            if (num.value < 1 || num.value > 64)
                throw parse_error(num.line, num.column,
                                  "series order must be between 1 and 64");
            order = static_cast<int>(num.value);
        }
        const Token colon = lex.next();
        if (colon.kind != TokKind::colon)
            throw parse_error(colon.line, colon.column,
                              "expected ':' in series clause");
        if (out.count(order))
            throw parse_error(head.line, head.column,
                              "duplicate order in series specification");
        out.emplace(order, parse_payload());
        if (lex.peek().kind == TokKind::semicolon) {
            lex.next();
            continue;
        }
        expect_end(lex);
        return out;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

inline Form parse_form(std::string_view text, const ParseContext& ctx) {
    detail::Lexer lex(text);
    detail::ExpressionParser parser(lex, ctx);
    const Form f = parser.parse_expression();
    detail::expect_end(lex);
    return f;
}

inline FrameEndomorphism parse_endo(std::string_view text, int n) {
    detail::Lexer lex(text);
    FrameEndomorphism e = detail::parse_endo_expr(lex, n);
    detail::expect_end(lex);
    return e;
}

inline std::map<int, Form> parse_form_series(std::string_view text,
                                             const ParseContext& ctx) {
    detail::Lexer lex(text);
    detail::ExpressionParser parser(lex, ctx);
    return detail::parse_series_spec<Form>(
        lex, [&] { return parser.parse_expression(); });
}

inline std::map<int, FrameEndomorphism> parse_endo_series(
    std::string_view text, int n) {
    detail::Lexer lex(text);
    return detail::parse_series_spec<FrameEndomorphism>(
        lex, [&] { return detail::parse_endo_expr(lex, n); });
}

// ---------------------------------------------------------------------------
// Model files
// ---------------------------------------------------------------------------

namespace detail {

inline Form parse_section_form(const std::string& line, int line_no, int n) {
    Lexer lex(line, line_no);
    lex.next();  // section keyword, or 'd'
    if (lex.peek().kind == TokKind::ident &&
        classify_ident(lex.peek().text).kind == IdentInfo::theta)
        lex.next();  // the t<k> of a structure line
    const Token eq = lex.next();
    if (eq.kind != TokKind::equals)
        throw parse_error(eq.line, eq.column, "expected '='");
    const ParseContext ctx{n, nullptr, nullptr};
    ExpressionParser parser(lex, ctx);
    const Form f = parser.parse_expression();
    expect_end(lex);
    return f;
}

}  // namespace detail

// Parses a model file without validating the structure equations.
inline Model parse_model_text_raw(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;

    std::optional<std::string> name;
    std::optional<int> n;
    std::map<int, Form> structure;
    std::optional<Form> eta;
    std::optional<Form> omega;

    while (std::getline(stream, line)) {
        ++line_no;
        detail::Lexer lex(line, line_no);
        const detail::Token head = lex.peek();
        if (head.kind == detail::TokKind::end) continue;
        if (head.kind != detail::TokKind::ident)
            throw parse_error(head.line, head.column,
                              "expected a section keyword");

        if (head.text == "model") {
            if (name)
                throw parse_error(head.line, head.column,
                                  "duplicate section model");
            lex.next();
            const detail::Token t = lex.next();
            if (t.kind != detail::TokKind::ident)
                throw parse_error(t.line, t.column, "expected a model name");
            detail::expect_end(lex);
            name = t.text;
            continue;
        }
        if (!name)
            throw parse_error(head.line, head.column,
                              "section model must come first");

        if (head.text == "generators") {
            if (n)
                throw parse_error(head.line, head.column,
                                  "duplicate section generators");
            lex.next();
            const detail::Token t = lex.next();
            if (t.kind != detail::TokKind::number)
                throw parse_error(t.line, t.column,
                                  "expected the number of generators");
            if (t.value < 1 || t.value > 16)
                throw parse_error(t.line, t.column,
                                  "generators must be between 1 and 16");
            detail::expect_end(lex);
            n = static_cast<int>(t.value);
            continue;
        }
        if (!n)
            throw parse_error(head.line, head.column,
                              "section generators must come before this line");

        if (head.text == "d") {
            detail::Lexer probe(line, line_no);
            probe.next();
            const detail::Token gen = probe.next();
            const detail::IdentInfo info =
                gen.kind == detail::TokKind::ident
                    ? detail::classify_ident(gen.text)
                    : detail::IdentInfo{};
            if (info.kind != detail::IdentInfo::theta)
                throw parse_error(gen.line, gen.column,
                                  "expected a generator t<k> after 'd'");
            if (info.index < 1 || info.index > *n)
                throw parse_error(gen.line, gen.column,
                                  "generator index out of range (the model "
                                  "has " +
                                      std::to_string(*n) + " generators)");
            if (structure.count(info.index))
                throw parse_error(gen.line, gen.column,
                                  "duplicate structure equation for t" +
                                      std::to_string(info.index));
            const Form f = detail::parse_section_form(line, line_no, *n);
            if (!f.is_zero() && !f.is_homogeneous(2))
                throw parse_error(head.line, head.column,
                                  "structure equation must have degree 2");
            structure.emplace(info.index, f);
            continue;
        }
        if (head.text == "eta") {
            if (eta)
                throw parse_error(head.line, head.column,
                                  "duplicate section eta");
            const Form f = detail::parse_section_form(line, line_no, *n);
            if (!f.is_zero() && !f.is_homogeneous(1))
                throw parse_error(head.line, head.column,
                                  "eta must have degree 1");
            eta = f;
            continue;
        }
        if (head.text == "omega") {
            if (omega)
                throw parse_error(head.line, head.column,
                                  "duplicate section omega");
            const Form f = detail::parse_section_form(line, line_no, *n);
            if (!f.is_zero() && !f.is_homogeneous(2))
                throw parse_error(head.line, head.column,
                                  "omega must have degree 2");
            omega = f;
            continue;
        }
        throw parse_error(head.line, head.column,
                          "unrecognized directive '" + head.text + "'");
    }

    const int end_line = line_no + 1;
    if (!name) throw parse_error(end_line, 1, "missing section model");
    if (!n) throw parse_error(end_line, 1, "missing section generators");
    for (int k = 1; k <= *n; ++k)
        if (!structure.count(k))
            throw parse_error(end_line, 1,
                              "missing structure equation for t" +
                                  std::to_string(k));
    if (!eta) throw parse_error(end_line, 1, "missing section eta");
    if (!omega) throw parse_error(end_line, 1, "missing section omega");

    Model m;
    m.name = *name;
    m.n = *n;
    for (int k = 1; k <= *n; ++k) m.d_theta.push_back(structure.at(k));
    m.eta = *eta;
    m.omega = *omega;
    return m;
}

// Parses and validates; invalid models raise a domain_error naming every
// failing check together with its witness.
inline Model parse_model_text(std::string_view text) {
    Model m = parse_model_text_raw(text);
    const ValidationReport report = validate(m);
    if (!report.pass()) {
        std::string message = "model '" + m.name + "' fails validation:";
        for (const auto& check : report.checks) {
            if (check.pass) continue;
            message += " [" + check.name;
            if (!check.witness.empty()) message += ": " + check.witness;
            message += "]";
        }
        throw domain_error(message);
    }
    return m;
}

}  // namespace lck

#endif  // LCK_PARSER_HPP
