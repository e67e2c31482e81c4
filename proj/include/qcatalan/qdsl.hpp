/*
   Copyright 2026 The qcatalan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QCATALAN_QDSL_HPP
#define QCATALAN_QDSL_HPP

// A small expression language for q-identities.
//
//   expr      := term (('+' | '-') term)*
//   term      := unary (('*' | '/') unary)*
//   unary     := '-' unary | power
//   power     := atom ('^' expfactor)?
//   expfactor := '-' expfactor | atom ('^' expfactor)?
//   atom      := number | identifier | call | '(' expr ')'
//   call      := sum '(' ident '=' expr '..' expr ',' expr ')'
//              | (qbin | qcat | legendre3 | floor) '(' expr (',' expr)* ')'
//
// Identifiers other than q are integer variables. q-free subtrees evaluate to
// rationals; exponents, bounds and q-binomial arguments must be integral.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcatalan/cyclotomic.hpp"
#include "qcatalan/qcomb.hpp"
#include "qcatalan/report.hpp"
#include "qcatalan/ring.hpp"

namespace qcat::dsl {

/// Syntax error at a 1-based line and column.
class ParseError : public std::invalid_argument {
  public:
    ParseError(int line, int column, std::set<std::string> expected, const std::string& found)
        : std::invalid_argument(format(line, column, expected, found)),
          line_(line),
          column_(column),
          expected_(std::move(expected)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::set<std::string>& expected() const { return expected_; }

  private:
    static std::string format(int line, int column, const std::set<std::string>& expected, const std::string& found) {
        std::string msg = std::to_string(line) + ":" + std::to_string(column) + ": syntax error: expected ";
        bool first = true;
        for (const auto& e : expected) {
            msg += (first ? "" : " | ") + e;
            first = false;
        }
        return msg + ", found " + found;
    }

    int line_;
    int column_;
    std::set<std::string> expected_;
};

/// Failure while evaluating a well-formed expression.
class EvalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class NodeKind { integer, rational, variable, neg, add, sub, mul, div, pow, sum, qbin, qcat, legendre3, floor };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    NodeKind kind;
    Rational value;             // integer / rational literals
    std::string name;           // variable, or the bound variable of a sum
    std::vector<ExprPtr> args;  // operands; a sum holds {lo, hi, body}
    int line = 1;
    int column = 1;
};

inline ExprPtr make_node(NodeKind kind, std::vector<ExprPtr> args, int line, int column, std::string name = {}, Rational value = {}) {
    return std::make_shared<const Expr>(Expr{kind, std::move(value), std::move(name), std::move(args), line, column});
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, equals, dots, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

inline std::string describe(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::equals: return "'='";
        case Tok::dots: return "'..'";
        case Tok::end: return "end of input";
    }
    return "?";
}

inline std::vector<Token> tokenize(std::string_view src, int line = 1, int column = 1) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t c = 0; c < count; ++c, ++i) {
            if (src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, col = column;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            out.push_back({Tok::number, std::string(src.substr(i, j - i)), l, col});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), l, col});
            advance(j - i);
            continue;
        }
        if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
            out.push_back({Tok::dots, "..", l, col});
            advance(2);
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case ',': kind = Tok::comma; break;
            case '=': kind = Tok::equals; break;
            default:
                throw ParseError(l, col, {"number", "identifier", "operator"}, "'" + std::string(1, c) + "'");
        }
        out.push_back({kind, std::string(1, c), l, col});
        advance(1);
    }
    out.push_back({Tok::end, "", line, column});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

inline const std::set<std::string>& function_names() {
    static const std::set<std::string> names{"sum", "qbin", "qcat", "legendre3", "floor"};
    return names;
}

inline Rational parse_number(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(mpz_class(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(mpz_class(digits), den);
}

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        expect(Tok::end, {"operator", describe(Tok::end)});
        return e;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(std::set<std::string> expected) const {
        const Token& t = peek();
        throw ParseError(t.line, t.column, std::move(expected), t.kind == Tok::end ? describe(Tok::end) : "'" + t.text + "'");
    }

    const Token& expect(Tok k, std::set<std::string> expected = {}) {
        if (peek().kind != k) fail(expected.empty() ? std::set<std::string>{describe(k)} : std::move(expected));
        return next();
    }

    static std::set<std::string> operand_set() { return {"number", "identifier", "'('", "'-'"}; }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = next();
            ExprPtr rhs = term();
            lhs = make_node(op.kind == Tok::plus ? NodeKind::add : NodeKind::sub, {lhs, rhs}, op.line, op.column);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = next();
            ExprPtr rhs = unary();
            lhs = make_node(op.kind == Tok::star ? NodeKind::mul : NodeKind::div, {lhs, rhs}, op.line, op.column);
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().kind == Tok::minus) {
            const Token& op = next();
            return make_node(NodeKind::neg, {unary()}, op.line, op.column);
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().kind == Tok::caret) {
            const Token& op = next();
            return make_node(NodeKind::pow, {base, expfactor()}, op.line, op.column);
        }
        return base;
    }

    ExprPtr expfactor() {
        if (peek().kind == Tok::minus) {
            const Token& op = next();
            return make_node(NodeKind::neg, {expfactor()}, op.line, op.column);
        }
        return power();
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                next();
                Rational v = parse_number(t.text);
                const bool decimal = t.text.find('.') != std::string::npos;
                return make_node(decimal ? NodeKind::rational : NodeKind::integer, {}, t.line, t.column, {}, std::move(v));
            }
            case Tok::lparen: {
                next();
                ExprPtr e = expr();
                expect(Tok::rparen, {"operator", "')'"});
                return e;
            }
            case Tok::ident: {
                next();
                if (function_names().count(t.text)) return call(t);
                return make_node(NodeKind::variable, {}, t.line, t.column, t.text);
            }
            default: fail(operand_set());
        }
    }

    ExprPtr call(const Token& name) {
        expect(Tok::lparen);
        if (name.text == "sum") {
            const Token& var = expect(Tok::ident, {"summation variable"});
            if (var.text == "q" || function_names().count(var.text))
                throw ParseError(var.line, var.column, {"summation variable"}, "reserved name '" + var.text + "'");
            expect(Tok::equals);
            ExprPtr lo = expr();
            expect(Tok::dots, {"operator", "'..'"});
            ExprPtr hi = expr();
            expect(Tok::comma, {"operator", "','"});
            ExprPtr body = expr();
            expect(Tok::rparen, {"operator", "')'"});
            return make_node(NodeKind::sum, {lo, hi, body}, name.line, name.column, var.text);
        }
        std::vector<ExprPtr> args{expr()};
        while (accept(Tok::comma)) args.push_back(expr());
        expect(Tok::rparen, {"operator", "','", "')'"});
        NodeKind kind = NodeKind::floor;
        std::size_t arity = 1;
        if (name.text == "qbin") kind = NodeKind::qbin, arity = 2;
        else if (name.text == "qcat") kind = NodeKind::qcat;
        else if (name.text == "legendre3") kind = NodeKind::legendre3;
        if (args.size() != arity)
            throw ParseError(name.line, name.column, {std::to_string(arity) + " argument(s)"},
                             name.text + " with " + std::to_string(args.size()));
        return make_node(kind, std::move(args), name.line, name.column);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

/// Parses one expression; `line`/`column` locate the text inside a larger file.
inline ExprPtr parse(std::string_view text, int line = 1, int column = 1) { return Parser(tokenize(text, line, column)).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering and structure

namespace detail {

/// Terminating decimal expansion of a rational literal.
inline std::string decimal_string(const Rational& r) {
    mpz_class den = r.denominator();
    std::size_t digits = 0;
    mpz_class scale = 1;
    while (mpz_class(scale % den) != 0) {
        scale *= 10;
        if (++digits > 4096) throw std::logic_error("decimal_string: non-terminating literal");
    }
    mpz_class scaled = r.numerator() * (scale / den);
    std::string s = scaled.get_str();
    if (digits == 0) return s + ".0";
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return s;
}

}  // namespace detail

/// Fully parenthesized form; parse(render(e)) is structurally equal to e.
inline std::string render(const ExprPtr& e) {
    auto bin = [&](const char* op) { return "(" + render(e->args[0]) + " " + op + " " + render(e->args[1]) + ")"; };
    switch (e->kind) {
        case NodeKind::integer: return e->value.to_string();
        case NodeKind::rational: return detail::decimal_string(e->value);
        case NodeKind::variable: return e->name;
        case NodeKind::neg: return "(-" + render(e->args[0]) + ")";
        case NodeKind::add: return bin("+");
        case NodeKind::sub: return bin("-");
        case NodeKind::mul: return bin("*");
        case NodeKind::div: return bin("/");
        case NodeKind::pow: return "(" + render(e->args[0]) + "^" + render(e->args[1]) + ")";
        case NodeKind::sum:
            return "sum(" + e->name + "=" + render(e->args[0]) + ".." + render(e->args[1]) + ", " + render(e->args[2]) + ")";
        case NodeKind::qbin: return "qbin(" + render(e->args[0]) + ", " + render(e->args[1]) + ")";
        case NodeKind::qcat: return "qcat(" + render(e->args[0]) + ")";
        case NodeKind::legendre3: return "legendre3(" + render(e->args[0]) + ")";
        case NodeKind::floor: return "floor(" + render(e->args[0]) + ")";
    }
    throw std::logic_error("render: unknown node");
}

/// Structural equality, ignoring source positions.
inline bool same_structure(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind || a->name != b->name || a->value != b->value || a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!same_structure(a->args[i], b->args[i])) return false;
    return true;
}

/// True when q occurs free.
inline bool mentions_q(const ExprPtr& e) {
    if (e->kind == NodeKind::variable) return e->name == "q";
    return std::any_of(e->args.begin(), e->args.end(), [](const ExprPtr& c) { return mentions_q(c); });
}

/// True when the subtree contains qbin or qcat.
inline bool contains_qobject(const ExprPtr& e) {
    if (e->kind == NodeKind::qbin || e->kind == NodeKind::qcat) return true;
    return std::any_of(e->args.begin(), e->args.end(), [](const ExprPtr& c) { return contains_qobject(c); });
}

/// True when the subtree evaluates to a plain rational.
inline bool is_scalar(const ExprPtr& e) { return !mentions_q(e) && !contains_qobject(e); }

// ---------------------------------------------------------------------------
// Evaluation

using Bindings = std::map<std::string, std::int64_t>;

enum class Mode { poly, cyclo };

struct EvalContext {
    Mode mode = Mode::poly;
    Bindings bindings;
    std::int64_t m = 0;  // cyclo mode: q = zeta_m^j
    std::int64_t j = 0;
};

namespace detail {

inline std::string where(const ExprPtr& e) { return std::to_string(e->line) + ":" + std::to_string(e->column) + ": "; }

inline std::int64_t as_int(const Rational& r, const ExprPtr& e, const char* what) {
    if (!r.is_integer()) throw EvalError(where(e) + what + " " + render(e) + " = " + r.to_string() + " is not an integer");
    return r.to_int64();
}

/// Value of a q-free subtree.
inline Rational eval_scalar(const ExprPtr& e, Bindings& b) {
    auto arg = [&](std::size_t i) { return eval_scalar(e->args[i], b); };
    switch (e->kind) {
        case NodeKind::integer:
        case NodeKind::rational: return e->value;
        case NodeKind::variable: {
            if (e->name == "q") throw EvalError(where(e) + "q in a scalar context");
            auto it = b.find(e->name);
            if (it == b.end()) throw EvalError(where(e) + "unbound variable '" + e->name + "'");
            return Rational(it->second);
        }
        case NodeKind::neg: return -arg(0);
        case NodeKind::add: return arg(0) + arg(1);
        case NodeKind::sub: return arg(0) - arg(1);
        case NodeKind::mul: return arg(0) * arg(1);
        case NodeKind::div: {
            Rational d = arg(1);
            if (d.is_zero()) throw EvalError(where(e) + "division by zero in " + render(e));
            return arg(0) / d;
        }
        case NodeKind::pow: {
            Rational base = arg(0);
            const std::int64_t ex = as_int(arg(1), e->args[1], "exponent");
            if (base.is_zero() && ex < 0) throw EvalError(where(e) + "zero to a negative power in " + render(e));
            return base.pow(ex);
        }
        case NodeKind::sum: {
            const std::int64_t lo = as_int(arg(0), e->args[0], "lower bound");
            const std::int64_t hi = as_int(arg(1), e->args[1], "upper bound");
            auto saved = b.find(e->name) != b.end() ? std::optional<std::int64_t>(b[e->name]) : std::nullopt;
            Rational total;
            for (std::int64_t k = lo; k <= hi; ++k) {
                b[e->name] = k;
                total += eval_scalar(e->args[2], b);
            }
            if (saved) b[e->name] = *saved;
            else b.erase(e->name);
            return total;
        }
        case NodeKind::qbin:
        case NodeKind::qcat: throw EvalError(where(e) + "q-object in a scalar context");
        case NodeKind::legendre3: return Rational(legendre3(as_int(arg(0), e->args[0], "argument")));
        case NodeKind::floor: {
            Rational x = arg(0);
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
            return Rational(f);
        }
    }
    throw std::logic_error("eval_scalar: unknown node");
}

struct PolyBackend {
    using Value = Poly;
    Value constant(const Rational& c) const { return Poly::constant(c); }
    Value from_poly(Poly p) const { return p; }
    Value q_power(std::int64_t t, const ExprPtr& e) const {
        if (t < 0) throw EvalError(where(e) + "negative power of q in poly mode: " + render(e));
        return Poly::monomial(1, static_cast<std::size_t>(t));
    }
    Value power(const Value& v, std::int64_t t, const ExprPtr& e) const {
        if (t < 0) throw EvalError(where(e) + "negative power of a polynomial in poly mode: " + render(e));
        return pow(v, static_cast<unsigned>(t));
    }
    Value divide(const Value& a, const Value& d, const ExprPtr& e) const {
        if (d.is_zero()) throw EvalError(where(e) + "division by zero polynomial in " + render(e));
        auto [quot, rem] = divrem(a, d);
        if (!rem.is_zero()) throw EvalError(where(e) + "inexact polynomial division in " + render(e));
        return quot;
    }
};

struct CycloBackend {
    using Value = CycloElem;
    std::shared_ptr<const CycloField> field;
    std::int64_t j;

    Value constant(const Rational& c) const { return CycloElem(field, c); }
    Value from_poly(const Poly& p) const {
        CycloElem acc(field, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero()) acc += CycloElem::root_power(field, j * static_cast<std::int64_t>(i)) * p[i];
        return acc;
    }
    Value q_power(std::int64_t t, const ExprPtr&) const { return CycloElem::root_power(field, j * t); }
    Value power(const Value& v, std::int64_t t, const ExprPtr& e) const {
        if (t < 0 && v.is_zero()) throw EvalError(where(e) + "division by zero element in " + render(e));
        return v.pow(t);
    }
    Value divide(const Value& a, const Value& d, const ExprPtr& e) const {
        if (d.is_zero()) throw EvalError(where(e) + "division by zero element: " + render(e->args[1]) + " vanishes at q = zeta_" +
                                         std::to_string(field->order()) + "^" + std::to_string(j));
        return a / d;
    }
};

template <class Backend>
typename Backend::Value eval_with(const ExprPtr& e, Bindings& b, const Backend& be) {
    using V = typename Backend::Value;
    if (is_scalar(e)) return be.constant(eval_scalar(e, b));
    auto arg = [&](std::size_t i) { return eval_with(e->args[i], b, be); };
    switch (e->kind) {
        case NodeKind::variable:  // only q reaches here
            return be.q_power(1, e);
        case NodeKind::neg: {
            V v = arg(0);
            return v * Rational(-1);
        }
        case NodeKind::add: return arg(0) + arg(1);
        case NodeKind::sub: return arg(0) - arg(1);
        case NodeKind::mul: {
            V a = arg(0);
            return a * arg(1);
        }
        case NodeKind::div: {
            if (is_scalar(e->args[1])) {
                Rational d = eval_scalar(e->args[1], b);
                if (d.is_zero()) throw EvalError(where(e) + "division by zero in " + render(e));
                return arg(0) * (Rational(1) / d);
            }
            V a = arg(0);
            return be.divide(a, arg(1), e);
        }
        case NodeKind::pow: {
            if (!is_scalar(e->args[1])) throw EvalError(where(e) + "exponent must not involve q: " + render(e));
            const std::int64_t t = as_int(eval_scalar(e->args[1], b), e->args[1], "exponent");
            if (e->args[0]->kind == NodeKind::variable && e->args[0]->name == "q") return be.q_power(t, e);
            return be.power(arg(0), t, e);
        }
        case NodeKind::sum: {
            const std::int64_t lo = as_int(eval_scalar(e->args[0], b), e->args[0], "lower bound");
            const std::int64_t hi = as_int(eval_scalar(e->args[1], b), e->args[1], "upper bound");
            auto it = b.find(e->name);
            auto saved = it != b.end() ? std::optional<std::int64_t>(it->second) : std::nullopt;
            V total = be.constant(Rational(0));
            for (std::int64_t k = lo; k <= hi; ++k) {
                b[e->name] = k;
                total += eval_with(e->args[2], b, be);
            }
            if (saved) b[e->name] = *saved;
            else b.erase(e->name);
            return total;
        }
        case NodeKind::qbin:
            return be.from_poly(gaussian_binomial(as_int(eval_scalar(e->args[0], b), e->args[0], "qbin argument"),
                                                  as_int(eval_scalar(e->args[1], b), e->args[1], "qbin argument")));
        case NodeKind::qcat: {
            const std::int64_t k = as_int(eval_scalar(e->args[0], b), e->args[0], "qcat argument");
            if (k < 0) throw EvalError(where(e) + "qcat of a negative index");
            return be.from_poly(q_catalan(k));
        }
        default: return be.constant(eval_scalar(e, b));
    }
}

}  // namespace detail

inline Poly eval_poly(const ExprPtr& e, const Bindings& bindings = {}) {
    Bindings b = bindings;
    return detail::eval_with(e, b, detail::PolyBackend{});
}

inline CycloElem eval_cyclo(const ExprPtr& e, std::int64_t m, std::int64_t j, const Bindings& bindings = {}) {
    if (m < 1) throw std::invalid_argument("eval_cyclo: m must be >= 1");
    if (std::gcd(j, m) != 1) throw std::invalid_argument("eval_cyclo: gcd(j, m) != 1");
    Bindings b = bindings;
    return detail::eval_with(e, b, detail::CycloBackend{make_field(m), j});
}

inline CycloElem eval_cyclo(const ExprPtr& e, const std::shared_ptr<const CycloField>& field, std::int64_t j,
                            const Bindings& bindings = {}) {
    if (std::gcd(j, field->order()) != 1) throw std::invalid_argument("eval_cyclo: gcd(j, m) != 1");
    Bindings b = bindings;
    return detail::eval_with(e, b, detail::CycloBackend{field, j});
}

inline Poly eval_poly(const ExprPtr& e, const EvalContext& ctx) {
    if (ctx.mode != Mode::poly) throw std::invalid_argument("eval_poly: context is not in poly mode");
    return eval_poly(e, ctx.bindings);
}

inline CycloElem eval_cyclo(const ExprPtr& e, const EvalContext& ctx) {
    if (ctx.mode != Mode::cyclo) throw std::invalid_argument("eval_cyclo: context is not in cyclo mode");
    return eval_cyclo(e, ctx.m, ctx.j, ctx.bindings);
}

// ---------------------------------------------------------------------------
// Corpus files
//
//   [label] LHS == RHS @ poly(n=1..10)
//   [label] LHS == RHS @ phi(n=2..40, mod=n, e=2)
//   [label] LHS == RHS @ cyclo(n=1..10, m=3*n, j=all)
//
// Parameter values are integer expressions, ranges lo..hi or lo..hi:step; later
// parameters may refer to earlier ones. '#' starts a comment.

enum class CorpusMode { poly, phi, cyclo };

inline const char* to_string(CorpusMode m) {
    switch (m) {
        case CorpusMode::poly: return "poly";
        case CorpusMode::phi: return "phi";
        case CorpusMode::cyclo: return "cyclo";
    }
    return "?";
}

struct ParamSpec {
    std::string name;
    ExprPtr lo;
    ExprPtr hi;             // null for a single value
    ExprPtr step;           // null for step 1
    bool all_units = false;  // j=all
};

struct CorpusEntry {
    int line = 0;
    std::string label;
    std::string lhs_text;
    std::string rhs_text;
    ExprPtr lhs;
    ExprPtr rhs;
    CorpusMode mode = CorpusMode::poly;
    std::vector<ParamSpec> params;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// Splits on `sep` at parenthesis depth zero.
inline std::vector<std::pair<std::string, std::size_t>> split_top(std::string_view s, char sep) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == sep && depth == 0)) {
            parts.emplace_back(std::string(s.substr(start, i - start)), start);
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    return parts;
}

inline ParamSpec parse_param(std::string_view text, int line, int column) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(line, column, {"name=value"}, "'" + std::string(text) + "'");
    ParamSpec p;
    p.name = trim(text.substr(0, eq));
    if (p.name.empty()) throw ParseError(line, column, {"parameter name"}, "'='");
    std::string_view value = text.substr(eq + 1);
    const int vcol = column + static_cast<int>(eq) + 1;
    if (trim(value) == "all") {
        p.all_units = true;
        return p;
    }
    std::string_view range = value, step;
    if (auto colon = value.find(':'); colon != std::string_view::npos) {
        range = value.substr(0, colon);
        step = value.substr(colon + 1);
        p.step = parse(step, line, vcol + static_cast<int>(colon) + 1);
    }
    if (auto dots = range.find(".."); dots != std::string_view::npos) {
        p.lo = parse(range.substr(0, dots), line, vcol);
        p.hi = parse(range.substr(dots + 2), line, vcol + static_cast<int>(dots) + 2);
    } else {
        if (p.step) throw ParseError(line, vcol, {"lo..hi before ':'"}, "'" + std::string(value) + "'");
        p.lo = parse(range, line, vcol);
    }
    return p;
}

}  // namespace detail

/// Parses one corpus line; nullopt for blank or comment-only lines.
inline std::optional<CorpusEntry> parse_corpus_line(std::string_view raw, int line) {
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    if (detail::trim(text).empty()) return std::nullopt;

    CorpusEntry entry;
    entry.line = line;
    std::size_t offset = 0;
    {
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == '[') {
            const auto close = text.find(']', i);
            if (close == std::string_view::npos) throw ParseError(line, static_cast<int>(i) + 1, {"']'"}, describe(Tok::end));
            entry.label = detail::trim(text.substr(i + 1, close - i - 1));
            offset = close + 1;
        }
    }
    const auto at = text.rfind('@');
    if (at == std::string_view::npos || at < offset) throw ParseError(line, static_cast<int>(text.size()) + 1, {"'@ mode(...)'"}, describe(Tok::end));
    const std::string_view ident = text.substr(offset, at - offset);
    const auto eqeq = ident.find("==");
    if (eqeq == std::string_view::npos || ident.find("==", eqeq + 2) != std::string_view::npos)
        throw ParseError(line, static_cast<int>(offset) + 1, {"exactly one '=='"}, "'" + detail::trim(ident) + "'");
    const int lhs_col = static_cast<int>(offset) + 1;
    const int rhs_col = static_cast<int>(offset + eqeq) + 3;
    entry.lhs_text = detail::trim(ident.substr(0, eqeq));
    entry.rhs_text = detail::trim(ident.substr(eqeq + 2));
    entry.lhs = parse(ident.substr(0, eqeq), line, lhs_col);
    entry.rhs = parse(ident.substr(eqeq + 2), line, rhs_col);

    std::string_view mode = text.substr(at + 1);
    const int mode_col = static_cast<int>(at) + 2;
    const auto open = mode.find('(');
    const auto close = mode.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError(line, mode_col, {"mode(params)"}, "'" + detail::trim(mode) + "'");
    if (!detail::trim(mode.substr(close + 1)).empty())
        throw ParseError(line, mode_col + static_cast<int>(close) + 1, {describe(Tok::end)}, "'" + detail::trim(mode.substr(close + 1)) + "'");
    const std::string name = detail::trim(mode.substr(0, open));
    if (name == "poly") entry.mode = CorpusMode::poly;
    else if (name == "phi") entry.mode = CorpusMode::phi;
    else if (name == "cyclo") entry.mode = CorpusMode::cyclo;
    else throw ParseError(line, mode_col, {"poly", "phi", "cyclo"}, "'" + name + "'");

    const std::string_view inside = mode.substr(open + 1, close - open - 1);
    if (!detail::trim(inside).empty()) {
        for (const auto& [part, pos] : detail::split_top(inside, ','))
            entry.params.push_back(detail::parse_param(part, line, mode_col + static_cast<int>(open + 1 + pos)));
    }
    for (const auto& p : entry.params)
        if (p.all_units && (entry.mode != CorpusMode::cyclo || p.name != "j"))
            throw ParseError(line, mode_col, {"'all' only for j in cyclo mode"}, "'" + p.name + "=all'");
    if (entry.mode == CorpusMode::cyclo && std::none_of(entry.params.begin(), entry.params.end(), [](const ParamSpec& p) { return p.name == "m"; }))
        throw ParseError(line, mode_col, {"m=<order>"}, "cyclo mode without m");
    return entry;
}

inline std::vector<CorpusEntry> parse_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string text;
    int line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (auto e = parse_corpus_line(text, line)) out.push_back(std::move(*e));
    }
    return out;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file " + path);
    return parse_corpus(in);
}

/// Every binding tuple of an entry, in nested-loop order of its parameters.
inline std::vector<Bindings> expand_params(const CorpusEntry& entry) {
    std::vector<Bindings> out;
    std::function<void(std::size_t, Bindings&)> rec = [&](std::size_t i, Bindings& b) {
        if (i == entry.params.size()) {
            out.push_back(b);
            return;
        }
        const ParamSpec& p = entry.params[i];
        std::vector<std::int64_t> values;
        if (p.all_units) {
            auto it = b.find("m");
            if (it == b.end()) throw EvalError(std::to_string(entry.line) + ": j=all needs m to be bound first");
            for (std::int64_t v = 1; v < std::max<std::int64_t>(it->second, 2); ++v)
                if (std::gcd(v, it->second) == 1) values.push_back(v);
        } else {
            Bindings scratch = b;
            const std::int64_t lo = detail::as_int(detail::eval_scalar(p.lo, scratch), p.lo, "parameter");
            if (!p.hi) {
                values.push_back(lo);
            } else {
                const std::int64_t hi = detail::as_int(detail::eval_scalar(p.hi, scratch), p.hi, "parameter");
                const std::int64_t step = p.step ? detail::as_int(detail::eval_scalar(p.step, scratch), p.step, "step") : 1;
                if (step <= 0) throw EvalError(std::to_string(entry.line) + ": step must be positive");
                for (std::int64_t v = lo; v <= hi; v += step) values.push_back(v);
            }
        }
        for (auto v : values) {
            const bool had = b.count(p.name) != 0;
            const std::int64_t old = had ? b[p.name] : 0;
            b[p.name] = v;
            rec(i + 1, b);
            if (had) b[p.name] = old;
            else b.erase(p.name);
        }
    };
    Bindings b;
    rec(0, b);
    return out;
}

/// Both sides of an entry under one binding tuple.
struct EntryValues {
    std::optional<Poly> lhs_poly, rhs_poly;
    std::optional<CycloElem> lhs_elem, rhs_elem;
    std::int64_t modulus = 0;  // phi: Phi index; cyclo: field order
    int exponent = 1;          // phi: power of Phi
    std::int64_t j = 0;        // cyclo
};

inline EntryValues evaluate_entry(const CorpusEntry& entry, const Bindings& b) {
    EntryValues v;
    auto bound = [&](const std::string& name) -> std::optional<std::int64_t> {
        auto it = b.find(name);
        return it == b.end() ? std::nullopt : std::optional<std::int64_t>(it->second);
    };
    switch (entry.mode) {
        case CorpusMode::poly:
        case CorpusMode::phi:
            v.lhs_poly = eval_poly(entry.lhs, b);
            v.rhs_poly = eval_poly(entry.rhs, b);
            if (entry.mode == CorpusMode::phi) {
                auto mod = bound("mod") ? bound("mod") : bound("n");
                if (!mod) throw EvalError(std::to_string(entry.line) + ": phi mode needs mod or n");
                v.modulus = *mod;
                v.exponent = static_cast<int>(bound("e").value_or(1));
                if (v.modulus < 1 || v.exponent < 1) throw EvalError(std::to_string(entry.line) + ": phi mode needs mod >= 1 and e >= 1");
            }
            break;
        case CorpusMode::cyclo: {
            v.modulus = *bound("m");
            v.j = bound("j").value_or(1);
            if (v.modulus < 1 || std::gcd(v.j, v.modulus) != 1)
                throw EvalError(std::to_string(entry.line) + ": cyclo mode needs m >= 1 and gcd(j, m) = 1");
            auto field = make_field(v.modulus);
            v.lhs_elem = eval_cyclo(entry.lhs, field, v.j, b);
            v.rhs_elem = eval_cyclo(entry.rhs, field, v.j, b);
            break;
        }
    }
    return v;
}

/// Nonzero residue of lhs - rhs, or nullopt when the identity holds.
inline std::optional<std::string> entry_residue(const EntryValues& v, CorpusMode mode) {
    switch (mode) {
        case CorpusMode::poly: {
            Poly d = *v.lhs_poly - *v.rhs_poly;
            return d.is_zero() ? std::nullopt : std::optional<std::string>(to_string(d));
        }
        case CorpusMode::phi: {
            Poly d = reduce_mod_phi_power(*v.lhs_poly - *v.rhs_poly, v.modulus, v.exponent);
            return d.is_zero() ? std::nullopt : std::optional<std::string>(to_string(d) + " (mod Phi_" + std::to_string(v.modulus) + "^" + std::to_string(v.exponent) + ")");
        }
        case CorpusMode::cyclo: {
            CycloElem d = *v.lhs_elem - *v.rhs_elem;
            return d.is_zero() ? std::nullopt : std::optional<std::string>(to_string(d));
        }
    }
    return std::nullopt;
}

inline Params bindings_params(const CorpusEntry& entry, const Bindings& b) {
    Params p{{"line", entry.line}};
    for (const auto& spec : entry.params) p.emplace_back(spec.name, b.at(spec.name));
    return p;
}

/// Checks one binding tuple of an entry.
inline VerificationReport verify_entry(const CorpusEntry& entry, const Bindings& b) {
    Stopwatch sw;
    Params params = bindings_params(entry, b);
    std::optional<std::string> residue;
    try {
        residue = entry_residue(evaluate_entry(entry, b), entry.mode);
    } catch (const EvalError& err) {
        residue = std::string("evaluation error: ") + err.what();
    } catch (const std::domain_error& err) {
        residue = std::string("evaluation error: ") + err.what();
    }
    VerificationReport rep = residue ? make_fail("dsl-corpus", std::move(params), *residue, sw) : make_pass("dsl-corpus", std::move(params), sw);
    if (!entry.label.empty()) rep.note = entry.label;
    return rep;
}

}  // namespace qcat::dsl

#endif  // QCATALAN_QDSL_HPP
