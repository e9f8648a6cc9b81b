#pragma once

/* Expression DSL over intervals.  Operators denote the endpoint formulas
 * of the interval arithmetic module (sum, difference, opposite, product of
 * nonnegative intervals, scalar multiple); they are NOT best-representation
 * semantics, so X1 - X1 is not [0,0] unless X1 is degenerate.
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := REAL '*' factor          scalar multiple
 *           | '-' factor               opposite
 *           | '[' REAL ',' REAL ']'    interval constant
 *           | VAR                      X1 ... Xn
 *           | IDENT '(' args ')'       builtin call, min/max under an order
 *           | '(' expr ')'
 *
 * Builtin names may contain '-'.  The lexer glues 'a-b' into one
 * identifier only when the head segment is not a variable, so X1-X2 stays
 * a subtraction.  Order names appear as plain arguments (e.g.
 * min(lex-lower, X1, X2)); for two-key orders use the colon form
 * two-key:<k1>:<k2>, since commas separate call arguments.
 */

#include <cctype>
#include <charconv>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ivmono/errors.hpp"
#include "ivmono/function.hpp"
#include "ivmono/interval.hpp"
#include "ivmono/order.hpp"

namespace ivmono {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Var, Const, Neg, Add, Sub, Mul, Scale, MinOrd, MaxOrd, Call };

    Kind kind;
    int var_index = 0;                 // Var, 1-based
    std::optional<Interval> value;     // Const
    double alpha = 0.0;                // Scale factor
    ExprPtr lhs, rhs;                  // unary uses lhs only
    std::optional<OrderSpec> order;    // MinOrd / MaxOrd / g-max Call
    std::string callee;                // Call
    std::vector<double> params;        // Call numeric params (wmean weights)
    std::vector<ExprPtr> args;         // Call / MinOrd / MaxOrd
    std::optional<IVFunction> resolved;  // Call target, fixed at parse time
};

namespace detail {

// --- Lexing ---------------------------------------------------------------

enum class Tok { Real, Ident, Var, LBracket, RBracket, LParen, RParen, Comma, Plus, Minus, Star, End };

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    int line = 1;
    int col = 1;
};

inline bool is_var_name(const std::string& s) {
    if (s.size() < 2 || s[0] != 'X') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;

    auto push = [&](Tok k, std::string text, double num, int l, int c) {
        out.push_back({k, std::move(text), num, l, c});
    };

    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') { ++line; col = 1; ++i; continue; }
        if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }

        const int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + src.size(), v);
            if (ec != std::errc())
                throw SyntaxError("malformed number", tl, tc, {"number"});
            const std::size_t len = static_cast<std::size_t>(ptr - (src.data() + i));
            push(Tok::Real, src.substr(i, len), v, tl, tc);
            i += len;
            col += static_cast<int>(len);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            auto scan_segment = [&] {
                while (j < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                    ++j;
            };
            ++j;
            scan_segment();
            // Glue hyphen/colon-joined name segments unless the head is a
            // variable (keeps X1-X2 a subtraction).
            while (j < src.size() && (src[j] == '-' || src[j] == ':') && j + 1 < src.size() &&
                   std::isalpha(static_cast<unsigned char>(src[j + 1])) &&
                   !is_var_name(src.substr(i, j - i))) {
                j += 2;
                scan_segment();
            }
            std::string name = src.substr(i, j - i);
            push(is_var_name(name) ? Tok::Var : Tok::Ident, name, 0.0, tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", tl, tc);
        }
        push(k, std::string(1, c), 0.0, tl, tc);
        ++col;
        ++i;
    }
    out.push_back({Tok::End, "<end>", 0.0, line, col});
    return out;
}

// --- Parsing ----------------------------------------------------------------

class ExprParser {
public:
    ExprParser(const std::string& src, int arity) : tokens_(lex(src)), arity_(arity) {
        if (arity < 1) throw BadParamsError("expression arity must be >= 1");
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }

    [[noreturn]] void fail(const std::vector<std::string>& expected) {
        const Token& t = peek();
        std::string msg = "unexpected '" + t.text + "'";
        if (!expected.empty()) {
            msg += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i)
                msg += (i ? " | " : "") + expected[i];
        }
        throw SyntaxError(msg, t.line, t.col, expected);
    }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail({what});
        return next();
    }

    static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr expr() {
        ExprPtr left = term();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const bool plus = next().kind == Tok::Plus;
            ExprPtr right = term();
            Expr e;
            e.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            e.lhs = std::move(left);
            e.rhs = std::move(right);
            left = node(std::move(e));
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (at(Tok::Star)) {
            next();
            ExprPtr right = factor();
            Expr e;
            e.kind = Expr::Kind::Mul;
            e.lhs = std::move(left);
            e.rhs = std::move(right);
            left = node(std::move(e));
        }
        return left;
    }

    ExprPtr factor() {
        if (at(Tok::Real)) {
            const Token t = next();
            expect(Tok::Star, "'*' after scalar factor");
            Expr e;
            e.kind = Expr::Kind::Scale;
            e.alpha = t.number;
            e.lhs = factor();
            return node(std::move(e));
        }
        if (at(Tok::Minus)) {
            next();
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.lhs = factor();
            return node(std::move(e));
        }
        if (at(Tok::LBracket)) {
            next();
            const Token lo = expect(Tok::Real, "number");
            expect(Tok::Comma, "','");
            const Token hi = expect(Tok::Real, "number");
            expect(Tok::RBracket, "']'");
            Expr e;
            e.kind = Expr::Kind::Const;
            e.value = Interval(lo.number, hi.number);
            return node(std::move(e));
        }
        if (at(Tok::Var)) {
            const Token t = next();
            long idx = 0;
            std::from_chars(t.text.data() + 1, t.text.data() + t.text.size(), idx);
            if (idx < 1 || idx > arity_)
                throw ArityError("variable " + t.text + " out of range for arity " +
                                 std::to_string(arity_));
            Expr e;
            e.kind = Expr::Kind::Var;
            e.var_index = static_cast<int>(idx);
            return node(std::move(e));
        }
        if (at(Tok::Ident)) {
            const Token name = next();
            expect(Tok::LParen, "'('");
            return call(name);
        }
        if (at(Tok::LParen)) {
            next();
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail({"number", "'-'", "'['", "variable", "function name", "'('"});
    }

    OrderSpec order_argument() {
        const Token t = expect(Tok::Ident, "order name");
        return OrderSpec::from_name(t.text);
    }

    std::vector<ExprPtr> expr_arguments(std::size_t min_count) {
        std::vector<ExprPtr> args;
        args.push_back(expr());
        while (at(Tok::Comma)) {
            next();
            args.push_back(expr());
        }
        if (args.size() < min_count) {
            const Token& t = peek();
            throw ArityError("call needs at least " + std::to_string(min_count) +
                             " arguments (line " + std::to_string(t.line) + ")");
        }
        return args;
    }

    ExprPtr call(const Token& name) {
        Expr e;
        if (name.text == "min" || name.text == "max") {
            e.kind = name.text == "min" ? Expr::Kind::MinOrd : Expr::Kind::MaxOrd;
            e.order = order_argument();
            if (!e.order->is_total())
                throw BadParamsError("min/max need a total order, got " + e.order->name());
            expect(Tok::Comma, "','");
            e.args = expr_arguments(2);
            expect(Tok::RParen, "')'");
            return node(std::move(e));
        }

        e.kind = Expr::Kind::Call;
        e.callee = name.text;
        if (name.text == "g-max") {
            e.order = order_argument();
            expect(Tok::Comma, "','");
            e.args = expr_arguments(2);
            if (e.args.size() != 2)
                throw ArityError("g-max takes exactly two interval arguments");
            expect(Tok::RParen, "')'");
            e.resolved = make_builtin("g-max", {}, 2, e.order);
            return node(std::move(e));
        }
        // Leading bare reals are numeric parameters (wmean weights); the
        // grammar has no bare-real expression, so this is unambiguous.
        while (at(Tok::Real)) {
            e.params.push_back(next().number);
            expect(Tok::Comma, "','");
        }
        e.args = expr_arguments(1);
        expect(Tok::RParen, "')'");
        e.resolved = make_builtin(e.callee, e.params, static_cast<int>(e.args.size()));
        return node(std::move(e));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int arity_;
};

inline Interval eval_expr(const Expr& e, const IntervalVector& args) {
    switch (e.kind) {
        case Expr::Kind::Var:
            return args[static_cast<std::size_t>(e.var_index - 1)];
        case Expr::Kind::Const:
            return *e.value;
        case Expr::Kind::Neg:
            return opposite(eval_expr(*e.lhs, args));
        case Expr::Kind::Add:
            return add(eval_expr(*e.lhs, args), eval_expr(*e.rhs, args));
        case Expr::Kind::Sub:
            return sub(eval_expr(*e.lhs, args), eval_expr(*e.rhs, args));
        case Expr::Kind::Mul:
            return mul_pos(eval_expr(*e.lhs, args), eval_expr(*e.rhs, args));
        case Expr::Kind::Scale:
            return scale(e.alpha, eval_expr(*e.lhs, args));
        case Expr::Kind::MinOrd:
        case Expr::Kind::MaxOrd: {
            Interval best = eval_expr(*e.args[0], args);
            for (std::size_t i = 1; i < e.args.size(); ++i) {
                const Interval cand = eval_expr(*e.args[i], args);
                const OrderRelation r = cmp(*e.order, cand, best);
                if (e.kind == Expr::Kind::MinOrd ? r == OrderRelation::Less
                                                 : r == OrderRelation::Greater)
                    best = cand;
            }
            return best;
        }
        case Expr::Kind::Call: {
            IntervalVector vals;
            vals.reserve(e.args.size());
            for (const auto& a : e.args) vals.push_back(eval_expr(*a, args));
            return (*e.resolved)(vals);
        }
    }
    throw Error("unreachable expression kind");
}

// Order names are printed with ':' joining the two-key parts so the output
// re-parses as a single DSL token.
inline std::string order_dsl_name(const OrderSpec& o) {
    std::string s = o.name();
    for (char& c : s)
        if (c == ',') c = ':';
    return s;
}

inline std::string pretty(const Expr& e, int parent_prec) {
    auto wrap = [&](std::string s, int prec) {
        return prec < parent_prec ? "(" + std::move(s) + ")" : std::move(s);
    };
    switch (e.kind) {
        case Expr::Kind::Var:
            return "X" + std::to_string(e.var_index);
        case Expr::Kind::Const:
            return to_string(*e.value);
        case Expr::Kind::Neg:
            return "-" + pretty(*e.lhs, 3);
        case Expr::Kind::Add:
            return wrap(pretty(*e.lhs, 1) + " + " + pretty(*e.rhs, 2), 1);
        case Expr::Kind::Sub:
            return wrap(pretty(*e.lhs, 1) + " - " + pretty(*e.rhs, 2), 1);
        case Expr::Kind::Mul:
            return wrap(pretty(*e.lhs, 2) + " * " + pretty(*e.rhs, 3), 2);
        case Expr::Kind::Scale:
            return wrap(format_double(e.alpha) + "*" + pretty(*e.lhs, 3), 2);
        case Expr::Kind::MinOrd:
        case Expr::Kind::MaxOrd: {
            std::string s = e.kind == Expr::Kind::MinOrd ? "min(" : "max(";
            s += order_dsl_name(*e.order);
            for (const auto& a : e.args) s += ", " + pretty(*a, 0);
            return s + ")";
        }
        case Expr::Kind::Call: {
            std::string s = e.callee + "(";
            bool first = true;
            if (e.order) {
                s += order_dsl_name(*e.order);
                first = false;
            }
            for (double p : e.params) {
                s += (first ? "" : ", ") + format_double(p);
                first = false;
            }
            for (const auto& a : e.args) {
                s += (first ? "" : ", ") + pretty(*a, 0);
                first = false;
            }
            return s + ")";
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace detail

inline ExprPtr parse_expr(const std::string& src, int arity) {
    return detail::ExprParser(src, arity).parse();
}

inline std::string pretty_print(const ExprPtr& e) { return detail::pretty(*e, 0); }

// Structural AST equality (used by the parse/pretty-print round-trip
// property).
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->var_index != b->var_index || a->alpha != b->alpha ||
        a->callee != b->callee || a->params != b->params)
        return false;
    if (a->value.has_value() != b->value.has_value()) return false;
    if (a->value && *a->value != *b->value) return false;
    if (a->order.has_value() != b->order.has_value()) return false;
    if (a->order && a->order->name() != b->order->name()) return false;
    if (!expr_equal(a->lhs, b->lhs) || !expr_equal(a->rhs, b->rhs)) return false;
    if (a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!expr_equal(a->args[i], b->args[i])) return false;
    return true;
}

// Wraps a parsed expression as an IVFunction of the given arity.
inline IVFunction parse_function(const std::string& src, int arity) {
    ExprPtr ast = parse_expr(src, arity);
    std::string desc = pretty_print(ast);
    return IVFunction::from_raw(arity, std::move(desc),
                                [ast](const IntervalVector& args) {
                                    return detail::eval_expr(*ast, args);
                                });
}

// Resolves a --function value: a bare builtin name, a parameterized
// builtin (wmean(0.3,0.7), g-max(lex-lower)), or a DSL expression.
inline IVFunction function_from_spec(const std::string& text, int arity) {
    const auto names = builtin_names();
    const std::string trimmed = [&] {
        std::size_t b = text.find_first_not_of(" \t\n");
        std::size_t e = text.find_last_not_of(" \t\n");
        return b == std::string::npos ? std::string() : text.substr(b, e - b + 1);
    }();
    for (const auto& name : names) {
        if (trimmed == name) return make_builtin(name, {}, arity);
        if (trimmed.size() > name.size() + 1 && trimmed.compare(0, name.size(), name) == 0 &&
            trimmed[name.size()] == '(' && trimmed.back() == ')') {
            const std::string inner =
                trimmed.substr(name.size() + 1, trimmed.size() - name.size() - 2);
            if (name == "g-max")
                return make_builtin(name, {}, arity, OrderSpec::from_name(inner));
            if (name == "wmean") {
                std::vector<double> weights;
                std::size_t start = 0;
                while (start <= inner.size()) {
                    std::size_t comma = inner.find(',', start);
                    const std::string item =
                        inner.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
                    double v = 0.0;
                    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
                    if (ec != std::errc() || ptr != item.data() + item.size())
                        throw BadParamsError("bad wmean weight '" + item + "'");
                    weights.push_back(v);
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
                return make_builtin(name, weights, static_cast<int>(weights.size()));
            }
            break;  // parenthesized non-parameter builtin: treat as DSL
        }
    }
    return parse_function(trimmed, arity);
}

}  // namespace ivmono
