#include "lfmt/error.hpp"
#include "lfmt/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace lfmt {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
    GaussRational number;  // valid for Tok::number
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string digits;
            Rational scale = 1;
            bool seen_dot = false;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
                if (s[i] == '.') {
                    if (seen_dot) throw ParseError("malformed number", i);
                    seen_dot = true;
                } else {
                    digits += s[i];
                    if (seen_dot) scale *= 10;
                }
                ++i;
            }
            if (digits.empty()) throw ParseError("malformed number", start);
            Rational value = Rational(boost::multiprecision::cpp_int(digits)) / scale;
            GaussRational number(value);
            if (i < s.size() && s[i] == 'i' && (i + 1 == s.size() || !ident_char(s[i + 1]))) {
                number = GaussRational(0, value);
                ++i;
            }
            out.push_back({Tok::number, start, std::string(s.substr(start, i - start)), number});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && ident_char(s[i])) ++i;
            out.push_back({Tok::ident, start, std::string(s.substr(start, i - start)), {}});
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
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, start, std::string(1, c), {}});
        ++i;
    }
    out.push_back({Tok::end, s.size(), "", {}});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, FrameKind frame) : tokens_(lex(text)), frame_(frame) {}

    Expr parse_all() {
        if (peek().kind == Tok::end) throw ParseError("empty input", 0);
        Expr e = expr();
        if (peek().kind != Tok::end) throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) {
            const std::string found = peek().kind == Tok::end ? "end of input" : "'" + peek().text + "'";
            throw ParseError(std::string("expected ") + what + ", found " + found, peek().pos);
        }
        return next();
    }

    Expr expr() {
        Expr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = next();
            Expr rhs = term();
            lhs = make_expr(ast::Sum{lhs, rhs, op.kind == Tok::minus}, op.pos);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = next();
            Expr rhs = factor();
            if (op.kind == Tok::star) {
                lhs = make_expr(ast::Product{lhs, rhs}, op.pos);
            } else {
                lhs = make_expr(ast::Quotient{lhs, rhs}, op.pos);
            }
        }
        return lhs;
    }

    Expr factor() {
        if (peek().kind == Tok::minus) {
            const std::size_t at = next().pos;
            return make_expr(ast::Negate{factor()}, at);
        }
        if (accept(Tok::plus)) return factor();
        Expr base = atom();
        if (peek().kind == Tok::caret) {
            const std::size_t at = next().pos;
            const int exponent = integer("integer exponent");
            base = make_expr(ast::IntPower{base, exponent}, at);
        }
        return base;
    }

    int integer(const char* what) {
        bool negative = false;
        if (peek().kind == Tok::minus) {
            negative = true;
            next();
        } else {
            accept(Tok::plus);
        }
        const Token& t = peek();
        if (t.kind != Tok::number) throw ParseError(std::string("expected ") + what, t.pos);
        if (!t.number.is_real() || boost::multiprecision::denominator(t.number.real()) != 1 ||
            t.text.find('.') != std::string::npos)
            throw ParseError(std::string("exponent not an integer: ") + t.text, t.pos);
        const auto value = boost::multiprecision::numerator(t.number.real());
        if (value > 1'000'000) throw ParseError("integer out of range", t.pos);
        next();
        const int v = value.convert_to<int>();
        return negative ? -v : v;
    }

    Var variable() {
        const Token& t = peek();
        if (t.kind != Tok::ident) throw ParseError("expected a coordinate variable", t.pos);
        auto v = var_from_name(t.text);
        if (!v || !frame_has(frame_, *v))
            throw ParseError("unknown identifier '" + t.text + "' in " + std::string(frame_name(frame_)) + " frame",
                             t.pos);
        next();
        return *v;
    }

    static std::optional<int> component_index(const std::string& name) {
        if (name.size() == 2 && name[0] == 'f' && name[1] >= '0' && name[1] <= '3') return name[1] - '0';
        return std::nullopt;
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: next(); return make_expr(ast::Constant{t.number}, t.pos);
            case Tok::lparen: {
                next();
                Expr inner = expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::ident: return identifier();
            case Tok::end: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Expr identifier() {
        const Token& t = next();
        const std::size_t at = t.pos;
        const std::string& name = t.text;
        if (name == "lam") return make_expr(ast::Lambda{}, at);
        if (name == "i") return make_expr(ast::Constant{GaussRational::i()}, at);
        if (auto k = component_index(name)) return make_expr(ast::Component{*k, {}}, at);

        if (name == "P" || name == "J") {
            expect(Tok::lparen, "'('");
            const Var v = variable();
            expect(Tok::comma, "','");
            const int n = integer("integer exponent");
            expect(Tok::rparen, "')'");
            if (name == "P") return make_expr(ast::FractalPower{v, n}, at);
            if (n < 0) throw ParseError("J-basis index must be nonnegative", at);
            return make_expr(ast::JBasis{v, n}, at);
        }
        if (name == "sina" || name == "cosa") {
            expect(Tok::lparen, "'('");
            const Var v = variable();
            expect(Tok::rparen, "')'");
            if (name == "sina") return make_expr(ast::Sine{v}, at);
            return make_expr(ast::Cosine{v}, at);
        }
        if (name == "Ea") {
            expect(Tok::lparen, "'('");
            const std::size_t scale_at = peek().pos;
            Expr scale = expr();
            if (!is_constant_expr(scale))
                throw ParseError("Ea scale must be built from numbers and lam only", scale_at);
            expect(Tok::comma, "','");
            const Var v = variable();
            expect(Tok::rparen, "')'");
            return make_expr(ast::Exponential{scale, v}, at);
        }
        if (name == "d") {
            expect(Tok::lparen, "'('");
            const Token& c = peek();
            auto k = c.kind == Tok::ident ? component_index(c.text) : std::nullopt;
            if (!k) throw ParseError("d() differentiates only the components f0..f3", c.pos);
            next();
            DerivativeOrder order{};
            expect(Tok::comma, "','");
            do {
                order[index(variable())] += 1;
            } while (accept(Tok::comma));
            expect(Tok::rparen, "')'");
            return make_expr(ast::Component{*k, order}, at);
        }
        if (var_from_name(name))
            throw ParseError("variable '" + name + "' may only appear inside P, sina, cosa, Ea or J", at);
        throw ParseError("unknown identifier '" + name + "'", at);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    FrameKind frame_;
};

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Expr parse(std::string_view text, FrameKind frame) { return Parser(text, frame).parse_all(); }

bool is_constant_expr(const Expr& e) {
    return std::visit(Overloaded{
                          [](const ast::Constant&) { return true; },
                          [](const ast::Lambda&) { return true; },
                          [](const ast::Negate& n) { return is_constant_expr(n.operand); },
                          [](const ast::Sum& s) { return is_constant_expr(s.lhs) && is_constant_expr(s.rhs); },
                          [](const ast::Product& p) { return is_constant_expr(p.lhs) && is_constant_expr(p.rhs); },
                          [](const ast::Quotient& q) {
                              return is_constant_expr(q.numerator) && is_constant_expr(q.denominator);
                          },
                          [](const ast::IntPower& p) { return is_constant_expr(p.base); },
                          [](const auto&) { return false; },
                      },
                      e->kind);
}

std::string render(const Expr& e) {
    return std::visit(
        Overloaded{
            [](const ast::Constant& c) { return "(" + c.value.to_string() + ")"; },
            [](const ast::Lambda&) { return std::string("lam"); },
            [](const ast::FractalPower& p) {
                return "P(" + std::string(var_name(p.var)) + "," + std::to_string(p.exponent) + ")";
            },
            [](const ast::Sine& s) { return "sina(" + std::string(var_name(s.var)) + ")"; },
            [](const ast::Cosine& c) { return "cosa(" + std::string(var_name(c.var)) + ")"; },
            [](const ast::Exponential& x) { return "Ea(" + render(x.scale) + "," + std::string(var_name(x.var)) + ")"; },
            [](const ast::JBasis& j) {
                return "J(" + std::string(var_name(j.var)) + "," + std::to_string(j.index) + ")";
            },
            [](const ast::Component& c) {
                std::string vars;
                for (Var v : kAllVars)
                    for (int k = 0; k < c.order[index(v)]; ++k) vars += "," + std::string(var_name(v));
                const std::string f = "f" + std::to_string(c.index);
                return vars.empty() ? f : "d(" + f + vars + ")";
            },
            [](const ast::Negate& n) { return "(-" + render(n.operand) + ")"; },
            [](const ast::Sum& s) { return "(" + render(s.lhs) + (s.subtract ? "-" : "+") + render(s.rhs) + ")"; },
            [](const ast::Product& p) { return "(" + render(p.lhs) + "*" + render(p.rhs) + ")"; },
            [](const ast::Quotient& q) { return "(" + render(q.numerator) + "/" + render(q.denominator) + ")"; },
            [](const ast::IntPower& p) { return "(" + render(p.base) + "^" + std::to_string(p.exponent) + ")"; },
        },
        e->kind);
}

}  // namespace lfmt
