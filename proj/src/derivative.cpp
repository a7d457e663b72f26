#include "lfmt/derivative.hpp"

#include "lfmt/error.hpp"

#include <optional>

namespace lfmt {

std::string_view mode_name(DerivativeMode mode) {
    return mode == DerivativeMode::derivation ? "derivation" : "gamma";
}

namespace {

// Leibniz expansion over the generator factors of one monomial.
void differentiate_monomial(const Monomial& m, const Coeff& c, Var v, CanonicalExpr& out) {
    const int k = index(v);

    if (m.power[k] != 0) {
        Monomial d = m;
        d.power[k] -= 1;
        out.add_term(std::move(d), c * Coeff(m.power[k]));
    }
    if (m.sin[k] != 0) {
        // D[sin^s] = s sin^(s-1) cos
        Monomial d = m;
        d.sin[k] -= 1;
        d.cos[k] += 1;
        out.add_term(std::move(d), c * Coeff(m.sin[k]));
    }
    if (m.cos[k] != 0) {
        // cos exponent is 1 in reduced form; D[cos] = -sin
        Monomial d = m;
        d.cos[k] -= 1;
        d.sin[k] += 1;
        out.add_term(std::move(d), -c);
    }
    for (const auto& [key, n] : m.exps) {
        if (key.var != v) continue;
        // D[Ea(s,v)^n] = n s Ea(s,v)^n
        out.add_term(m, c * Coeff(n) * key.scale_coeff());
    }
    for (const auto& [sym, n] : m.fields) {
        Monomial d = m;
        if (--d.fields[sym] == 0) d.fields.erase(sym);
        FieldSymbol next = sym;
        next.order[k] += 1;
        if (++d.fields[next] == 0) d.fields.erase(next);
        out.add_term(std::move(d), c * Coeff(n));
    }
}

}  // namespace

CanonicalExpr d_alpha(const CanonicalExpr& e, Var v) {
    CanonicalExpr out;
    for (const auto& [m, c] : e.terms()) differentiate_monomial(m, c, v, out);
    return out;
}

CanonicalExpr d_alpha(const Expr& e, Var v) { return d_alpha(normalize(e), v); }

CanonicalExpr nth_d_alpha(const CanonicalExpr& e, Var v, int order) {
    if (order < 0) throw DomainError("derivative order must be nonnegative");
    CanonicalExpr out = e;
    for (int i = 0; i < order; ++i) out = d_alpha(out, v);
    return out;
}

std::string JPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [n, c] : coeffs) {
        std::string coeff = c.to_string();
        const bool negative = coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        const std::string basis = n == 0 ? "" : "J(" + std::string(var_name(var)) + "," + std::to_string(n) + ")";
        std::string body = basis.empty() ? coeff : (coeff == "1" ? basis : coeff + "*" + basis);
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

JSeries JPolynomial::to_series(Alpha alpha) const {
    const int order = coeffs.empty() ? 0 : coeffs.rbegin()->first;
    std::vector<std::complex<double>> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (const auto& [n, value] : coeffs) c[n] = value.to_complex();
    return JSeries(alpha, std::move(c));
}

namespace {

void accumulate(JPolynomial& p, int n, const GaussRational& c) {
    auto [it, inserted] = p.coeffs.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.coeffs.erase(it);
    } else if (c.is_zero()) {
        p.coeffs.erase(it);
    }
}

JPolynomial scaled(const JPolynomial& p, const GaussRational& s) {
    JPolynomial out{p.var, {}};
    for (const auto& [n, c] : p.coeffs) accumulate(out, n, c * s);
    return out;
}

JPolynomial added(JPolynomial a, const JPolynomial& b, bool subtract) {
    for (const auto& [n, c] : b.coeffs) accumulate(a, n, subtract ? -c : c);
    return a;
}

// A constant subtree as a plain Gaussian rational; lam is not a J-basis scalar.
std::optional<GaussRational> constant_value(const Expr& e) {
    if (!is_constant_expr(e)) return std::nullopt;
    const CanonicalExpr c = normalize(e);
    if (c.is_zero()) return GaussRational(0);
    const Coeff& coeff = c.terms().begin()->second;
    if (!coeff.is_constant()) throw ModeViolation("lam is not allowed in the Gamma-normalized mode");
    return coeff.constant_term();
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

JPolynomial to_j_polynomial(const Expr& e, Var v) {
    if (auto c = constant_value(e)) {
        JPolynomial p{v, {}};
        accumulate(p, 0, *c);
        return p;
    }
    return std::visit(
        Overloaded{
            [&](const ast::JBasis& j) {
                if (j.var != v) throw ModeViolation("J-basis atom in a second variable");
                return JPolynomial{v, {{j.index, GaussRational(1)}}};
            },
            [&](const ast::Negate& n) { return scaled(to_j_polynomial(n.operand, v), GaussRational(-1)); },
            [&](const ast::Sum& s) { return added(to_j_polynomial(s.lhs, v), to_j_polynomial(s.rhs, v), s.subtract); },
            [&](const ast::Product& p) {
                if (auto c = constant_value(p.lhs)) return scaled(to_j_polynomial(p.rhs, v), *c);
                if (auto c = constant_value(p.rhs)) return scaled(to_j_polynomial(p.lhs, v), *c);
                throw ModeViolation("product of non-constant factors is outside the Gamma-normalized mode");
            },
            [&](const ast::Quotient& q) {
                if (auto c = constant_value(q.denominator)) {
                    if (c->is_zero()) throw SingularDivision("division by zero constant");
                    return scaled(to_j_polynomial(q.numerator, v), GaussRational(1) / *c);
                }
                throw ModeViolation("quotient is outside the Gamma-normalized mode");
            },
            [&](const auto&) -> JPolynomial {
                throw ModeViolation("only J(" + std::string(var_name(v)) +
                                    ", n) atoms and constants are admitted in the Gamma-normalized mode");
            },
        },
        e->kind);
}

JPolynomial d_alpha_gamma(const JPolynomial& p, Var v) {
    JPolynomial out{p.var, {}};
    if (v != p.var) return out;
    for (const auto& [n, c] : p.coeffs)
        if (n > 0) accumulate(out, n - 1, c);
    return out;
}

JPolynomial d_alpha_gamma(const Expr& e, Var v) { return d_alpha_gamma(to_j_polynomial(e, v), v); }

namespace {

// D[x^(k alpha)] = Gamma(1+k alpha)/Gamma(1+(k-1) alpha) x^((k-1) alpha) under the J-shift rule.
double power_rule_factor(Alpha alpha, int k) {
    return gamma_one_plus(alpha, k) / gamma_one_plus(alpha, k - 1);
}

}  // namespace

ProductRuleConflict product_rule_conflict(Alpha alpha, int m, int n) {
    if (m < 1 || n < 1) throw DomainError("product_rule_conflict needs positive powers");
    ProductRuleConflict out;
    out.via_product_rule = power_rule_factor(alpha, m) + power_rule_factor(alpha, n);
    out.via_power_rule = power_rule_factor(alpha, m + n);
    return out;
}

}  // namespace lfmt
