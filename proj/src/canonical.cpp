#include "lfmt/canonical.hpp"

#include "lfmt/error.hpp"

#include <tuple>

namespace lfmt {

std::string FieldSymbol::to_string() const {
    std::string vars;
    for (Var v : kAllVars)
        for (int k = 0; k < order[index(v)]; ++k) vars += "," + std::string(var_name(v));
    const std::string f = "f" + std::to_string(component);
    return vars.empty() ? f : "d(" + f + vars + ")";
}

bool operator<(const ExpKey& a, const ExpKey& b) {
    if (a.var != b.var) return a.var < b.var;
    if (a.lambda_power != b.lambda_power) return a.lambda_power < b.lambda_power;
    return a.scale < b.scale;
}

bool Monomial::is_one() const {
    for (int k = 0; k < kVarCount; ++k)
        if (power[k] != 0 || sin[k] != 0 || cos[k] != 0) return false;
    return exps.empty() && fields.empty();
}

namespace {

template <typename Key>
void merge_powers(std::map<Key, int>& into, const std::map<Key, int>& from) {
    for (const auto& [key, n] : from) {
        auto [it, inserted] = into.try_emplace(key, n);
        if (!inserted) {
            it->second += n;
            if (it->second == 0) into.erase(it);
        }
    }
}

}  // namespace

Monomial Monomial::times(const Monomial& o) const {
    Monomial out = *this;
    for (int k = 0; k < kVarCount; ++k) {
        out.power[k] += o.power[k];
        out.sin[k] += o.sin[k];
        out.cos[k] += o.cos[k];
    }
    merge_powers(out.exps, o.exps);
    merge_powers(out.fields, o.fields);
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    // Component symbols lead so that rendered sums group by f_k.
    return std::tie(a.fields, a.exps, a.power, a.sin, a.cos) < std::tie(b.fields, b.exps, b.power, b.sin, b.cos);
}

namespace {

std::string with_exponent(const std::string& base, int n) {
    return n == 1 ? base : base + "^" + std::to_string(n);
}

}  // namespace

std::string Monomial::to_string() const {
    std::string out;
    auto append = [&out](const std::string& factor) {
        if (!out.empty()) out += "*";
        out += factor;
    };
    for (const auto& [key, n] : exps)
        append(with_exponent("Ea(" + key.scale_coeff().to_string() + "," + std::string(var_name(key.var)) + ")", n));
    for (Var v : kAllVars) {
        const int k = index(v);
        if (power[k] != 0) append("P(" + std::string(var_name(v)) + "," + std::to_string(power[k]) + ")");
    }
    for (Var v : kAllVars) {
        const int k = index(v);
        if (sin[k] != 0) append(with_exponent("sina(" + std::string(var_name(v)) + ")", sin[k]));
        if (cos[k] != 0) append(with_exponent("cosa(" + std::string(var_name(v)) + ")", cos[k]));
    }
    for (const auto& [sym, n] : fields) append(with_exponent(sym.to_string(), n));
    return out.empty() ? "1" : out;
}

CanonicalExpr::CanonicalExpr(Coeff c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

CanonicalExpr CanonicalExpr::term(const Monomial& m, const Coeff& c) {
    CanonicalExpr out;
    out.add_term(m, c);
    return out;
}

CanonicalExpr CanonicalExpr::power(Var v, int n) {
    Monomial m;
    m.power[index(v)] = n;
    return term(m, 1);
}

CanonicalExpr CanonicalExpr::sina(Var v) {
    Monomial m;
    m.sin[index(v)] = 1;
    return term(m, 1);
}

CanonicalExpr CanonicalExpr::cosa(Var v) {
    Monomial m;
    m.cos[index(v)] = 1;
    return term(m, 1);
}

CanonicalExpr CanonicalExpr::ea(Var v, const GaussRational& scale, int lambda_power) {
    if (scale.is_zero()) return CanonicalExpr(1);  // E_alpha(0) = 1
    Monomial m;
    m.exps.emplace(ExpKey{v, scale, lambda_power}, 1);
    return term(m, 1);
}

CanonicalExpr CanonicalExpr::field(int component, const DerivativeOrder& order) {
    Monomial m;
    m.fields.emplace(FieldSymbol{component, order}, 1);
    return term(m, 1);
}

CanonicalExpr CanonicalExpr::lambda() { return CanonicalExpr(Coeff::lambda()); }

bool CanonicalExpr::is_coefficient() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void CanonicalExpr::add_term(Monomial m, Coeff c) {
    if (c.is_zero()) return;
    for (int k = 0; k < kVarCount; ++k) {
        if (m.cos[k] >= 2) {
            // cos^2 = 1 - sin^2
            m.cos[k] -= 2;
            Monomial with_sin = m;
            with_sin.sin[k] += 2;
            add_term(std::move(with_sin), -c);
            add_term(std::move(m), std::move(c));
            return;
        }
    }
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CanonicalExpr CanonicalExpr::operator-() const {
    CanonicalExpr out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

CanonicalExpr& CanonicalExpr::operator+=(const CanonicalExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CanonicalExpr& CanonicalExpr::operator-=(const CanonicalExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CanonicalExpr operator*(const CanonicalExpr& a, const CanonicalExpr& b) {
    CanonicalExpr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

CanonicalExpr& CanonicalExpr::operator*=(const CanonicalExpr& o) {
    *this = *this * o;
    return *this;
}

CanonicalExpr CanonicalExpr::inverse() const {
    if (terms_.empty()) throw SingularDivision("division by an expression whose canonical form is zero");
    if (terms_.size() != 1) throw UnsupportedDivision("division by a sum of terms is not supported: " + to_string());
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (int k = 0; k < kVarCount; ++k) {
        if (m.cos[k] != 0) throw UnsupportedDivision("cos_alpha may not appear in a denominator");
        inv.power[k] = -m.power[k];
        inv.sin[k] = -m.sin[k];
    }
    for (const auto& [key, n] : m.exps) inv.exps.emplace(key, -n);
    for (const auto& [sym, n] : m.fields) inv.fields.emplace(sym, -n);
    return term(inv, c.inverse());
}

CanonicalExpr CanonicalExpr::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    CanonicalExpr result(1);
    CanonicalExpr base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

std::string CanonicalExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.to_string();
        bool negative = false;
        if (coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        std::string body;
        if (m.is_one()) {
            body = coeff;
        } else if (coeff == "1") {
            body = m.to_string();
        } else {
            body = coeff + "*" + m.to_string();
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

CanonicalExpr normalize(const Expr& e) {
    return std::visit(
        Overloaded{
            [](const ast::Constant& c) { return CanonicalExpr(Coeff(c.value)); },
            [](const ast::Lambda&) { return CanonicalExpr::lambda(); },
            [](const ast::FractalPower& p) { return CanonicalExpr::power(p.var, p.exponent); },
            [](const ast::Sine& s) { return CanonicalExpr::sina(s.var); },
            [](const ast::Cosine& c) { return CanonicalExpr::cosa(c.var); },
            [](const ast::Exponential& x) {
                const CanonicalExpr scale = normalize(x.scale);
                if (scale.is_zero()) return CanonicalExpr(1);
                const Coeff& c = scale.terms().begin()->second;
                if (!scale.is_coefficient() || !c.is_single_term())
                    throw UnsupportedDivision("Ea scale must be a single term c*lam^k, got " + scale.to_string());
                const auto& [p, value] = *c.terms().begin();
                return CanonicalExpr::ea(x.var, value, p);
            },
            [](const ast::JBasis&) -> CanonicalExpr {
                throw ModeViolation("J-basis atoms are only defined in the Gamma-normalized mode");
            },
            [](const ast::Component& c) { return CanonicalExpr::field(c.index, c.order); },
            [](const ast::Negate& n) { return -normalize(n.operand); },
            [](const ast::Sum& s) {
                CanonicalExpr lhs = normalize(s.lhs);
                return s.subtract ? lhs - normalize(s.rhs) : lhs + normalize(s.rhs);
            },
            [](const ast::Product& p) { return normalize(p.lhs) * normalize(p.rhs); },
            [](const ast::Quotient& q) { return normalize(q.numerator) / normalize(q.denominator); },
            [](const ast::IntPower& p) { return normalize(p.base).pow(p.exponent); },
        },
        e->kind);
}

bool equal(const Expr& a, const Expr& b) { return normalize(a) == normalize(b); }

CanonicalExpr canonical(std::string_view text, FrameKind frame) { return normalize(parse(text, frame)); }

}  // namespace lfmt
