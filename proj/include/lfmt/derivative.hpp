#pragma once

#include "lfmt/canonical.hpp"
#include "lfmt/expr.hpp"
#include "lfmt/special_functions.hpp"

#include <map>
#include <string_view>

namespace lfmt {

/// Semantics of D^(alpha).
///
/// `derivation` treats D^(alpha) as a formal derivation on the fractal
/// expression algebra with D[P(v,n)] = n P(v,n-1); every curvilinear identity
/// is checked in this mode. `gamma_normalized` acts on the J-basis by index
/// shift and is linear only.
enum class DerivativeMode { derivation, gamma_normalized };

std::string_view mode_name(DerivativeMode mode);

/// Derivation-mode partial derivative with respect to v.
CanonicalExpr d_alpha(const CanonicalExpr& e, Var v);
CanonicalExpr d_alpha(const Expr& e, Var v);

/// `order`-fold application of d_alpha.
CanonicalExpr nth_d_alpha(const CanonicalExpr& e, Var v, int order);

/// Finite linear combination sum_n c_n J_n(var) with exact coefficients.
struct JPolynomial {
    Var var = Var::x;
    std::map<int, GaussRational> coeffs;  ///< zero coefficients are not stored

    friend bool operator==(const JPolynomial&, const JPolynomial&) = default;

    std::string to_string() const;
    JSeries to_series(Alpha alpha) const;
};

/// Reads an AST as a J-basis polynomial in v. Accepts constants, J(v, n),
/// sums, negation and scaling by constants; anything else (products or
/// quotients of non-constants, P, sina, ...) raises ModeViolation.
JPolynomial to_j_polynomial(const Expr& e, Var v);

/// Gamma-normalized derivative: J_n -> J_(n-1), J_0 -> 0.
JPolynomial d_alpha_gamma(const JPolynomial& p, Var v);
JPolynomial d_alpha_gamma(const Expr& e, Var v);

/// Coefficients of x^((m+n-1) alpha) in D[x^(m alpha) x^(n alpha)] obtained
/// two ways under the Gamma-power rule: through the product rule, and by
/// applying the power rule to x^((m+n) alpha) directly.
struct ProductRuleConflict {
    double via_product_rule = 0.0;
    double via_power_rule = 0.0;

    double difference() const { return via_product_rule - via_power_rule; }
};

ProductRuleConflict product_rule_conflict(Alpha alpha, int m, int n);

}  // namespace lfmt
