#pragma once

#include "lfmt/coefficient.hpp"
#include "lfmt/expr.hpp"
#include "lfmt/variables.hpp"

#include <array>
#include <map>
#include <string>

namespace lfmt {

/// A (possibly differentiated) abstract component f_k. Mixed partials commute,
/// so the order array is the whole multi-index.
struct FieldSymbol {
    int component = 0;
    DerivativeOrder order{};

    friend auto operator<=>(const FieldSymbol&, const FieldSymbol&) = default;

    std::string to_string() const;
};

/// Generator Ea(scale * lam^lambda_power, var).
struct ExpKey {
    Var var;
    GaussRational scale;
    int lambda_power = 0;

    friend bool operator==(const ExpKey&, const ExpKey&) = default;
    friend bool operator<(const ExpKey& a, const ExpKey& b);

    Coeff scale_coeff() const { return Coeff(scale, lambda_power); }
};

/// Product of generators. Invariants: cos exponents are 0 or 1, zero exponents
/// are not stored in the maps.
struct Monomial {
    std::array<int, kVarCount> power{};  ///< P(v, n) exponents
    std::array<int, kVarCount> sin{};    ///< sina(v) exponents, any sign
    std::array<int, kVarCount> cos{};    ///< cosa(v) exponents, 0 or 1
    std::map<ExpKey, int> exps;
    std::map<FieldSymbol, int> fields;

    bool is_one() const;
    /// Generator-wise product without Pythagorean reduction (cos may reach 2).
    Monomial times(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string to_string() const;
};

/// Unique normal form: a finite map from reduced monomials to nonzero
/// coefficients. Two expressions are equal iff their maps are identical.
class CanonicalExpr {
public:
    using Terms = std::map<Monomial, Coeff>;

    CanonicalExpr() = default;
    CanonicalExpr(Coeff c);  // NOLINT(google-explicit-constructor)
    CanonicalExpr(long long c) : CanonicalExpr(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

    static CanonicalExpr term(const Monomial& m, const Coeff& c);
    static CanonicalExpr power(Var v, int n);
    static CanonicalExpr sina(Var v);
    static CanonicalExpr cosa(Var v);
    static CanonicalExpr ea(Var v, const GaussRational& scale, int lambda_power = 0);
    static CanonicalExpr field(int component, const DerivativeOrder& order = {});
    static CanonicalExpr lambda();

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// No generators at all (possibly lambda-dependent coefficient).
    bool is_coefficient() const;

    /// Adds c * m, applying cos^2 -> 1 - sin^2 until m is reduced.
    void add_term(Monomial m, Coeff c);

    CanonicalExpr operator-() const;
    CanonicalExpr& operator+=(const CanonicalExpr& o);
    CanonicalExpr& operator-=(const CanonicalExpr& o);
    CanonicalExpr& operator*=(const CanonicalExpr& o);
    friend CanonicalExpr operator+(CanonicalExpr a, const CanonicalExpr& b) { return a += b; }
    friend CanonicalExpr operator-(CanonicalExpr a, const CanonicalExpr& b) { return a -= b; }
    friend CanonicalExpr operator*(const CanonicalExpr& a, const CanonicalExpr& b);
    friend CanonicalExpr operator/(const CanonicalExpr& a, const CanonicalExpr& b) { return a * b.inverse(); }
    friend bool operator==(const CanonicalExpr&, const CanonicalExpr&) = default;

    /// Inverse of a single term without cos factors. Throws SingularDivision for
    /// zero and UnsupportedDivision for sums or cos_alpha denominators.
    CanonicalExpr inverse() const;
    CanonicalExpr pow(int n) const;

    /// DSL text that re-parses and re-normalizes to this value.
    std::string to_string() const;

private:
    Terms terms_;
};

/// Normal form of an AST (derivation-mode semantics; J atoms are rejected).
CanonicalExpr normalize(const Expr& e);

/// normalize(a - b) is empty.
bool equal(const Expr& a, const Expr& b);

/// parse + normalize.
CanonicalExpr canonical(std::string_view text, FrameKind frame);

}  // namespace lfmt
