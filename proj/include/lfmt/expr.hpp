#pragma once

#include "lfmt/coefficient.hpp"
#include "lfmt/variables.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace lfmt {

struct Node;

/// Immutable, shareable abstract syntax tree of the expression DSL.
using Expr = std::shared_ptr<const Node>;

/// Order of a local fractional partial derivative per variable; all zero for
/// the bare component.
using DerivativeOrder = std::array<int, kVarCount>;

namespace ast {

struct Constant {
    GaussRational value;
};
/// The formal Helmholtz parameter, spelled `lam`.
struct Lambda {};
/// P(v, n) = v^(n alpha).
struct FractalPower {
    Var var;
    int exponent;
};
/// sina(v) = sin_alpha(v^alpha).
struct Sine {
    Var var;
};
/// cosa(v) = cos_alpha(v^alpha).
struct Cosine {
    Var var;
};
/// Ea(c, v) = E_alpha(c v^alpha); `scale` is built from constants and lam only.
struct Exponential {
    Expr scale;
    Var var;
};
/// J(v, n) = v^(n alpha) / Gamma(1 + n alpha); only the Gamma-normalized mode accepts it.
struct JBasis {
    Var var;
    int index;
};
/// Abstract component f0..f3, possibly differentiated: d(f1, r, theta).
struct Component {
    int index;
    DerivativeOrder order{};
};
struct Negate {
    Expr operand;
};
struct Sum {
    Expr lhs;
    Expr rhs;
    bool subtract = false;
};
struct Product {
    Expr lhs;
    Expr rhs;
};
struct Quotient {
    Expr numerator;
    Expr denominator;
};
struct IntPower {
    Expr base;
    int exponent;
};

}  // namespace ast

struct Node {
    using Kind = std::variant<ast::Constant, ast::Lambda, ast::FractalPower, ast::Sine, ast::Cosine, ast::Exponential,
                              ast::JBasis, ast::Component, ast::Negate, ast::Sum, ast::Product, ast::Quotient,
                              ast::IntPower>;
    Kind kind;
    std::size_t position = 0;
};

template <typename T>
Expr make_expr(T kind, std::size_t position = 0) {
    return std::make_shared<const Node>(Node{Node::Kind(std::move(kind)), position});
}

/// Parses DSL text; identifiers are resolved against the variables of `frame`.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('+'|'-') factor | atom ('^' ['-'] integer)?
///   atom   := number | 'i' | 'lam' | 'P(' var ',' integer ')' | 'sina(' var ')'
///           | 'cosa(' var ')' | 'Ea(' expr ',' var ')' | 'J(' var ',' integer ')'
///           | 'f0'..'f3' | 'd(' component (',' var)+ ')' | '(' expr ')'
///
/// Numbers are exact decimals; a trailing `i` ("3i") makes them imaginary.
/// Throws ParseError carrying the offending position.
Expr parse(std::string_view text, FrameKind frame);

/// Fully parenthesized DSL rendering of an AST; parse(render(e)) is structurally equal to e.
std::string render(const Expr& e);

/// True if the tree contains no variables, components or J atoms.
bool is_constant_expr(const Expr& e);

}  // namespace lfmt
