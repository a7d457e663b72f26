#include "lfmt/error.hpp"
#include "lfmt/expr.hpp"

#include <gtest/gtest.h>

using lfmt::FrameKind;
using lfmt::Var;
namespace ast = lfmt::ast;

namespace {

std::size_t error_position(std::string_view text, FrameKind frame = FrameKind::cylindrical) {
    try {
        lfmt::parse(text, frame);
    } catch (const lfmt::ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for '" << text << "'";
    return std::string::npos;
}

}  // namespace

TEST(Parser, FractalMonomial) {
    const auto e = lfmt::parse("P(r,-2)", FrameKind::cylindrical);
    const auto* p = std::get_if<ast::FractalPower>(&e->kind);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->var, Var::r);
    EXPECT_EQ(p->exponent, -2);
}

TEST(Parser, SumOfProductAndComponent) {
    const auto e = lfmt::parse("sina(theta)*P(r,1) + f1", FrameKind::cylindrical);
    const auto* s = std::get_if<ast::Sum>(&e->kind);
    ASSERT_NE(s, nullptr);
    EXPECT_FALSE(s->subtract);
    EXPECT_NE(std::get_if<ast::Product>(&s->lhs->kind), nullptr);
    const auto* f = std::get_if<ast::Component>(&s->rhs->kind);
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->index, 1);
}

TEST(Parser, SquaredGenerators) {
    const auto e = lfmt::parse("cosa(theta)^2 + sina(theta)^2", FrameKind::spherical);
    const auto* s = std::get_if<ast::Sum>(&e->kind);
    ASSERT_NE(s, nullptr);
    const auto* lhs = std::get_if<ast::IntPower>(&s->lhs->kind);
    ASSERT_NE(lhs, nullptr);
    EXPECT_EQ(lhs->exponent, 2);
    EXPECT_NE(std::get_if<ast::Cosine>(&lhs->base->kind), nullptr);
}

TEST(Parser, PrecedenceAndAssociativity) {
    EXPECT_EQ(lfmt::render(lfmt::parse("1 - 2 - 3", FrameKind::cartesian)), "(((1)-(2))-(3))");
    EXPECT_EQ(lfmt::render(lfmt::parse("1 + 2*3", FrameKind::cartesian)), "((1)+((2)*(3)))");
    EXPECT_EQ(lfmt::render(lfmt::parse("2/3/4", FrameKind::cartesian)), "(((2)/(3))/(4))");
    EXPECT_EQ(lfmt::render(lfmt::parse("-P(x,1)^2", FrameKind::cartesian)),
              lfmt::render(lfmt::parse("-(P(x,1)^2)", FrameKind::cartesian)));
}

TEST(Parser, ComplexAndDecimalLiterals) {
    const auto e = lfmt::parse("1.25", FrameKind::cartesian);
    const auto* c = std::get_if<ast::Constant>(&e->kind);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->value, lfmt::GaussRational(lfmt::Rational(5, 4)));

    const auto im = lfmt::parse("3i", FrameKind::cartesian);
    const auto* ci = std::get_if<ast::Constant>(&im->kind);
    ASSERT_NE(ci, nullptr);
    EXPECT_EQ(ci->value, lfmt::GaussRational(0, 3));
}

TEST(Parser, ExponentialScale) {
    const auto e = lfmt::parse("Ea(1+2i, z)", FrameKind::cylindrical);
    const auto* x = std::get_if<ast::Exponential>(&e->kind);
    ASSERT_NE(x, nullptr);
    EXPECT_EQ(x->var, Var::z);
    EXPECT_TRUE(lfmt::is_constant_expr(x->scale));
    EXPECT_NO_THROW(lfmt::parse("Ea(i*lam, z)", FrameKind::cylindrical));
    EXPECT_THROW(lfmt::parse("Ea(P(r,1), z)", FrameKind::cylindrical), lfmt::ParseError);
}

TEST(Parser, DerivativeSymbols) {
    const auto e = lfmt::parse("d(f2, theta, r, theta)", FrameKind::cylindrical);
    const auto* f = std::get_if<ast::Component>(&e->kind);
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->index, 2);
    EXPECT_EQ(f->order[lfmt::index(Var::r)], 1);
    EXPECT_EQ(f->order[lfmt::index(Var::theta)], 2);
    EXPECT_THROW(lfmt::parse("d(P(r,1), r)", FrameKind::cylindrical), lfmt::ParseError);
    EXPECT_THROW(lfmt::parse("d(f1, psi)", FrameKind::cylindrical), lfmt::ParseError);
}

TEST(Parser, JBasis) {
    const auto e = lfmt::parse("J(x, 3)", FrameKind::cartesian);
    const auto* j = std::get_if<ast::JBasis>(&e->kind);
    ASSERT_NE(j, nullptr);
    EXPECT_EQ(j->index, 3);
    EXPECT_THROW(lfmt::parse("J(x, -1)", FrameKind::cartesian), lfmt::ParseError);
}

TEST(Parser, EmptyInput) {
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("   "), 0u);
}

TEST(Parser, LexErrorPosition) { EXPECT_EQ(error_position("P(r,1) $ 2"), 7u); }

TEST(Parser, UnknownIdentifierPosition) {
    EXPECT_EQ(error_position("2*foo"), 2u);
    // psi is not a cylindrical variable
    EXPECT_EQ(error_position("sina(psi)"), 5u);
    EXPECT_NO_THROW(lfmt::parse("sina(psi)", FrameKind::spherical));
}

TEST(Parser, NonIntegerExponent) {
    EXPECT_EQ(error_position("P(r,1.5)"), 4u);
    EXPECT_EQ(error_position("f1^0.5"), 3u);
}

TEST(Parser, BareVariableIsRejected) { EXPECT_THROW(lfmt::parse("r + 1", FrameKind::cylindrical), lfmt::ParseError); }

TEST(Parser, UnbalancedParentheses) {
    EXPECT_EQ(error_position("(f1 + f2"), 8u);
    EXPECT_THROW(lfmt::parse("f1 + f2)", FrameKind::cartesian), lfmt::ParseError);
}

TEST(Parser, RenderReparses) {
    for (const char* text : {"P(r,-2)*sina(theta)^-1 - 3/4*f1", "Ea((1/2+i), z)*lam^2", "-(f0 + d(f3,r,z))/P(r,2)"}) {
        const auto e = lfmt::parse(text, FrameKind::cylindrical);
        const auto rendered = lfmt::render(e);
        EXPECT_EQ(lfmt::render(lfmt::parse(rendered, FrameKind::cylindrical)), rendered) << text;
    }
}
