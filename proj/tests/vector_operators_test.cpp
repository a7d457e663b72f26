#include "lfmt/vector_operators.hpp"

#include "classical_oracle.hpp"

#include <gtest/gtest.h>

using lfmt::CanonicalExpr;
using lfmt::FrameKind;
using lfmt::QuaternionField;
using lfmt::Var;

namespace {

CanonicalExpr in(FrameKind f, std::string_view s) { return lfmt::canonical(s, f); }

const std::string kSphX = "P(r,1)*sina(theta)*cosa(psi)";
const std::string kSphY = "P(r,1)*sina(theta)*sina(psi)";
const std::string kSphZ = "P(r,1)*cosa(theta)";

// Local components of a vector given by its Cartesian components.
QuaternionField from_cartesian(FrameKind f, const CanonicalExpr& ax, const CanonicalExpr& ay, const CanonicalExpr& az) {
    const lfmt::Quaternion a = lfmt::Quaternion::vector(ax, ay, az);
    const auto e = lfmt::Frame(f).vectors();
    return QuaternionField::vector(f, lfmt::dot(a, e[0]), lfmt::dot(a, e[1]), lfmt::dot(a, e[2]));
}

}  // namespace

TEST(Gradient, Examples) {
    for (auto f : lfmt::kAllFrames) EXPECT_TRUE(lfmt::grad_alpha(in(f, "7/2 + lam"), f).is_zero());
    EXPECT_EQ(lfmt::grad_alpha(in(FrameKind::cylindrical, "P(r,2)"), FrameKind::cylindrical),
              QuaternionField::vector(FrameKind::cylindrical, in(FrameKind::cylindrical, "2*P(r,1)"), 0, 0));
    EXPECT_EQ(lfmt::grad_alpha(CanonicalExpr::field(0), FrameKind::spherical),
              QuaternionField::vector(FrameKind::spherical, in(FrameKind::spherical, "d(f0,r)"),
                                      in(FrameKind::spherical, "P(r,-1)*d(f0,theta)"),
                                      in(FrameKind::spherical, "P(r,-1)*sina(theta)^-1*d(f0,psi)")));
}

TEST(Gradient, OfCartesianHeightIsTheThirdAxis) {
    const auto g = lfmt::grad_alpha(in(FrameKind::spherical, kSphZ), FrameKind::spherical);
    EXPECT_EQ(g.in_cartesian_units(), lfmt::Quaternion::unit(3));
    const auto gc = lfmt::grad_alpha(in(FrameKind::cylindrical, "P(r,1)*sina(theta)"), FrameKind::cylindrical);
    EXPECT_EQ(gc.in_cartesian_units(), lfmt::Quaternion::unit(2));
}

TEST(Divergence, Examples) {
    const auto cyl = QuaternionField::vector(FrameKind::cylindrical, CanonicalExpr::power(Var::r, 1), 0, 0);
    EXPECT_EQ(lfmt::div_alpha(cyl), CanonicalExpr(2));
    const auto sph = QuaternionField::vector(FrameKind::spherical, CanonicalExpr::power(Var::r, 1), 0, 0);
    EXPECT_EQ(lfmt::div_alpha(sph), CanonicalExpr(3));
    for (auto f : lfmt::kAllFrames) EXPECT_TRUE(lfmt::div_alpha(QuaternionField::vector(f, 0, 0, 0)).is_zero());
}

TEST(Divergence, OfPositionVector) {
    const FrameKind f = FrameKind::spherical;
    EXPECT_EQ(lfmt::div_alpha(from_cartesian(f, in(f, kSphX), in(f, kSphY), in(f, kSphZ))), CanonicalExpr(3));
}

TEST(Curl, Examples) {
    const FrameKind f = FrameKind::cylindrical;
    EXPECT_TRUE(lfmt::curl_alpha(QuaternionField::vector(f, 0, 0, 5)).is_zero());
    EXPECT_EQ(lfmt::curl_alpha(QuaternionField::vector(f, 0, CanonicalExpr::power(Var::r, 1), 0)),
              QuaternionField::vector(f, 0, 0, 2));
}

TEST(Curl, OfRotationFieldInSphericalFrame) {
    // (-y, x, 0) has curl 2 i3
    const FrameKind f = FrameKind::spherical;
    const auto v = from_cartesian(f, in(f, "-" + kSphY), in(f, kSphX), 0);
    EXPECT_EQ(v, QuaternionField::vector(f, 0, 0, in(f, "P(r,1)*sina(theta)")));
    EXPECT_EQ(lfmt::curl_alpha(v).in_cartesian_units(), lfmt::Quaternion::vector(0, 0, 2));
}

class AbstractFields : public ::testing::TestWithParam<FrameKind> {};

TEST_P(AbstractFields, CurlOfGradientVanishes) {
    EXPECT_TRUE(lfmt::curl_alpha(lfmt::grad_alpha(CanonicalExpr::field(0), GetParam())).is_zero());
}

TEST_P(AbstractFields, DivergenceOfCurlVanishes) {
    EXPECT_TRUE(lfmt::div_alpha(lfmt::curl_alpha(QuaternionField::abstract(GetParam()).vec())).is_zero());
}

TEST_P(AbstractFields, MatchClassicalFormulas) {
    const FrameKind f = GetParam();
    const auto q = QuaternionField::abstract(f);
    const auto a = oracle::components(q);
    EXPECT_EQ(oracle::components(lfmt::grad_alpha(q.c[0], f)), oracle::grad(f, q.c[0]));
    EXPECT_EQ(lfmt::div_alpha(q.vec()), oracle::div(f, a));
    EXPECT_EQ(oracle::components(lfmt::curl_alpha(q.vec())), oracle::curl(f, a));
}

INSTANTIATE_TEST_SUITE_P(Frames, AbstractFields,
                         ::testing::Values(FrameKind::cartesian, FrameKind::cylindrical, FrameKind::spherical),
                         [](const auto& info) { return std::string(lfmt::frame_name(info.param)); });

TEST(QuaternionField, CartesianUnitsRoundTrip) {
    const FrameKind f = FrameKind::cylindrical;
    const auto v = QuaternionField::vector(f, in(f, "P(r,2)"), in(f, "f1"), in(f, "sina(theta)"));
    const auto u = v.in_cartesian_units();
    const auto back = from_cartesian(f, u[1], u[2], u[3]);
    EXPECT_EQ(back, v);
}
