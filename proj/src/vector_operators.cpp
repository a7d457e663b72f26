#include "lfmt/vector_operators.hpp"

#include "lfmt/derivative.hpp"

namespace lfmt {

namespace {

using E = CanonicalExpr;

E sin_of(Var v) { return E::sina(v); }
E cos_of(Var v) { return E::cosa(v); }

}  // namespace

Frame::Frame(FrameKind kind) : kind_(kind) {
    switch (kind) {
        case FrameKind::cartesian:
            vectors_ = {Quaternion::unit(1), Quaternion::unit(2), Quaternion::unit(3)};
            break;
        case FrameKind::cylindrical: {
            const E s = sin_of(Var::theta);
            const E c = cos_of(Var::theta);
            vectors_ = {Quaternion::vector(c, s, 0), Quaternion::vector(-s, c, 0), Quaternion::unit(3)};
            break;
        }
        case FrameKind::spherical: {
            const E st = sin_of(Var::theta);
            const E ct = cos_of(Var::theta);
            const E sp = sin_of(Var::psi);
            const E cp = cos_of(Var::psi);
            vectors_ = {Quaternion::vector(st * cp, st * sp, ct), Quaternion::vector(ct * cp, ct * sp, -st),
                        Quaternion::vector(-sp, cp, 0)};
            break;
        }
    }
}

QuaternionField QuaternionField::abstract(FrameKind frame) {
    return {frame, {E::field(0), E::field(1), E::field(2), E::field(3)}};
}

QuaternionField QuaternionField::scalar(FrameKind frame, CanonicalExpr f0) { return {frame, {std::move(f0), 0, 0, 0}}; }

QuaternionField QuaternionField::vector(FrameKind frame, CanonicalExpr f1, CanonicalExpr f2, CanonicalExpr f3) {
    return {frame, {0, std::move(f1), std::move(f2), std::move(f3)}};
}

bool QuaternionField::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

Quaternion QuaternionField::in_cartesian_units() const {
    const Frame f(frame);
    Quaternion q = Quaternion::scalar(c[0]);
    for (int k = 0; k < 3; ++k) q = q + c[k + 1] * f.vectors()[k];
    return q;
}

QuaternionField operator+(const QuaternionField& a, const QuaternionField& b) {
    return {a.frame, {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
}

QuaternionField operator-(const QuaternionField& a, const QuaternionField& b) {
    return {a.frame, {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
}

QuaternionField operator*(const CanonicalExpr& s, const QuaternionField& f) {
    return {f.frame, {s * f.c[0], s * f.c[1], s * f.c[2], s * f.c[3]}};
}

QuaternionField QuaternionField::operator-() const { return {frame, {-c[0], -c[1], -c[2], -c[3]}}; }

QuaternionField grad_alpha(const CanonicalExpr& f0, FrameKind frame) {
    switch (frame) {
        case FrameKind::cartesian:
            return QuaternionField::vector(frame, d_alpha(f0, Var::x), d_alpha(f0, Var::y), d_alpha(f0, Var::z));
        case FrameKind::cylindrical: {
            const E inv_r = E::power(Var::r, -1);
            return QuaternionField::vector(frame, d_alpha(f0, Var::r), inv_r * d_alpha(f0, Var::theta),
                                           d_alpha(f0, Var::z));
        }
        case FrameKind::spherical: {
            const E inv_r = E::power(Var::r, -1);
            const E inv_rs = inv_r * sin_of(Var::theta).pow(-1);
            return QuaternionField::vector(frame, d_alpha(f0, Var::r), inv_r * d_alpha(f0, Var::theta),
                                           inv_rs * d_alpha(f0, Var::psi));
        }
    }
    return {};
}

CanonicalExpr div_alpha(const QuaternionField& v) {
    const E& f1 = v.c[1];
    const E& f2 = v.c[2];
    const E& f3 = v.c[3];
    switch (v.frame) {
        case FrameKind::cartesian: return d_alpha(f1, Var::x) + d_alpha(f2, Var::y) + d_alpha(f3, Var::z);
        case FrameKind::cylindrical: {
            const E inv_r = E::power(Var::r, -1);
            return d_alpha(f1, Var::r) + inv_r * d_alpha(f2, Var::theta) + inv_r * f1 + d_alpha(f3, Var::z);
        }
        case FrameKind::spherical: {
            const E inv_r = E::power(Var::r, -1);
            const E inv_rs = inv_r * sin_of(Var::theta).pow(-1);
            return d_alpha(f1, Var::r) + E(2) * inv_r * f1 + inv_r * d_alpha(f2, Var::theta) +
                   inv_rs * (d_alpha(f3, Var::psi) + f2 * cos_of(Var::theta));
        }
    }
    return {};
}

QuaternionField curl_alpha(const QuaternionField& v) {
    const E& f1 = v.c[1];
    const E& f2 = v.c[2];
    const E& f3 = v.c[3];
    switch (v.frame) {
        case FrameKind::cartesian:
            return QuaternionField::vector(v.frame, d_alpha(f3, Var::y) - d_alpha(f2, Var::z),
                                           d_alpha(f1, Var::z) - d_alpha(f3, Var::x),
                                           d_alpha(f2, Var::x) - d_alpha(f1, Var::y));
        case FrameKind::cylindrical: {
            const E inv_r = E::power(Var::r, -1);
            return QuaternionField::vector(v.frame, inv_r * d_alpha(f3, Var::theta) - d_alpha(f2, Var::z),
                                           d_alpha(f1, Var::z) - d_alpha(f3, Var::r),
                                           d_alpha(f2, Var::r) - inv_r * d_alpha(f1, Var::theta) + inv_r * f2);
        }
        case FrameKind::spherical: {
            const E inv_r = E::power(Var::r, -1);
            const E inv_rs = inv_r * sin_of(Var::theta).pow(-1);
            return QuaternionField::vector(
                v.frame,
                inv_r * d_alpha(f3, Var::theta) - inv_rs * d_alpha(f2, Var::psi) + inv_rs * cos_of(Var::theta) * f3,
                inv_rs * d_alpha(f1, Var::psi) - d_alpha(f3, Var::r) - inv_r * f3,
                d_alpha(f2, Var::r) - inv_r * d_alpha(f1, Var::theta) + inv_r * f2);
        }
    }
    return {};
}

}  // namespace lfmt
