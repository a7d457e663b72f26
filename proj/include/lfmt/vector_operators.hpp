#pragma once

#include "lfmt/canonical.hpp"
#include "lfmt/quaternion.hpp"
#include "lfmt/variables.hpp"

#include <array>
#include <string_view>

namespace lfmt {

using Quaternion = ComplexQuaternion<CanonicalExpr>;

/// Coordinate frame together with its orthonormal frame vectors written in the
/// Cartesian units i1, i2, i3.
class Frame {
public:
    explicit Frame(FrameKind kind);

    FrameKind kind() const noexcept { return kind_; }
    std::string_view name() const { return frame_name(kind_); }
    std::array<Var, 3> variables() const { return frame_variables(kind_); }

    /// (e_r, e_theta, e_z), (e_r, e_theta, e_psi) or (i1, i2, i3).
    const std::array<Quaternion, 3>& vectors() const noexcept { return vectors_; }

private:
    FrameKind kind_;
    std::array<Quaternion, 3> vectors_;
};

/// f = f0 + f1 e_1 + f2 e_2 + f3 e_3 in the local basis of `frame`.
struct QuaternionField {
    FrameKind frame = FrameKind::cartesian;
    std::array<CanonicalExpr, 4> c;

    /// Field with the abstract components f0, f1, f2, f3.
    static QuaternionField abstract(FrameKind frame);
    static QuaternionField scalar(FrameKind frame, CanonicalExpr f0);
    static QuaternionField vector(FrameKind frame, CanonicalExpr f1, CanonicalExpr f2, CanonicalExpr f3);

    QuaternionField vec() const { return vector(frame, c[1], c[2], c[3]); }
    bool is_zero() const;

    /// f0 + sum_k f_k e_k with the frame vectors expanded in i1, i2, i3.
    Quaternion in_cartesian_units() const;

    friend QuaternionField operator+(const QuaternionField& a, const QuaternionField& b);
    friend QuaternionField operator-(const QuaternionField& a, const QuaternionField& b);
    friend QuaternionField operator*(const CanonicalExpr& s, const QuaternionField& f);
    QuaternionField operator-() const;
    friend bool operator==(const QuaternionField&, const QuaternionField&) = default;
};

/// Local fractional gradient; the result is a pure vector field.
QuaternionField grad_alpha(const CanonicalExpr& f0, FrameKind frame);

/// Local fractional divergence of the vector part of `v`.
CanonicalExpr div_alpha(const QuaternionField& v);

/// Local fractional curl of the vector part of `v`.
QuaternionField curl_alpha(const QuaternionField& v);

}  // namespace lfmt
