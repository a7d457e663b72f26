#pragma once

#include <array>
#include <concepts>

namespace lfmt {

/// Commutative coefficient ring: exact CanonicalExpr or std::complex<double>.
template <typename T>
concept CoefficientRing = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    T(0);
};

/// Element q0 + q1 i1 + q2 i2 + q3 i3 of H(C). The complex unit lives in the
/// coefficients and therefore commutes with i1, i2, i3.
template <CoefficientRing T>
class ComplexQuaternion {
public:
    ComplexQuaternion() : c_{T(0), T(0), T(0), T(0)} {}
    ComplexQuaternion(T q0, T q1, T q2, T q3) : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

    static ComplexQuaternion scalar(T q0) { return {std::move(q0), T(0), T(0), T(0)}; }
    static ComplexQuaternion vector(T q1, T q2, T q3) { return {T(0), std::move(q1), std::move(q2), std::move(q3)}; }
    /// i_k for k = 0..3 (i_0 = 1).
    static ComplexQuaternion unit(int k) {
        ComplexQuaternion q;
        q.c_[k] = T(1);
        return q;
    }

    const T& operator[](int k) const { return c_[k]; }
    T& operator[](int k) { return c_[k]; }

    /// Sc(q) = q0.
    const T& sc() const { return c_[0]; }
    /// Vec(q) = q1 i1 + q2 i2 + q3 i3.
    ComplexQuaternion vec() const { return vector(c_[1], c_[2], c_[3]); }

    ComplexQuaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    friend ComplexQuaternion operator+(const ComplexQuaternion& a, const ComplexQuaternion& b) {
        return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
    }
    friend ComplexQuaternion operator-(const ComplexQuaternion& a, const ComplexQuaternion& b) {
        return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
    }
    /// Coefficient scaling s q.
    friend ComplexQuaternion operator*(const T& s, const ComplexQuaternion& q) {
        return {s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]};
    }
    friend ComplexQuaternion operator*(const ComplexQuaternion& p, const ComplexQuaternion& q) { return qmul(p, q); }
    friend bool operator==(const ComplexQuaternion& a, const ComplexQuaternion& b) { return a.c_ == b.c_; }

private:
    std::array<T, 4> c_;
};

/// <p, q> = p1 q1 + p2 q2 + p3 q3 over the vector parts (bilinear, not Hermitian).
template <CoefficientRing T>
T dot(const ComplexQuaternion<T>& p, const ComplexQuaternion<T>& q) {
    return p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

/// [p, q]: the determinant with rows (i1, i2, i3), (p1, p2, p3), (q1, q2, q3).
template <CoefficientRing T>
ComplexQuaternion<T> cross(const ComplexQuaternion<T>& p, const ComplexQuaternion<T>& q) {
    return ComplexQuaternion<T>::vector(p[2] * q[3] - p[3] * q[2], p[3] * q[1] - p[1] * q[3], p[1] * q[2] - p[2] * q[1]);
}

/// pq = p0 q0 - <p, q> + p0 q + q0 p + [p, q].
template <CoefficientRing T>
ComplexQuaternion<T> qmul(const ComplexQuaternion<T>& p, const ComplexQuaternion<T>& q) {
    const ComplexQuaternion<T> pv = p.vec();
    const ComplexQuaternion<T> qv = q.vec();
    ComplexQuaternion<T> out = p.sc() * qv + q.sc() * pv + cross(pv, qv);
    out[0] = p.sc() * q.sc() - dot(pv, qv);
    return out;
}

}  // namespace lfmt
