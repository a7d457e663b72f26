#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>

namespace lfmt {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex rational a + b i.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {0, 1}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (re, im); used only for container ordering.
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    std::complex<double> to_complex() const;

    /// DSL rendering that re-parses to the same value: "3/2", "-i", "(1/2+3*i)".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::string rational_to_string(const Rational& q);

/// Laurent polynomial in the formal Helmholtz parameter lambda with Gaussian
/// rational coefficients. Zero coefficients are never stored.
class Coeff {
public:
    Coeff() = default;
    Coeff(GaussRational c, int lambda_power = 0);  // NOLINT(google-explicit-constructor)
    Coeff(long long c) : Coeff(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)

    static Coeff lambda(int power = 1) { return Coeff(GaussRational(1), power); }

    bool is_zero() const { return terms_.empty(); }
    /// Exactly one lambda power present.
    bool is_single_term() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    /// Coefficient of lambda^0.
    GaussRational constant_term() const;

    const std::map<int, GaussRational>& terms() const { return terms_; }

    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }

    /// Inverse of a single-term coefficient. Throws UnsupportedDivision otherwise.
    Coeff inverse() const;

    /// Numeric value with lambda bound.
    std::complex<double> evaluate(std::complex<double> lambda) const;

    std::string to_string() const;

private:
    std::map<int, GaussRational> terms_;
};

}  // namespace lfmt
