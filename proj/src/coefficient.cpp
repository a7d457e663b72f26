#include "lfmt/coefficient.hpp"

#include "lfmt/error.hpp"

#include <cmath>

namespace lfmt {

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw SingularDivision("division by zero constant");
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
    Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::complex<double> GaussRational::to_complex() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
}

std::string rational_to_string(const Rational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string GaussRational::to_string() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rational_to_string(im_) + "*i";
    }
    if (re_ == 0) return imag;
    std::string out = "(" + rational_to_string(re_);
    if (imag.front() != '-') out += "+";
    return out + imag + ")";
}

Coeff::Coeff(GaussRational c, int lambda_power) {
    if (!c.is_zero()) terms_.emplace(lambda_power, std::move(c));
}

GaussRational Coeff::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? GaussRational() : it->second;
}

Coeff Coeff::operator-() const {
    Coeff out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    for (const auto& [p, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
    Coeff out;
    for (const auto& [pa, ca] : terms_)
        for (const auto& [pb, cb] : o.terms_) out += Coeff(ca * cb, pa + pb);
    *this = std::move(out);
    return *this;
}

Coeff Coeff::inverse() const {
    if (terms_.empty()) throw SingularDivision("division by zero coefficient");
    if (terms_.size() != 1)
        throw UnsupportedDivision("division by a polynomial in lam is not supported");
    const auto& [p, c] = *terms_.begin();
    return Coeff(GaussRational(1) / c, -p);
}

std::complex<double> Coeff::evaluate(std::complex<double> lambda) const {
    std::complex<double> sum = 0.0;
    for (const auto& [p, c] : terms_) sum += c.to_complex() * std::pow(lambda, p);
    return sum;
}

namespace {

std::string lambda_factor(int p) {
    if (p == 1) return "lam";
    return "lam^" + std::to_string(p);
}

}  // namespace

std::string Coeff::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        std::string body;
        if (p == 0) {
            body = c.to_string();
        } else if (c.is_one()) {
            body = lambda_factor(p);
        } else if (c == GaussRational(-1)) {
            body = "-" + lambda_factor(p);
        } else {
            body = c.to_string() + "*" + lambda_factor(p);
        }
        if (!first) out += body.front() == '-' ? "" : "+";
        out += body;
        first = false;
    }
    if (terms_.size() > 1) out = "(" + out + ")";
    return out;
}

}  // namespace lfmt
