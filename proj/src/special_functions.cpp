#include "lfmt/special_functions.hpp"

#include "lfmt/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace lfmt {

Alpha::Alpha(double value) : value_(value) {
    if (!(value > 0.0 && value <= 1.0))
        throw DomainError("fractal order alpha must lie in (0, 1], got " + std::to_string(value));
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Largest argument whose gamma value is finite in double precision.
constexpr double kGammaMaxArgument = 171.62;

}  // namespace

double lanczos_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("lanczos_gamma requires x > 0");
    if (x > kGammaMaxArgument) throw RangeError("Gamma(" + std::to_string(x) + ") overflows double precision");
    if (x == std::floor(x) && x <= 21.0) {
        double f = 1.0;
        for (int n = 2; n < static_cast<int>(x); ++n) f *= n;
        return f;
    }
    if (x < 0.5) {
        // Reflection keeps the series in its accurate range.
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
    }
    const double xm1 = x - 1.0;
    double a = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) a += kLanczosCoeffs[i] / (xm1 + static_cast<double>(i));
    const double t = xm1 + kLanczosG + 0.5;
    // t^(xm1+0.5) is split in two halves so that it does not overflow before e^-t is applied.
    const double half = std::pow(t, 0.5 * (xm1 + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * a;
}

double gamma_one_plus(Alpha alpha, int k) {
    if (k < 0) throw DomainError("gamma_one_plus requires k >= 0");
    return lanczos_gamma(1.0 + k * alpha.value());
}

namespace {

// Sums sum_k sign_k u^(stride k + offset) / Gamma(1 + (stride k + offset) alpha).
// Stops when the next term magnitude is below tol/2 and the magnitudes are decreasing.
SeriesValue sum_series(Alpha alpha, std::complex<double> u, double tol, int max_terms, int stride, int offset,
                       bool alternating) {
    if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
    const double a = alpha.value();
    const double abs_u = std::abs(u);

    auto magnitude = [&](int k) {
        const int n = stride * k + offset;
        if (abs_u == 0.0) return n == 0 ? 1.0 : 0.0;
        // log-space keeps huge |u|^n / Gamma from overflowing in the bound.
        return std::exp(n * std::log(abs_u) - std::lgamma(1.0 + n * a));
    };

    std::complex<double> sum = 0.0;
    std::complex<double> power = std::pow(u, offset);
    const std::complex<double> step = std::pow(u, stride);
    double last = magnitude(0);
    for (int k = 0; k < max_terms; ++k) {
        const int n = stride * k + offset;
        const double sign = (alternating && (k % 2 == 1)) ? -1.0 : 1.0;
        if (1.0 + n * a < kGammaMaxArgument) {
            sum += sign * power / lanczos_gamma(1.0 + n * a);
        } else {
            sum += sign * std::polar(magnitude(k), n * std::arg(u));
        }
        power *= step;
        const double next = magnitude(k + 1);
        if (next < 0.5 * tol && next <= last) return {sum, k + 1};
        last = next;
    }
    throw TruncationError("series did not converge within " + std::to_string(max_terms) + " terms", last);
}

}  // namespace

SeriesValue ml_exp(Alpha alpha, std::complex<double> u, double tol, int max_terms) {
    return sum_series(alpha, u, tol, max_terms, 1, 0, false);
}

SeriesValue sin_alpha(Alpha alpha, std::complex<double> u, double tol, int max_terms) {
    return sum_series(alpha, u, tol, max_terms, 2, 1, true);
}

SeriesValue cos_alpha(Alpha alpha, std::complex<double> u, double tol, int max_terms) {
    return sum_series(alpha, u, tol, max_terms, 2, 0, true);
}

JSeries::JSeries(Alpha alpha, std::vector<std::complex<double>> coeffs) : alpha_(alpha), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

JSeries JSeries::e_alpha(Alpha alpha, int order) {
    return JSeries(alpha, std::vector<std::complex<double>>(static_cast<std::size_t>(order) + 1, 1.0));
}

JSeries JSeries::sin_alpha(Alpha alpha, int order) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = 1; k <= order; k += 2) c[k] = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    return JSeries(alpha, std::move(c));
}

JSeries JSeries::cos_alpha(Alpha alpha, int order) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = 0; k <= order; k += 2) c[k] = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    return JSeries(alpha, std::move(c));
}

bool JSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0.0) return false;
    return true;
}

std::complex<double> JSeries::evaluate(double x) const {
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0.0) continue;
        const double basis = k == 0 ? 1.0 : std::pow(x, static_cast<double>(k) * alpha_.value()) /
                                                 gamma_one_plus(alpha_, static_cast<int>(k));
        sum += coeffs_[k] * basis;
    }
    return sum;
}

JSeries series_shift_derivative(const JSeries& s) {
    const auto& in = s.coeffs();
    if (in.size() <= 1) return JSeries(s.alpha(), {0.0});
    return JSeries(s.alpha(), std::vector<std::complex<double>>(in.begin() + 1, in.end()));
}

LimitReport limit_definition_derivative_at_zero(const std::function<std::complex<double>(double)>& f, Alpha alpha,
                                                std::span<const double> steps) {
    if (steps.empty()) throw DomainError("limit quotient needs at least one step");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(steps[i] > 0.0)) throw DomainError("limit steps must be positive");
        if (i > 0 && !(steps[i] < steps[i - 1])) throw DomainError("limit steps must be strictly decreasing");
    }

    const double scale = gamma_one_plus(alpha, 1);
    const std::complex<double> f0 = f(0.0);
    LimitReport report;
    for (double h : steps) report.quotients.push_back(scale * (f(h) - f0) / std::pow(h, alpha.value()));

    const auto& q = report.quotients;
    const std::size_t n = q.size();
    report.estimate = q.back();
    for (const auto& v : q) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return report;
    }
    if (n < 3) {
        report.exists = true;
        return report;
    }

    const double d_prev = std::abs(q[n - 2] - q[n - 3]);
    const double d_last = std::abs(q[n - 1] - q[n - 2]);
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(q.back()));
    if (d_last > noise && d_last >= d_prev) return report;

    report.exists = true;
    const std::complex<double> delta1 = q[n - 1] - q[n - 2];
    const std::complex<double> delta2 = delta1 - (q[n - 2] - q[n - 3]);
    if (std::abs(delta2) > noise) report.estimate = q[n - 1] - delta1 * delta1 / delta2;
    return report;
}

}  // namespace lfmt
