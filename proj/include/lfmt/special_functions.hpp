#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace lfmt {

/// Fractal order of the Cantor set, 0 < alpha <= 1. The endpoint 1 recovers
/// classical calculus.
class Alpha {
public:
    explicit Alpha(double value);

    double value() const noexcept { return value_; }
    bool is_classical() const noexcept { return value_ == 1.0; }

private:
    double value_;
};

/// Gamma(x) for x > 0 by a Lanczos approximation (g = 7, 9 terms).
/// Throws RangeError when the result overflows a double.
double lanczos_gamma(double x);

/// Gamma(1 + k alpha).
double gamma_one_plus(Alpha alpha, int k);

struct SeriesValue {
    std::complex<double> value;
    int terms = 0;  ///< number of series terms summed
};

/// Default hard cap on summed terms.
inline constexpr int kMaxSeriesTerms = 500;

/// E_alpha evaluated at the fractal argument u: sum_k u^k / Gamma(1 + k alpha).
SeriesValue ml_exp(Alpha alpha, std::complex<double> u, double tol, int max_terms = kMaxSeriesTerms);

/// sin_alpha at fractal argument u: sum_k (-1)^k u^(2k+1) / Gamma(1 + (2k+1) alpha).
SeriesValue sin_alpha(Alpha alpha, std::complex<double> u, double tol, int max_terms = kMaxSeriesTerms);

/// cos_alpha at fractal argument u: sum_k (-1)^k u^(2k) / Gamma(1 + 2k alpha).
SeriesValue cos_alpha(Alpha alpha, std::complex<double> u, double tol, int max_terms = kMaxSeriesTerms);

/// Truncated expansion sum_k coeffs[k] J_k(x) on the Gamma-normalized basis
/// J_k(x) = x^(k alpha) / Gamma(1 + k alpha).
class JSeries {
public:
    JSeries(Alpha alpha, std::vector<std::complex<double>> coeffs);

    static JSeries e_alpha(Alpha alpha, int order);
    static JSeries sin_alpha(Alpha alpha, int order);
    static JSeries cos_alpha(Alpha alpha, int order);

    Alpha alpha() const noexcept { return alpha_; }
    int truncation_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::complex<double>>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    std::complex<double> evaluate(double x) const;

    friend bool operator==(const JSeries& a, const JSeries& b) {
        return a.alpha_.value() == b.alpha_.value() && a.coeffs_ == b.coeffs_;
    }

private:
    Alpha alpha_;
    std::vector<std::complex<double>> coeffs_;
};

/// D^(alpha) on the J-basis: J_k -> J_(k-1), J_0 -> 0. The order drops by one
/// down to the single-coefficient zero series.
JSeries series_shift_derivative(const JSeries& s);

struct LimitReport {
    std::complex<double> estimate;
    std::vector<std::complex<double>> quotients;
    bool exists = false;
};

/// Gamma(1+alpha) (f(h) - f(0)) / h^alpha along strictly decreasing positive
/// steps, extrapolated with Aitken's delta-squared on the tail. `exists` is
/// false when the quotient sequence diverges.
LimitReport limit_definition_derivative_at_zero(const std::function<std::complex<double>(double)>& f,
                                                Alpha alpha, std::span<const double> steps);

}  // namespace lfmt
