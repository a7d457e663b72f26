#include "lfmt/evaluate.hpp"

#include "lfmt/error.hpp"

#include <cmath>
#include <string>

namespace lfmt {

namespace {

class Evaluator {
public:
    Evaluator(const Point& point, const Bindings& bindings, Alpha alpha, double tol)
        : point_(point), bindings_(bindings), alpha_(alpha), tol_(tol) {}

    std::complex<double> monomial(const Monomial& m) {
        std::complex<double> value = 1.0;
        for (Var v : kAllVars) {
            const int k = index(v);
            if (m.power[k] != 0) value *= fractal_power(v, m.power[k]);
            if (m.sin[k] != 0) value *= std::pow(sin_of(v), m.sin[k]);
            if (m.cos[k] != 0) value *= std::pow(cos_of(v), m.cos[k]);
        }
        for (const auto& [key, n] : m.exps) {
            std::complex<double> scale = key.scale.to_complex();
            if (key.lambda_power != 0) scale *= std::pow(lambda(), key.lambda_power);
            value *= std::pow(ml_exp(alpha_, scale * fractal_power(key.var, 1), tol_).value, n);
        }
        for (const auto& [sym, n] : m.fields) {
            auto it = bindings_.fields.find(sym);
            if (it == bindings_.fields.end()) throw UnboundSymbol("unbound symbol " + sym.to_string());
            value *= std::pow(it->second(point_), n);
        }
        return value;
    }

    std::complex<double> lambda() const {
        if (!bindings_.lambda) throw UnboundSymbol("unbound symbol lam");
        return *bindings_.lambda;
    }

private:
    double coordinate(Var v) const {
        auto it = point_.find(v);
        if (it == point_.end()) throw UnboundSymbol("unbound variable " + std::string(var_name(v)));
        return it->second;
    }

    // v^(n alpha)
    double fractal_power(Var v, int n) const {
        const double x = coordinate(v);
        const double exponent = n * alpha_.value();
        if (x == 0.0 && exponent < 0.0)
            throw DomainError("negative fractal power of " + std::string(var_name(v)) + " = 0");
        if (x < 0.0 && exponent != std::floor(exponent))
            throw DomainError("fractional power of negative " + std::string(var_name(v)));
        return std::pow(x, exponent);
    }

    std::complex<double> sin_of(Var v) { return sin_alpha(alpha_, fractal_power(v, 1), tol_).value; }
    std::complex<double> cos_of(Var v) { return cos_alpha(alpha_, fractal_power(v, 1), tol_).value; }

    const Point& point_;
    const Bindings& bindings_;
    Alpha alpha_;
    double tol_;
};

}  // namespace

std::complex<double> eval_numeric(const CanonicalExpr& e, const Point& point, const Bindings& bindings, Alpha alpha,
                                  double tol) {
    Evaluator eval(point, bindings, alpha, tol);
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : e.terms()) {
        const std::complex<double> coeff = c.is_constant() ? c.constant_term().to_complex() : c.evaluate(eval.lambda());
        sum += coeff * eval.monomial(m);
    }
    return sum;
}

}  // namespace lfmt
