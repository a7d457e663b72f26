#pragma once

#include "lfmt/canonical.hpp"
#include "lfmt/special_functions.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>

namespace lfmt {

/// Coordinates of an evaluation point; only the variables that occur need a value.
using Point = std::map<Var, double>;

/// Numeric stand-ins for component symbols and the Helmholtz parameter.
struct Bindings {
    using FieldFunction = std::function<std::complex<double>(const Point&)>;

    std::map<FieldSymbol, FieldFunction> fields;
    std::optional<std::complex<double>> lambda;

    Bindings& bind(const FieldSymbol& sym, FieldFunction f) {
        fields[sym] = std::move(f);
        return *this;
    }
    Bindings& bind(const FieldSymbol& sym, std::complex<double> value) {
        fields[sym] = [value](const Point&) { return value; };
        return *this;
    }
};

/// Substitutes P(v,n) -> v^(n alpha) and sina/cosa/Ea -> series evaluations at
/// u = v^alpha. Throws UnboundSymbol for missing variables or fields, and
/// DomainError for a fractional power of a negative coordinate or a negative
/// power of zero.
std::complex<double> eval_numeric(const CanonicalExpr& e, const Point& point, const Bindings& bindings, Alpha alpha,
                                  double tol = 1e-14);

}  // namespace lfmt
