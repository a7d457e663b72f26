#include "lfmt/canonical.hpp"
#include "lfmt/derivative.hpp"
#include "lfmt/error.hpp"
#include "lfmt/evaluate.hpp"
#include "lfmt/field_spec.hpp"
#include "lfmt/operators.hpp"
#include "lfmt/special_functions.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

lfmt::FrameKind frame_of(const std::string& name) {
    if (auto f = lfmt::frame_from_name(name)) return *f;
    throw py::value_error("unknown frame '" + name + "'");
}

lfmt::Var var_of(const std::string& name, lfmt::FrameKind frame) {
    const auto v = lfmt::var_from_name(name);
    if (!v || !lfmt::frame_has(frame, *v))
        throw py::value_error("'" + name + "' is not a variable of the " + std::string(lfmt::frame_name(frame)) + " frame");
    return *v;
}

std::vector<std::string> strings(const lfmt::QuaternionField& f) {
    std::vector<std::string> out;
    for (const auto& c : f.c) out.push_back(c.to_string());
    return out;
}

py::tuple series_result(const lfmt::SeriesValue& v) { return py::make_tuple(v.value, v.terms); }

std::vector<std::string> apply(const py::object& spec, const std::string& op) {
    std::string text;
    if (py::isinstance<py::str>(spec)) {
        text = spec.cast<std::string>();
    } else {
        text = py::module_::import("json").attr("dumps")(spec).cast<std::string>();
    }
    const auto s = lfmt::FieldSpec::from_json(text);
    const auto f = s.field();
    if (op == "mt") return strings(lfmt::mt_apply(f, lfmt::Side::left));
    if (op == "mt-right") return strings(lfmt::mt_apply(f, lfmt::Side::right));
    if (op == "laplacian") return strings(lfmt::laplacian(f));
    if (op == "bitsadze") return strings(lfmt::bitsadze(f));
    if (op == "helmholtz") return strings(lfmt::helmholtz_residual(f, s.lambda_value()));
    throw py::value_error("unknown operator '" + op + "'");
}

std::string diff(const std::string& expr, const std::string& var, const std::string& frame_name, int order,
                 const std::string& mode) {
    if (order < 0) throw py::value_error("order must be non-negative");
    const auto frame = frame_of(frame_name);
    const auto v = var_of(var, frame);
    const auto e = lfmt::parse(expr, frame);
    if (mode == "gamma") {
        auto p = lfmt::to_j_polynomial(e, v);
        for (int k = 0; k < order; ++k) p = lfmt::d_alpha_gamma(p, v);
        return p.to_string();
    }
    if (mode != "derivation") throw py::value_error("mode must be 'derivation' or 'gamma'");
    return lfmt::nth_d_alpha(lfmt::normalize(e), v, order).to_string();
}

std::complex<double> evaluate(const std::string& expr, const std::string& frame_name, double alpha,
                              const std::map<std::string, double>& at,
                              const std::map<std::string, std::complex<double>>& bind,
                              std::optional<std::complex<double>> lam, double tol) {
    const auto frame = frame_of(frame_name);
    lfmt::Point point;
    for (const auto& [name, value] : at) point[var_of(name, frame)] = value;
    lfmt::Bindings bindings;
    for (const auto& [name, value] : bind) {
        const auto sym = lfmt::parse(name, frame);
        const auto* comp = std::get_if<lfmt::ast::Component>(&sym->kind);
        if (!comp) throw py::value_error("bind keys must be component symbols such as f0 or d(f1,r)");
        bindings.bind(lfmt::FieldSymbol{comp->index, comp->order}, value);
    }
    bindings.lambda = lam;
    return lfmt::eval_numeric(lfmt::canonical(expr, frame), point, bindings, lfmt::Alpha(alpha), tol);
}

py::list verify(const std::string& identity, const std::string& frame) {
    std::optional<lfmt::Identity> id;
    if (identity != "all") id = lfmt::identity_from_name(identity);
    std::optional<lfmt::FrameKind> f;
    if (frame != "all") f = frame_of(frame);
    py::list out;
    for (const auto& r : lfmt::verify_selection(id, f)) {
        py::dict d;
        d["identity"] = std::string(lfmt::identity_name(r.identity));
        d["frame"] = std::string(lfmt::frame_name(r.frame));
        d["mode"] = std::string(lfmt::mode_name(r.mode));
        d["pass"] = r.pass();
        std::vector<std::string> residuals;
        for (const auto& c : r.residuals) residuals.push_back(c.to_string());
        d["residuals"] = residuals;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_lfmt, m) {
    m.doc() = "Local fractional calculus core";

    auto base = py::register_exception<lfmt::Error>(m, "Error", PyExc_ValueError);
    py::register_exception<lfmt::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<lfmt::ModeViolation>(m, "ModeViolation", base.ptr());
    py::register_exception<lfmt::TruncationError>(m, "TruncationError", base.ptr());
    py::register_exception<lfmt::UnknownIdentity>(m, "UnknownIdentity", base.ptr());

    m.def(
        "canonical", [](const std::string& e, const std::string& frame) { return lfmt::canonical(e, frame_of(frame)).to_string(); },
        py::arg("expr"), py::arg("frame") = "cartesian", "Canonical text of an expression.");
    m.def(
        "equal",
        [](const std::string& a, const std::string& b, const std::string& frame) {
            const auto f = frame_of(frame);
            return lfmt::equal(lfmt::parse(a, f), lfmt::parse(b, f));
        },
        py::arg("a"), py::arg("b"), py::arg("frame") = "cartesian");
    m.def("diff", &diff, py::arg("expr"), py::arg("var"), py::arg("frame") = "cartesian", py::arg("order") = 1,
          py::arg("mode") = "derivation", "Repeated local fractional derivative, returned as canonical text.");
    m.def("evaluate", &evaluate, py::arg("expr"), py::arg("frame") = "cartesian", py::arg("alpha") = 1.0,
          py::arg("at") = std::map<std::string, double>{}, py::arg("bind") = std::map<std::string, std::complex<double>>{},
          py::arg("lam") = py::none(), py::arg("tol") = 1e-12);
    m.def("apply", &apply, py::arg("spec"), py::arg("operator"),
          "Apply mt, mt-right, laplacian, bitsadze or helmholtz to a field spec (dict or JSON text).");
    m.def("verify", &verify, py::arg("identity") = "all", py::arg("frame") = "all");
    m.def("identities", [] {
        std::vector<std::string> names;
        for (auto id : lfmt::kAllIdentities) names.emplace_back(lfmt::identity_name(id));
        return names;
    });

    m.def(
        "ml_exp", [](double a, std::complex<double> u, double tol) { return series_result(lfmt::ml_exp(lfmt::Alpha(a), u, tol)); },
        py::arg("alpha"), py::arg("u"), py::arg("tol") = 1e-12, "Returns (value, terms used).");
    m.def(
        "sin_alpha", [](double a, std::complex<double> u, double tol) { return series_result(lfmt::sin_alpha(lfmt::Alpha(a), u, tol)); },
        py::arg("alpha"), py::arg("u"), py::arg("tol") = 1e-12);
    m.def(
        "cos_alpha", [](double a, std::complex<double> u, double tol) { return series_result(lfmt::cos_alpha(lfmt::Alpha(a), u, tol)); },
        py::arg("alpha"), py::arg("u"), py::arg("tol") = 1e-12);
}
