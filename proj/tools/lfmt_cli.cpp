// lfmt: command-line front end for the local fractional Moisil-Teodorescu engine.
//
// Exit codes: 0 success, 1 verification failure or series non-convergence,
// 2 usage or parse error.

#include "lfmt/canonical.hpp"
#include "lfmt/derivative.hpp"
#include "lfmt/error.hpp"
#include "lfmt/evaluate.hpp"
#include "lfmt/field_spec.hpp"
#include "lfmt/operators.hpp"
#include "lfmt/special_functions.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using lfmt::CanonicalExpr;
using lfmt::FrameKind;
using lfmt::QuaternionField;

struct Options {
    std::string format = "text";
    std::string frame = "cartesian";
    std::string mode = "derivation";
    double alpha = 1.0;
    double tol = 1e-12;

    std::string spec_path;
    std::string op;

    std::string identity;
    std::string verify_frame = "all";

    std::string expression;
    std::string variable;
    int order = 1;

    std::vector<std::string> at;
    std::vector<std::string> bind;
    std::string lambda;

    std::string function;
    double u_real = 0.0;
    double u_imag = 0.0;
};

FrameKind frame_or_throw(const std::string& name) {
    auto f = lfmt::frame_from_name(name);
    if (!f) throw lfmt::SpecError("unknown frame '" + name + "'");
    return *f;
}

lfmt::Var var_or_throw(const std::string& name, FrameKind frame) {
    auto v = lfmt::var_from_name(name);
    if (!v || !lfmt::frame_has(frame, *v))
        throw lfmt::SpecError("unknown variable '" + name + "' in " + std::string(lfmt::frame_name(frame)) + " frame");
    return *v;
}

std::string format_complex(std::complex<double> z) {
    std::ostringstream out;
    out << std::setprecision(16) << z.real();
    if (z.imag() != 0.0) out << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return out.str();
}

void print_field(const std::string& op, const lfmt::FieldSpec& spec, const QuaternionField& f,
                 const std::string& format) {
    if (format == "json") {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : f.c) comps.push_back(c.to_string());
        const nlohmann::json doc = {
            {"operator", op},
            {"frame", lfmt::frame_name(f.frame)},
            {"alpha", spec.alpha.value()},
            {"components", comps},
        };
        std::cout << doc.dump() << '\n';
        return;
    }
    for (int k = 0; k < 4; ++k) std::cout << 'f' << k << " = " << f.c[k].to_string() << '\n';
}

int cmd_apply(const Options& o) {
    std::ifstream in(o.spec_path);
    if (!in) throw lfmt::SpecError("cannot read spec file '" + o.spec_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const lfmt::FieldSpec spec = lfmt::FieldSpec::from_json(buffer.str());
    const QuaternionField f = spec.field();

    QuaternionField out;
    if (o.op == "mt") {
        out = lfmt::mt_apply(f, lfmt::Side::left);
    } else if (o.op == "mt-right") {
        out = lfmt::mt_apply(f, lfmt::Side::right);
    } else if (o.op == "laplacian") {
        out = lfmt::laplacian(f);
    } else if (o.op == "bitsadze") {
        out = lfmt::bitsadze(f);
    } else {
        out = lfmt::helmholtz_residual(f, spec.lambda_value());
    }
    print_field(o.op, spec, out, o.format);
    return kExitOk;
}

int cmd_verify(const Options& o) {
    std::optional<lfmt::Identity> identity;
    if (o.identity != "all") identity = lfmt::identity_from_name(o.identity);
    std::optional<FrameKind> frame;
    if (o.verify_frame != "all") frame = frame_or_throw(o.verify_frame);

    bool all_pass = true;
    for (const auto& report : lfmt::verify_selection(identity, frame)) {
        all_pass = all_pass && report.pass();
        if (o.format == "text") {
            std::cout << (report.pass() ? "PASS " : "FAIL ") << lfmt::identity_name(report.identity) << " ["
                      << lfmt::frame_name(report.frame) << ", " << lfmt::mode_name(report.mode) << "]\n";
            if (!report.pass())
                for (int k = 0; k < 4; ++k) std::cout << "  residual " << k << ": " << report.residuals[k].to_string() << '\n';
        } else {
            std::cout << report.to_json() << '\n';
        }
    }
    return all_pass ? kExitOk : kExitFailure;
}

int cmd_diff(const Options& o) {
    const FrameKind frame = frame_or_throw(o.frame);
    const lfmt::Var v = var_or_throw(o.variable, frame);
    const lfmt::Expr e = lfmt::parse(o.expression, frame);
    std::string result;
    if (o.mode == "gamma") {
        lfmt::JPolynomial p = lfmt::to_j_polynomial(e, v);
        for (int k = 0; k < o.order; ++k) p = lfmt::d_alpha_gamma(p, v);
        result = p.to_string();
    } else {
        result = lfmt::nth_d_alpha(lfmt::normalize(e), v, o.order).to_string();
    }
    if (o.format == "json") {
        const nlohmann::json doc = {{"expression", o.expression}, {"variable", o.variable}, {"order", o.order},
                                    {"mode", o.mode},             {"result", result}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << result << '\n';
    }
    return kExitOk;
}

// "name=value" pairs
std::pair<std::string, std::string> split_assignment(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw lfmt::SpecError("expected name=value, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

std::complex<double> constant_value(const std::string& text, FrameKind frame) {
    const lfmt::Expr e = lfmt::parse(text, frame);
    if (!lfmt::is_constant_expr(e)) throw lfmt::SpecError("expected a numeric constant, got '" + text + "'");
    const CanonicalExpr c = lfmt::normalize(e);
    if (c.is_zero()) return 0.0;
    const lfmt::Coeff& coeff = c.terms().begin()->second;
    if (!coeff.is_constant()) throw lfmt::SpecError("constant may not involve lam: '" + text + "'");
    return coeff.constant_term().to_complex();
}

int cmd_eval(const Options& o) {
    const FrameKind frame = frame_or_throw(o.frame);
    const lfmt::Alpha alpha(o.alpha);
    const CanonicalExpr e = lfmt::canonical(o.expression, frame);

    lfmt::Point point;
    for (const auto& a : o.at) {
        const auto [name, value] = split_assignment(a);
        point[var_or_throw(name, frame)] = std::stod(value);
    }
    lfmt::Bindings bindings;
    for (const auto& b : o.bind) {
        const auto [name, value] = split_assignment(b);
        const lfmt::Expr sym = lfmt::parse(name, frame);
        const auto* comp = std::get_if<lfmt::ast::Component>(&sym->kind);
        if (!comp) throw lfmt::SpecError("--bind expects a component symbol such as f0 or d(f1,r), got '" + name + "'");
        bindings.bind(lfmt::FieldSymbol{comp->index, comp->order}, constant_value(value, frame));
    }
    if (!o.lambda.empty()) bindings.lambda = constant_value(o.lambda, frame);

    const auto value = lfmt::eval_numeric(e, point, bindings, alpha, o.tol);
    if (o.format == "json") {
        const nlohmann::json doc = {{"canonical", e.to_string()}, {"real", value.real()}, {"imag", value.imag()}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << format_complex(value) << '\n';
    }
    return kExitOk;
}

int cmd_series(const Options& o) {
    const lfmt::Alpha alpha(o.alpha);
    const std::complex<double> u(o.u_real, o.u_imag);
    lfmt::SeriesValue v;
    if (o.function == "Ea") {
        v = lfmt::ml_exp(alpha, u, o.tol);
    } else if (o.function == "sina") {
        v = lfmt::sin_alpha(alpha, u, o.tol);
    } else {
        v = lfmt::cos_alpha(alpha, u, o.tol);
    }
    if (o.format == "json") {
        const nlohmann::json doc = {{"function", o.function}, {"alpha", o.alpha}, {"real", v.value.real()},
                                    {"imag", v.value.imag()},   {"terms", v.terms}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << format_complex(v.value) << "  (" << v.terms << " terms)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local fractional Moisil-Teodorescu calculus in Cantor-type coordinates"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats = {"text", "json"};
    const std::vector<std::string> frames = {"cartesian", "cylindrical", "spherical"};

    auto* apply = app.add_subcommand("apply", "apply an operator to the field in a spec file");
    apply->add_option("spec", o.spec_path, "field spec JSON file")->required();
    apply->add_option("operator", o.op, "mt | mt-right | laplacian | bitsadze | helmholtz")
        ->required()
        ->check(CLI::IsMember({"mt", "mt-right", "laplacian", "bitsadze", "helmholtz"}));
    apply->add_option("--format", o.format, "text | json")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "verify operator identities by exact normalization");
    verify->add_option("identity", o.identity, "identity name or 'all'")->required();
    verify->add_option("frame", o.verify_frame, "frame name or 'all'");
    o.format = "text";
    std::string verify_format = "json";
    verify->add_option("--format", verify_format, "json | text")->check(CLI::IsMember(formats));

    auto* diff = app.add_subcommand("diff", "local fractional partial derivative of an expression");
    diff->add_option("expression", o.expression)->required();
    diff->add_option("variable", o.variable)->required();
    diff->add_option("--frame", o.frame)->check(CLI::IsMember(frames));
    diff->add_option("--mode", o.mode, "derivation | gamma")->check(CLI::IsMember({"derivation", "gamma"}));
    diff->add_option("--order", o.order)->check(CLI::PositiveNumber);
    diff->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* eval = app.add_subcommand("eval", "numeric evaluation of an expression at a point");
    eval->add_option("expression", o.expression)->required();
    eval->add_option("--frame", o.frame)->check(CLI::IsMember(frames));
    eval->add_option("--alpha", o.alpha)->check(CLI::Range(0.0, 1.0));
    eval->add_option("--at", o.at, "coordinate values, e.g. --at r=2 --at theta=0.7");
    eval->add_option("--bind", o.bind, "component values, e.g. --bind f0=1 --bind 'd(f1,r)=2'");
    eval->add_option("--lambda", o.lambda, "numeric value of lam");
    eval->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    eval->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* series = app.add_subcommand("series", "evaluate E_alpha, sin_alpha or cos_alpha at a fractal argument");
    series->add_option("function", o.function, "Ea | sina | cosa")->required()->check(CLI::IsMember({"Ea", "sina", "cosa"}));
    series->add_option("--alpha", o.alpha)->check(CLI::Range(0.0, 1.0));
    series->add_option("--u", o.u_real, "real part of the fractal argument");
    series->add_option("--u-imag", o.u_imag, "imaginary part of the fractal argument");
    series->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    series->add_option("--format", o.format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*apply) return cmd_apply(o);
        if (*verify) {
            o.format = verify_format;
            return cmd_verify(o);
        }
        if (*diff) return cmd_diff(o);
        if (*eval) return cmd_eval(o);
        if (*series) return cmd_series(o);
    } catch (const lfmt::TruncationError& e) {
        std::cerr << "error: " << e.what() << " (last term magnitude " << e.last_term_magnitude() << ")\n";
        return kExitFailure;
    } catch (const lfmt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lfmt::UnknownIdentity& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lfmt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
