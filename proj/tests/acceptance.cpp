// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "lfmt/derivative.hpp"
#include "lfmt/operators.hpp"
#include "lfmt/special_functions.hpp"

#include "classical_oracle.hpp"
#include "display_fixtures.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

namespace {

using lfmt::CanonicalExpr;
using lfmt::FrameKind;
using lfmt::Identity;
using lfmt::QuaternionField;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body,
               double budget_seconds = 0.0) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0.0) o.require(elapsed < budget_seconds, "runtime budget " + std::to_string(budget_seconds) + " s");
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "  (" << elapsed << " s)"
              << o.detail.str() << '\n';
}

void identity_suite(Outcome& o, Identity id, std::initializer_list<FrameKind> frames) {
    for (auto f : frames) {
        const auto rep = lfmt::verify_identity(id, f);
        bool empty = true;
        for (const auto& r : rep.residuals) empty = empty && r.is_zero();
        o.require(rep.pass() && empty, std::string(lfmt::identity_name(id)) + " in " + std::string(lfmt::frame_name(f)));
    }
}

CanonicalExpr in(FrameKind f, const std::string& s) { return lfmt::canonical(s, f); }

}  // namespace

int main() {
    std::cout.precision(3);
    const auto curvilinear = {FrameKind::cylindrical, FrameKind::spherical};
    const auto all = {FrameKind::cartesian, FrameKind::cylindrical, FrameKind::spherical};

    criterion(1, "D_MT^2 = -Laplacian on the abstract field, all frames",
              [&](Outcome& o) { identity_suite(o, Identity::mt_squared, all); }, 10.0);

    criterion(2, "D_MT D_MT^r = -Bitsadze, cylindrical and spherical",
              [&](Outcome& o) { identity_suite(o, Identity::bitsadze_factorization, curvilinear); }, 10.0);

    criterion(3, "-(D_MT - lam)(D_MT + lam) = Delta_H + lam^2, lam formal, all frames",
              [&](Outcome& o) { identity_suite(o, Identity::helmholtz_factorization, all); }, 10.0);

    criterion(4, "curl grad = 0, div curl = 0, div grad = Delta_0 in curvilinear frames", [&](Outcome& o) {
        identity_suite(o, Identity::curl_grad, curvilinear);
        identity_suite(o, Identity::div_curl, curvilinear);
        identity_suite(o, Identity::div_grad_delta0, curvilinear);
    }, 5.0);

    criterion(5, "Helmholtz component systems match hand-encoded fixtures termwise", [&](Outcome& o) {
        const auto lam = CanonicalExpr::lambda();
        const std::pair<FrameKind, fixtures::Components> cases[] = {
            {FrameKind::cylindrical, fixtures::helmholtz_system_cylindrical()},
            {FrameKind::spherical, fixtures::helmholtz_system_spherical()},
        };
        for (const auto& [frame, fix] : cases) {
            const auto sys = lfmt::helmholtz_component_system(frame, lam);
            for (int k = 0; k < 4; ++k)
                o.require(sys[k] == in(frame, fix[k]), std::string(lfmt::frame_name(frame)) + " component " + std::to_string(k));
            const auto f0 = CanonicalExpr::field(0);
            o.require(sys[0] == lfmt::scalar_laplacian(f0, frame) + lam * lam * f0,
                      std::string(lfmt::frame_name(frame)) + " scalar part");
        }
    });

    criterion(6, "alpha = 1: operators equal classical cylindrical/spherical formulas", [&](Outcome& o) {
        for (auto f : all) {
            const auto q = QuaternionField::abstract(f);
            const std::string name(lfmt::frame_name(f));
            o.require(lfmt::grad_alpha(q.c[0], f) == oracle::field(f, 0, oracle::grad(f, q.c[0])), name + " grad");
            o.require(lfmt::div_alpha(q.vec()) == oracle::div(f, oracle::components(q)), name + " div");
            o.require(lfmt::curl_alpha(q.vec()) == oracle::field(f, 0, oracle::curl(f, oracle::components(q))), name + " curl");
            o.require(lfmt::mt_apply(q) == oracle::moisil_teodorescu(q), name + " D_MT");
            o.require(lfmt::mt_apply(q, lfmt::Side::right) == oracle::moisil_teodorescu(q, true), name + " D_MT^r");
            o.require(lfmt::laplacian(q) == oracle::laplacian(q), name + " Laplacian");
            o.require(lfmt::bitsadze(q) == oracle::bitsadze(q), name + " Bitsadze");
            const auto lam = CanonicalExpr::lambda();
            o.require(lfmt::helmholtz_residual(q, lam) == oracle::laplacian(q) + (lam * lam) * q, name + " Helmholtz");
        }
    });

    criterion(7, "series numerics against exp, e*erfc(-1), sin and cos", [&](Outcome& o) {
        const lfmt::Alpha one(1.0);
        o.require(std::abs(lfmt::ml_exp(one, 1.0, 1e-12).value - std::numbers::e) <= 1e-12, "E_1(1) = e");
        o.require(std::abs(lfmt::ml_exp(lfmt::Alpha(0.5), 1.0, 1e-12).value - std::numbers::e * std::erfc(-1.0)) <= 1e-9,
                  "E_1/2(1) = e erfc(-1)");
        for (double u = -5.0; u <= 5.0; u += 0.125) {
            o.require(std::abs(lfmt::sin_alpha(one, u, 1e-12).value - std::sin(u)) <= 1e-12, "sin at " + std::to_string(u));
            o.require(std::abs(lfmt::cos_alpha(one, u, 1e-12).value - std::cos(u)) <= 1e-12, "cos at " + std::to_string(u));
        }
    });

    criterion(8, "Gamma-normalized derivative equals the series shift; limit of x^a is Gamma(3/2)", [&](Outcome& o) {
        const lfmt::Alpha a(0.5);
        for (int order : {4, 9, 16}) {
            for (const auto& s :
                 {lfmt::JSeries::e_alpha(a, order), lfmt::JSeries::sin_alpha(a, order), lfmt::JSeries::cos_alpha(a, order)}) {
                lfmt::JPolynomial p{lfmt::Var::x, {}};
                for (std::size_t k = 0; k < s.coeffs().size(); ++k)
                    if (s.coeffs()[k] != 0.0) p.coeffs[static_cast<int>(k)] = static_cast<long long>(s.coeffs()[k].real());
                const auto lhs = lfmt::d_alpha_gamma(p, lfmt::Var::x).to_series(a).coeffs();
                const auto rhs = lfmt::series_shift_derivative(s).coeffs();
                for (std::size_t k = 0; k < std::max(lhs.size(), rhs.size()); ++k) {
                    const auto l = k < lhs.size() ? lhs[k] : 0.0;
                    const auto r = k < rhs.size() ? rhs[k] : 0.0;
                    o.require(l == r, "coefficient " + std::to_string(k) + " at order " + std::to_string(order));
                }
            }
        }
        std::vector<double> steps;
        for (int i = 0; i < 24; ++i) steps.push_back(std::pow(0.5, i + 1));
        const auto rep = lfmt::limit_definition_derivative_at_zero(
            [&](double x) { return std::complex<double>(std::pow(x, a.value())); }, a, steps);
        o.require(rep.exists && std::abs(rep.estimate - 0.8862269254527580) <= 1e-10, "limit quotient of x^a");
    });

    criterion(9, "product rule and Gamma-power rule disagree on D[(x^a)^2] at a = 1/2", [&](Outcome& o) {
        const auto c = lfmt::product_rule_conflict(lfmt::Alpha(0.5), 1, 1);
        o.require(std::abs(c.via_product_rule - std::sqrt(std::numbers::pi)) < 1e-12, "Leibniz value sqrt(pi)");
        o.require(std::abs(c.via_power_rule - 2.0 / std::sqrt(std::numbers::pi)) < 1e-12, "power-rule value 2/sqrt(pi)");
        o.require(std::abs(c.difference()) > 0.1, "nonzero difference");
        o.detail << " difference = " << c.difference() << "*P(x,1)";
    });

    criterion(10, "f0 = Ea(i*lam, z) is a null solution of the scalar Helmholtz equation (cylindrical)", [&](Outcome& o) {
        const FrameKind f = FrameKind::cylindrical;
        const auto res = lfmt::helmholtz_residual(QuaternionField::scalar(f, in(f, "Ea(i*lam, z)")), CanonicalExpr::lambda());
        o.require(res.c[0].is_zero(), "scalar residual");
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
