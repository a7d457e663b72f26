#include "lfmt/operators.hpp"

#include "lfmt/error.hpp"

#include "json.hpp"

#include <future>

namespace lfmt {

namespace {

using E = CanonicalExpr;

E D(const E& f, Var v) { return d_alpha(f, v); }
E D(const E& f, Var v, Var w) { return d_alpha(d_alpha(f, v), w); }

// Shorthands for the curvilinear coefficients.
struct Curvilinear {
    E inv_r = E::power(Var::r, -1);
    E inv_r2 = E::power(Var::r, -2);
    E sin_t = E::sina(Var::theta);
    E cos_t = E::cosa(Var::theta);
    E inv_s = E::sina(Var::theta).pow(-1);
    E inv_s2 = E::sina(Var::theta).pow(-2);
};

}  // namespace

QuaternionField mt_apply(const QuaternionField& f, Side side) {
    const QuaternionField curl = curl_alpha(f);
    QuaternionField out = grad_alpha(f.c[0], f.frame) + (side == Side::left ? curl : -curl);
    out.c[0] = -div_alpha(f);
    return out;
}

QuaternionField mt_apply_by_products(const QuaternionField& f, Side side) {
    if (f.frame != FrameKind::cartesian)
        throw DomainError("mt_apply_by_products is defined in the Cartesian frame only");
    const std::array<Var, 3> vars = frame_variables(FrameKind::cartesian);
    Quaternion sum;
    for (int j = 0; j < 3; ++j) {
        const Quaternion dj(D(f.c[0], vars[j]), D(f.c[1], vars[j]), D(f.c[2], vars[j]), D(f.c[3], vars[j]));
        const Quaternion unit = Quaternion::unit(j + 1);
        sum = sum + (side == Side::left ? unit * dj : dj * unit);
    }
    return {f.frame, {sum[0], sum[1], sum[2], sum[3]}};
}

CanonicalExpr scalar_laplacian(const CanonicalExpr& f, FrameKind frame) {
    switch (frame) {
        case FrameKind::cartesian: return D(f, Var::x, Var::x) + D(f, Var::y, Var::y) + D(f, Var::z, Var::z);
        case FrameKind::cylindrical: {
            const Curvilinear k;
            return D(f, Var::r, Var::r) + k.inv_r2 * D(f, Var::theta, Var::theta) + k.inv_r * D(f, Var::r) +
                   D(f, Var::z, Var::z);
        }
        case FrameKind::spherical: {
            const Curvilinear k;
            return D(f, Var::r, Var::r) + E(2) * k.inv_r * D(f, Var::r) + k.inv_r2 * D(f, Var::theta, Var::theta) +
                   k.cos_t * k.inv_r2 * k.inv_s * D(f, Var::theta) + k.inv_r2 * k.inv_s2 * D(f, Var::psi, Var::psi);
        }
    }
    return {};
}

QuaternionField vector_laplacian(const QuaternionField& f) {
    const E& f1 = f.c[1];
    const E& f2 = f.c[2];
    const E& f3 = f.c[3];
    constexpr Var r = Var::r;
    constexpr Var t = Var::theta;
    switch (f.frame) {
        case FrameKind::cartesian:
            return QuaternionField::vector(f.frame, scalar_laplacian(f1, f.frame), scalar_laplacian(f2, f.frame),
                                           scalar_laplacian(f3, f.frame));
        case FrameKind::cylindrical: {
            constexpr Var z = Var::z;
            const Curvilinear k;
            E er = D(f1, r, r) + k.inv_r * D(f1, r) - k.inv_r2 * f1 + k.inv_r2 * D(f1, t, t) -
                   E(2) * k.inv_r2 * D(f2, t) + D(f1, z, z);
            E et = D(f2, r, r) + k.inv_r * D(f2, r) - k.inv_r2 * f2 + k.inv_r2 * D(f2, t, t) +
                   E(2) * k.inv_r2 * D(f1, t) + D(f2, z, z);
            E ez = D(f3, r, r) + k.inv_r * D(f3, r) + k.inv_r2 * D(f3, t, t) + D(f3, z, z);
            return QuaternionField::vector(f.frame, std::move(er), std::move(et), std::move(ez));
        }
        case FrameKind::spherical: {
            constexpr Var p = Var::psi;
            const Curvilinear k;
            const E cot = k.cos_t * k.inv_s;
            E er = D(f1, r, r) + E(2) * k.inv_r * D(f1, r) - E(2) * k.inv_r2 * f1 + k.inv_r2 * D(f1, t, t) +
                   cot * k.inv_r2 * D(f1, t) + k.inv_r2 * k.inv_s2 * D(f1, p, p) - E(2) * k.inv_r2 * D(f2, t) -
                   E(2) * cot * k.inv_r2 * f2 - E(2) * k.inv_r2 * k.inv_s * D(f3, p);
            E et = D(f2, r, r) + E(2) * k.inv_r * D(f2, r) - k.inv_r2 * k.inv_s2 * f2 + k.inv_r2 * D(f2, t, t) +
                   cot * k.inv_r2 * D(f2, t) + k.inv_r2 * k.inv_s2 * D(f2, p, p) + E(2) * k.inv_r2 * D(f1, t) -
                   E(2) * k.cos_t * k.inv_r2 * k.inv_s2 * D(f3, p);
            E ep = D(f3, r, r) + E(2) * k.inv_r * D(f3, r) - k.inv_r2 * k.inv_s2 * f3 + k.inv_r2 * D(f3, t, t) +
                   cot * k.inv_r2 * D(f3, t) + k.inv_r2 * k.inv_s2 * D(f3, p, p) +
                   E(2) * k.inv_r2 * k.inv_s * D(f1, p) + E(2) * k.cos_t * k.inv_r2 * k.inv_s2 * D(f2, p);
            return QuaternionField::vector(f.frame, std::move(er), std::move(et), std::move(ep));
        }
    }
    return {};
}

QuaternionField laplacian(const QuaternionField& f) {
    QuaternionField out = vector_laplacian(f);
    out.c[0] = scalar_laplacian(f.c[0], f.frame);
    return out;
}

QuaternionField bitsadze_vector(const QuaternionField& f) {
    const E& f1 = f.c[1];
    const E& f2 = f.c[2];
    const E& f3 = f.c[3];
    constexpr Var r = Var::r;
    constexpr Var t = Var::theta;
    switch (f.frame) {
        case FrameKind::cartesian: return grad_alpha(div_alpha(f), f.frame) + curl_alpha(curl_alpha(f));
        case FrameKind::cylindrical: {
            constexpr Var z = Var::z;
            const Curvilinear k;
            E er = D(f1, r, r) + E(2) * k.inv_r * D(f2, r, t) + k.inv_r * D(f1, r) - k.inv_r2 * f1 +
                   E(2) * D(f3, r, z) - k.inv_r2 * D(f1, t, t) - D(f1, z, z);
            E et = E(2) * k.inv_r * D(f1, r, t) + k.inv_r2 * D(f2, t, t) + E(2) * k.inv_r * D(f3, t, z) -
                   D(f2, z, z) - D(f2, r, r) - k.inv_r * D(f2, r) + k.inv_r2 * f2;
            E ez = E(2) * D(f1, r, z) + E(2) * k.inv_r * D(f2, t, z) + E(2) * k.inv_r * D(f1, z) + D(f3, z, z) -
                   D(f3, r, r) - k.inv_r2 * D(f3, t, t) - k.inv_r * D(f3, r);
            return QuaternionField::vector(f.frame, std::move(er), std::move(et), std::move(ez));
        }
        case FrameKind::spherical: {
            constexpr Var p = Var::psi;
            const Curvilinear k;
            const E cot = k.cos_t * k.inv_s;
            E er = D(f1, r, r) + E(2) * k.inv_r * D(f1, r) - E(2) * k.inv_r2 * f1 - k.inv_r2 * D(f1, t, t) -
                   cot * k.inv_r2 * D(f1, t) - k.inv_r2 * k.inv_s2 * D(f1, p, p) + E(2) * k.inv_r * D(f2, r, t) +
                   E(2) * cot * k.inv_r * D(f2, r) + E(2) * k.inv_r * k.inv_s * D(f3, r, p);
            E et = -D(f2, r, r) - E(2) * k.inv_r * D(f2, r) - k.inv_r2 * k.inv_s2 * f2 + k.inv_r2 * D(f2, t, t) +
                   cot * k.inv_r2 * D(f2, t) - k.inv_r2 * k.inv_s2 * D(f2, p, p) + E(2) * k.inv_r2 * D(f1, t) +
                   E(2) * k.inv_r * D(f1, r, t) + E(2) * k.inv_r2 * k.inv_s * D(f3, t, p);
            E ep = -D(f3, r, r) - E(2) * k.inv_r * D(f3, r) + k.inv_r2 * k.inv_s2 * f3 - k.inv_r2 * D(f3, t, t) -
                   cot * k.inv_r2 * D(f3, t) + k.inv_r2 * k.inv_s2 * D(f3, p, p) +
                   E(2) * k.inv_r2 * k.inv_s * D(f1, p) + E(2) * k.inv_r * k.inv_s * D(f1, r, p) +
                   E(2) * k.inv_r2 * k.inv_s * D(f2, t, p);
            return QuaternionField::vector(f.frame, std::move(er), std::move(et), std::move(ep));
        }
    }
    return {};
}

QuaternionField bitsadze(const QuaternionField& f) {
    QuaternionField out = bitsadze_vector(f);
    out.c[0] = scalar_laplacian(f.c[0], f.frame);
    return out;
}

QuaternionField helmholtz_residual(const QuaternionField& f, const CanonicalExpr& lambda) {
    return laplacian(f) + (lambda * lambda) * f;
}

std::array<CanonicalExpr, 4> helmholtz_component_system(FrameKind frame, const CanonicalExpr& lambda) {
    return helmholtz_residual(QuaternionField::abstract(frame), lambda).c;
}

namespace {

constexpr std::array<std::string_view, 6> kIdentityNames = {
    "mt_squared", "bitsadze_factorization", "helmholtz_factorization", "curl_grad", "div_curl", "div_grad_delta0",
};

}  // namespace

std::string_view identity_name(Identity id) { return kIdentityNames[static_cast<int>(id)]; }

Identity identity_from_name(std::string_view name) {
    for (Identity id : kAllIdentities)
        if (identity_name(id) == name) return id;
    throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

bool IdentityReport::pass() const {
    for (const auto& r : residuals)
        if (!r.is_zero()) return false;
    return true;
}

std::string IdentityReport::to_json() const {
    nlohmann::json residual_strings = nlohmann::json::array();
    for (const auto& r : residuals) residual_strings.push_back(r.to_string());
    const nlohmann::json doc = {
        {"identity", identity_name(identity)},
        {"frame", frame_name(frame)},
        {"mode", mode_name(mode)},
        {"pass", pass()},
        {"residuals", residual_strings},
    };
    return doc.dump();
}

IdentityReport verify_identity(Identity id, FrameKind frame) {
    const QuaternionField f = QuaternionField::abstract(frame);
    QuaternionField residual;
    switch (id) {
        case Identity::mt_squared:
            // D_MT D_MT f = -Delta_H f
            residual = mt_apply(mt_apply(f)) + laplacian(f);
            break;
        case Identity::bitsadze_factorization:
            // D_MT D_MT^r f = -bitsadze f
            residual = mt_apply(mt_apply(f, Side::right)) + bitsadze(f);
            break;
        case Identity::helmholtz_factorization: {
            // -(D_MT - lam)(D_MT + lam) f = Delta_H f + lam^2 f
            const E lam = E::lambda();
            const QuaternionField g = mt_apply(f) + lam * f;
            const QuaternionField h = mt_apply(g) - lam * g;
            residual = -h - helmholtz_residual(f, lam);
            break;
        }
        case Identity::curl_grad: residual = curl_alpha(grad_alpha(f.c[0], frame)); break;
        case Identity::div_curl: residual = QuaternionField::scalar(frame, div_alpha(curl_alpha(f))); break;
        case Identity::div_grad_delta0:
            residual = QuaternionField::scalar(frame, div_alpha(grad_alpha(f.c[0], frame)) -
                                                          scalar_laplacian(f.c[0], frame));
            break;
    }
    return IdentityReport{id, frame, DerivativeMode::derivation, residual.c};
}

IdentityReport verify_identity(std::string_view name, FrameKind frame) {
    return verify_identity(identity_from_name(name), frame);
}

std::vector<std::pair<Identity, FrameKind>> verification_matrix() {
    std::vector<std::pair<Identity, FrameKind>> out;
    for (Identity id : kAllIdentities) {
        const bool all_frames = id == Identity::mt_squared || id == Identity::helmholtz_factorization;
        for (FrameKind frame : kAllFrames)
            if (all_frames || frame != FrameKind::cartesian) out.emplace_back(id, frame);
    }
    return out;
}

std::vector<IdentityReport> verify_selection(std::optional<Identity> identity, std::optional<FrameKind> frame) {
    std::vector<std::pair<Identity, FrameKind>> jobs;
    if (identity && frame) {
        jobs.emplace_back(*identity, *frame);
    } else {
        for (const auto& job : verification_matrix())
            if ((!identity || job.first == *identity) && (!frame || job.second == *frame)) jobs.push_back(job);
    }
    std::vector<std::future<IdentityReport>> pending;
    pending.reserve(jobs.size());
    for (const auto& [id, fr] : jobs)
        pending.push_back(std::async(std::launch::async, [id = id, fr = fr] { return verify_identity(id, fr); }));
    std::vector<IdentityReport> out;
    out.reserve(jobs.size());
    for (auto& p : pending) out.push_back(p.get());
    return out;
}

}  // namespace lfmt
