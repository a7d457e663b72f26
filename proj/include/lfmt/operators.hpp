#pragma once

#include "lfmt/derivative.hpp"
#include "lfmt/vector_operators.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lfmt {

enum class Side { left, right };

/// Moisil-Teodorescu operator: (-div f; grad f0 + curl f) acting on the left,
/// (-div f; grad f0 - curl f) acting on the right.
QuaternionField mt_apply(const QuaternionField& f, Side side = Side::left);

/// Cartesian only: sum_j i_j D_j f (left) or sum_j D_j f i_j (right) evaluated
/// with quaternion products.
QuaternionField mt_apply_by_products(const QuaternionField& f, Side side = Side::left);

/// Scalar Laplacian Delta_0, written out per frame.
CanonicalExpr scalar_laplacian(const CanonicalExpr& f0, FrameKind frame);

/// Vector Laplacian grad div - curl curl written out per frame (Cartesian acts
/// componentwise).
QuaternionField vector_laplacian(const QuaternionField& f);

/// Delta_H f = Delta_0[f0] + vector Laplacian of the vector part.
QuaternionField laplacian(const QuaternionField& f);

/// grad div + curl curl: component displays in cylindrical and spherical
/// frames, composed from the first-order operators in the Cartesian frame.
QuaternionField bitsadze_vector(const QuaternionField& f);

/// Delta_0[f0] + bitsadze_vector of the vector part.
QuaternionField bitsadze(const QuaternionField& f);

/// Delta_H f + lambda^2 f. Pass CanonicalExpr::lambda() for a formal parameter.
QuaternionField helmholtz_residual(const QuaternionField& f, const CanonicalExpr& lambda);

/// The four scalar component equations of Delta_H f + lambda^2 f = 0 for the
/// abstract field in `frame`.
std::array<CanonicalExpr, 4> helmholtz_component_system(FrameKind frame, const CanonicalExpr& lambda);

enum class Identity {
    mt_squared,
    bitsadze_factorization,
    helmholtz_factorization,
    curl_grad,
    div_curl,
    div_grad_delta0,
};

inline constexpr std::array<Identity, 6> kAllIdentities = {
    Identity::mt_squared, Identity::bitsadze_factorization, Identity::helmholtz_factorization,
    Identity::curl_grad,  Identity::div_curl,               Identity::div_grad_delta0,
};

std::string_view identity_name(Identity id);
/// Throws UnknownIdentity.
Identity identity_from_name(std::string_view name);

struct IdentityReport {
    Identity identity;
    FrameKind frame;
    DerivativeMode mode = DerivativeMode::derivation;
    /// Left side minus right side: scalar part, then the three vector components.
    std::array<CanonicalExpr, 4> residuals;

    bool pass() const;
    /// One-line document {identity, frame, mode, pass, residuals}.
    std::string to_json() const;
};

/// Checks an identity on the fully abstract field by exact normalization.
IdentityReport verify_identity(Identity id, FrameKind frame);
IdentityReport verify_identity(std::string_view name, FrameKind frame);

/// The (identity, frame) pairs run by "verify all all": the factorizations of
/// D_MT^2 and of the Helmholtz operator in all three frames, the rest in the
/// two curvilinear frames.
std::vector<std::pair<Identity, FrameKind>> verification_matrix();

/// Runs the matrix restricted to the given identity and/or frame, evaluating
/// independent reports concurrently.
std::vector<IdentityReport> verify_selection(std::optional<Identity> identity, std::optional<FrameKind> frame);

}  // namespace lfmt
