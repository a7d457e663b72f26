#pragma once

// Closed-form component formulas, hand-typed in the expression language.
// Notation: R1 = 1/r^a, R2 = 1/r^(2a), S1 = 1/sin_a(theta^a), S2 = S1^2,
// C = cos_a(theta^a).

#include <array>
#include <string>

namespace fixtures {

using Components = std::array<std::string, 4>;

inline std::string delta0_cylindrical(const std::string& f) {
    return "d(" + f + ",r,r) + P(r,-2)*d(" + f + ",theta,theta) + P(r,-1)*d(" + f + ",r) + d(" + f + ",z,z)";
}

inline std::string delta0_spherical(const std::string& f) {
    return "d(" + f + ",r,r) + 2*P(r,-1)*d(" + f + ",r) + P(r,-2)*d(" + f + ",theta,theta)" +
           " + cosa(theta)*P(r,-2)*sina(theta)^-1*d(" + f + ",theta)" + " + P(r,-2)*sina(theta)^-2*d(" + f +
           ",psi,psi)";
}

inline Components mt_cylindrical() {
    return {
        "-(d(f1,r) + P(r,-1)*d(f2,theta) + P(r,-1)*f1 + d(f3,z))",
        "d(f0,r) + P(r,-1)*d(f3,theta) - d(f2,z)",
        "P(r,-1)*d(f0,theta) + d(f1,z) - d(f3,r)",
        "d(f0,z) + d(f2,r) - P(r,-1)*d(f1,theta) + P(r,-1)*f2",
    };
}

inline Components mt_spherical() {
    return {
        "-(d(f1,r) + 2*P(r,-1)*f1 + P(r,-1)*d(f2,theta) + P(r,-1)*sina(theta)^-1*(d(f3,psi) + f2*cosa(theta)))",
        "d(f0,r) + P(r,-1)*d(f3,theta) - P(r,-1)*sina(theta)^-1*d(f2,psi) + f3*cosa(theta)*P(r,-1)*sina(theta)^-1",
        "P(r,-1)*d(f0,theta) + P(r,-1)*sina(theta)^-1*d(f1,psi) - d(f3,r) - P(r,-1)*f3",
        "P(r,-1)*sina(theta)^-1*d(f0,psi) + d(f2,r) - P(r,-1)*d(f1,theta) + P(r,-1)*f2",
    };
}

/// Vector Laplacian; the last cylindrical term is the second z-derivative.
inline Components vector_laplacian_cylindrical() {
    return {
        "0",
        "d(f1,r,r) + P(r,-1)*d(f1,r) - P(r,-2)*f1 + P(r,-2)*d(f1,theta,theta) - 2*P(r,-2)*d(f2,theta) + d(f1,z,z)",
        "d(f2,r,r) + P(r,-1)*d(f2,r) - P(r,-2)*f2 + P(r,-2)*d(f2,theta,theta) + 2*P(r,-2)*d(f1,theta) + d(f2,z,z)",
        "d(f3,r,r) + P(r,-1)*d(f3,r) + P(r,-2)*d(f3,theta,theta) + d(f3,z,z)",
    };
}

inline Components vector_laplacian_spherical() {
    return {
        "0",
        "d(f1,r,r) + 2*P(r,-1)*d(f1,r) - 2*P(r,-2)*f1 + P(r,-2)*d(f1,theta,theta)"
        " + cosa(theta)*P(r,-2)*sina(theta)^-1*d(f1,theta) + P(r,-2)*sina(theta)^-2*d(f1,psi,psi)"
        " - 2*P(r,-2)*d(f2,theta) - 2*cosa(theta)*P(r,-2)*sina(theta)^-1*f2 - 2*P(r,-2)*sina(theta)^-1*d(f3,psi)",
        "d(f2,r,r) + 2*P(r,-1)*d(f2,r) - P(r,-2)*sina(theta)^-2*f2 + P(r,-2)*d(f2,theta,theta)"
        " + cosa(theta)*P(r,-2)*sina(theta)^-1*d(f2,theta) + P(r,-2)*sina(theta)^-2*d(f2,psi,psi)"
        " + 2*P(r,-2)*d(f1,theta) - 2*cosa(theta)*P(r,-2)*sina(theta)^-2*d(f3,psi)",
        "d(f3,r,r) + 2*P(r,-1)*d(f3,r) - P(r,-2)*sina(theta)^-2*f3 + P(r,-2)*d(f3,theta,theta)"
        " + cosa(theta)*P(r,-2)*sina(theta)^-1*d(f3,theta) + P(r,-2)*sina(theta)^-2*d(f3,psi,psi)"
        " + 2*P(r,-2)*sina(theta)^-1*d(f1,psi) + 2*cosa(theta)*P(r,-2)*sina(theta)^-2*d(f2,psi)",
    };
}

inline Components bitsadze_vector_cylindrical() {
    return {
        "0",
        "d(f1,r,r) + 2*P(r,-1)*d(f2,r,theta) + P(r,-1)*d(f1,r) - P(r,-2)*f1 + 2*d(f3,r,z)"
        " - P(r,-2)*d(f1,theta,theta) - d(f1,z,z)",
        "2*P(r,-1)*d(f1,r,theta) + P(r,-2)*d(f2,theta,theta) + 2*P(r,-1)*d(f3,theta,z) - d(f2,z,z) - d(f2,r,r)"
        " - P(r,-1)*d(f2,r) + P(r,-2)*f2",
        "2*d(f1,r,z) + 2*P(r,-1)*d(f2,theta,z) + 2*P(r,-1)*d(f1,z) + d(f3,z,z) - d(f3,r,r)"
        " - P(r,-2)*d(f3,theta,theta) - P(r,-1)*d(f3,r)",
    };
}

/// The r-component term written with a first r-derivative of f2 is read as d(f2,r).
inline Components bitsadze_vector_spherical() {
    return {
        "0",
        "d(f1,r,r) + 2*P(r,-1)*d(f1,r) - 2*P(r,-2)*f1 - P(r,-2)*d(f1,theta,theta)"
        " - cosa(theta)*P(r,-2)*sina(theta)^-1*d(f1,theta) - P(r,-2)*sina(theta)^-2*d(f1,psi,psi)"
        " + 2*P(r,-1)*d(f2,r,theta) + 2*cosa(theta)*P(r,-1)*sina(theta)^-1*d(f2,r)"
        " + 2*P(r,-1)*sina(theta)^-1*d(f3,r,psi)",
        "-d(f2,r,r) - 2*P(r,-1)*d(f2,r) - P(r,-2)*sina(theta)^-2*f2 + P(r,-2)*d(f2,theta,theta)"
        " + cosa(theta)*P(r,-2)*sina(theta)^-1*d(f2,theta) - P(r,-2)*sina(theta)^-2*d(f2,psi,psi)"
        " + 2*P(r,-2)*d(f1,theta) + 2*P(r,-1)*d(f1,r,theta) + 2*P(r,-2)*sina(theta)^-1*d(f3,theta,psi)",
        "-d(f3,r,r) - 2*P(r,-1)*d(f3,r) + P(r,-2)*sina(theta)^-2*f3 - P(r,-2)*d(f3,theta,theta)"
        " - cosa(theta)*P(r,-2)*sina(theta)^-1*d(f3,theta) + P(r,-2)*sina(theta)^-2*d(f3,psi,psi)"
        " + 2*P(r,-2)*sina(theta)^-1*d(f1,psi) + 2*P(r,-1)*sina(theta)^-1*d(f1,r,psi)"
        " + 2*P(r,-2)*sina(theta)^-1*d(f2,theta,psi)",
    };
}

/// Component equations of Delta_H f + lam^2 f = 0 (left-hand sides).
inline Components helmholtz_system_cylindrical() {
    return {
        delta0_cylindrical("f0") + " + lam^2*f0",
        delta0_cylindrical("f1") + " - 2*P(r,-2)*d(f2,theta) + (lam^2 - P(r,-2))*f1",
        delta0_cylindrical("f2") + " + 2*P(r,-2)*d(f1,theta) + (lam^2 - P(r,-2))*f2",
        delta0_cylindrical("f3") + " + lam^2*f3",
    };
}

inline Components helmholtz_system_spherical() {
    return {
        delta0_spherical("f0") + " + lam^2*f0",
        delta0_spherical("f1") + " - 2*P(r,-2)*d(f2,theta) - 2*cosa(theta)*P(r,-2)*sina(theta)^-1*f2" +
            " - 2*P(r,-2)*sina(theta)^-1*d(f3,psi) + (lam^2 - 2*P(r,-2))*f1",
        delta0_spherical("f2") + " + 2*P(r,-2)*d(f1,theta) - 2*cosa(theta)*P(r,-2)*sina(theta)^-2*d(f3,psi)" +
            " + (lam^2 - P(r,-2)*sina(theta)^-2)*f2",
        delta0_spherical("f3") + " + 2*P(r,-2)*sina(theta)^-1*d(f1,psi)" +
            " + 2*cosa(theta)*P(r,-2)*sina(theta)^-2*d(f2,psi) + (lam^2 - P(r,-2)*sina(theta)^-2)*f3",
    };
}

}  // namespace fixtures
