#pragma once

// Pure qutrit states written as r + i k with real r, k; the Bloch vector 2 r x k;
// orthogonality in terms of r and k; the four mutually unbiased bases; pseudo-qubits.

#include <array>
#include <cmath>
#include <numbers>

#include "qutrit/state.hpp"

namespace qutrit {

struct PureState {
    CVec3 amp;  // gauge fixed: first component with modulus > 1e-12 is real positive
    Vec3 r;     // Re(amp)
    Vec3 k;     // Im(amp)

    QutritDensity density() const { return QutritDensity::projector(amp); }
};

inline PureState rik_decompose(const CVec3& amplitudes) {
    const double n = norm(amplitudes);
    if (!(std::abs(n * n - 1.0) <= 1e-10))
        throw Error(Errc::not_normalized, "rik_decompose: |psi|^2 = " + std::to_string(n * n));
    PureState p;
    p.amp = amplitudes / Complex(n);
    for (const auto& x : p.amp) {
        const double m = std::abs(x);
        if (m > 1e-12) {
            const Complex phase = std::conj(x) / m;
            for (auto& y : p.amp) y *= phase;
            break;
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        p.r[i] = p.amp[i].real();
        p.k[i] = p.amp[i].imag();
    }
    return p;
}

/// a = 2 r x k; independent of the global phase.
inline Vec3 bloch_from_pure(const PureState& p) { return cross(p.r, p.k) * 2.0; }

/// Residuals of r.r' + k.k' = 0 and r.k' - r'.k = 0; together they are the real and imaginary
/// parts of <psi|psi'>.
inline std::array<double, 2> orthogonality_residuals(const PureState& p, const PureState& q) {
    return {dot(p.r, q.r) + dot(p.k, q.k), dot(p.r, q.k) - dot(q.r, p.k)};
}

inline bool orthogonal(const PureState& p, const PureState& q) {
    const auto res = orthogonality_residuals(p, q);
    return std::hypot(res[0], res[1]) < 1e-10;
}

/// (cos t, i sin t, 0)
inline CVec3 reference_pure_state(double theta) {
    return {std::cos(theta), Complex(0.0, std::sin(theta)), 0.0};
}

/// (sin t cos f, -i cos t cos f, e^{i c} sin f): orthogonal to reference_pure_state(t) for all f, c.
inline CVec3 orthogonal_family_state(double theta, double phi, double chi) {
    return {std::sin(theta) * std::cos(phi), Complex(0.0, -std::cos(theta) * std::cos(phi)),
            std::polar(std::sin(phi), chi)};
}

struct BlochPair {
    Vec3 a;        // Bloch vector of reference_pure_state(theta)
    Vec3 a_prime;  // Bloch vector of orthogonal_family_state(theta, phi, chi)
};

/// Closed forms for the two Bloch vectors. a' is the Bloch vector of orthogonal_family_state
/// under the index convention of state.hpp, so its y component carries -sin(chi).
inline BlochPair orthogonal_bloch_family(double theta, double phi, double chi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    BlochPair out;
    out.a = {0.0, 0.0, 2.0 * ct * st};
    out.a_prime = {2.0 * cp * sp * ct * std::cos(chi), -2.0 * cp * sp * st * std::sin(chi), -2.0 * cp * cp * ct * st};
    return out;
}

// ---------------------------------------------------------------------------------------------
// Mutually unbiased bases

struct MubFamily {
    std::array<std::array<PureState, 3>, 4> bases;
};

/// The four qutrit MUBs: computational basis, Fourier basis, and the two eta-twisted bases,
/// eta = exp(2 pi i / 3).
inline MubFamily mub_bases() {
    const double s = 1.0 / std::numbers::sqrt3;
    const Complex eta{-0.5, std::numbers::sqrt3 / 2.0};
    const Complex etab = std::conj(eta);
    const Complex one{1.0, 0.0};
    const std::array<std::array<CVec3, 3>, 4> raw{{
        {{{one, 0.0, 0.0}, {0.0, one, 0.0}, {0.0, 0.0, one}}},
        {{{one, one, one}, {one, eta, etab}, {one, etab, eta}}},
        {{{eta, one, one}, {one, eta, one}, {one, one, eta}}},
        {{{etab, one, one}, {one, etab, one}, {one, one, etab}}},
    }};
    MubFamily f;
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t v = 0; v < 3; ++v) {
            const CVec3 amp = b == 0 ? raw[b][v] : raw[b][v] * Complex(s);
            f.bases[b][v] = rik_decompose(amp);
        }
    return f;
}

// ---------------------------------------------------------------------------------------------
// Pseudo-qubits: T = 1/3, a in the ball |a| <= 2/3

inline constexpr double kPseudoRadiusSquared = 4.0 / 9.0;

inline void require_in_ball(const Vec3& a, const char* where) {
    if (dot(a, a) > kPseudoRadiusSquared + 1e-12)
        throw Error(Errc::out_of_ball, std::string(where) + ": a.a = " + std::to_string(dot(a, a)) + " > 4/9");
}

inline QutritDensity pseudo_qubit(const Vec3& a) {
    require_in_ball(a, "pseudo_qubit");
    const RealMat3 e = levi_civita_contraction(a);
    ComplexMat3 m;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) m(j, k) = Complex(j == k ? 1.0 / 3.0 : 0.0, -0.5 * e(j, k));
    return QutritDensity(m);
}

/// Tr(rho_a rho_b) = 1/3 + a.b / 2
inline double pseudo_overlap(const Vec3& a, const Vec3& b) {
    require_in_ball(a, "pseudo_overlap");
    require_in_ball(b, "pseudo_overlap");
    return 1.0 / 3.0 + dot(a, b) / 2.0;
}

}  // namespace qutrit
