#pragma once

// Seeded samplers for states and rotations. Valid states are Dirichlet-weighted mixtures of
// Haar-random pure states, which makes the rank a parameter.

#include <cstdint>
#include <random>

#include "qutrit/state.hpp"

namespace qutrit {

using Rng = std::mt19937_64;

inline CVec3 haar_pure(Rng& rng) {
    std::normal_distribution<double> g;
    CVec3 v;
    for (auto& x : v) x = Complex(g(rng), g(rng));
    return v / Complex(norm(v));
}

/// Mixture of `rank` Haar-random pure states with flat Dirichlet weights.
inline QutritDensity random_state(Rng& rng, int rank) {
    if (rank < 1 || rank > 3) throw Error(Errc::invalid_argument, "random_state: rank must be 1, 2 or 3");
    std::gamma_distribution<double> gamma(1.0, 1.0);
    std::array<double, 3> w{};
    double total = 0.0;
    for (int i = 0; i < rank; ++i) total += (w[i] = gamma(rng));
    ComplexMat3 m;
    for (int i = 0; i < rank; ++i) {
        const CVec3 psi = haar_pure(rng);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) m(r, c) += (w[i] / total) * psi[r] * std::conj(psi[c]);
    }
    return QutritDensity(m / trace(m));
}

/// Rank drawn uniformly from {1, 2, 3}.
inline QutritDensity random_valid_state(Rng& rng) {
    std::uniform_int_distribution<int> pick(1, 3);
    return random_state(rng, pick(rng));
}

/// Hermitian, unit trace, positive or not. One draw in five is an unperturbed rank-1 or rank-2
/// state (on the boundary of the state space); the rest are full-rank states plus a traceless
/// Hermitian kick of random size. About 60% of the draws are positive semidefinite.
inline ComplexMat3 random_hermitian_trace1(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 9);
    const int kind = pick(rng);
    if (kind < 2) return random_state(rng, kind + 1).matrix();

    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> size(0.0, 0.15);
    ComplexMat3 kick;
    for (std::size_t r = 0; r < 3; ++r) {
        kick(r, r) = g(rng);
        for (std::size_t c = r + 1; c < 3; ++c) {
            kick(r, c) = Complex(g(rng), g(rng));
            kick(c, r) = std::conj(kick(r, c));
        }
    }
    kick -= ComplexMat3::identity() * (trace(kick) / Complex(3.0));
    kick = kick * Complex(size(rng) / std::max(max_abs(kick), 1e-300));
    ComplexMat3 m = random_state(rng, 3).matrix() + kick;
    m = hermitian_part(m);
    return m / trace(m);
}

/// Proper rotation drawn from the Haar measure on SO(3).
inline RealMat3 random_rotation(Rng& rng) {
    std::normal_distribution<double> g;
    RealMat3 q;
    for (;;) {
        Vec3 c0{g(rng), g(rng), g(rng)};
        Vec3 c1{g(rng), g(rng), g(rng)};
        const double n0 = norm(c0);
        if (n0 < 1e-6) continue;
        c0 = c0 / n0;
        c1 -= c0 * dot(c0, c1);
        const double n1 = norm(c1);
        if (n1 < 1e-6) continue;
        c1 = c1 / n1;
        q.set_column(0, c0);
        q.set_column(1, c1);
        q.set_column(2, cross(c0, c1));
        return q;
    }
}

}  // namespace qutrit
