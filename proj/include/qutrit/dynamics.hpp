#pragma once

// Unitary spin-1 evolution rho -> U rho U^dagger with U = exp(-i theta G).
// Canonical generators: rotations S_j, one-axis twisting S_j^2, two-axis countertwisting A_j.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qutrit/geometry.hpp"
#include "qutrit/spin1.hpp"

namespace qutrit {

struct Rotation {
    Axis axis;
};
struct OneAxisTwist {
    Axis axis;
};
struct TwoAxisCounter {
    Axis axis;
};
struct CustomGenerator {
    ComplexMat3 h;
};

using Generator = std::variant<Rotation, OneAxisTwist, TwoAxisCounter, CustomGenerator>;

/// The nine canonical generators: rot x/y/z, twist x/y/z, counter x/y/z.
inline std::vector<Generator> canonical_generators() {
    std::vector<Generator> out;
    for (Axis a : kAxes) out.emplace_back(Rotation{a});
    for (Axis a : kAxes) out.emplace_back(OneAxisTwist{a});
    for (Axis a : kAxes) out.emplace_back(TwoAxisCounter{a});
    return out;
}

inline std::string describe(const Generator& g) {
    struct Visitor {
        std::string operator()(const Rotation& r) const { return std::string("rot:") + axis_name(r.axis); }
        std::string operator()(const OneAxisTwist& t) const { return std::string("twist:") + axis_name(t.axis); }
        std::string operator()(const TwoAxisCounter& c) const { return std::string("counter:") + axis_name(c.axis); }
        std::string operator()(const CustomGenerator&) const { return "custom"; }
    };
    return std::visit(Visitor{}, g);
}

inline ComplexMat3 generator_matrix(const Generator& g) {
    const auto& s = spin_set();
    struct Visitor {
        const Spin1Set& s;
        ComplexMat3 operator()(const Rotation& r) const { return s.S[static_cast<int>(r.axis)]; }
        ComplexMat3 operator()(const OneAxisTwist& t) const { return s.S2[static_cast<int>(t.axis)]; }
        ComplexMat3 operator()(const TwoAxisCounter& c) const { return s.A[static_cast<int>(c.axis)]; }
        ComplexMat3 operator()(const CustomGenerator& c) const {
            require_hermitian(c.h, "generator_matrix");
            return hermitian_part(c.h);
        }
    };
    return std::visit(Visitor{s}, g);
}

/// S_{i+}^2 - S_{i-}^2 with i+- = (j +- k)/sqrt(2), (i, j, k) cyclic. Equals A_i.
inline ComplexMat3 countertwist_from_diagonal_axes(Axis i) {
    const auto n = static_cast<std::size_t>(i);
    const std::size_t j = (n + 1) % 3;
    const std::size_t k = (n + 2) % 3;
    Vec3 plus, minus;
    plus[j] = minus[j] = 1.0 / std::sqrt(2.0);
    plus[k] = 1.0 / std::sqrt(2.0);
    minus[k] = -1.0 / std::sqrt(2.0);
    const auto sp = spin_along(plus);
    const auto sm = spin_along(minus);
    return sp * sp - sm * sm;
}

inline QutritDensity evolve(const QutritDensity& rho, const Generator& g, double theta) {
    require_valid(rho, "evolve");
    const auto u = exp_i_hermitian(generator_matrix(g), theta);
    return QutritDensity(hermitian_part(u * rho.matrix() * adjoint(u)));
}

struct Trajectory {
    std::vector<double> thetas;
    std::vector<QutritDensity> states;
    std::vector<EllipsoidScene> scenes;  // empty unless requested
};

/// Every grid point is evolved from rho0 directly, so no error accumulates along the grid.
inline Trajectory trajectory(const QutritDensity& rho0, const Generator& g, double theta_max, int n, bool with_scenes) {
    if (n < 2) throw Error(Errc::invalid_argument, "trajectory: need at least 2 points");
    require_valid(rho0, "trajectory");
    Trajectory t;
    t.thetas.reserve(n);
    t.states.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double theta = theta_max * i / (n - 1);
        t.thetas.push_back(theta);
        t.states.push_back(i == 0 ? rho0 : evolve(rho0, g, theta));
        if (with_scenes) t.scenes.push_back(build_scene(t.states.back()));
    }
    return t;
}

}  // namespace qutrit
