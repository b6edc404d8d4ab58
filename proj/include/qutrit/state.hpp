#pragma once

// Density matrix <-> (a, q, omega, T) parametrization of a qutrit, positivity through
// principal minors, the metric tensor and the rank taxonomy of the ellipsoid picture.
//
// Index convention: rows/columns of rho are ordered x, y, z, and
//   rho = 1/2 [ (1 - T) - i E(a) ],   E(a)_jk = sum_l eps_jkl a_l,
// so a_x = 2 Im rho_zy, a_y = 2 Im rho_xz, a_z = 2 Im rho_yx and T = 1 - 2 Re(rho).

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>

#include "qutrit/linalg.hpp"

namespace qutrit {

/// Levi-Civita symbol on {0,1,2}.
constexpr int levi_civita(std::size_t j, std::size_t k, std::size_t l) {
    if (j == k || k == l || j == l) return 0;
    return ((j + 1) % 3 == k) ? 1 : -1;
}

/// E(a)_jk = sum_l eps_jkl a_l; real antisymmetric.
inline RealMat3 levi_civita_contraction(const Vec3& a) {
    RealMat3 e;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l) e(j, k) += levi_civita(j, k, l) * a[l];
    return e;
}

/// A Hermitian, unit-trace 3x3 matrix. Positivity is checked separately (see validate).
class QutritDensity {
public:
    explicit QutritDensity(const ComplexMat3& m) {
        require_hermitian(m, "QutritDensity");
        const double tr = trace(m).real();
        if (!(std::abs(tr - 1.0) <= Tolerances::trace))
            throw Error(Errc::trace_not_one, "QutritDensity: trace = " + std::to_string(tr));
        mat_ = hermitian_part(m);
    }

    static QutritDensity maximally_mixed() { return QutritDensity(ComplexMat3::identity() / Complex(3.0)); }

    /// |psi><psi| for a normalized amplitude vector.
    static QutritDensity projector(const CVec3& psi) {
        ComplexMat3 m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
        return QutritDensity(m);
    }

    const ComplexMat3& matrix() const { return mat_; }
    Complex operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

    friend bool operator==(const QutritDensity&, const QutritDensity&) = default;

private:
    ComplexMat3 mat_;
};

using BlochVector = Vec3;
using CorrelationTensor = RealSymMat3;

struct StateParams {
    BlochVector a;
    Vec3 q;      // q_x = T_yz, q_y = T_xz, q_z = T_xy
    Vec3 omega;  // omega_j = (1 - T_jj) / 2
    CorrelationTensor T;

    friend bool operator==(const StateParams&, const StateParams&) = default;
};

inline StateParams decompose(const QutritDensity& rho) {
    const auto& m = rho.matrix();
    StateParams p;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) p.T.set(i, j, (i == j ? 1.0 : 0.0) - 2.0 * m(i, j).real());
    for (std::size_t j = 0; j < 3; ++j) p.omega[j] = (1.0 - p.T(j, j)) / 2.0;
    p.q = {p.T(1, 2), p.T(0, 2), p.T(0, 1)};
    p.a = {2.0 * m(2, 1).imag(), 2.0 * m(0, 2).imag(), 2.0 * m(1, 0).imag()};
    return p;
}

inline QutritDensity compose(const StateParams& p) {
    const double tr = p.T.trace();
    if (!(std::abs(tr - 1.0) <= 1e-9))
        throw Error(Errc::inconsistent_params, "compose: trace(T) = " + std::to_string(tr));
    for (std::size_t j = 0; j < 3; ++j) {
        const double expected = (1.0 - p.T(j, j)) / 2.0;
        if (!(std::abs(p.omega[j] - expected) <= 1e-12))
            throw Error(Errc::inconsistent_params, "compose: omega[" + std::to_string(j) + "] disagrees with T");
    }
    const RealMat3 e = levi_civita_contraction(p.a);
    ComplexMat3 m;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            m(j, k) = 0.5 * Complex((j == k ? 1.0 : 0.0) - p.T(j, k), -e(j, k));
    const double t = trace(m).real();
    if (t != 1.0) m = m / Complex(t);
    return QutritDensity(m);
}

/// Eigen-decomposition of T with lambda_u >= lambda_v >= lambda_w; columns of vectors are u, v, w.
inline RealEigenSystem3 correlation_spectrum(const CorrelationTensor& T) { return eig_symmetric3(T); }

/// eps_j = sqrt((1 - lambda_k)(1 - lambda_l)) for sorted lambda. Axes at or below Tolerances::axis are
/// collapsed to exactly 0 (the square root would turn 1e-16 round-off into 1e-8).
inline Vec3 semi_axes_from_spectrum(const std::array<double, 3>& lambda) {
    auto axis = [](double lk, double ll) {
        const double sq = (1.0 - lk) * (1.0 - ll);
        return sq <= Tolerances::axis * Tolerances::axis ? 0.0 : std::sqrt(sq);
    };
    return {axis(lambda[1], lambda[2]), axis(lambda[0], lambda[2]), axis(lambda[0], lambda[1])};
}

struct ValidityReport {
    bool c1_ok = false;
    bool c2_ok = false;
    bool c3_ok = false;
    bool overall = false;
    // Evaluated in the eigenbasis of T: min omega_j, min (4 omega_j omega_k - a_l^2),
    // and 4 omega_u omega_v omega_w - sum_j omega_j a_j^2.
    double c1_margin = 0.0;
    double c2_margin = 0.0;
    double c3_margin = 0.0;
    std::string violation;  // empty when overall

    friend bool operator==(const ValidityReport&, const ValidityReport&) = default;
};

/// Principal-minor test of positivity. Conditions are checked in the eigenbasis of T, where the
/// real part of rho is diagonal; there the determinant form of c3 needs no division, so boundary
/// states with a singular metric are handled like any other. Never throws.
inline ValidityReport validate(const StateParams& p) {
    static constexpr std::array<char, 3> kAxis{'u', 'v', 'w'};
    const auto spec = correlation_spectrum(p.T);
    Vec3 w;  // omega in the eigenbasis
    Vec3 a;  // Bloch vector in the eigenbasis
    for (std::size_t j = 0; j < 3; ++j) {
        w[j] = (1.0 - spec.values[j]) / 2.0;
        a[j] = dot(spec.vectors.column(j), p.a);
    }
    const double tol = Tolerances::rank;
    const double floor = Tolerances::minor_floor;

    ValidityReport r;
    std::ostringstream why;

    r.c1_ok = true;
    r.c1_margin = std::min({w[0], w[1], w[2]});
    for (std::size_t j = 0; j < 3; ++j) {
        if (w[j] < -tol || w[j] > 1.0 + tol) {
            if (r.c1_ok) why << "c1: 1 >= omega_" << kAxis[j] << " >= 0 violated (omega_" << kAxis[j] << " = " << w[j] << ")";
            r.c1_ok = false;
        }
    }

    r.c2_ok = true;
    std::array<double, 3> minors{};
    for (std::size_t l = 0; l < 3; ++l) {
        const std::size_t j = l == 0 ? 1 : 0;
        const std::size_t k = l == 2 ? 1 : 2;
        minors[l] = w[j] * w[k] - a[l] * a[l] / 4.0;
        const double lhs = 4.0 * w[j] * w[k] - a[l] * a[l];
        r.c2_margin = l == 0 ? lhs : std::min(r.c2_margin, lhs);
        if (minors[l] < -(tol * std::max(w[j] + w[k], 0.0) + floor)) {
            if (r.c1_ok && r.c2_ok)
                why << "c2: 4 omega_" << kAxis[j] << " omega_" << kAxis[k] << " >= a_" << kAxis[l]
                    << "^2 violated (margin " << lhs << ")";
            r.c2_ok = false;
        }
    }

    const double det = w[0] * w[1] * w[2] - (w[0] * a[0] * a[0] + w[1] * a[1] * a[1] + w[2] * a[2] * a[2]) / 4.0;
    const double e2 = minors[0] + minors[1] + minors[2];
    r.c3_margin = 4.0 * det;
    r.c3_ok = det >= -(tol * std::max(e2, 0.0) + floor);
    if (!r.c3_ok && r.c1_ok && r.c2_ok)
        why << "c3: 4 omega_u omega_v omega_w >= sum_j omega_j a_j^2 violated (margin " << r.c3_margin << ")";

    r.overall = r.c1_ok && r.c2_ok && r.c3_ok;
    r.violation = why.str();
    return r;
}

inline bool is_valid(const QutritDensity& rho) { return validate(decompose(rho)).overall; }

inline void require_valid(const QutritDensity& rho, const char* where) {
    const auto report = validate(decompose(rho));
    if (!report.overall) throw Error(Errc::invalid_state, std::string(where) + ": " + report.violation);
}

struct MetricTensor {
    RealSymMat3 gamma;
    bool defined = false;

    friend bool operator==(const MetricTensor&, const MetricTensor&) = default;
};

/// Gamma = (1 - T) / det(1 - T), undefined when the determinant is at or below Tolerances::singular.
inline MetricTensor metric_tensor(const CorrelationTensor& T) {
    RealSymMat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) m.set(i, j, (i == j ? 1.0 : 0.0) - T(i, j));
    const double d = det3(m.dense());
    MetricTensor out;
    if (d > Tolerances::singular) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) out.gamma.set(i, j, m(i, j) / d);
        out.defined = true;
    }
    return out;
}

/// a . Gamma . a
inline double gamma_norm(const BlochVector& a, const CorrelationTensor& T) {
    const auto metric = metric_tensor(T);
    if (!metric.defined) throw Error(Errc::metric_undefined, "gamma_norm: det(1 - T) vanishes");
    return dot(a, metric.gamma.dense() * a);
}

enum class RankCase { full_3d, surface_3d, segment_interior, segment_endpoint, point };

inline std::string_view to_string(RankCase c) {
    switch (c) {
        case RankCase::full_3d: return "full_3d";
        case RankCase::surface_3d: return "surface_3d";
        case RankCase::segment_interior: return "segment_interior";
        case RankCase::segment_endpoint: return "segment_endpoint";
        case RankCase::point: return "point";
    }
    return "unknown";
}

struct RankReport {
    int rank = 0;
    RankCase rank_case = RankCase::full_3d;
    std::array<double, 3> eigenvalues{};  // of rho, descending

    friend bool operator==(const RankReport&, const RankReport&) = default;
};

/// Rank from the spectrum of rho; the case from how many semi-axes survive.
/// rank 3 is always a solid ellipsoid with a strictly inside; rank 2 is either a on the surface of a
/// solid ellipsoid or a strictly inside a segment; rank 1 is a segment endpoint or the origin point.
inline RankReport classify_rank(const QutritDensity& rho) {
    RankReport r;
    r.eigenvalues = eigenvalues_hermitian(rho.matrix());
    if (r.eigenvalues[2] < -Tolerances::rank)
        throw Error(Errc::not_positive, "classify_rank: min eigenvalue " + std::to_string(r.eigenvalues[2]));
    for (double x : r.eigenvalues) r.rank += x > Tolerances::rank ? 1 : 0;

    const auto eps = semi_axes_from_spectrum(correlation_spectrum(decompose(rho).T).values);
    int axes = 0;
    for (double e : eps) axes += e > Tolerances::axis ? 1 : 0;

    switch (r.rank) {
        case 3: r.rank_case = RankCase::full_3d; break;
        case 2: r.rank_case = axes == 3 ? RankCase::surface_3d : RankCase::segment_interior; break;
        default: r.rank_case = axes == 0 ? RankCase::point : RankCase::segment_endpoint; break;
    }
    return r;
}

}  // namespace qutrit
