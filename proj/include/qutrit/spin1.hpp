#pragma once

// Spin-1 operators in the Cartesian basis (S_j)_kl = -i eps_jkl, their squares and
// anticommutators, and the identification of a qutrit with a symmetric two-qubit state.

#include <array>
#include <string>

#include "qutrit/state.hpp"

namespace qutrit {

enum class Axis { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

inline char axis_name(Axis a) { return "xyz"[static_cast<int>(a)]; }

struct Spin1Set {
    std::array<ComplexMat3, 3> S;   // S_x, S_y, S_z
    std::array<ComplexMat3, 3> S2;  // S_j^2, diagonal with 0 at position j
    std::array<ComplexMat3, 3> A;   // A_j = S_k S_l + S_l S_k
};

inline Spin1Set make_spin_set() {
    Spin1Set s;
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l) s.S[j](k, l) = Complex(0.0, -levi_civita(j, k, l));
        s.S2[j] = ComplexMat3::identity();
        s.S2[j](j, j) = 0.0;
    }
    for (std::size_t j = 0; j < 3; ++j) {
        const std::size_t k = (j + 1) % 3;
        const std::size_t l = (j + 2) % 3;
        s.A[j] = s.S[k] * s.S[l] + s.S[l] * s.S[k];
    }
    return s;
}

/// The constant operator set; entries are exact small integers.
inline const Spin1Set& spin_set() {
    static const Spin1Set set = make_spin_set();
    return set;
}

/// n . S for a real direction n.
inline ComplexMat3 spin_along(const Vec3& n) {
    const auto& s = spin_set();
    return s.S[0] * Complex(n[0]) + s.S[1] * Complex(n[1]) + s.S[2] * Complex(n[2]);
}

struct Spin1Expectations {
    Vec3 sv;   // <S_j> = a_j
    Vec3 s2v;  // <S_j^2> = (1 + T_jj) / 2
    Vec3 av;   // <A_j> = q_j
};

inline Spin1Expectations expectations(const QutritDensity& rho) {
    const auto& s = spin_set();
    Spin1Expectations e;
    for (std::size_t j = 0; j < 3; ++j) {
        e.sv[j] = trace(rho.matrix() * s.S[j]).real();
        e.s2v[j] = trace(rho.matrix() * s.S2[j]).real();
        e.av[j] = trace(rho.matrix() * s.A[j]).real();
    }
    return e;
}

// ---------------------------------------------------------------------------------------------
// Two-qubit bridge

using Mat2 = Matrix<Complex, 2>;

inline const std::array<Mat2, 3>& pauli() {
    static const std::array<Mat2, 3> p{
        Mat2{0.0, 1.0, 1.0, 0.0},
        Mat2{0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0},
        Mat2{1.0, 0.0, 0.0, -1.0},
    };
    return p;
}

/// Density operator of two qubits in the product basis |00>, |01>, |10>, |11>.
struct TwoQubitDensity {
    ComplexMat4 mat;

    friend bool operator==(const TwoQubitDensity&, const TwoQubitDensity&) = default;
};

/// (|01> - |10>) / sqrt(2)
inline Vector<Complex, 4> singlet() {
    const double h = 1.0 / std::sqrt(2.0);
    return {0.0, h, -h, 0.0};
}

inline double singlet_overlap(const TwoQubitDensity& rho) {
    const auto s = singlet();
    return inner(s, rho.mat * s).real();
}

/// rho4 = 1/4 [1 + sum_j a_j (s_j x 1 + 1 x s_j) + sum_jk T_jk s_j x s_k] with (a, T) from rho3.
inline TwoQubitDensity to_two_qubit(const QutritDensity& rho3) {
    require_valid(rho3, "to_two_qubit");
    const auto p = decompose(rho3);
    const auto& s = pauli();
    const Mat2 one = Mat2::identity();
    ComplexMat4 m = ComplexMat4::identity();
    for (std::size_t j = 0; j < 3; ++j) {
        m += (kron(s[j], one) + kron(one, s[j])) * Complex(p.a[j]);
        for (std::size_t k = 0; k < 3; ++k) m += kron(s[j], s[k]) * Complex(p.T(j, k));
    }
    return {m * Complex(0.25)};
}

enum class SymmetryCheck { hermitian, trace, local_vectors, correlation_symmetry, singlet_overlap };

inline std::string_view to_string(SymmetryCheck c) {
    switch (c) {
        case SymmetryCheck::hermitian: return "hermitian";
        case SymmetryCheck::trace: return "trace";
        case SymmetryCheck::local_vectors: return "local_vectors";
        case SymmetryCheck::correlation_symmetry: return "correlation_symmetry";
        case SymmetryCheck::singlet_overlap: return "singlet_overlap";
    }
    return "unknown";
}

/// Thrown by from_two_qubit; check() names the failed condition.
class NotSymmetricState : public Error {
public:
    NotSymmetricState(SymmetryCheck check, const std::string& detail)
        : Error(Errc::not_symmetric_state, std::string(to_string(check)) + ": " + detail), check_(check) {}
    SymmetryCheck check() const noexcept { return check_; }

private:
    SymmetryCheck check_;
};

struct TwoQubitParams {
    Vec3 a;            // Tr(rho s_j x 1)
    Vec3 b;            // Tr(rho 1 x s_j)
    RealMat3 T;        // Tr(rho s_j x s_k)
};

inline TwoQubitParams two_qubit_params(const TwoQubitDensity& rho) {
    const auto& s = pauli();
    const Mat2 one = Mat2::identity();
    TwoQubitParams p;
    for (std::size_t j = 0; j < 3; ++j) {
        p.a[j] = trace(rho.mat * kron(s[j], one)).real();
        p.b[j] = trace(rho.mat * kron(one, s[j])).real();
        for (std::size_t k = 0; k < 3; ++k) p.T(j, k) = trace(rho.mat * kron(s[j], s[k])).real();
    }
    return p;
}

inline QutritDensity from_two_qubit(const TwoQubitDensity& rho) {
    const double herm = hermiticity_defect(rho.mat);
    if (!(herm <= Tolerances::herm)) throw NotSymmetricState(SymmetryCheck::hermitian, std::to_string(herm));
    const double tr = trace(rho.mat).real();
    if (!(std::abs(tr - 1.0) <= Tolerances::trace))
        throw NotSymmetricState(SymmetryCheck::trace, "trace = " + std::to_string(tr));

    const auto p = two_qubit_params(rho);
    if (norm(p.a - p.b) > Tolerances::herm)
        throw NotSymmetricState(SymmetryCheck::local_vectors, "|a - b| = " + std::to_string(norm(p.a - p.b)));
    const double asym = max_abs(p.T - transpose(p.T));
    if (asym > Tolerances::herm) throw NotSymmetricState(SymmetryCheck::correlation_symmetry, std::to_string(asym));
    const double overlap = singlet_overlap(rho);
    if (std::abs(overlap) >= Tolerances::singlet)
        throw NotSymmetricState(SymmetryCheck::singlet_overlap, "<psi-|rho|psi-> = " + std::to_string(overlap));

    StateParams q;
    q.a = (p.a + p.b) * 0.5;
    q.T = RealSymMat3::from_upper((p.T + transpose(p.T)) * 0.5);
    for (std::size_t j = 0; j < 3; ++j) q.omega[j] = (1.0 - q.T(j, j)) / 2.0;
    q.q = {q.T(1, 2), q.T(0, 2), q.T(0, 1)};
    return compose(q);
}

/// Positivity of the partial transpose; for two qubits this decides separability.
inline bool ppt_separable(const TwoQubitDensity& rho) {
    if (!(hermiticity_defect(rho.mat) <= Tolerances::herm))
        throw Error(Errc::invalid_state, "ppt_separable: not Hermitian");
    if (!(std::abs(trace(rho.mat).real() - 1.0) <= Tolerances::trace))
        throw Error(Errc::invalid_state, "ppt_separable: trace differs from 1");
    if (eigenvalues_hermitian(rho.mat)[3] < -Tolerances::rank)
        throw Error(Errc::invalid_state, "ppt_separable: not positive semidefinite");
    return eigenvalues_hermitian(partial_transpose(rho.mat))[3] >= -Tolerances::ppt;
}

}  // namespace qutrit
