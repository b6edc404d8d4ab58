#pragma once

namespace qutrit {

/// Numerical thresholds shared by every module.
struct Tolerances {
    /// Max |M - M^dagger| entry for a matrix to count as Hermitian.
    static constexpr double herm = 1e-10;
    /// Eigen-solver convergence and unitarity checks.
    static constexpr double eig = 1e-12;
    /// Eigenvalues of rho above this count towards its rank; below -rank the state is invalid.
    static constexpr double rank = 1e-9;
    /// |trace(rho) - 1| accepted for a density matrix.
    static constexpr double trace = 1e-12;
    /// det(1 - T) at or below this leaves the metric tensor undefined.
    static constexpr double singular = 1e-10;
    /// Semi-axes at or below this are treated as vanished.
    static constexpr double axis = 1e-7;
    /// Eigenvalues closer than this are one degenerate cluster.
    static constexpr double degenerate = 1e-9;
    /// Singlet weight allowed in a two-qubit state read as a qutrit.
    static constexpr double singlet = 1e-10;
    /// PPT verdict: minimum partial-transpose eigenvalue allowed.
    static constexpr double ppt = 1e-9;
    /// Absolute floor for principal-minor comparisons (round-off on rank-deficient states).
    static constexpr double minor_floor = 1e-14;
};

}  // namespace qutrit
