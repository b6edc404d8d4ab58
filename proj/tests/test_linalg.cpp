#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qutrit;

namespace {

ComplexMat3 diag3(double a, double b, double c) {
    ComplexMat3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

template <std::size_t N>
double residual(const Matrix<Complex, N>& m, const EigenSystem<N>& es) {
    double worst = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const auto v = es.vectors.column(j);
        worst = std::max(worst, norm(m * v - v * Complex(es.values[j])));
    }
    return worst;
}

template <std::size_t N>
double orthonormality_defect(const Matrix<Complex, N>& v) {
    return max_abs(adjoint(v) * v - Matrix<Complex, N>::identity());
}

}  // namespace

TEST(EigHermitian, DiagonalInputGivesStandardBasis) {
    const auto es = eig_hermitian3(diag3(1, 0, 0));
    EXPECT_EQ(es.values[0], 1.0);
    EXPECT_EQ(es.values[1], 0.0);
    EXPECT_EQ(es.values[2], 0.0);
    EXPECT_LT(max_abs(es.vectors - ComplexMat3::identity()), 1e-15);
}

TEST(EigHermitian, ScalarMatrix) {
    const auto es = eig_hermitian3(ComplexMat3::identity() / Complex(3.0));
    for (double v : es.values) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
    EXPECT_LT(max_abs(es.vectors - ComplexMat3::identity()), 1e-15);
}

TEST(EigHermitian, CorrelationTensorOfKetZero) {
    const ComplexMat3 t = to_complex(oracle::correlation_matrix(diag3(1, 0, 0)));
    const auto expected = oracle::charpoly_eigenvalues(t);
    const auto es = eig_hermitian3(t);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(es.values[i], expected[i], 1e-12);
    EXPECT_NEAR(es.values[0], 1.0, 1e-15);
    EXPECT_NEAR(es.values[1], 1.0, 1e-15);
    EXPECT_NEAR(es.values[2], -1.0, 1e-15);
}

TEST(EigHermitian, MatchesCharacteristicPolynomialAndEigen) {
    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const ComplexMat3 m = random_hermitian_trace1(rng);
        const auto es = eig_hermitian3(m);
        const auto cp = oracle::charpoly_eigenvalues(m);
        const auto ei = oracle::eigen_eigenvalues(m);
        for (int i = 0; i < 3; ++i) {
            // cubic roots lose half their digits at a double root
            ASSERT_NEAR(es.values[i], cp[i], 1e-7);
            ASSERT_NEAR(es.values[i], ei[i], 1e-12);
        }
        ASSERT_GE(es.values[0], es.values[1]);
        ASSERT_GE(es.values[1], es.values[2]);
        ASSERT_LT(residual(m, es), 1e-12);
        ASSERT_LT(orthonormality_defect(es.vectors), 1e-12);
    }
}

TEST(EigHermitian, FourByFourAgainstEigen) {
    Rng rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 500; ++trial) {
        ComplexMat4 m;
        for (std::size_t r = 0; r < 4; ++r) {
            m(r, r) = g(rng);
            for (std::size_t c = r + 1; c < 4; ++c) {
                m(r, c) = Complex(g(rng), g(rng));
                m(c, r) = std::conj(m(r, c));
            }
        }
        const auto es = eig_hermitian(m);
        const auto ei = oracle::eigen_eigenvalues(m);
        for (int i = 0; i < 4; ++i) ASSERT_NEAR(es.values[i], ei[i], 1e-11);
        ASSERT_LT(residual(m, es), 1e-11);
        ASSERT_LT(orthonormality_defect(es.vectors), 1e-12);
    }
}

TEST(EigHermitian, DegenerateEigenvectorsAreCanonical) {
    // rotate diag(2, 1, 1) by a random unitary; the 1-eigenspace basis must not depend on the rotation
    Rng rng(3);
    const CVec3 top = haar_pure(rng);
    ComplexMat3 m = ComplexMat3::identity() + oracle::projector(top);
    const auto first = eig_hermitian3(m);
    const auto again = eig_hermitian3(m);
    EXPECT_EQ(first.vectors, again.vectors);
    EXPECT_NEAR(first.values[0], 2.0, 1e-14);
    EXPECT_LT(residual(m, first), 1e-13);
    EXPECT_LT(orthonormality_defect(first.vectors), 1e-13);
    // largest component of each vector is real and positive
    for (std::size_t j = 0; j < 3; ++j) {
        const auto v = first.vectors.column(j);
        std::size_t big = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (std::abs(v[i]) > std::abs(v[big]) + 1e-12) big = i;
        EXPECT_NEAR(v[big].imag(), 0.0, 1e-14);
        EXPECT_GT(v[big].real(), 0.0);
    }
}

TEST(EigSymmetric, RealVectorsForRealInput) {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = decompose(random_valid_state(rng));
        const auto es = eig_symmetric3(p.T);
        const auto cp = oracle::charpoly_eigenvalues(p.T);
        for (int i = 0; i < 3; ++i) ASSERT_NEAR(es.values[i], cp[i], 1e-9);
        const RealMat3 t = p.T.dense();
        for (std::size_t j = 0; j < 3; ++j) {
            const Vec3 v = es.vectors.column(j);
            ASSERT_NEAR(norm(v), 1.0, 1e-13);
            ASSERT_LT(norm(t * v - v * es.values[j]), 1e-12);
        }
        ASSERT_LT(max_abs(transpose(es.vectors) * es.vectors - RealMat3::identity()), 1e-13);
    }
}

TEST(PrincipalMinors, Identity) {
    const auto pm = principal_minors3(ComplexMat3::identity());
    EXPECT_EQ(pm.d1, (Vec3{1, 1, 1}));
    EXPECT_EQ(pm.d2, (Vec3{1, 1, 1}));
    EXPECT_EQ(pm.d3, 1.0);
}

TEST(PrincipalMinors, ThirdOfIdentity) {
    const auto pm = principal_minors3(ComplexMat3::identity() / Complex(3.0));
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(pm.d1[i], 1.0 / 3.0, 1e-16);
        EXPECT_NEAR(pm.d2[i], 1.0 / 9.0, 1e-16);
    }
    EXPECT_NEAR(pm.d3, 1.0 / 27.0, 1e-16);
}

TEST(PrincipalMinors, BoundaryPseudoQubitHasZeroDeterminant) {
    ComplexMat3 m = ComplexMat3::identity() / Complex(3.0);
    m(0, 1) = Complex(0.0, -1.0 / 3.0);
    m(1, 0) = Complex(0.0, 1.0 / 3.0);
    const auto pm = principal_minors3(m);
    EXPECT_NEAR(pm.d3, 0.0, 1e-16);
    EXPECT_NEAR(pm.d3, oracle::cofactor_det(m).real(), 1e-16);
}

TEST(PrincipalMinors, AgreeWithCofactorExpansion) {
    Rng rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        const ComplexMat3 m = random_hermitian_trace1(rng);
        const auto pm = principal_minors3(m);
        ASSERT_NEAR(pm.d3, oracle::cofactor_det(m).real(), 1e-14);
        for (std::size_t l = 0; l < 3; ++l) {
            const std::size_t j = l == 0 ? 1 : 0;
            const std::size_t k = l == 2 ? 1 : 2;
            ASSERT_NEAR(pm.d2[l], (m(j, j) * m(k, k) - m(j, k) * m(k, j)).real(), 1e-15);
            ASSERT_EQ(pm.d1[l], m(l, l).real());
        }
    }
}

TEST(ExpIHermitian, ZeroAngleIsIdentity) {
    EXPECT_LT(max_abs(exp_i_hermitian3(spin_set().S[2], 0.0) - ComplexMat3::identity()), 1e-15);
}

TEST(ExpIHermitian, FullTurnOfSzIsIdentity) {
    const double two_pi = 2.0 * std::numbers::pi;
    EXPECT_LT(max_abs(exp_i_hermitian3(spin_set().S[2], two_pi) - ComplexMat3::identity()), 1e-12);
    EXPECT_LT(max_abs(oracle::taylor_exp(spin_set().S[2], two_pi) - ComplexMat3::identity()), 1e-12);
}

TEST(ExpIHermitian, QuarterTurnOfSzRotatesXintoY) {
    const auto u = exp_i_hermitian3(spin_set().S[2], std::numbers::pi / 2);
    EXPECT_LT(max_abs(u - oracle::taylor_exp(spin_set().S[2], std::numbers::pi / 2)), 1e-13);
    // real rotation in the x-y plane, z fixed
    EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 0)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(u(0, 1)), 1.0, 1e-15);
    EXPECT_NEAR(u(2, 2).real(), 1.0, 1e-15);
    EXPECT_LT(max_abs(u - to_complex(real_part(u))), 1e-15);
}

TEST(ExpIHermitian, MatchesTaylorSeries) {
    Rng rng(13);
    std::uniform_real_distribution<double> angle(-7.0, 7.0);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMat3 g = random_hermitian_trace1(rng) * Complex(3.0);
        const double theta = angle(rng);
        const auto u = exp_i_hermitian3(g, theta);
        ASSERT_LT(max_abs(u - oracle::taylor_exp(g, theta)), 1e-11);
        ASSERT_LT(max_abs(adjoint(u) * u - ComplexMat3::identity()), 1e-13);
    }
}

TEST(PartialTranspose, IdentityIsFixed) {
    const ComplexMat4 m = ComplexMat4::identity() / Complex(4.0);
    EXPECT_EQ(partial_transpose(m), m);
}

TEST(PartialTranspose, SingletHasNegativeHalfEigenvalue) {
    const auto s = singlet();
    ComplexMat4 p;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) p(i, j) = s[i] * std::conj(s[j]);
    const auto pt = partial_transpose(p);
    EXPECT_EQ(pt, oracle::block_partial_transpose(p));
    EXPECT_NEAR(oracle::min_eigenvalue(oracle::block_partial_transpose(p)), -0.5, 1e-14);
    EXPECT_NEAR(eigenvalues_hermitian(pt)[3], -0.5, 1e-14);
}

TEST(PartialTranspose, ProductStateIsFixed) {
    ComplexMat4 m;
    m(0, 0) = 1.0;
    EXPECT_EQ(partial_transpose(m), m);
}

TEST(PartialTranspose, AgreesWithBlockTranspose) {
    Rng rng(17);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        ComplexMat4 m;
        for (auto& x : m.data) x = Complex(g(rng), g(rng));
        ASSERT_EQ(partial_transpose(m), oracle::block_partial_transpose(m));
        ASSERT_EQ(partial_transpose(partial_transpose(m)), m);
    }
}

TEST(Kron, PauliProducts) {
    const auto& s = pauli();
    const auto zz = kron(s[2], s[2]);
    EXPECT_EQ(zz(0, 0), Complex(1.0));
    EXPECT_EQ(zz(1, 1), Complex(-1.0));
    EXPECT_EQ(zz(2, 2), Complex(-1.0));
    EXPECT_EQ(zz(3, 3), Complex(1.0));
    const auto xi = kron(s[0], Mat2::identity());
    EXPECT_EQ(xi(0, 2), Complex(1.0));
    EXPECT_EQ(xi(1, 3), Complex(1.0));
    EXPECT_EQ(xi(0, 1), Complex(0.0));
}

TEST(Hermiticity, RejectsNonHermitian) {
    ComplexMat3 m = ComplexMat3::identity() / Complex(3.0);
    m(0, 1) = 0.1;
    try {
        require_hermitian(m, "test");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_hermitian);
    }
}
