#pragma once

// Dense linear algebra for the fixed sizes this library needs (3 and 4).
// Everything is a value type; nothing allocates.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>

#include "qutrit/error.hpp"
#include "qutrit/tolerances.hpp"

namespace qutrit {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

inline double conj(double x) { return x; }
inline Complex conj(const Complex& z) { return std::conj(z); }
inline double real_of(double x) { return x; }
inline double real_of(const Complex& z) { return z.real(); }

template <class T, std::size_t N>
struct Vector {
    std::array<T, N> c{};

    constexpr T& operator[](std::size_t i) { return c[i]; }
    constexpr const T& operator[](std::size_t i) const { return c[i]; }
    static constexpr std::size_t size() { return N; }
    auto begin() { return c.begin(); }
    auto end() { return c.end(); }
    auto begin() const { return c.begin(); }
    auto end() const { return c.end(); }

    friend bool operator==(const Vector&, const Vector&) = default;

    Vector& operator+=(const Vector& o) {
        for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vector& operator*=(T s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator-(Vector a) { return a *= T(-1); }
    friend Vector operator*(Vector a, T s) { return a *= s; }
    friend Vector operator*(T s, Vector a) { return a *= s; }
    friend Vector operator/(Vector a, T s) {
        for (auto& x : a.c) x /= s;
        return a;
    }
};

using Vec3 = Vector<double, 3>;
using CVec3 = Vector<Complex, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T, std::size_t N>
double norm(const Vector<T, N>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

/// <a|b>, conjugate-linear in the first argument.
template <std::size_t N>
Complex inner(const Vector<Complex, N>& a, const Vector<Complex, N>& b) {
    Complex s{};
    for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

/// Row-major N x N matrix.
template <class T, std::size_t N>
struct Matrix {
    std::array<T, N * N> data{};

    static constexpr std::size_t size() { return N; }

    static constexpr Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m.data[i * N + i] = T(1);
        return m;
    }

    constexpr T& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }
    constexpr const T& operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }

    Vector<T, N> column(std::size_t c) const {
        Vector<T, N> v;
        for (std::size_t r = 0; r < N; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void set_column(std::size_t c, const Vector<T, N>& v) {
        for (std::size_t r = 0; r < N; ++r) (*this)(r, c) = v[r];
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix& operator+=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) data[i] -= o.data[i];
        return *this;
    }
    Matrix& operator*=(T s) {
        for (auto& x : data) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, T s) { return a *= s; }
    friend Matrix operator*(T s, Matrix a) { return a *= s; }
    friend Matrix operator/(Matrix a, T s) {
        for (auto& x : a.data) x /= s;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const T aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Vector<T, N> operator*(const Matrix& a, const Vector<T, N>& v) {
        Vector<T, N> out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
        return out;
    }
};

using ComplexMat3 = Matrix<Complex, 3>;
using ComplexMat4 = Matrix<Complex, 4>;
using RealMat3 = Matrix<double, 3>;

template <class T, std::size_t N>
Matrix<T, N> adjoint(const Matrix<T, N>& m) {
    Matrix<T, N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = conj(m(j, i));
    return out;
}

template <class T, std::size_t N>
Matrix<T, N> transpose(const Matrix<T, N>& m) {
    Matrix<T, N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = m(j, i);
    return out;
}

template <class T, std::size_t N>
T trace(const Matrix<T, N>& m) {
    T s{};
    for (std::size_t i = 0; i < N; ++i) s += m(i, i);
    return s;
}

template <class T, std::size_t N>
double max_abs(const Matrix<T, N>& m) {
    double out = 0.0;
    for (const auto& x : m.data) out = std::max(out, std::abs(x));
    return out;
}

template <std::size_t N>
Matrix<double, N> real_part(const Matrix<Complex, N>& m) {
    Matrix<double, N> out;
    for (std::size_t i = 0; i < N * N; ++i) out.data[i] = m.data[i].real();
    return out;
}

template <std::size_t N>
Matrix<Complex, N> to_complex(const Matrix<double, N>& m) {
    Matrix<Complex, N> out;
    for (std::size_t i = 0; i < N * N; ++i) out.data[i] = m.data[i];
    return out;
}

/// max |M - M^dagger| over all entries.
template <std::size_t N>
double hermiticity_defect(const Matrix<Complex, N>& m) {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

template <std::size_t N>
void require_hermitian(const Matrix<Complex, N>& m, const char* where) {
    const double d = hermiticity_defect(m);
    if (!(d <= Tolerances::herm))
        throw Error(Errc::not_hermitian, std::string(where) + ": |M - M^dagger| = " + std::to_string(d));
}

/// (M + M^dagger) / 2
template <std::size_t N>
Matrix<Complex, N> hermitian_part(const Matrix<Complex, N>& m) {
    return (m + adjoint(m)) * Complex(0.5);
}

inline Complex det3(const ComplexMat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline double det3(const RealMat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Symmetric real 3x3 matrix. Only the upper triangle is stored, so symmetry is exact.
class RealSymMat3 {
public:
    RealSymMat3() = default;

    static RealSymMat3 identity() {
        RealSymMat3 s;
        s.set(0, 0, 1.0);
        s.set(1, 1, 1.0);
        s.set(2, 2, 1.0);
        return s;
    }
    static RealSymMat3 diagonal(double a, double b, double c) {
        RealSymMat3 s;
        s.set(0, 0, a);
        s.set(1, 1, b);
        s.set(2, 2, c);
        return s;
    }
    /// Reads the upper triangle of m; the lower one is ignored.
    static RealSymMat3 from_upper(const RealMat3& m) {
        RealSymMat3 s;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) s.set(i, j, m(i, j));
        return s;
    }

    double operator()(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, double v) { upper_[index(i, j)] = v; }

    RealMat3 dense() const {
        RealMat3 m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = (*this)(i, j);
        return m;
    }
    double trace() const { return upper_[0] + upper_[3] + upper_[5]; }

    friend bool operator==(const RealSymMat3&, const RealSymMat3&) = default;

private:
    static std::size_t index(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        // row-major upper triangle: (0,0)(0,1)(0,2)(1,1)(1,2)(2,2)
        return i == 0 ? j : (i == 1 ? 2 + j : 5);
    }
    std::array<double, 6> upper_{};
};

/// Eigenvalues sorted descending, eigenvectors as matching columns.
template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values{};
    Matrix<Complex, N> vectors;
};

using EigenSystem3 = EigenSystem<3>;
using EigenSystem4 = EigenSystem<4>;

struct RealEigenSystem3 {
    std::array<double, 3> values{};
    RealMat3 vectors;
};

namespace detail {

// Make the largest-magnitude component real and positive; ties go to the lowest index.
template <std::size_t N>
void fix_phase(Vector<Complex, N>& v) {
    double biggest = 0.0;
    for (const auto& x : v) biggest = std::max(biggest, std::abs(x));
    if (biggest == 0.0) return;
    for (std::size_t i = 0; i < N; ++i) {
        const double m = std::abs(v[i]);
        if (m >= biggest * (1.0 - 1e-9)) {
            const Complex phase = std::conj(v[i]) / m;
            for (auto& x : v) x *= phase;
            v[i] = m;
            return;
        }
    }
}

// Replace the columns [first, last) spanning a degenerate eigenspace with the
// Gram-Schmidt orthonormalization of the projected standard basis vectors, taken in index order.
template <std::size_t N>
void canonicalize_cluster(Matrix<Complex, N>& vecs, std::size_t first, std::size_t last) {
    Matrix<Complex, N> projector;
    for (std::size_t c = first; c < last; ++c)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) projector(i, j) += vecs(i, c) * std::conj(vecs(j, c));

    std::array<Vector<Complex, N>, N> basis{};
    std::size_t found = 0;
    const std::size_t wanted = last - first;
    for (std::size_t e = 0; e < N && found < wanted; ++e) {
        Vector<Complex, N> w = projector.column(e);
        for (std::size_t k = 0; k < found; ++k) {
            const Complex overlap = inner(basis[k], w);
            for (std::size_t i = 0; i < N; ++i) w[i] -= overlap * basis[k][i];
        }
        const double len = norm(w);
        if (len > 1e-3) basis[found++] = w / Complex(len);
    }
    if (found < wanted) return;  // keep the solver's own orthonormal vectors
    for (std::size_t k = 0; k < wanted; ++k) vecs.set_column(first + k, basis[k]);
}

}  // namespace detail

/// Cyclic complex Jacobi. Values descending; each vector's largest component real positive;
/// degenerate eigenspaces (gap < Tolerances::degenerate) get a canonical basis.
template <std::size_t N>
EigenSystem<N> eig_hermitian(const Matrix<Complex, N>& input) {
    require_hermitian(input, "eig_hermitian");
    Matrix<Complex, N> a = hermitian_part(input);
    Matrix<Complex, N> v = Matrix<Complex, N>::identity();

    double scale = 0.0;
    for (const auto& x : a.data) scale += std::norm(x);
    const double stop = 1e-32 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += std::norm(a(p, q));
        if (off <= stop) break;

        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) continue;
                const Complex phase = std::conj(apq / g);
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                Matrix<Complex, N> rot = Matrix<Complex, N>::identity();
                rot(p, p) = c;
                rot(p, q) = s;
                rot(q, p) = -s * phase;
                rot(q, q) = c * phase;

                a = adjoint(rot) * a * rot;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                v = v * rot;
            }
        }
    }

    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem<N> out;
    for (std::size_t k = 0; k < N; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        out.vectors.set_column(k, v.column(order[k]));
    }

    for (std::size_t first = 0; first < N;) {
        std::size_t last = first + 1;
        while (last < N && out.values[last - 1] - out.values[last] < Tolerances::degenerate) ++last;
        if (last - first > 1) detail::canonicalize_cluster(out.vectors, first, last);
        first = last;
    }
    for (std::size_t k = 0; k < N; ++k) {
        auto col = out.vectors.column(k);
        detail::fix_phase(col);
        out.vectors.set_column(k, col);
    }
    return out;
}

inline EigenSystem3 eig_hermitian3(const ComplexMat3& m) { return eig_hermitian(m); }

/// Real symmetric input yields real eigenvectors under the phase convention above.
inline RealEigenSystem3 eig_symmetric3(const RealSymMat3& m) {
    const auto sys = eig_hermitian(to_complex(m.dense()));
    RealEigenSystem3 out;
    out.values = sys.values;
    out.vectors = real_part(sys.vectors);
    return out;
}

template <std::size_t N>
std::array<double, N> eigenvalues_hermitian(const Matrix<Complex, N>& m) {
    return eig_hermitian(m).values;
}

/// Principal minors of a Hermitian 3x3 matrix. d2[l] is the minor on the two indices other than l.
struct PrincipalMinors3 {
    Vec3 d1;
    Vec3 d2;
    double d3 = 0.0;
};

inline PrincipalMinors3 principal_minors3(const ComplexMat3& m) {
    require_hermitian(m, "principal_minors3");
    PrincipalMinors3 out;
    for (std::size_t l = 0; l < 3; ++l) {
        out.d1[l] = m(l, l).real();
        const std::size_t j = l == 0 ? 1 : 0;
        const std::size_t k = l == 2 ? 1 : 2;
        out.d2[l] = (m(j, j) * m(k, k) - m(j, k) * m(k, j)).real();
    }
    out.d3 = det3(m).real();
    return out;
}

/// exp(-i theta G) for Hermitian G, through its eigendecomposition.
template <std::size_t N>
Matrix<Complex, N> exp_i_hermitian(const Matrix<Complex, N>& g, double theta) {
    if (theta == 0.0) return Matrix<Complex, N>::identity();
    const auto sys = eig_hermitian(g);
    Matrix<Complex, N> phases;
    for (std::size_t k = 0; k < N; ++k) phases(k, k) = std::polar(1.0, -theta * sys.values[k]);
    return sys.vectors * phases * adjoint(sys.vectors);
}

inline ComplexMat3 exp_i_hermitian3(const ComplexMat3& g, double theta) { return exp_i_hermitian(g, theta); }

/// Kronecker product of two 2x2 operators in the basis |00>,|01>,|10>,|11>.
inline ComplexMat4 kron(const Matrix<Complex, 2>& a, const Matrix<Complex, 2>& b) {
    ComplexMat4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

/// Transpose on the second qubit: <i k| M^{T_B} |j l> = <i l| M |j k>.
inline ComplexMat4 partial_transpose(const ComplexMat4& m) {
    ComplexMat4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = m(2 * i + l, 2 * j + k);
    return out;
}

}  // namespace qutrit
