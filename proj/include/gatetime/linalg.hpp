#pragma once

#include <array>
#include <complex>

namespace gatetime {

using cplx = std::complex<double>;

// Centralized tolerances. Everything else in the library is expressed
// relative to these knobs.
namespace tol {
inline constexpr double herm = 1e-10;     // Hermiticity acceptance
inline constexpr double unit = 1e-9;      // unitarity acceptance
inline constexpr double special = 1e-8;   // |det - 1| acceptance
inline constexpr double local = 1e-8;     // Bell-form realness of local gates
} // namespace tol

// Dense 2x2 complex matrix, row-major.
struct CMat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[2 * r + c]; }
};

// Dense 4x4 complex matrix, row-major.
struct CMat4 {
    std::array<cplx, 16> e{};

    cplx& operator()(int r, int c) { return e[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[4 * r + c]; }
};

// Dense 4x4 real matrix, row-major.
struct RMat4 {
    std::array<double, 16> e{};

    double& operator()(int r, int c) { return e[4 * r + c]; }
    const double& operator()(int r, int c) const { return e[4 * r + c]; }
};

CMat2 mat2_identity();
CMat2 pauli_x();
CMat2 pauli_y();
CMat2 pauli_z();
CMat4 mat4_identity();
RMat4 rmat4_identity();

CMat2 operator*(const CMat2& a, const CMat2& b);
CMat2 operator*(cplx s, const CMat2& a);
CMat2 operator+(const CMat2& a, const CMat2& b);
CMat2 operator-(const CMat2& a, const CMat2& b);
CMat2 adjoint(const CMat2& a);
cplx det2(const CMat2& a);

CMat4 operator*(const CMat4& a, const CMat4& b);
CMat4 operator*(cplx s, const CMat4& a);
CMat4 operator+(const CMat4& a, const CMat4& b);
CMat4 operator-(const CMat4& a, const CMat4& b);
CMat4 adjoint(const CMat4& a);
CMat4 transpose(const CMat4& a);
cplx trace(const CMat4& a);

RMat4 operator*(const RMat4& a, const RMat4& b);
RMat4 transpose(const RMat4& a);
double det4(const RMat4& a);

// Standard Kronecker product: block (i,j) of the result is a(i,j)*b.
CMat4 kron(const CMat2& a, const CMat2& b);

double frobenius_norm(const CMat4& a);
double frobenius_dist(const CMat4& a, const CMat4& b);

// ||a†a - I||_F
double unitarity_defect(const CMat4& a);
double unitarity_defect(const CMat2& a);

bool all_finite(const CMat4& a);
bool all_finite(const CMat2& a);

RMat4 real_part(const CMat4& a);
RMat4 imag_part(const CMat4& a);
CMat4 to_complex(const RMat4& a);
double max_abs_imag(const CMat4& a);

// Tr(a * b^T) for real matrices, i.e. the entrywise dot product.
double trace_of_abt(const RMat4& a, const RMat4& b);

cplx det4(const CMat4& m);

// Eigendecomposition h = V diag(values) V† of a Hermitian matrix, by
// cyclic Jacobi. Throws NotHermitian if ||h - h†||_F exceeds `herm_tol`.
struct HermitianEigen {
    std::array<double, 4> values;
    CMat4 vectors;
};
HermitianEigen eigh(const CMat4& h, double herm_tol = tol::herm);

// Eigendecomposition s = V diag(values) V^T of a real symmetric matrix.
struct SymmetricEigen {
    std::array<double, 4> values;
    RMat4 vectors;
};
SymmetricEigen eigh(const RMat4& s);

// exp(-i h t) for Hermitian h, via eigendecomposition.
CMat4 expm_skew(const CMat4& h, double t, double herm_tol = tol::herm);

} // namespace gatetime
