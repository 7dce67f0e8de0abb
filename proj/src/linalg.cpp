#include "gatetime/linalg.hpp"

#include "gatetime/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gatetime {

namespace {
const cplx I_UNIT(0.0, 1.0);
}

CMat2 mat2_identity() { return CMat2{{cplx(1), 0, 0, cplx(1)}}; }
CMat2 pauli_x() { return CMat2{{0, cplx(1), cplx(1), 0}}; }
CMat2 pauli_y() { return CMat2{{0, -I_UNIT, I_UNIT, 0}}; }
CMat2 pauli_z() { return CMat2{{cplx(1), 0, 0, cplx(-1)}}; }

CMat4 mat4_identity() {
    CMat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

RMat4 rmat4_identity() {
    RMat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return c;
}

CMat2 operator*(cplx s, const CMat2& a) {
    CMat2 c = a;
    for (auto& v : c.e) v *= s;
    return c;
}

CMat2 operator+(const CMat2& a, const CMat2& b) {
    CMat2 c;
    for (int i = 0; i < 4; ++i) c.e[i] = a.e[i] + b.e[i];
    return c;
}

CMat2 operator-(const CMat2& a, const CMat2& b) {
    CMat2 c;
    for (int i = 0; i < 4; ++i) c.e[i] = a.e[i] - b.e[i];
    return c;
}

CMat2 adjoint(const CMat2& a) {
    CMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c(i, j) = std::conj(a(j, i));
    return c;
}

cplx det2(const CMat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

CMat4 operator*(const CMat4& a, const CMat4& b) {
    CMat4 c;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0)) continue;
            for (int j = 0; j < 4; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

CMat4 operator*(cplx s, const CMat4& a) {
    CMat4 c = a;
    for (auto& v : c.e) v *= s;
    return c;
}

CMat4 operator+(const CMat4& a, const CMat4& b) {
    CMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = a.e[i] + b.e[i];
    return c;
}

CMat4 operator-(const CMat4& a, const CMat4& b) {
    CMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = a.e[i] - b.e[i];
    return c;
}

CMat4 adjoint(const CMat4& a) {
    CMat4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c(i, j) = std::conj(a(j, i));
    return c;
}

CMat4 transpose(const CMat4& a) {
    CMat4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c(i, j) = a(j, i);
    return c;
}

cplx trace(const CMat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

RMat4 operator*(const RMat4& a, const RMat4& b) {
    RMat4 c;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < 4; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

RMat4 transpose(const RMat4& a) {
    RMat4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c(i, j) = a(j, i);
    return c;
}

CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 c;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < 2; ++j2)
                    c(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
    return c;
}

double frobenius_norm(const CMat4& a) {
    double s = 0;
    for (const auto& v : a.e) s += std::norm(v);
    return std::sqrt(s);
}

double frobenius_dist(const CMat4& a, const CMat4& b) {
    double s = 0;
    for (int i = 0; i < 16; ++i) s += std::norm(a.e[i] - b.e[i]);
    return std::sqrt(s);
}

double unitarity_defect(const CMat4& a) {
    return frobenius_dist(adjoint(a) * a, mat4_identity());
}

double unitarity_defect(const CMat2& a) {
    const CMat2 g = adjoint(a) * a;
    double s = std::norm(g(0, 0) - 1.0) + std::norm(g(0, 1)) +
               std::norm(g(1, 0)) + std::norm(g(1, 1) - 1.0);
    return std::sqrt(s);
}

bool all_finite(const CMat4& a) {
    for (const auto& v : a.e)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool all_finite(const CMat2& a) {
    for (const auto& v : a.e)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

RMat4 real_part(const CMat4& a) {
    RMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = a.e[i].real();
    return c;
}

RMat4 imag_part(const CMat4& a) {
    RMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = a.e[i].imag();
    return c;
}

CMat4 to_complex(const RMat4& a) {
    CMat4 c;
    for (int i = 0; i < 16; ++i) c.e[i] = a.e[i];
    return c;
}

double max_abs_imag(const CMat4& a) {
    double m = 0;
    for (const auto& v : a.e) m = std::max(m, std::abs(v.imag()));
    return m;
}

double trace_of_abt(const RMat4& a, const RMat4& b) {
    double s = 0;
    for (int i = 0; i < 16; ++i) s += a.e[i] * b.e[i];
    return s;
}

cplx det4(const CMat4& m) {
    CMat4 a = m;  // LU with partial pivoting on a copy
    cplx det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == cplx(0)) return 0.0;
        if (piv != col) {
            for (int j = 0; j < 4; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < 4; ++r) {
            const cplx f = a(r, col) / a(col, col);
            for (int j = col; j < 4; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

double det4(const RMat4& m) {
    RMat4 a = m;
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < 4; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < 4; ++r) {
            const double f = a(r, col) / a(col, col);
            for (int j = col; j < 4; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

namespace {

double offdiag_norm(const CMat4& a) {
    double s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double offdiag_norm(const RMat4& a) {
    double s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

void sort_eigen_ascending(std::array<double, 4>& w, CMat4* vc, RMat4* vr) {
    std::array<int, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
    std::array<double, 4> ws;
    CMat4 vcs;
    RMat4 vrs;
    for (int k = 0; k < 4; ++k) {
        ws[k] = w[idx[k]];
        for (int r = 0; r < 4; ++r) {
            if (vc) vcs(r, k) = (*vc)(r, idx[k]);
            if (vr) vrs(r, k) = (*vr)(r, idx[k]);
        }
    }
    w = ws;
    if (vc) *vc = vcs;
    if (vr) *vr = vrs;
}

} // namespace

HermitianEigen eigh(const CMat4& h, double herm_tol) {
    if (!all_finite(h)) throw NotHermitian("matrix has non-finite entries");
    if (!(frobenius_dist(h, adjoint(h)) <= herm_tol))
        throw NotHermitian("matrix is not Hermitian within tolerance");

    CMat4 a = h;
    // symmetrize away the sub-tolerance skew part
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    CMat4 v = mat4_identity();

    const double scale = std::max(frobenius_norm(a), 1.0);
    for (int sweep = 0; sweep < 60 && offdiag_norm(a) > 1e-15 * scale; ++sweep) {
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const cplx apq = a(p, q);
                const double g = std::abs(apq);
                if (g < 1e-300) continue;
                const cplx u = apq / g;  // unit phase of the pivot
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (app - aqq) / (2.0 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // columns p,q of A and V under the plane rotation
                for (int r = 0; r < 4; ++r) {
                    const cplx arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp + s * std::conj(u) * arq;
                    a(r, q) = -s * u * arp + c * arq;
                    const cplx vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp + s * std::conj(u) * vrq;
                    v(r, q) = -s * u * vrp + c * vrq;
                }
                for (int r = 0; r < 4; ++r) {
                    const cplx apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr + s * u * aqr;
                    a(q, r) = -s * std::conj(u) * apr + c * aqr;
                }
            }
    }

    HermitianEigen out;
    for (int i = 0; i < 4; ++i) out.values[i] = a(i, i).real();
    out.vectors = v;
    sort_eigen_ascending(out.values, &out.vectors, nullptr);
    return out;
}

SymmetricEigen eigh(const RMat4& sym) {
    RMat4 a = sym;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double m = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = a(j, i) = m;
        }
    RMat4 v = rmat4_identity();

    double scale = 1.0;
    for (const double x : a.e) scale = std::max(scale, std::abs(x));
    for (int sweep = 0; sweep < 60 && offdiag_norm(a) > 1e-15 * scale; ++sweep) {
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double zeta = (a(p, p) - a(q, q)) / (2.0 * apq);
                const double t = (zeta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < 4; ++r) {
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp + s * arq;
                    a(r, q) = -s * arp + c * arq;
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp + s * vrq;
                    v(r, q) = -s * vrp + c * vrq;
                }
                for (int r = 0; r < 4; ++r) {
                    const double apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr + s * aqr;
                    a(q, r) = -s * apr + c * aqr;
                }
            }
    }

    SymmetricEigen out;
    for (int i = 0; i < 4; ++i) out.values[i] = a(i, i);
    out.vectors = v;
    sort_eigen_ascending(out.values, nullptr, &out.vectors);
    return out;
}

CMat4 expm_skew(const CMat4& h, double t, double herm_tol) {
    const HermitianEigen eig = eigh(h, herm_tol);
    CMat4 out;
    // V diag(exp(-i w t)) V†
    std::array<cplx, 4> ph;
    for (int k = 0; k < 4; ++k) {
        const double th = -eig.values[k] * t;
        ph[k] = cplx(std::cos(th), std::sin(th));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k)
                s += eig.vectors(i, k) * ph[k] * std::conj(eig.vectors(j, k));
            out(i, j) = s;
        }
    return out;
}

} // namespace gatetime
