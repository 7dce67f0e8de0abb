#include "gatetime/bell.hpp"

#include "gatetime/errors.hpp"

#include <cmath>
#include <sstream>

namespace gatetime {

const CMat4& bell_q() {
    static const CMat4 q = [] {
        const double s = 1.0 / std::sqrt(2.0);
        const cplx is(0.0, s);
        CMat4 m;
        m(0, 0) = s;
        m(0, 3) = is;
        m(1, 1) = is;
        m(1, 2) = s;
        m(2, 1) = is;
        m(2, 2) = -s;
        m(3, 0) = s;
        m(3, 3) = -is;
        return m;
    }();
    return q;
}

BellForm bell_form(const Gate& u) {
    BellForm bf;
    bf.b = adjoint(bell_q()) * u.matrix() * bell_q();
    bf.b1 = real_part(bf.b);
    bf.b2 = imag_part(bf.b);
    return bf;
}

CMat4 m_matrix(const BellForm& bf) { return transpose(bf.b) * bf.b; }

InvariantSet invariants(const Gate& u) {
    const BellForm bf = bell_form(u);
    const CMat4 m = m_matrix(bf);
    const cplx tr = trace(m);
    const cplx tr2 = tr * tr;
    const cplx g1 = tr2 / 16.0;
    const cplx g2c = (tr2 - trace(m * m)) / 4.0;
    if (!(std::abs(g2c.imag()) <= 1e-8)) {
        std::ostringstream os;
        os << "G2 has imaginary residue " << g2c.imag()
           << "; input is not unitary enough";
        throw NumericalInconsistency(os.str());
    }
    InvariantSet inv;
    inv.g1 = g1;
    inv.g2 = g2c.real();
    inv.g3 = det4(bf.b1);
    inv.g4 = trace_of_abt(bf.b1, bf.b2);
    inv.a = g1.real();
    inv.b = g1.imag();
    inv.c = inv.g2;
    if (!(std::abs(inv.g1) <= 1.0 + 1e-8) || !(std::abs(inv.c) <= 3.0 + 1e-8))
        throw NumericalInconsistency("invariants outside the SU(4) range");
    return inv;
}

double bell_imag_norm(const Gate& u) {
    const CMat4 b = adjoint(bell_q()) * u.matrix() * bell_q();
    double s = 0;
    for (const auto& v : b.e) s += v.imag() * v.imag();
    return std::sqrt(s);
}

bool is_local(const Gate& u, double local_tol) {
    return bell_imag_norm(u) <= local_tol;
}

} // namespace gatetime
