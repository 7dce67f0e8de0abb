#pragma once

#include "gatetime/gates.hpp"
#include "gatetime/linalg.hpp"

namespace gatetime {

// Transition matrix from the computational basis to the Bell basis,
// entries in {1, +-i, +-1}/sqrt(2).
const CMat4& bell_q();

// B(U) = Q† U Q together with its real/imaginary split B = B1 + i B2.
struct BellForm {
    CMat4 b;
    RMat4 b1;
    RMat4 b2;
};

BellForm bell_form(const Gate& u);

// m(U) = B(U)^T B(U)  (plain transpose, not the adjoint).
CMat4 m_matrix(const BellForm& bf);

// The four local invariants plus the derived (a, b, c) triple:
// a = Re G1, b = Im G1, c = G2.
struct InvariantSet {
    cplx g1;
    double g2;
    double g3;
    double g4;
    double a;
    double b;
    double c;
};

// G1 = Tr^2(m)/16, G2 = (Tr^2(m) - Tr(m^2))/4 (imaginary residue checked
// then dropped), G3 = det B1, G4 = Tr(B1 B2^T). Throws
// NumericalInconsistency when the G2 residue or the invariant ranges are
// out of bounds.
InvariantSet invariants(const Gate& u);

// Local gates have a real Bell form; this is the operational locality test.
double bell_imag_norm(const Gate& u);
bool is_local(const Gate& u, double local_tol = tol::local);

} // namespace gatetime
