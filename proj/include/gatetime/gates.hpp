#pragma once

#include "gatetime/linalg.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace gatetime {

// A validated element of SU(4). Construction goes through validate() or
// normalize_su4(); gates are never silently renormalized.
class Gate {
  public:
    const CMat4& matrix() const { return u_; }

    friend Gate validate(const CMat4& raw, double unit_tol, double det_tol);

  private:
    explicit Gate(const CMat4& u) : u_(u) {}
    CMat4 u_;
};

// Checks unitarity and |det - 1| and wraps the matrix. Throws NotUnitary
// or NotSpecial (the latter reports the determinant and points at
// normalize_su4).
Gate validate(const CMat4& raw, double unit_tol = tol::unit,
              double det_tol = tol::special);

// Fourth roots of unity: the only global phases that stay inside SU(4).
enum class PhaseFactor { plus_one, plus_i, minus_one, minus_i };

cplx phase_value(PhaseFactor p);
std::string_view phase_name(PhaseFactor p);
PhaseFactor parse_phase(std::string_view s);  // "1", "i", "-1", "-i"
inline constexpr std::array<PhaseFactor, 4> all_phases{
    PhaseFactor::plus_one, PhaseFactor::plus_i, PhaseFactor::minus_one,
    PhaseFactor::minus_i};

// Coupling strength between the two spins, in Hz.
struct SystemConfig {
    double j_hz;
};
SystemConfig make_config(double j_hz);  // validates J > 0 and finite

struct Su4Normalization {
    Gate gate;
    // The principal-branch projection fixes one of four phase variants;
    // minimum implementation time depends on which one.
    std::string note;
};

// Multiplies by det(raw)^{-1/4} (principal branch; the negative real axis
// resolves to the +pi/4 phase) so the result lands in SU(4).
Su4Normalization normalize_su4(const CMat4& raw, double unit_tol = tol::unit);

// exp{(i/2)(a1 XX + a2 YY + a3 ZZ)}, evaluated in closed form through the
// Bell basis where the generator is diagonal.
Gate canonical_gate(const std::array<double, 3>& a);

// Catalog gates with their exact global phases. Accepted names: identity,
// cnot, swap, sqrtswap, canonical(a1,a2,a3). Throws UnknownGate.
Gate named_gate(std::string_view name,
                PhaseFactor phase = PhaseFactor::plus_one);

// Haar-distributed SU(2) element (unit quaternion from four Gaussian
// deviates).
CMat2 haar_su2(std::mt19937_64& rng);

// Haar-distributed SU(4) element: Ginibre matrix, Gram-Schmidt, phase fix,
// then the principal det^{-1/4} projection.
Gate haar_su4(std::mt19937_64& rng);

// kron(k1, k2) for k1, k2 in SU(2). Throws NotUnitary / NotSpecial.
Gate local_gate(const CMat2& k1, const CMat2& k2);

// Gate matrix file format: {"matrix": [[[re,im] x4] x4]}, row-major.
CMat4 matrix_from_json_text(const std::string& text);
std::string matrix_to_json_text(const CMat4& m, int indent = -1);
Gate gate_from_json_text(const std::string& text);

} // namespace gatetime
