#pragma once

#include "gatetime/bell.hpp"
#include "gatetime/gates.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace gatetime {

// x^3 + p x^2 + q x + r whose roots are sin^2(a_k).
struct CubicCoefficients {
    double p;
    double q;
    double r;
};

CubicCoefficients cubic_coeffs(const InvariantSet& inv);

// Three real roots, clamped to [0,1] and sorted descending. Near-multiple
// roots are averaged through their (well-conditioned) symmetric functions
// and near-boundary roots snap onto {0,1}; see solve_cubic's notes in the
// implementation. Throws RootsOutOfRange / ComplexRoots.
std::array<double, 3> solve_cubic(const CubicCoefficients& co);

struct AlphaBeta {
    std::array<double, 3> alpha;  // pi/2 >= a1 >= a2 >= a3 >= 0
    std::array<double, 4> beta;   // half-sum combinations, beta sums to 0
};

// alpha_k = arcsin(sqrt(c_k)) for roots sorted descending.
AlphaBeta alpha_beta(const std::array<double, 3>& roots);

enum class ClassLabel {
    class_i,
    class_ii,
    class_iii,
    class_iv,
    degenerate_i_ii,
    degenerate_iii_iv,
    time_degenerate_pair,
};

std::string_view to_string(ClassLabel c);

// True when the label sits on the {I, II} side (degenerate pair counts for
// both sides).
bool in_family_i_ii(ClassLabel c);
bool in_family_iii_iv(ClassLabel c);

struct ClassificationResult {
    ClassLabel label;
    AlphaBeta alphabeta;
    double t_star;                        // units of 1/J
    std::optional<double> t_star_seconds; // present when a config was given
};

inline constexpr double default_class_tol = 1e-8;

// Decides the class from G3/G4 against the beta products and returns the
// minimum time: -2 beta3 / pi for family {I, II}, (pi + 2 beta4)/pi for
// family {III, IV} (units of 1/J). Throws AmbiguousClass /
// InvalidInvariants.
ClassificationResult classify(const InvariantSet& inv, const AlphaBeta& ab,
                              const std::optional<SystemConfig>& cfg = {},
                              double eps = default_class_tol);

// invariants -> cubic_coeffs -> solve_cubic -> alpha_beta -> classify.
ClassificationResult min_time(const Gate& u,
                              const std::optional<SystemConfig>& cfg = {},
                              double eps = default_class_tol);

} // namespace gatetime
