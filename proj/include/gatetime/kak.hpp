#pragma once

#include "gatetime/gates.hpp"
#include "gatetime/weyl.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace gatetime {

struct CartanVector {
    std::array<double, 3> a;
};

// Phases of the diagonal Bell form of a canonical gate; sums to 0 mod 2pi.
struct PhaseVector {
    std::array<double, 4> b;
};

PhaseVector phases_from_cartan(const CartanVector& v);

struct CartanFactorization {
    Gate k1;
    CartanVector a;
    Gate k2;
    double reconstruction_error;
};

inline constexpr double reconstruction_tol = 1e-8;

// Constructive Cartan factorization U = K1 [a1,a2,a3] K2 via simultaneous
// real-orthogonal diagonalization of m(U). The seed drives the random
// recombination used to split degenerate spectra. Throws
// DegenerateSpectrum / ReconstructionFailed.
CartanFactorization decompose(const Gate& u, std::uint64_t seed = 0);

// Rewrites the factorization, by explicit local-gate moves, onto a
// minimal-time representative: |a1|+|a2|+|a3| = pi J t* for the class
// decided by `target`. Throws ReconstructionFailed / MoveSetExhausted.
CartanFactorization canonicalize(const CartanFactorization& f,
                                 const ClassificationResult& target);

// {"k1": matrix, "a": [a1,a2,a3], "k2": matrix, "error": real}
std::string factorization_to_json_text(const CartanFactorization& f,
                                       int indent = -1);

} // namespace gatetime
