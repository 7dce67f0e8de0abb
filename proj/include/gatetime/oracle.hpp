#pragma once

#include "gatetime/gates.hpp"
#include "gatetime/kak.hpp"
#include "gatetime/weyl.hpp"

#include <array>
#include <cstdint>

namespace gatetime {

// One of the 64 candidate coordinate triples for fixed (G1, G2).
struct TableEntry {
    CartanVector a;
    ClassLabel cls;  // one of I..IV
    double row_sum;  // |a1| + |a2| + |a3|
};

// Materializes all 64 candidates: each coordinate independently takes one
// of {alpha, -alpha, pi-alpha, -pi+alpha}; the class follows from how many
// pi-offsets and sign flips the triple carries.
std::array<TableEntry, 64> enumerate_table(const AlphaBeta& ab);

// Exhaustive minimum: enumerate the 64 candidates, keep the families
// consistent with G3, verify each survivor by comparing the invariants of
// its canonical gate against the input, and take the smallest row sum.
// Returns seconds. Throws NoCandidateMatches.
double brute_force_min_time(const Gate& u, const SystemConfig& cfg,
                            double class_eps = default_class_tol,
                            double match_tol = 1e-7);

// K1 u K2 with fresh Haar-random local factors.
Gate random_local_dressing(const Gate& u, std::uint64_t seed);

} // namespace gatetime
