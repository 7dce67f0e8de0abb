#include "gatetime/oracle.hpp"

#include "gatetime/bell.hpp"
#include "gatetime/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace gatetime {

namespace {

using std::numbers::pi;

// The four values a coordinate can take once reduced to [-pi, pi]:
// each carries a Klein-group charge (sign flip, pi offset).
double form_value(int form, double alpha) {
    switch (form) {
        case 0: return alpha;        // ( , )
        case 1: return -alpha;       // (flip, )
        case 2: return pi - alpha;   // (flip, offset)
        default: return alpha - pi;  // ( , offset)
    }
}

int form_sign_bit(int form) { return (form == 1 || form == 2) ? 1 : 0; }
int form_offset_bit(int form) { return (form == 2 || form == 3) ? 1 : 0; }

ClassLabel class_from_parity(int sign_parity, int offset_parity) {
    if (offset_parity == 0)
        return sign_parity == 0 ? ClassLabel::class_i : ClassLabel::class_ii;
    return sign_parity == 0 ? ClassLabel::class_iv : ClassLabel::class_iii;
}

} // namespace

std::array<TableEntry, 64> enumerate_table(const AlphaBeta& ab) {
    std::array<TableEntry, 64> out;
    int n = 0;
    for (int f1 = 0; f1 < 4; ++f1)
        for (int f2 = 0; f2 < 4; ++f2)
            for (int f3 = 0; f3 < 4; ++f3) {
                TableEntry e;
                e.a.a = {form_value(f1, ab.alpha[0]),
                         form_value(f2, ab.alpha[1]),
                         form_value(f3, ab.alpha[2])};
                const int sp =
                    (form_sign_bit(f1) + form_sign_bit(f2) + form_sign_bit(f3)) % 2;
                const int op = (form_offset_bit(f1) + form_offset_bit(f2) +
                                form_offset_bit(f3)) %
                               2;
                e.cls = class_from_parity(sp, op);
                e.row_sum = std::abs(e.a.a[0]) + std::abs(e.a.a[1]) +
                            std::abs(e.a.a[2]);
                out[n++] = e;
            }
    return out;
}

double brute_force_min_time(const Gate& u, const SystemConfig& cfg,
                            double class_eps, double match_tol) {
    const InvariantSet inv = invariants(u);
    const AlphaBeta ab = alpha_beta(solve_cubic(cubic_coeffs(inv)));

    double pc = 1.0, ps = 1.0;
    for (const double b : ab.beta) {
        pc *= std::cos(b);
        ps *= std::sin(b);
    }
    const bool keep_i_ii = std::abs(inv.g3 - pc) <= class_eps;
    const bool keep_iii_iv = std::abs(inv.g3 - ps) <= class_eps;
    if (!keep_i_ii && !keep_iii_iv)
        throw NoCandidateMatches("G3 matches neither family's beta product");

    const std::array<TableEntry, 64> table = enumerate_table(ab);

    double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
    for (int i = 0; i < 64; ++i) {
        const TableEntry& e = table[i];
        const bool fam_i_ii =
            e.cls == ClassLabel::class_i || e.cls == ClassLabel::class_ii;
        if (fam_i_ii && !keep_i_ii) continue;
        if (!fam_i_ii && !keep_iii_iv) continue;
        const InvariantSet ci = invariants(canonical_gate(e.a.a));
        if (std::abs(ci.g1 - inv.g1) > match_tol) continue;
        if (std::abs(ci.g2 - inv.g2) > match_tol) continue;
        if (std::abs(ci.g3 - inv.g3) > match_tol) continue;
        if (std::abs(ci.g4 - inv.g4) > match_tol) continue;
        best = std::min(best, e.row_sum);
    }
    if (!std::isfinite(best))
        throw NoCandidateMatches(
            "no table candidate reproduces the gate's invariants");
    return best / (pi * cfg.j_hz);
}

Gate random_local_dressing(const Gate& u, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Gate k1 = local_gate(haar_su2(rng), haar_su2(rng));
    const Gate k2 = local_gate(haar_su2(rng), haar_su2(rng));
    return validate(k1.matrix() * u.matrix() * k2.matrix());
}

} // namespace gatetime
