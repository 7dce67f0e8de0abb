#include "gatetime/weyl.hpp"

#include "gatetime/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gatetime {

namespace {

using std::numbers::pi;

// Roots may poke out of [0,1] by at most this much before we refuse.
constexpr double root_clamp_window = 1e-7;
// Roots closer together than this are treated as a multiple root and
// replaced by their mean: the mean comes from the elementary symmetric
// functions and stays accurate where the individual roots lose up to
// ~sqrt(eps).
constexpr double cluster_window = 1e-6;
// Roots this close to {0,1} snap onto the boundary, so gates sitting
// exactly on a chamber wall come out exact.
constexpr double boundary_snap_window = 2e-14;
// Discriminants above this are handled by Cardano plus deflation.
constexpr double cardano_disc_window = 1e-12;
// Tolerated sum difference between the two family times before a
// double G3 match is declared time-degenerate.
constexpr double wall_time_tol = 1e-6;

} // namespace

CubicCoefficients cubic_coeffs(const InvariantSet& inv) {
    const double s = std::hypot(inv.a, inv.b);
    CubicCoefficients co;
    co.p = -(1.0 + (1.0 - inv.c) / 2.0);
    co.q = s + (1.0 - inv.c) / 2.0;
    co.r = -0.5 * (s - inv.a);
    return co;
}

std::array<double, 3> solve_cubic(const CubicCoefficients& co) {
    const double p = co.p, q = co.q, r = co.r;
    const double P = q - p * p / 3.0;
    const double Q = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    const double disc = (Q / 2.0) * (Q / 2.0) + (P / 3.0) * (P / 3.0) * (P / 3.0);

    std::array<double, 3> x;
    if (disc > cardano_disc_window) {
        // one real root, the deflated quadratic carries the rest
        const double sq = std::sqrt(disc);
        const double y1 = std::cbrt(-Q / 2.0 + sq) + std::cbrt(-Q / 2.0 - sq);
        const double x1 = y1 - p / 3.0;
        const double b1 = p + x1;
        const double b0 = q + b1 * x1;
        const double d2 = b1 * b1 - 4.0 * b0;
        if (d2 < 0.0) {
            const double im = std::sqrt(-d2) / 2.0;
            if (im > 1e-7) {
                std::ostringstream os;
                os << "cubic has complex roots (imaginary part " << im
                   << "); invariants are not from a valid gate";
                throw ComplexRoots(os.str());
            }
            x = {x1, -b1 / 2.0, -b1 / 2.0};
        } else {
            const double sq2 = std::sqrt(d2);
            x = {x1, (-b1 + sq2) / 2.0, (-b1 - sq2) / 2.0};
        }
    } else {
        // three real roots: trigonometric form on the depressed cubic
        if (-P / 3.0 <= 0.0) {
            x = {-p / 3.0, -p / 3.0, -p / 3.0};
        } else {
            const double m = 2.0 * std::sqrt(-P / 3.0);
            const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
            const double phi = std::acos(arg);
            for (int k = 0; k < 3; ++k)
                x[k] = m * std::cos((phi - 2.0 * pi * k) / 3.0) - p / 3.0;
        }
    }

    std::sort(x.begin(), x.end(), std::greater<>());
    for (const double v : x) {
        if (v < -root_clamp_window || v > 1.0 + root_clamp_window) {
            std::ostringstream os;
            os << "cubic root " << v << " outside [0,1] beyond the clamp window";
            throw RootsOutOfRange(os.str());
        }
    }

    // collapse near-multiple roots onto their mean before clamping, so a
    // symmetric split does not get truncated one-sidedly
    if (x[0] - x[2] < cluster_window) {
        const double m = (x[0] + x[1] + x[2]) / 3.0;
        x = {m, m, m};
    } else if (x[0] - x[1] < cluster_window) {
        const double m = (x[0] + x[1]) / 2.0;
        x[0] = x[1] = m;
    } else if (x[1] - x[2] < cluster_window) {
        const double m = (x[1] + x[2]) / 2.0;
        x[1] = x[2] = m;
    }

    for (double& v : x) {
        if (std::abs(v) < boundary_snap_window) v = 0.0;
        if (std::abs(v - 1.0) < boundary_snap_window) v = 1.0;
        v = std::clamp(v, 0.0, 1.0);
    }
    return x;
}

AlphaBeta alpha_beta(const std::array<double, 3>& roots) {
    AlphaBeta ab;
    for (int k = 0; k < 3; ++k) {
        const double c = std::clamp(roots[k], 0.0, 1.0);
        ab.alpha[k] = std::asin(std::sqrt(c));
    }
    const auto& a = ab.alpha;
    ab.beta = {(a[0] - a[1] + a[2]) / 2.0, (a[0] + a[1] - a[2]) / 2.0,
               -(a[0] + a[1] + a[2]) / 2.0, (-a[0] + a[1] + a[2]) / 2.0};
    return ab;
}

std::string_view to_string(ClassLabel c) {
    switch (c) {
        case ClassLabel::class_i: return "I";
        case ClassLabel::class_ii: return "II";
        case ClassLabel::class_iii: return "III";
        case ClassLabel::class_iv: return "IV";
        case ClassLabel::degenerate_i_ii: return "I/II-degenerate";
        case ClassLabel::degenerate_iii_iv: return "III/IV-degenerate";
        case ClassLabel::time_degenerate_pair: return "time-degenerate-pair";
    }
    return "?";
}

bool in_family_i_ii(ClassLabel c) {
    return c == ClassLabel::class_i || c == ClassLabel::class_ii ||
           c == ClassLabel::degenerate_i_ii ||
           c == ClassLabel::time_degenerate_pair;
}

bool in_family_iii_iv(ClassLabel c) {
    return c == ClassLabel::class_iii || c == ClassLabel::class_iv ||
           c == ClassLabel::degenerate_iii_iv ||
           c == ClassLabel::time_degenerate_pair;
}

namespace {

ClassLabel sub_label(bool family_i_ii, double g4, double s, double eps) {
    const double d_plus = std::abs(g4 - s);
    const double d_minus = std::abs(g4 + s);
    if (d_plus <= eps && d_minus <= eps)
        return family_i_ii ? ClassLabel::degenerate_i_ii
                           : ClassLabel::degenerate_iii_iv;
    if (d_plus <= eps)
        return family_i_ii ? ClassLabel::class_i : ClassLabel::class_iii;
    if (d_minus <= eps)
        return family_i_ii ? ClassLabel::class_ii : ClassLabel::class_iv;
    std::ostringstream os;
    os << "G4 matches neither +/- the sin(2 beta) half-sum: |G4-S|=" << d_plus
       << ", |G4+S|=" << d_minus;
    throw InvalidInvariants(os.str());
}

} // namespace

ClassificationResult classify(const InvariantSet& inv, const AlphaBeta& ab,
                              const std::optional<SystemConfig>& cfg,
                              double eps) {
    double pc = 1.0, ps = 1.0, s2 = 0.0;
    for (const double b : ab.beta) {
        pc *= std::cos(b);
        ps *= std::sin(b);
        s2 += std::sin(2.0 * b);
    }
    const double s = 0.5 * s2;

    const double dc = std::abs(inv.g3 - pc);
    const double ds = std::abs(inv.g3 - ps);
    const double sum_i_ii = -2.0 * ab.beta[2];
    const double sum_iii_iv = pi + 2.0 * ab.beta[3];

    ClassificationResult res;
    res.alphabeta = ab;

    const bool match_c = dc <= eps;
    const bool match_s = ds <= eps;
    if (match_c && match_s) {
        if (std::abs(sum_i_ii - sum_iii_iv) <= wall_time_tol) {
            res.label = ClassLabel::time_degenerate_pair;
            res.t_star = sum_i_ii / pi;
        } else if (dc < ds) {
            res.label = sub_label(true, inv.g4, s, eps);
            res.t_star = sum_i_ii / pi;
        } else if (ds < dc) {
            res.label = sub_label(false, inv.g4, s, eps);
            res.t_star = sum_iii_iv / pi;
        } else {
            std::ostringstream os;
            os << "G3 matches both beta products equally (|G3-Pc|=" << dc
               << ", |G3-Ps|=" << ds << ") but the family times differ";
            throw AmbiguousClass(os.str());
        }
    } else if (match_c) {
        res.label = sub_label(true, inv.g4, s, eps);
        res.t_star = sum_i_ii / pi;
    } else if (match_s) {
        res.label = sub_label(false, inv.g4, s, eps);
        res.t_star = sum_iii_iv / pi;
    } else {
        std::ostringstream os;
        os << "G3 matches neither beta product: |G3-Pc|=" << dc
           << ", |G3-Ps|=" << ds << " (tolerance " << eps << ")";
        throw InvalidInvariants(os.str());
    }

    if (cfg) res.t_star_seconds = res.t_star / cfg->j_hz;
    return res;
}

ClassificationResult min_time(const Gate& u,
                              const std::optional<SystemConfig>& cfg,
                              double eps) {
    const InvariantSet inv = invariants(u);
    const AlphaBeta ab = alpha_beta(solve_cubic(cubic_coeffs(inv)));
    return classify(inv, ab, cfg, eps);
}

} // namespace gatetime
