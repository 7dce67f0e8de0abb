#include "gatetime/oracle.hpp"

#include "gatetime/errors.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace gatetime;
using namespace gatetime::testing;
using std::numbers::pi;

namespace {

double family_min(const std::array<TableEntry, 64>& t, bool i_ii) {
    double best = 1e9;
    for (const auto& e : t) {
        const bool f =
            e.cls == ClassLabel::class_i || e.cls == ClassLabel::class_ii;
        if (f == i_ii) best = std::min(best, e.row_sum);
    }
    return best;
}

} // namespace

TEST_CASE("table minima for the example alpha triples") {
    auto t = enumerate_table(alpha_beta({0, 0, 0}));
    CHECK(family_min(t, true) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(family_min(t, false) == doctest::Approx(pi).epsilon(1e-14));

    t = enumerate_table(alpha_beta({1, 0, 0}));
    CHECK(family_min(t, true) == doctest::Approx(pi / 2).epsilon(1e-13));
    CHECK(family_min(t, false) == doctest::Approx(pi / 2).epsilon(1e-13));

    t = enumerate_table(alpha_beta({1, 1, 1}));
    CHECK(family_min(t, true) == doctest::Approx(1.5 * pi).epsilon(1e-13));
    CHECK(family_min(t, false) == doctest::Approx(1.5 * pi).epsilon(1e-13));
}

TEST_CASE("table rows carry the printed representatives") {
    const AlphaBeta ab = alpha_beta({0.9, 0.5, 0.2});
    const auto t = enumerate_table(ab);
    CHECK(t.size() == 64);

    auto find_row = [&](std::array<double, 3> a) -> const TableEntry* {
        for (const auto& e : t) {
            double d = 0;
            for (int k = 0; k < 3; ++k) d += std::abs(e.a.a[k] - a[k]);
            if (d < 1e-12) return &e;
        }
        return nullptr;
    };
    const auto& al = ab.alpha;

    const TableEntry* row = find_row({al[0], al[1], al[2]});
    REQUIRE(row != nullptr);
    CHECK(row->cls == ClassLabel::class_i);
    CHECK(row->row_sum == doctest::Approx(-2 * ab.beta[2]).epsilon(1e-13));

    row = find_row({-al[0], al[1], al[2]});
    REQUIRE(row != nullptr);
    CHECK(row->cls == ClassLabel::class_ii);

    row = find_row({pi - al[0], al[1], al[2]});
    REQUIRE(row != nullptr);
    CHECK(row->cls == ClassLabel::class_iii);
    CHECK(row->row_sum == doctest::Approx(pi + 2 * ab.beta[3]).epsilon(1e-13));

    row = find_row({-pi + al[0], al[1], al[2]});
    REQUIRE(row != nullptr);
    CHECK(row->cls == ClassLabel::class_iv);

    row = find_row({pi - al[0], pi - al[1], al[2]});
    REQUIRE(row != nullptr);
    CHECK(row->cls == ClassLabel::class_i);
    CHECK(row->row_sum ==
          doctest::Approx(2 * pi - 2 * ab.beta[1]).epsilon(1e-13));

    row = find_row({pi - al[0], pi - al[1], pi - al[2]});
    REQUIRE(row != nullptr);
    CHECK(row->cls == ClassLabel::class_iii);
    CHECK(row->row_sum ==
          doctest::Approx(3 * pi + 2 * ab.beta[2]).epsilon(1e-13));
}

TEST_CASE("row sums take the eight family values") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> d(0.05, pi / 2 - 0.05);
    for (int it = 0; it < 20; ++it) {
        std::array<double, 3> al{d(rng), d(rng), d(rng)};
        std::sort(al.begin(), al.end(), std::greater<>());
        std::array<double, 3> roots;
        for (int k = 0; k < 3; ++k) {
            const double s = std::sin(al[k]);
            roots[k] = s * s;
        }
        const AlphaBeta ab = alpha_beta(roots);
        const auto& b = ab.beta;
        const std::array<double, 4> fam_i{-2 * b[2], 2 * pi - 2 * b[1],
                                          2 * pi - 2 * b[0], 2 * pi - 2 * b[3]};
        const std::array<double, 4> fam_iii{pi + 2 * b[3], pi + 2 * b[0],
                                            pi + 2 * b[1], 3 * pi + 2 * b[2]};
        for (const auto& e : enumerate_table(ab)) {
            const bool f =
                e.cls == ClassLabel::class_i || e.cls == ClassLabel::class_ii;
            const auto& fam = f ? fam_i : fam_iii;
            const bool hit = std::any_of(fam.begin(), fam.end(), [&](double v) {
                return std::abs(v - e.row_sum) < 1e-10;
            });
            CHECK(hit);
        }
        // sorted alphas put the family minimum on the first block
        const auto t = enumerate_table(ab);
        CHECK(family_min(t, true) == doctest::Approx(-2 * b[2]).epsilon(1e-12));
        CHECK(family_min(t, false) ==
              doctest::Approx(pi + 2 * b[3]).epsilon(1e-12));
    }
}

TEST_CASE("brute force minimum time on the example gates") {
    const SystemConfig cfg = make_config(1.0);
    CHECK(brute_force_min_time(named_gate("swap"), cfg) ==
          doctest::Approx(1.5).epsilon(1e-10));
    CHECK(brute_force_min_time(named_gate("sqrtswap"), cfg) ==
          doctest::Approx(0.75).epsilon(1e-10));
    CHECK(brute_force_min_time(named_gate("canonical(0,0,0)"), cfg) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("oracle agrees with the analytic minimum time") {
    std::mt19937_64 rng(52);
    const SystemConfig cfg = make_config(1.0);
    for (int it = 0; it < 100; ++it) {
        const Gate u = (it % 3 == 0) ? haar_su4(rng)
                                     : random_canonical_dressed(rng);
        const double tw = min_time(u, cfg).t_star_seconds.value();
        const double tb = brute_force_min_time(u, cfg);
        CHECK(std::abs(tw - tb) < 1e-7);
    }
}

TEST_CASE("local dressing preserves invariants and the oracle time") {
    std::mt19937_64 rng(53);
    const SystemConfig cfg = make_config(1.0);
    for (int it = 0; it < 20; ++it) {
        const Gate u = haar_su4(rng);
        const Gate d = random_local_dressing(u, 1000 + it);
        const InvariantSet iu = invariants(u), idr = invariants(d);
        CHECK(std::abs(iu.g1 - idr.g1) < 1e-8);
        CHECK(std::abs(iu.g2 - idr.g2) < 1e-8);
        CHECK(std::abs(iu.g3 - idr.g3) < 1e-8);
        CHECK(std::abs(iu.g4 - idr.g4) < 1e-8);
        CHECK(std::abs(brute_force_min_time(u, cfg) -
                       brute_force_min_time(d, cfg)) < 1e-7);
    }
    // dressing the identity stays local
    const Gate dressed_id = random_local_dressing(named_gate("identity"), 7);
    CHECK(is_local(dressed_id));
}
