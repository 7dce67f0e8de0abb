#include "gatetime/pulse.hpp"

#include "gatetime/bell.hpp"
#include "gatetime/errors.hpp"
#include "gatetime/weyl.hpp"
#include "test_support.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace gatetime;
using namespace gatetime::testing;
using std::numbers::pi;

TEST_CASE("empty schedule simulates to the identity") {
    const PulseSchedule s{{}, make_config(1.0)};
    const auto rep = simulate(s, named_gate("identity"));
    CHECK(frobenius_dist(rep.achieved, mat4_identity()) == 0.0);
    CHECK(rep.fidelity == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.total_drift_seconds == 0.0);
}

TEST_CASE("a bare drift of 1/J realizes the -pi zz coordinate") {
    PulseSchedule s{{}, make_config(1.0)};
    s.segments.push_back(Drift{1.0});
    const auto rep = simulate(s);
    CHECK(frobenius_dist(rep.achieved,
                         canonical_gate({0, 0, -pi}).matrix()) < 1e-12);
    const cplx mi(0, -1), pli(0, 1);
    CHECK(frobenius_dist(rep.achieved, diag4(mi, pli, pli, mi)) < 1e-12);
}

TEST_CASE("synthesis of the catalog gates hits the known times") {
    const SystemConfig cfg = make_config(1.0);

    const auto s_id = synthesize(named_gate("identity"), cfg);
    CHECK(s_id.total_drift() == doctest::Approx(0.0).epsilon(1e-12));

    const auto s_cnot = synthesize(named_gate("cnot"), cfg);
    CHECK(s_cnot.total_drift() == doctest::Approx(0.5).epsilon(1e-10));

    const auto s_ii = synthesize(named_gate("identity", PhaseFactor::plus_i), cfg);
    CHECK(s_ii.total_drift() == doctest::Approx(1.0).epsilon(1e-10));

    const auto s_swap = synthesize(named_gate("swap"), cfg);
    CHECK(s_swap.total_drift() == doctest::Approx(1.5).epsilon(1e-10));
    const auto rep = simulate(s_swap, named_gate("swap"));
    CHECK(rep.fidelity >= 1.0 - 1e-9);
    CHECK(frobenius_dist(rep.achieved, named_gate("swap").matrix()) < 1e-10);
}

TEST_CASE("synthesis round-trip on random gates") {
    std::mt19937_64 rng(71);
    const SystemConfig cfg = make_config(2.5);
    for (int it = 0; it < 60; ++it) {
        const Gate u = haar_su4(rng);
        const auto sched = synthesize(u, cfg, it);
        const auto rep = simulate(sched, u);
        CHECK(rep.fidelity >= 1.0 - 1e-9);
        CHECK(frobenius_dist(rep.achieved, u.matrix()) < 1e-9);
        const double t = min_time(u, cfg).t_star_seconds.value();
        CHECK(std::abs(rep.total_drift_seconds - t) < 1e-9);
        CHECK(rep.total_drift_seconds >= t - 1e-9);
        for (const auto& seg : sched.segments)
            if (const auto* lp = std::get_if<LocalPulse>(&seg))
                CHECK(is_local(lp->k));
    }
}

TEST_CASE("schedule JSON round-trips through text") {
    std::mt19937_64 rng(72);
    const Gate u = haar_su4(rng);
    const SystemConfig cfg = make_config(10.0);
    const auto sched = synthesize(u, cfg);
    const std::string text = schedule_to_json_text(sched);
    const PulseSchedule back = schedule_from_json_text(text);
    CHECK(back.config.j_hz == cfg.j_hz);
    CHECK(back.segments.size() == sched.segments.size());
    const auto rep = simulate(back, u);
    CHECK(rep.fidelity >= 1.0 - 1e-9);
    // identical serialization after a round trip
    CHECK(schedule_to_json_text(back) == text);
}

TEST_CASE("schedule reader rejects malformed input") {
    CHECK_THROWS_AS(schedule_from_json_text("{}"), FormatError);
    CHECK_THROWS_AS(
        schedule_from_json_text(
            R"({"J_hz": 1.0, "segments": [{"type": "drift", "seconds": -0.5}]})"),
        FormatError);
    CHECK_THROWS_AS(
        schedule_from_json_text(
            R"({"J_hz": -1.0, "segments": []})"),
        FormatError);
    CHECK_THROWS_AS(
        schedule_from_json_text(
            R"({"J_hz": 1.0, "segments": [{"type": "hold"}]})"),
        FormatError);

    // a swap is unitary but not local, so it cannot appear as a pulse
    nlohmann::json bad;
    bad["J_hz"] = 1.0;
    bad["segments"] = nlohmann::json::array();
    nlohmann::json seg;
    seg["type"] = "local";
    seg["matrix"] = nlohmann::json::parse(
        matrix_to_json_text(named_gate("swap").matrix()))["matrix"];
    bad["segments"].push_back(seg);
    CHECK_THROWS_AS(schedule_from_json_text(bad.dump()), FormatError);
}
