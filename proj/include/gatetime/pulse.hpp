#pragma once

#include "gatetime/gates.hpp"
#include "gatetime/kak.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gatetime {

// Hard pulse: an instantaneous local gate.
struct LocalPulse {
    Gate k;
};

// Free evolution under the drift coupling (pi/2) J sz x sz.
struct Drift {
    double seconds;
};

using Segment = std::variant<LocalPulse, Drift>;

struct PulseSchedule {
    std::vector<Segment> segments;  // applied first-to-last
    SystemConfig config;

    double total_drift() const;
};

// Drift Hamiltonian (pi/2) J sz x sz.
CMat4 drift_hamiltonian(const SystemConfig& cfg);

// Time-optimal hard-pulse schedule for u: local pulses cost nothing, the
// drift runs for exactly t*(u) in total. Throws SynthesisFailed when the
// final verification misses, plus anything the kak stage raises.
PulseSchedule synthesize(const Gate& u, const SystemConfig& cfg,
                         std::uint64_t seed = 0);

struct SimulationReport {
    CMat4 achieved;
    double fidelity;  // |Tr(achieved† target)| / 4, 1.0 when no target given
    double total_drift_seconds;
};

SimulationReport simulate(const PulseSchedule& s,
                          const std::optional<Gate>& target = {});

// {"J_hz": J, "segments": [{"type":"local","matrix":...} |
//                          {"type":"drift","seconds": s}, ...]}
PulseSchedule schedule_from_json_text(const std::string& text);
std::string schedule_to_json_text(const PulseSchedule& s, int indent = -1);

} // namespace gatetime
