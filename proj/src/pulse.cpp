#include "gatetime/pulse.hpp"

#include "gatetime/bell.hpp"
#include "gatetime/errors.hpp"
#include "gatetime/weyl.hpp"
#include "json_util.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gatetime {

namespace {

using std::numbers::pi;
const cplx I_UNIT(0.0, 1.0);

// Coordinates below this are dropped from the schedule outright.
constexpr double coordinate_cutoff = 1e-13;

// exp(-i pi/4 sigma_y): takes sz to sx under conjugation.
CMat2 ry_quarter() {
    const double c = std::sqrt(0.5);
    CMat2 m;
    m(0, 0) = c;
    m(0, 1) = -c;
    m(1, 0) = c;
    m(1, 1) = c;
    return m;
}

// exp(-i pi/4 sigma_x): takes sz to -sy under conjugation.
CMat2 rx_quarter() {
    const double c = std::sqrt(0.5);
    CMat2 m;
    m(0, 0) = c;
    m(0, 1) = -I_UNIT * c;
    m(1, 0) = -I_UNIT * c;
    m(1, 1) = c;
    return m;
}

// c_axis(v) = L_out * drift(|v|/(pi J)) * L_in with both L's local. A bare
// drift of duration tau realizes the zz coordinate -pi J tau, so positive
// coordinates conjugate through i sx x I to flip the sign.
struct AxisConjugators {
    CMat4 in;
    CMat4 out;
};

AxisConjugators axis_conjugators(int axis, double v) {
    CMat4 lin = mat4_identity();
    CMat4 lout = mat4_identity();
    if (v > 0) {
        const CMat4 f = I_UNIT * kron(pauli_x(), mat2_identity());
        lin = f;
        lout = adjoint(f);
    }
    if (axis == 0) {
        const CMat4 rr = kron(ry_quarter(), ry_quarter());
        lin = lin * adjoint(rr);
        lout = rr * lout;
    } else if (axis == 1) {
        const CMat4 rr = kron(rx_quarter(), rx_quarter());
        lin = lin * adjoint(rr);
        lout = rr * lout;
    }
    return {lin, lout};
}

Gate validate_local(const CMat4& m) {
    Gate g = validate(m);
    if (!is_local(g))
        throw SynthesisFailed("emitted pulse is not a local gate");
    return g;
}

} // namespace

double PulseSchedule::total_drift() const {
    double s = 0;
    for (const auto& seg : segments)
        if (const auto* d = std::get_if<Drift>(&seg)) s += d->seconds;
    return s;
}

CMat4 drift_hamiltonian(const SystemConfig& cfg) {
    return cplx(pi / 2.0 * cfg.j_hz) * kron(pauli_z(), pauli_z());
}

PulseSchedule synthesize(const Gate& u, const SystemConfig& cfg,
                         std::uint64_t seed) {
    const ClassificationResult cls = min_time(u, cfg);
    const CartanFactorization fac = canonicalize(decompose(u, seed), cls);

    PulseSchedule sched{{}, cfg};
    CMat4 pending = fac.k2.matrix();
    for (int axis = 0; axis < 3; ++axis) {
        const double v = fac.a.a[axis];
        if (std::abs(v) < coordinate_cutoff) continue;
        const AxisConjugators conj = axis_conjugators(axis, v);
        pending = conj.in * pending;
        sched.segments.push_back(LocalPulse{validate_local(pending)});
        sched.segments.push_back(Drift{std::abs(v) / (pi * cfg.j_hz)});
        pending = conj.out;
    }
    pending = fac.k1.matrix() * pending;
    sched.segments.push_back(LocalPulse{validate_local(pending)});

    const SimulationReport rep = simulate(sched, u);
    // phase-sensitive verification: the residual catches a wrong global
    // phase that the |Tr| fidelity alone would forgive
    const double resid = frobenius_dist(rep.achieved, u.matrix());
    if (rep.fidelity < 1.0 - 1e-9 || resid > 1e-7) {
        std::ostringstream os;
        os << "synthesized schedule misses the target (fidelity "
           << rep.fidelity << ", residual " << resid << ")";
        throw SynthesisFailed(os.str());
    }
    return sched;
}

SimulationReport simulate(const PulseSchedule& s,
                          const std::optional<Gate>& target) {
    const CMat4 hd = drift_hamiltonian(s.config);
    CMat4 acc = mat4_identity();
    double drift = 0;
    for (const auto& seg : s.segments) {
        if (const auto* lp = std::get_if<LocalPulse>(&seg)) {
            acc = lp->k.matrix() * acc;
        } else {
            const double tau = std::get<Drift>(seg).seconds;
            acc = expm_skew(hd, tau) * acc;
            drift += tau;
        }
    }
    SimulationReport rep{acc, 1.0, drift};
    if (target)
        rep.fidelity = std::abs(trace(adjoint(acc) * target->matrix())) / 4.0;
    return rep;
}

PulseSchedule schedule_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("J_hz") || !j.contains("segments"))
        throw FormatError("schedule wants {\"J_hz\": ..., \"segments\": [...]}");
    if (!j["J_hz"].is_number())
        throw FormatError("J_hz must be a number");
    PulseSchedule s{{}, make_config(j["J_hz"].get<double>())};
    if (!j["segments"].is_array())
        throw FormatError("segments must be an array");
    for (const auto& seg : j["segments"]) {
        if (!seg.is_object() || !seg.contains("type"))
            throw FormatError("segment wants a \"type\" key");
        const std::string type = seg["type"].get<std::string>();
        if (type == "local") {
            if (!seg.contains("matrix"))
                throw FormatError("local segment wants a \"matrix\" key");
            Gate g = validate(detail::matrix_from_json(seg["matrix"]));
            if (!is_local(g))
                throw FormatError(
                    "local segment matrix is not a local gate (Bell form has "
                    "imaginary part)");
            s.segments.push_back(LocalPulse{g});
        } else if (type == "drift") {
            if (!seg.contains("seconds") || !seg["seconds"].is_number())
                throw FormatError("drift segment wants a numeric \"seconds\"");
            const double sec = seg["seconds"].get<double>();
            if (!(sec >= 0.0) || !std::isfinite(sec))
                throw FormatError("drift duration must be finite and >= 0");
            s.segments.push_back(Drift{sec});
        } else {
            throw FormatError("segment type must be \"local\" or \"drift\"");
        }
    }
    return s;
}

std::string schedule_to_json_text(const PulseSchedule& s, int indent) {
    nlohmann::ordered_json j;
    j["J_hz"] = s.config.j_hz;
    nlohmann::ordered_json segs = nlohmann::ordered_json::array();
    for (const auto& seg : s.segments) {
        nlohmann::ordered_json o;
        if (const auto* lp = std::get_if<LocalPulse>(&seg)) {
            o["type"] = "local";
            o["matrix"] = detail::matrix_to_json(lp->k.matrix());
        } else {
            o["type"] = "drift";
            o["seconds"] = std::get<Drift>(seg).seconds;
        }
        segs.push_back(o);
    }
    j["segments"] = segs;
    return j.dump(indent);
}

} // namespace gatetime
