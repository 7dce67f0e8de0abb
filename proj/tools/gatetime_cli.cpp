// Command-line frontend: classify two-qubit gates, compute minimum
// implementation times, factorize, and synthesize/simulate pulse schedules.

#include "gatetime/batch.hpp"
#include "gatetime/bell.hpp"
#include "gatetime/errors.hpp"
#include "gatetime/gates.hpp"
#include "gatetime/kak.hpp"
#include "gatetime/oracle.hpp"
#include "gatetime/pulse.hpp"
#include "gatetime/weyl.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

using namespace gatetime;
using json = nlohmann::ordered_json;
using std::numbers::pi;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_args = 2;
constexpr int exit_gate = 3;
constexpr int exit_numeric = 4;

struct Options {
    std::string gate_name;
    std::string matrix_file;
    std::string phase = "1";
    bool normalize = false;
    double j_hz = 0.0;       // 0 means "not set"
    double class_tol = default_class_tol;
    bool json_output = false;
    std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// 12 significant digits, in radians and as a multiple of pi.
std::string fmt_angle(double x) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g rad (%.12g pi)", x, x / pi);
    return buf;
}

std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Gate load_gate(const Options& opt) {
    if (!opt.gate_name.empty() && !opt.matrix_file.empty())
        throw FormatError("give either --gate or --matrix-file, not both");
    if (opt.gate_name.empty() && opt.matrix_file.empty())
        throw FormatError("a gate source is required (--gate or --matrix-file)");
    if (!opt.gate_name.empty())
        return named_gate(opt.gate_name, parse_phase(opt.phase));
    const CMat4 m = matrix_from_json_text(read_file(opt.matrix_file));
    const CMat4 phased = phase_value(parse_phase(opt.phase)) * m;
    if (opt.normalize) return normalize_su4(phased).gate;
    return validate(phased);
}

std::optional<SystemConfig> config_from(const Options& opt) {
    if (opt.j_hz > 0.0) return make_config(opt.j_hz);
    if (const char* env = std::getenv("GATETIME_J")) {
        const double j = std::atof(env);
        if (j > 0.0) return make_config(j);
    }
    return std::nullopt;
}

json invariants_json(const InvariantSet& inv) {
    json j;
    j["G1"] = {{"re", inv.g1.real()}, {"im", inv.g1.imag()}};
    j["G2"] = inv.g2;
    j["G3"] = inv.g3;
    j["G4"] = inv.g4;
    j["abc"] = {inv.a, inv.b, inv.c};
    return j;
}

json classification_json(const Gate& u, const std::optional<SystemConfig>& cfg,
                         double eps) {
    const InvariantSet inv = invariants(u);
    const CubicCoefficients co = cubic_coeffs(inv);
    const auto roots = solve_cubic(co);
    const AlphaBeta ab = alpha_beta(roots);
    const ClassificationResult res = classify(inv, ab, cfg, eps);
    json j;
    j["invariants"] = invariants_json(inv);
    j["cubic"] = {{"p", co.p}, {"q", co.q}, {"r", co.r}};
    j["roots_sin2"] = roots;
    j["alpha"] = res.alphabeta.alpha;
    j["beta"] = res.alphabeta.beta;
    j["class"] = std::string(to_string(res.label));
    j["t_star_inv_J"] = res.t_star;
    if (res.t_star_seconds) j["t_star_seconds"] = *res.t_star_seconds;
    return j;
}

void print_classification_text(const Gate& u,
                               const std::optional<SystemConfig>& cfg,
                               double eps) {
    const InvariantSet inv = invariants(u);
    const CubicCoefficients co = cubic_coeffs(inv);
    const auto roots = solve_cubic(co);
    const AlphaBeta ab = alpha_beta(roots);
    const ClassificationResult res = classify(inv, ab, cfg, eps);
    std::cout << "invariants:\n"
              << "  G1 = " << fmt_g(inv.g1.real()) << " + " << fmt_g(inv.g1.imag())
              << " i\n"
              << "  G2 = " << fmt_g(inv.g2) << "\n"
              << "  G3 = " << fmt_g(inv.g3) << "\n"
              << "  G4 = " << fmt_g(inv.g4) << "\n";
    std::cout << "cubic x^3 + p x^2 + q x + r:\n  p = " << fmt_g(co.p)
              << ", q = " << fmt_g(co.q) << ", r = " << fmt_g(co.r) << "\n";
    std::cout << "roots sin^2(a_k): " << fmt_g(roots[0]) << ", "
              << fmt_g(roots[1]) << ", " << fmt_g(roots[2]) << "\n";
    std::cout << "alpha:\n";
    for (const double a : res.alphabeta.alpha)
        std::cout << "  " << fmt_angle(a) << "\n";
    std::cout << "beta:\n";
    for (const double b : res.alphabeta.beta)
        std::cout << "  " << fmt_angle(b) << "\n";
    std::cout << "class: " << to_string(res.label) << "\n";
    std::cout << "t* = " << fmt_g(res.t_star) << " (units of 1/J)\n";
    if (res.t_star_seconds)
        std::cout << "t* = " << fmt_g(*res.t_star_seconds) << " s\n";
}

int dispatch(const std::string& cmd, const Options& opt,
             const std::string& schedule_file, const std::string& out_file) {
    const std::optional<SystemConfig> cfg = config_from(opt);

    if (cmd == "invariants") {
        const Gate u = load_gate(opt);
        const InvariantSet inv = invariants(u);
        if (opt.json_output) {
            std::cout << invariants_json(inv).dump(2) << "\n";
        } else {
            std::cout << "G1 = " << fmt_g(inv.g1.real()) << " + "
                      << fmt_g(inv.g1.imag()) << " i\n"
                      << "G2 = " << fmt_g(inv.g2) << "\n"
                      << "G3 = " << fmt_g(inv.g3) << "\n"
                      << "G4 = " << fmt_g(inv.g4) << "\n";
        }
        return exit_ok;
    }

    if (cmd == "classify" || cmd == "mintime") {
        const Gate u = load_gate(opt);
        if (opt.json_output) {
            std::cout << classification_json(u, cfg, opt.class_tol).dump(2)
                      << "\n";
        } else if (cmd == "classify") {
            print_classification_text(u, cfg, opt.class_tol);
        } else {
            const ClassificationResult res = min_time(u, cfg, opt.class_tol);
            std::cout << "class: " << to_string(res.label) << "\n"
                      << "t* = " << fmt_g(res.t_star) << " (units of 1/J)\n";
            if (res.t_star_seconds)
                std::cout << "t* = " << fmt_g(*res.t_star_seconds) << " s\n";
        }
        return exit_ok;
    }

    if (cmd == "kak") {
        const Gate u = load_gate(opt);
        const ClassificationResult cls = min_time(u, cfg, opt.class_tol);
        const CartanFactorization fac =
            canonicalize(decompose(u, opt.seed), cls);
        if (opt.json_output) {
            std::cout << factorization_to_json_text(fac, 2) << "\n";
        } else {
            std::cout << "cartan coordinates:\n";
            for (const double a : fac.a.a)
                std::cout << "  " << fmt_angle(a) << "\n";
            std::cout << "|a1|+|a2|+|a3| = "
                      << fmt_g(std::abs(fac.a.a[0]) + std::abs(fac.a.a[1]) +
                               std::abs(fac.a.a[2]))
                      << " = pi * " << fmt_g(cls.t_star) << "\n";
            std::cout << "reconstruction error = "
                      << fmt_g(fac.reconstruction_error) << "\n";
            std::cout << "k1 = " << matrix_to_json_text(fac.k1.matrix()) << "\n";
            std::cout << "k2 = " << matrix_to_json_text(fac.k2.matrix()) << "\n";
        }
        return exit_ok;
    }

    if (cmd == "synth") {
        if (!cfg) throw FormatError("synth needs --J (or GATETIME_J)");
        const Gate u = load_gate(opt);
        const PulseSchedule sched = synthesize(u, *cfg, opt.seed);
        const std::string text = schedule_to_json_text(sched, 2);
        if (out_file.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream out(out_file);
            if (!out) throw FormatError("cannot write file: " + out_file);
            out << text << "\n";
        }
        return exit_ok;
    }

    if (cmd == "simulate") {
        if (schedule_file.empty())
            throw FormatError("simulate needs --schedule FILE");
        const PulseSchedule sched =
            schedule_from_json_text(read_file(schedule_file));
        std::optional<Gate> target;
        if (!opt.gate_name.empty() || !opt.matrix_file.empty())
            target = load_gate(opt);
        const SimulationReport rep = simulate(sched, target);
        if (opt.json_output) {
            json j;
            j["J_hz"] = sched.config.j_hz;
            j["total_drift_seconds"] = rep.total_drift_seconds;
            if (target) j["fidelity"] = rep.fidelity;
            j["achieved"] =
                json::parse(matrix_to_json_text(rep.achieved))["matrix"];
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "total drift = " << fmt_g(rep.total_drift_seconds)
                      << " s\n";
            if (target) std::cout << "fidelity = " << fmt_g(rep.fidelity) << "\n";
            std::cout << "achieved = " << matrix_to_json_text(rep.achieved)
                      << "\n";
        }
        return exit_ok;
    }

    if (cmd == "phase-scan") {
        Options base = opt;
        json rows = json::array();
        for (const PhaseFactor p : all_phases) {
            base.phase = phase_name(p);
            const Gate u = load_gate(base);
            const ClassificationResult res = min_time(u, cfg, opt.class_tol);
            json row;
            row["phase"] = std::string(phase_name(p));
            row["class"] = std::string(to_string(res.label));
            row["t_star_inv_J"] = res.t_star;
            if (res.t_star_seconds) row["t_star_seconds"] = *res.t_star_seconds;
            rows.push_back(row);
        }
        if (opt.json_output) {
            json j;
            j["phase_scan"] = rows;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& row : rows)
                std::cout << "phase " << row["phase"].get<std::string>()
                          << ":  class " << row["class"].get<std::string>()
                          << ",  t* = " << fmt_g(row["t_star_inv_J"].get<double>())
                          << " (units of 1/J)\n";
        }
        return exit_ok;
    }

    if (cmd == "oracle-check") {
        const Gate u = load_gate(opt);
        const SystemConfig c = cfg.value_or(make_config(1.0));
        const double tw = min_time(u, c, opt.class_tol).t_star_seconds.value();
        const double tb = brute_force_min_time(u, c, opt.class_tol);
        const bool agree = std::abs(tw - tb) <= 1e-7;
        if (opt.json_output) {
            json j;
            j["t_star_seconds"] = tw;
            j["brute_force_seconds"] = tb;
            j["difference"] = std::abs(tw - tb);
            j["agree"] = agree;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "analytic    t* = " << fmt_g(tw) << " s\n"
                      << "brute force t* = " << fmt_g(tb) << " s\n"
                      << (agree ? "agreement within 1e-7\n"
                                : "DISAGREEMENT beyond 1e-7\n");
        }
        return agree ? exit_ok : exit_numeric;
    }

    throw FormatError("unknown command: " + cmd);
}

int classify_exception(const std::exception& e, bool json_output) {
    int code = exit_numeric;
    std::string type = "Error";
    if (dynamic_cast<const NotUnitary*>(&e)) { code = exit_gate; type = "NotUnitary"; }
    else if (dynamic_cast<const NotSpecial*>(&e)) { code = exit_gate; type = "NotSpecial"; }
    else if (dynamic_cast<const UnknownGate*>(&e)) { code = exit_gate; type = "UnknownGate"; }
    else if (dynamic_cast<const FormatError*>(&e)) { code = exit_args; type = "FormatError"; }
    else if (dynamic_cast<const NotHermitian*>(&e)) { type = "NotHermitian"; }
    else if (dynamic_cast<const NumericalInconsistency*>(&e)) { type = "NumericalInconsistency"; }
    else if (dynamic_cast<const RootsOutOfRange*>(&e)) { type = "RootsOutOfRange"; }
    else if (dynamic_cast<const ComplexRoots*>(&e)) { type = "ComplexRoots"; }
    else if (dynamic_cast<const AmbiguousClass*>(&e)) { type = "AmbiguousClass"; }
    else if (dynamic_cast<const InvalidInvariants*>(&e)) { type = "InvalidInvariants"; }
    else if (dynamic_cast<const DegenerateSpectrum*>(&e)) { type = "DegenerateSpectrum"; }
    else if (dynamic_cast<const ReconstructionFailed*>(&e)) { type = "ReconstructionFailed"; }
    else if (dynamic_cast<const MoveSetExhausted*>(&e)) { type = "MoveSetExhausted"; }
    else if (dynamic_cast<const SynthesisFailed*>(&e)) { type = "SynthesisFailed"; }
    else if (dynamic_cast<const NoCandidateMatches*>(&e)) { type = "NoCandidateMatches"; }
    else { code = exit_args; }

    if (json_output) {
        json j;
        j["error"] = {{"type", type}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error (" << type << "): " << e.what() << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "two-qubit gate classification, minimum implementation time, Cartan "
        "factorization and time-optimal pulse synthesis for a J-coupled spin "
        "pair"};
    app.require_subcommand(1);

    Options opt;
    std::string schedule_file;
    std::string out_file;

    const std::vector<std::string> commands{
        "invariants", "classify", "mintime",    "kak",
        "synth",      "simulate", "phase-scan", "oracle-check"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--gate", opt.gate_name,
                        "named gate: identity, cnot, swap, sqrtswap, "
                        "canonical(a1,a2,a3)");
        sub->add_option("--matrix-file", opt.matrix_file,
                        "JSON file {\"matrix\": [[[re,im] x4] x4]}");
        sub->add_option("--phase", opt.phase, "global phase: 1, i, -1, -i");
        sub->add_flag("--normalize", opt.normalize,
                      "project a matrix-file gate onto SU(4) first");
        sub->add_option("--J", opt.j_hz, "coupling strength in Hz");
        sub->add_option("--class-tol", opt.class_tol,
                        "tolerance for the class decision");
        sub->add_flag("--json", opt.json_output, "machine-readable output");
        sub->add_option("--seed", opt.seed, "seed for randomized internals");
        if (name == "simulate")
            sub->add_option("--schedule", schedule_file, "schedule JSON file");
        if (name == "synth")
            sub->add_option("--out", out_file, "write the schedule here");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_args;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt,
                        schedule_file, out_file);
    } catch (const std::exception& e) {
        return classify_exception(e, opt.json_output);
    }
}
