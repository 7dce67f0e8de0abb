// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything runs at J = 1 Hz so times in seconds equal times in
// units of 1/J.

#include "gatetime/batch.hpp"
#include "gatetime/bell.hpp"
#include "gatetime/gates.hpp"
#include "gatetime/kak.hpp"
#include "gatetime/oracle.hpp"
#include "gatetime/pulse.hpp"
#include "gatetime/weyl.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

using namespace gatetime;
using std::numbers::pi;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] criterion " << number << ": " << title << "\n";
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "[FAIL] criterion " << number << ": " << title << " -- "
                  << e.what() << "\n";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

void require_close(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want << " within " << tol;
        throw std::runtime_error(os.str());
    }
}

Gate dress(const Gate& u, std::mt19937_64& rng) {
    const Gate k1 = local_gate(haar_su2(rng), haar_su2(rng));
    const Gate k2 = local_gate(haar_su2(rng), haar_su2(rng));
    return validate(k1.matrix() * u.matrix() * k2.matrix());
}

double tstar(const Gate& u) { return min_time(u).t_star; }

} // namespace

int main() {
    const SystemConfig cfg = make_config(1.0);

    criterion(1, "identity vs i*identity times and G3 values", [&] {
        require_close(tstar(named_gate("identity")), 0.0, 1e-9, "t*(I4)");
        require_close(tstar(named_gate("identity", PhaseFactor::plus_i)), 1.0,
                      1e-9, "t*(iI4)");
        require_close(invariants(named_gate("identity")).g3, 1.0, 1e-10,
                      "G3(I4)");
        require_close(invariants(named_gate("identity", PhaseFactor::plus_i)).g3,
                      0.0, 1e-10, "G3(iI4)");
    });

    criterion(2, "controlled-NOT time, roots and degenerate label", [&] {
        const Gate cnot = named_gate("cnot");
        require_close(tstar(cnot), 0.5, 1e-9, "t*(CNOT)");
        const auto roots = solve_cubic(cubic_coeffs(invariants(cnot)));
        require_close(roots[0], 1.0, 1e-9, "root 1");
        require_close(roots[1], 0.0, 1e-9, "root 2");
        require_close(roots[2], 0.0, 1e-9, "root 3");
        require(min_time(cnot).label == ClassLabel::time_degenerate_pair,
                "CNOT must classify as the time-degenerate pair");
    });

    criterion(3, "swap times and invariants", [&] {
        const Gate sw = named_gate("swap");
        require_close(tstar(sw), 1.5, 1e-9, "t*(SWAP)");
        require_close(tstar(named_gate("swap", PhaseFactor::plus_i)), 1.5, 1e-9,
                      "t*(iSWAP)");
        const InvariantSet inv = invariants(sw);
        require_close(inv.g1.real(), -1.0, 1e-9, "Re G1");
        require_close(inv.g1.imag(), 0.0, 1e-9, "Im G1");
        require_close(inv.g2, -3.0, 1e-9, "G2");
        require_close(inv.g3, -0.25, 1e-9, "G3");
    });

    criterion(4, "sqrt-swap times and G3 values", [&] {
        require_close(tstar(named_gate("sqrtswap")), 0.75, 1e-9,
                      "t*(sqrt swap)");
        require_close(tstar(named_gate("sqrtswap", PhaseFactor::plus_i)), 1.25,
                      1e-9, "t*(i sqrt swap)");
        const double c = std::cos(pi / 8), s = std::sin(pi / 8);
        require_close(invariants(named_gate("sqrtswap")).g3, c * c * c * s,
                      1e-9, "G3(sqrt swap)");
        require_close(invariants(named_gate("sqrtswap", PhaseFactor::plus_i)).g3,
                      -s * s * s * c, 1e-9, "G3(i sqrt swap)");
    });

    criterion(5, "invariants and t* survive 1000 local dressings", [&] {
        std::mt19937_64 rng(1005);
        for (int b = 0; b < 50; ++b) {
            const Gate u = haar_su4(rng);
            const InvariantSet ref = invariants(u);
            const double t0 = tstar(u);
            for (int d = 0; d < 20; ++d) {
                const Gate v = dress(u, rng);
                const InvariantSet inv = invariants(v);
                require(std::abs(inv.g1 - ref.g1) <= 1e-8, "G1 moved");
                require(std::abs(inv.g2 - ref.g2) <= 1e-8, "G2 moved");
                require(std::abs(inv.g3 - ref.g3) <= 1e-8, "G3 moved");
                require(std::abs(inv.g4 - ref.g4) <= 1e-8, "G4 moved");
                require(std::abs(tstar(v) - t0) <= 1e-8, "t* moved");
            }
        }
    });

    criterion(6, "oracle agreement on 300 gates incl. class sweeps and walls", [&] {
        std::mt19937_64 rng(1006);
        std::uniform_real_distribution<double> mid(0.05, pi / 2 - 0.05);
        std::uniform_real_distribution<double> wall_exp(-4.0, -3.0);
        std::uniform_real_distribution<double> cube(-pi, pi);
        for (int it = 0; it < 300; ++it) {
            Gate u = named_gate("identity");
            switch (it % 5) {
                case 0:
                    u = haar_su4(rng);
                    break;
                case 1:
                    u = dress(canonical_gate({cube(rng), cube(rng), cube(rng)}),
                              rng);
                    break;
                case 2: {  // explicit class representatives I..IV
                    std::array<double, 3> al{mid(rng), mid(rng), mid(rng)};
                    std::sort(al.begin(), al.end(), std::greater<>());
                    std::array<double, 3> a = al;
                    if (it % 4 == 1) a[0] = -al[0];
                    if (it % 4 == 2) a[0] = pi - al[0];
                    if (it % 4 == 3) a[0] = -pi + al[0];
                    u = dress(canonical_gate(a), rng);
                    break;
                }
                default: {  // alpha1 within 1e-3 of the pi/2 wall
                    const double gap = std::pow(10.0, wall_exp(rng));
                    double a2 = mid(rng), a3 = mid(rng);
                    if (a2 < a3) std::swap(a2, a3);
                    u = dress(canonical_gate({pi / 2 - gap, a2, a3}), rng);
                    break;
                }
            }
            const double tw = min_time(u, cfg).t_star_seconds.value();
            const double tb = brute_force_min_time(u, cfg);
            require_close(tw, tb, 1e-7, "analytic vs brute-force time");
        }
    });

    criterion(7, "KAK reconstruction and canonical sums on 500 gates", [&] {
        std::mt19937_64 rng(1007);
        std::vector<Gate> gates;
        for (int it = 0; it < 500; ++it) gates.push_back(haar_su4(rng));
        const auto facs = decompose_batch(gates, 77);
        const auto times = min_time_batch(gates, cfg);
        for (int it = 0; it < 500; ++it) {
            require(facs[it].reconstruction_error <= 1e-8,
                    "reconstruction error above 1e-8");
            const auto c = canonicalize(facs[it], times[it]);
            const double sum =
                std::abs(c.a.a[0]) + std::abs(c.a.a[1]) + std::abs(c.a.a[2]);
            require_close(sum, pi * times[it].t_star, 1e-8,
                          "canonical coordinate sum vs pi J t*");
        }
    });

    criterion(8, "synthesis round-trip on 200 gates", [&] {
        std::mt19937_64 rng(1008);
        for (int it = 0; it < 200; ++it) {
            const Gate u = haar_su4(rng);
            const auto sched = synthesize(u, cfg, it);
            const auto rep = simulate(sched, u);
            require(rep.fidelity >= 1.0 - 1e-9, "fidelity below 1 - 1e-9");
            require(frobenius_dist(rep.achieved, u.matrix()) <= 1e-7,
                    "phase-sensitive residual too large");
            const double t = min_time(u, cfg).t_star_seconds.value();
            require_close(rep.total_drift_seconds, t, 1e-9,
                          "total drift vs t*");
            require(rep.total_drift_seconds >= t - 1e-9,
                    "schedule undercuts the minimum time");
        }
    });

    criterion(9, "global-phase theorems on 200 gates plus the pi/2 wall", [&] {
        std::mt19937_64 rng(1009);
        std::uniform_real_distribution<double> mid(0.1, pi / 2 - 0.1);
        std::uniform_real_distribution<double> jit(0.0, 1e-8);
        for (int it = 0; it < 200; ++it) {
            const Gate u = haar_su4(rng);
            const auto cu = min_time(u);
            require_close(min_time(validate(adjoint(u.matrix()))).t_star,
                          cu.t_star, 1e-7, "t*(U dagger) vs t*(U)");
            require_close(min_time(validate(cplx(-1) * u.matrix())).t_star,
                          cu.t_star, 1e-7, "t*(-U) vs t*(U)");
            const auto ci = min_time(validate(cplx(0, 1) * u.matrix()));
            if (cu.label != ClassLabel::time_degenerate_pair &&
                ci.label != ClassLabel::time_degenerate_pair)
                require(in_family_i_ii(cu.label) == in_family_iii_iv(ci.label),
                        "iU family is not the complement");
            if (std::abs(cu.alphabeta.alpha[0] - pi / 2) <= 1e-8)
                require_close(ci.t_star, cu.t_star, 1e-7, "wall time equality");
        }
        for (int it = 0; it < 40; ++it) {  // gates pinned to the wall
            double a2 = mid(rng), a3 = mid(rng);
            if (a2 < a3) std::swap(a2, a3);
            const Gate u =
                dress(canonical_gate({pi / 2 - jit(rng), a2, a3}), rng);
            const auto cu = min_time(u);
            require(std::abs(cu.alphabeta.alpha[0] - pi / 2) <= 1e-8,
                    "constructed gate missed the wall");
            const auto ci = min_time(validate(cplx(0, 1) * u.matrix()));
            require_close(ci.t_star, cu.t_star, 1e-7, "wall time equality");
        }
    });

    criterion(10, "adjoint relations of the invariants on 200 gates", [&] {
        std::mt19937_64 rng(1010);
        for (int it = 0; it < 200; ++it) {
            const Gate u = haar_su4(rng);
            const InvariantSet a = invariants(u);
            const InvariantSet b = invariants(validate(adjoint(u.matrix())));
            require(std::abs(b.g1 - std::conj(a.g1)) <= 1e-9, "G1 adjoint");
            require(std::abs(b.g2 - a.g2) <= 1e-9, "G2 adjoint");
            require(std::abs(b.g3 - a.g3) <= 1e-9, "G3 adjoint");
            require(std::abs(b.g4 + a.g4) <= 1e-9, "G4 adjoint");
        }
    });

    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
