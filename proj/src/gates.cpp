#include "gatetime/gates.hpp"

#include "gatetime/bell.hpp"
#include "gatetime/errors.hpp"

#include "json_util.hpp"

#include "json.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gatetime {

namespace {

using std::numbers::pi;
const cplx I_UNIT(0.0, 1.0);

std::string det_message(cplx d) {
    std::ostringstream os;
    os << "determinant (" << d.real() << (d.imag() < 0 ? " - " : " + ")
       << std::abs(d.imag()) << "i) is not 1 within tolerance; "
       << "use normalize_su4 to project onto SU(4)";
    return os.str();
}

} // namespace

Gate validate(const CMat4& raw, double unit_tol, double det_tol) {
    if (!all_finite(raw)) throw NotUnitary("matrix has non-finite entries");
    if (!(unitarity_defect(raw) <= unit_tol))
        throw NotUnitary("matrix is not unitary within tolerance");
    const cplx d = det4(raw);
    if (!(std::abs(d - cplx(1.0)) <= det_tol)) throw NotSpecial(det_message(d));
    return Gate(raw);
}

cplx phase_value(PhaseFactor p) {
    switch (p) {
        case PhaseFactor::plus_one: return cplx(1.0);
        case PhaseFactor::plus_i: return I_UNIT;
        case PhaseFactor::minus_one: return cplx(-1.0);
        case PhaseFactor::minus_i: return -I_UNIT;
    }
    throw UnknownGate("invalid phase factor");
}

std::string_view phase_name(PhaseFactor p) {
    switch (p) {
        case PhaseFactor::plus_one: return "1";
        case PhaseFactor::plus_i: return "i";
        case PhaseFactor::minus_one: return "-1";
        case PhaseFactor::minus_i: return "-i";
    }
    return "?";
}

PhaseFactor parse_phase(std::string_view s) {
    if (s == "1" || s == "+1") return PhaseFactor::plus_one;
    if (s == "i" || s == "+i") return PhaseFactor::plus_i;
    if (s == "-1") return PhaseFactor::minus_one;
    if (s == "-i") return PhaseFactor::minus_i;
    throw UnknownGate("phase must be one of 1, i, -1, -i");
}

SystemConfig make_config(double j_hz) {
    if (!(j_hz > 0.0) || !std::isfinite(j_hz))
        throw FormatError("coupling J must be positive and finite");
    return SystemConfig{j_hz};
}

Su4Normalization normalize_su4(const CMat4& raw, double unit_tol) {
    if (!all_finite(raw)) throw NotUnitary("matrix has non-finite entries");
    if (!(unitarity_defect(raw) <= unit_tol))
        throw NotUnitary("matrix is not unitary within tolerance");
    const cplx d = det4(raw);
    double arg = std::arg(d);
    // A determinant on the negative real axis is the branch cut; resolve it
    // deterministically so a plain controlled-NOT picks up e^{i pi/4}.
    if (std::abs(d.imag()) <= 1e-12 * std::abs(d) && d.real() < 0.0) arg = -pi;
    const double ph = -arg / 4.0;
    const cplx f = std::pow(std::abs(d), -0.25) * cplx(std::cos(ph), std::sin(ph));
    Gate g = validate(f * raw);
    return Su4Normalization{
        g,
        "principal branch of det^{-1/4} fixes one of four phase variants; "
        "minimum time is phase-sensitive"};
}

Gate canonical_gate(const std::array<double, 3>& a) {
    const std::array<double, 4> b{
        (a[0] - a[1] + a[2]) / 2.0, (a[0] + a[1] - a[2]) / 2.0,
        -(a[0] + a[1] + a[2]) / 2.0, (-a[0] + a[1] + a[2]) / 2.0};
    CMat4 d;
    for (int k = 0; k < 4; ++k) d(k, k) = cplx(std::cos(b[k]), std::sin(b[k]));
    const CMat4& q = bell_q();
    return validate(q * d * adjoint(q));
}

Gate named_gate(std::string_view name, PhaseFactor phase) {
    CMat4 m;
    if (name == "identity") {
        m = mat4_identity();
    } else if (name == "cnot") {
        const cplx f(std::cos(pi / 4), std::sin(pi / 4));
        m(0, 0) = f;
        m(1, 1) = f;
        m(2, 3) = f;
        m(3, 2) = f;
    } else if (name == "swap") {
        const cplx f(std::cos(pi / 4), std::sin(pi / 4));
        m(0, 0) = f;
        m(1, 2) = f;
        m(2, 1) = f;
        m(3, 3) = f;
    } else if (name == "sqrtswap") {
        const cplx f(std::cos(pi / 8), std::sin(pi / 8));
        const cplx h0 = f * cplx(0.5, -0.5);
        const cplx h1 = f * cplx(0.5, 0.5);
        m(0, 0) = f;
        m(1, 1) = h0;
        m(1, 2) = h1;
        m(2, 1) = h1;
        m(2, 2) = h0;
        m(3, 3) = f;
    } else if (name.starts_with("canonical(") && name.ends_with(")")) {
        const std::string args(name.substr(10, name.size() - 11));
        std::array<double, 3> a{};
        std::istringstream is(args);
        char c1 = 0, c2 = 0;
        if (!(is >> a[0] >> c1 >> a[1] >> c2 >> a[2]) || c1 != ',' || c2 != ',')
            throw UnknownGate("canonical gate wants canonical(a1,a2,a3)");
        m = canonical_gate(a).matrix();
    } else {
        throw UnknownGate("unknown gate name: " + std::string(name));
    }
    return validate(phase_value(phase) * m);
}

CMat2 haar_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double w, x, y, z, n;
    do {
        w = gauss(rng);
        x = gauss(rng);
        y = gauss(rng);
        z = gauss(rng);
        n = std::sqrt(w * w + x * x + y * y + z * z);
    } while (n < 1e-8);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    // w I + i (x sx + y sy + z sz)
    CMat2 u;
    u(0, 0) = cplx(w, z);
    u(0, 1) = cplx(y, x);
    u(1, 0) = cplx(-y, x);
    u(1, 1) = cplx(w, -z);
    return u;
}

Gate haar_su4(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat4 z;
    for (auto& v : z.e) v = cplx(gauss(rng), gauss(rng));
    // modified Gram-Schmidt on columns, with the R-diagonal phase folded in
    for (int c = 0; c < 4; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cplx ip = 0;
            for (int r = 0; r < 4; ++r) ip += std::conj(z(r, prev)) * z(r, c);
            for (int r = 0; r < 4; ++r) z(r, c) -= ip * z(r, prev);
        }
        double nrm = 0;
        for (int r = 0; r < 4; ++r) nrm += std::norm(z(r, c));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < 4; ++r) z(r, c) /= nrm;
    }
    return normalize_su4(z).gate;
}

Gate local_gate(const CMat2& k1, const CMat2& k2) {
    for (const CMat2* k : {&k1, &k2}) {
        if (!all_finite(*k) || !(unitarity_defect(*k) <= tol::unit))
            throw NotUnitary("local factor is not unitary within tolerance");
        if (!(std::abs(det2(*k) - cplx(1.0)) <= tol::special))
            throw NotSpecial("local factor is not in SU(2)");
    }
    return validate(kron(k1, k2));
}

CMat4 matrix_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrix"))
        throw FormatError("expected an object with a \"matrix\" key");
    return detail::matrix_from_json(j["matrix"]);
}

std::string matrix_to_json_text(const CMat4& m, int indent) {
    nlohmann::ordered_json j;
    j["matrix"] = detail::matrix_to_json(m);
    return j.dump(indent);
}

Gate gate_from_json_text(const std::string& text) {
    return validate(matrix_from_json_text(text));
}

} // namespace gatetime
