#include "gatetime/batch.hpp"

#include <exception>
#include <stdexcept>

namespace gatetime {

namespace {

// Runs fn(i) over [0, n) in parallel, carrying the first exception out of
// the parallel region instead of terminating.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

} // namespace

std::vector<InvariantSet> invariants_batch(std::span<const Gate> gates) {
    std::vector<InvariantSet> out(gates.size());
    parallel_for(gates.size(), [&](std::size_t i) { out[i] = invariants(gates[i]); });
    return out;
}

std::vector<InvariantSet> invariants_batch_serial(std::span<const Gate> gates) {
    std::vector<InvariantSet> out;
    out.reserve(gates.size());
    for (const Gate& g : gates) out.push_back(invariants(g));
    return out;
}

std::vector<ClassificationResult> min_time_batch(
    std::span<const Gate> gates, const std::optional<SystemConfig>& cfg) {
    std::vector<ClassificationResult> out(gates.size());
    parallel_for(gates.size(),
                 [&](std::size_t i) { out[i] = min_time(gates[i], cfg); });
    return out;
}

std::vector<ClassificationResult> min_time_batch_serial(
    std::span<const Gate> gates, const std::optional<SystemConfig>& cfg) {
    std::vector<ClassificationResult> out;
    out.reserve(gates.size());
    for (const Gate& g : gates) out.push_back(min_time(g, cfg));
    return out;
}

std::vector<CartanFactorization> decompose_batch(std::span<const Gate> gates,
                                                 std::uint64_t seed) {
    std::vector<std::optional<CartanFactorization>> tmp(gates.size());
    parallel_for(gates.size(), [&](std::size_t i) {
        tmp[i].emplace(decompose(gates[i], seed + i));
    });
    std::vector<CartanFactorization> out;
    out.reserve(gates.size());
    for (auto& t : tmp) out.push_back(std::move(*t));
    return out;
}

std::vector<CartanFactorization> decompose_batch_serial(
    std::span<const Gate> gates, std::uint64_t seed) {
    std::vector<CartanFactorization> out;
    out.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i)
        out.push_back(decompose(gates[i], seed + i));
    return out;
}

} // namespace gatetime
