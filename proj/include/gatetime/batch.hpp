#pragma once

#include "gatetime/bell.hpp"
#include "gatetime/kak.hpp"
#include "gatetime/weyl.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gatetime {

// OpenMP-parallel kernels over independent gates. Each kernel has a serial
// twin that runs the identical per-gate code on one thread; the twins are
// the reference implementations the tests compare against, and the bench
// tool reports the throughput of both.

std::vector<InvariantSet> invariants_batch(std::span<const Gate> gates);
std::vector<InvariantSet> invariants_batch_serial(std::span<const Gate> gates);

std::vector<ClassificationResult> min_time_batch(
    std::span<const Gate> gates, const std::optional<SystemConfig>& cfg = {});
std::vector<ClassificationResult> min_time_batch_serial(
    std::span<const Gate> gates, const std::optional<SystemConfig>& cfg = {});

// Seeds are derived per gate as seed + index, so results do not depend on
// the thread schedule.
std::vector<CartanFactorization> decompose_batch(std::span<const Gate> gates,
                                                 std::uint64_t seed = 0);
std::vector<CartanFactorization> decompose_batch_serial(
    std::span<const Gate> gates, std::uint64_t seed = 0);

} // namespace gatetime
