#pragma once

#include <cstdint>
#include <vector>

#include "umdsum/alpha.hpp"
#include "umdsum/search.hpp"

namespace umdsum {

// gamma_{h,i}: fixes j <= h and j > i, maps i -> h+1 and j -> j+1 for
// h+1 <= j <= i-1 ("a cycle taking i to h+1"). Requires h < i < 2^n.
Permutation gamma_cycle(std::uint32_t h, std::uint32_t i, std::uint32_t n);

// delta_{h,i}: fixes j < h and j >= i, maps h -> i-1 and j -> j-1 for
// h+1 <= j <= i-1 ("a cycle taking h to i-1"). Requires h < i < 2^n.
Permutation delta_cycle(std::uint32_t h, std::uint32_t i, std::uint32_t n);

enum class StepChoice { original, gamma_variant, delta_variant };

struct StepOutcome {
    StepChoice chosen = StepChoice::original;
    DyadicRational value_before;
    DyadicRational value_after;   // max over the three candidates, exactly
    std::uint64_t i0 = 0;
    Permutation result;
};

// Evaluates alpha on pi, gamma o pi and delta o pi (cycles at the ranks of
// i0 and i0^1) and returns the maximizer. Ties between the two variants
// prefer gamma; a tie with pi keeps pi. Requires pi(i0) < pi(i0^1).
StepOutcome improve_step(const KappaInstance& inst, const Permutation& pi, std::uint64_t i0);

struct OptimizerConfig {
    std::uint32_t n = 0;
    std::uint32_t restarts = 1;
    std::uint64_t seed = 0;
    std::uint32_t max_passes = 200;
    // highest pairing level: level l pairs i0 with i0 xor 2^l (0 = pairs only);
    // UINT32_MAX selects the default n-1
    std::uint32_t block_levels = UINT32_MAX;
    std::uint32_t threads = 0;  // 0 = hardware concurrency
    bool collect_restart_stats = false;
};

// The improvement strategy with random restarts: per restart, draw a uniform
// random permutation from the seeded generator and sweep improvement steps,
// level 0 passes to convergence, then levels 1..block_levels, repeating the
// round until a full round changes nothing or max_passes is reached. Only
// strict improvements are accepted. Deterministic for a fixed (seed, config),
// independent of the thread count.
SearchReport optimize(const KappaInstance& inst, const OptimizerConfig& cfg);

// (sum_{i != i0,i0^1} S^{pi'}(i) + sum S^{pi''}(i)) / 2 - sum S^{pi}(i),
// guaranteed >= 0; requires pi(i0) < pi(i0^1).
DyadicRational proposition2_gap(const KappaInstance& inst, const Permutation& pi, std::uint64_t i0);

// named deterministic generator backing the optimizer ("<name>/v<version>")
const char* optimizer_rng_name();

// unbiased value in [0, bound) from a raw 64-bit generator (rejection sampling)
std::uint64_t rng_below(std::uint64_t& state_hi, std::uint64_t bound);

// per-restart substream seed derived from (seed, restart index)
std::uint64_t restart_seed(std::uint64_t seed, std::uint32_t restart_index);

// seeded Fisher-Yates shuffle of 0..2^n-1 (the optimizer's start permutations)
Permutation random_permutation(std::uint32_t n, std::uint64_t substream_seed);

} // namespace umdsum
