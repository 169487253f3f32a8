#include "umdsum/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace umdsum {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

const char* optimizer_rng_name() {
    return "splitmix64-fisher-yates/v1";
}

std::uint64_t rng_below(std::uint64_t& state, std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t v = splitmix64(state);
        if (v >= threshold)
            return v % bound;
    }
}

std::uint64_t restart_seed(std::uint64_t seed, std::uint32_t restart_index) {
    std::uint64_t s = seed;
    std::uint64_t base = splitmix64(s);
    std::uint64_t t = base ^ (0xD1B54A32D192ED03ull * (std::uint64_t(restart_index) + 1));
    return splitmix64(t);
}

Permutation random_permutation(std::uint32_t n, std::uint64_t substream_seed) {
    std::uint64_t N = std::uint64_t(1) << n;
    std::vector<std::uint32_t> img(N);
    std::iota(img.begin(), img.end(), 0u);
    std::uint64_t state = substream_seed;
    for (std::uint64_t i = N - 1; i > 0; --i)
        std::swap(img[i], img[rng_below(state, i + 1)]);
    return Permutation(n, std::move(img));
}

Permutation gamma_cycle(std::uint32_t h, std::uint32_t i, std::uint32_t n) {
    std::uint64_t N = std::uint64_t(1) << n;
    if (!(h < i && i < N))
        throw std::invalid_argument("gamma_cycle: need h < i < 2^n");
    std::vector<std::uint32_t> img(N);
    std::iota(img.begin(), img.end(), 0u);
    img[i] = h + 1;
    for (std::uint32_t j = h + 1; j < i; ++j)
        img[j] = j + 1;
    return Permutation(n, std::move(img));
}

Permutation delta_cycle(std::uint32_t h, std::uint32_t i, std::uint32_t n) {
    std::uint64_t N = std::uint64_t(1) << n;
    if (!(h < i && i < N))
        throw std::invalid_argument("delta_cycle: need h < i < 2^n");
    std::vector<std::uint32_t> img(N);
    std::iota(img.begin(), img.end(), 0u);
    img[h] = i - 1;
    for (std::uint32_t j = h + 1; j < i; ++j)
        img[j] = j - 1;
    return Permutation(n, std::move(img));
}

namespace {

// order-array forms of the two cycles composed with pi:
// gamma moves the element at rank i to rank h+1, delta the element at rank h
// to rank i-1; ranks strictly between shift by one.
inline void apply_gamma(std::vector<std::uint32_t>& order, std::uint32_t h, std::uint32_t i) {
    std::rotate(order.begin() + h + 1, order.begin() + i, order.begin() + i + 1);
}

inline void apply_delta(std::vector<std::uint32_t>& order, std::uint32_t h, std::uint32_t i) {
    std::rotate(order.begin() + h, order.begin() + h + 1, order.begin() + i);
}

struct RestartResult {
    std::int64_t total = -1;
    std::vector<std::uint32_t> order;
    std::uint32_t passes = 0;
    std::uint64_t evals = 0;
};

// One full sweep at the given pairing level; strict improvements only.
bool sweep_level(const KappaInstance& inst, std::vector<std::uint32_t>& order,
                 std::vector<std::uint32_t>& rank, std::int64_t& total,
                 std::uint32_t level, std::vector<std::uint32_t>& scratch,
                 std::uint64_t& evals) {
    const std::uint64_t N = inst.size();
    const std::uint32_t bit = 1u << level;
    bool changed = false;
    for (std::uint64_t i0 = 0; i0 < N; ++i0) {
        if (i0 & bit)
            continue;  // visit each pair once, ascending representative
        std::uint64_t partner = i0 | bit;
        std::uint32_t h = rank[i0], i = rank[partner];
        if (h > i)
            std::swap(h, i);
        if (h + 1 == i)
            continue;  // both cycles degenerate to the identity

        scratch = order;
        apply_gamma(scratch, h, i);
        std::int64_t vg = alpha_total_scaled(inst, scratch);
        ++evals;

        std::vector<std::uint32_t>& gamma_order = scratch;
        std::vector<std::uint32_t> delta_order = order;
        apply_delta(delta_order, h, i);
        std::int64_t vd = alpha_total_scaled(inst, delta_order);
        ++evals;

        std::int64_t vbest = vg > vd ? vg : vd;
        if (vbest > total) {
            order = (vg >= vd) ? gamma_order : delta_order;
            for (std::uint64_t r = 0; r < N; ++r)
                rank[order[r]] = static_cast<std::uint32_t>(r);
            total = vbest;
            changed = true;
        }
    }
    return changed;
}

RestartResult run_restart(const KappaInstance& inst, const OptimizerConfig& cfg,
                          std::uint32_t restart_index, std::uint32_t top_level) {
    const std::uint64_t N = inst.size();
    Permutation start = random_permutation(cfg.n, restart_seed(cfg.seed, restart_index));

    RestartResult res;
    res.order = start.order();
    std::vector<std::uint32_t> rank(start.image());
    std::vector<std::uint32_t> scratch(N);
    res.total = alpha_total_scaled(inst, res.order);
    ++res.evals;

    while (res.passes < cfg.max_passes) {
        bool round_changed = false;
        for (std::uint32_t level = 0; level <= top_level && res.passes < cfg.max_passes; ++level) {
            for (;;) {
                bool ch = sweep_level(inst, res.order, rank, res.total, level, scratch, res.evals);
                ++res.passes;
                if (ch)
                    round_changed = true;
                if (!ch || res.passes >= cfg.max_passes)
                    break;
            }
        }
        if (!round_changed)
            break;
    }
    return res;
}

} // namespace

StepOutcome improve_step(const KappaInstance& inst, const Permutation& pi, std::uint64_t i0) {
    if (pi.levels() != inst.levels())
        throw std::invalid_argument("improve_step: mismatched level count");
    std::uint64_t N = inst.size();
    if (i0 >= N)
        throw std::out_of_range("improve_step: i0 out of range");
    std::uint32_t h = pi(i0), i = pi(i0 ^ 1);
    if (h >= i)
        throw std::invalid_argument("improve_step: requires pi(i0) < pi(i0^1)");

    Permutation prime = compose(gamma_cycle(h, i, pi.levels()), pi);
    Permutation second = compose(delta_cycle(h, i, pi.levels()), pi);
    DyadicRational a = alpha(inst, pi).value;
    DyadicRational g = alpha(inst, prime).value;
    DyadicRational d = alpha(inst, second).value;

    StepOutcome out{StepChoice::original, a, a, i0, pi};
    DyadicRational best = g >= d ? g : d;
    if (best > a) {
        out.value_after = best;
        if (g >= d) {
            out.chosen = StepChoice::gamma_variant;
            out.result = prime;
        } else {
            out.chosen = StepChoice::delta_variant;
            out.result = second;
        }
    }
    return out;
}

SearchReport optimize(const KappaInstance& inst, const OptimizerConfig& cfg) {
    if (cfg.n != inst.levels())
        throw std::invalid_argument("optimize: config/instance level mismatch");
    if (cfg.restarts < 1 || cfg.max_passes < 1)
        throw std::invalid_argument("optimize: restarts and max_passes must be >= 1");
    auto start_time = std::chrono::steady_clock::now();

    std::uint32_t top_level = cfg.block_levels;
    if (top_level == UINT32_MAX)
        top_level = cfg.n - 1;
    if (top_level > cfg.n - 1)
        top_level = cfg.n - 1;

    std::uint32_t workers = cfg.threads;
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0)
            workers = 1;
    }
    if (workers > cfg.restarts)
        workers = cfg.restarts;

    std::vector<RestartResult> results(cfg.restarts);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::uint32_t r = next.fetch_add(1);
            if (r >= cfg.restarts)
                return;
            results[r] = run_restart(inst, cfg, r, top_level);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    SearchReport rep;
    rep.n = cfg.n;
    rep.mode = SearchMode::local_search;
    rep.seeds = {cfg.seed};
    rep.restarts = cfg.restarts;

    std::int64_t best = -1;
    std::uint32_t best_index = 0;
    for (std::uint32_t r = 0; r < cfg.restarts; ++r) {
        rep.nodes_explored += results[r].evals;
        if (results[r].total > best) {
            best = results[r].total;
            best_index = r;
        }
    }
    for (std::uint32_t r = 0; r < cfg.restarts; ++r)
        if (results[r].total == best)
            ++rep.successful_restarts;
    if (cfg.collect_restart_stats) {
        rep.restart_summaries.reserve(cfg.restarts);
        for (std::uint32_t r = 0; r < cfg.restarts; ++r)
            rep.restart_summaries.push_back(
                {r, alpha_from_total(inst, results[r].total), results[r].passes});
    }

    rep.best_value = alpha_from_total(inst, best);
    rep.best_decimal = rep.best_value.to_decimal();
    const std::uint64_t N = inst.size();
    std::vector<std::uint32_t> img(N);
    for (std::uint64_t r = 0; r < N; ++r)
        img[results[best_index].order[r]] = static_cast<std::uint32_t>(r);
    rep.witness = Permutation(cfg.n, img);
    rep.notes.push_back("moves: level-l step pairs i0 with i0 xor 2^l and applies "
                        "single-element gamma/delta cycles to their ranks");
    rep.notes.push_back(std::string("rng: ") + optimizer_rng_name());
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return rep;
}

DyadicRational proposition2_gap(const KappaInstance& inst, const Permutation& pi,
                                std::uint64_t i0) {
    if (pi.levels() != inst.levels())
        throw std::invalid_argument("proposition2_gap: mismatched level count");
    std::uint64_t N = inst.size();
    if (i0 >= N)
        throw std::out_of_range("proposition2_gap: i0 out of range");
    std::uint32_t h = pi(i0), i = pi(i0 ^ 1);
    if (h >= i)
        throw std::invalid_argument("proposition2_gap: requires pi(i0) < pi(i0^1)");

    std::vector<std::uint32_t> base = pi.order();
    std::vector<std::uint32_t> gamma_order = base;
    apply_gamma(gamma_order, h, i);
    std::vector<std::uint32_t> delta_order = base;
    apply_delta(delta_order, h, i);

    std::uint64_t skip_a = i0, skip_b = i0 ^ 1;
    auto restricted = [&](const std::vector<std::uint32_t>& order) {
        std::int64_t s = 0;
        for (std::uint64_t row = 0; row < N; ++row) {
            if (row == skip_a || row == skip_b)
                continue;
            s += row_sup_scaled(inst, order, row);
        }
        return s;
    };
    std::int64_t sp = restricted(base);
    std::int64_t sg = restricted(gamma_order);
    std::int64_t sd = restricted(delta_order);
    return DyadicRational::from_num_scale(sg + sd - 2 * sp, inst.entry_scale() + 1);
}

} // namespace umdsum
