#include "umdsum/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace umdsum {

const char* to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::enumeration: return "enumeration";
        case SearchMode::branch_and_bound: return "branch_and_bound";
        case SearchMode::local_search: return "local_search";
    }
    return "unknown";
}

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void finish_value(SearchReport& rep, const KappaInstance& inst, std::int64_t total) {
    rep.best_value = alpha_from_total(inst, total);
    rep.best_decimal = rep.best_value.to_decimal();
}

} // namespace

SearchReport exhaustive_search(std::uint32_t n, bool use_swap_symmetry) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("exhaustive_search: n must be in 1..3");
    auto start = clock_type::now();
    KappaInstance inst(n);
    std::uint64_t N = inst.size();

    std::vector<std::uint32_t> image(N);
    std::iota(image.begin(), image.end(), 0u);
    std::vector<std::uint32_t> order(N);

    SearchReport rep;
    rep.n = n;
    rep.mode = SearchMode::enumeration;

    std::int64_t best = -1;
    std::vector<std::uint32_t> best_image;
    do {
        if (use_swap_symmetry) {
            bool representative = true;
            for (std::uint64_t m = 0; m < N; m += 2) {
                if (image[m] > image[m + 1]) {
                    representative = false;
                    break;
                }
            }
            if (!representative) {
                ++rep.pruned;
                continue;
            }
        }
        for (std::uint64_t j = 0; j < N; ++j)
            order[image[j]] = static_cast<std::uint32_t>(j);
        std::int64_t total = alpha_total_scaled(inst, order);
        ++rep.nodes_explored;
        if (total > best) {   // lex enumeration: first maximizer is lex-smallest
            best = total;
            best_image = image;
        }
    } while (std::next_permutation(image.begin(), image.end()));

    finish_value(rep, inst, best);
    rep.witness = Permutation(n, best_image);
    if (n == 1)
        rep.notes.push_back("n=1 convention mismatch: the adopted evaluation yields 0.375; "
                            "the published table lists 0.25 (diagonal-excluded strict-prefix reading)");
    rep.wall_seconds = seconds_since(start);
    return rep;
}

SearchReport branch_and_bound(std::uint32_t n, std::uint64_t node_budget) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("branch_and_bound: n must be in 1..4");
    auto start = clock_type::now();
    KappaInstance inst(n);
    const std::uint64_t N = inst.size();
    const std::int64_t* ent = inst.entry_row().data();

    SearchReport rep;
    rep.n = n;
    rep.mode = SearchMode::branch_and_bound;

    // incumbent: the identity permutation
    auto ident = Permutation::identity(n);
    std::vector<std::uint32_t> ident_order = ident.order();
    std::int64_t incumbent = alpha_total_scaled(inst, ident_order);
    std::vector<std::uint32_t> best_order = ident_order;

    // per-row running state while ranks 0..depth-1 are assigned
    std::vector<std::int64_t> cur(N, 0), partial(N, 0), pos_mass(N, 0), neg_mass(N, 0);
    for (std::uint64_t i = 0; i < N; ++i) {
        for (std::uint64_t j = 0; j < N; ++j) {
            std::int64_t e = ent[i ^ j];
            if (e > 0) pos_mass[i] += e; else neg_mass[i] -= e;
        }
    }
    std::vector<bool> used(N, false);
    std::vector<std::uint32_t> chosen(N, 0);
    bool budget_hit = false;

    auto bound = [&]() {
        std::int64_t b = 0;
        for (std::uint64_t i = 0; i < N; ++i) {
            std::int64_t up = cur[i] + pos_mass[i];
            std::int64_t dn = neg_mass[i] - cur[i];
            std::int64_t fut = up > dn ? up : dn;
            b += fut > partial[i] ? fut : partial[i];
        }
        return b;
    };

    // depth-first, assigning which index receives the next rank; j ascending
    auto dfs = [&](auto&& self, std::uint64_t depth) -> void {
        if (budget_hit)
            return;
        if (depth == N) {
            std::int64_t total = 0;
            for (std::uint64_t i = 0; i < N; ++i)
                total += partial[i];
            if (total > incumbent) {
                incumbent = total;
                best_order.assign(chosen.begin(), chosen.end());
            }
            return;
        }
        for (std::uint32_t j = 0; j < N; ++j) {
            if (used[j])
                continue;
            if (rep.nodes_explored >= node_budget) {
                budget_hit = true;
                return;
            }
            ++rep.nodes_explored;
            used[j] = true;
            chosen[depth] = j;
            std::vector<std::int64_t> saved_partial;
            saved_partial.reserve(N);
            for (std::uint64_t i = 0; i < N; ++i) {
                std::int64_t e = ent[i ^ j];
                cur[i] += e;
                if (e > 0) pos_mass[i] -= e; else neg_mass[i] += e;
                saved_partial.push_back(partial[i]);
                std::int64_t a = cur[i] < 0 ? -cur[i] : cur[i];
                if (a > partial[i])
                    partial[i] = a;
            }
            if (bound() > incumbent)
                self(self, depth + 1);
            else
                ++rep.pruned;
            for (std::uint64_t i = 0; i < N; ++i) {
                std::int64_t e = ent[i ^ j];
                cur[i] -= e;
                if (e > 0) pos_mass[i] += e; else neg_mass[i] -= e;
                partial[i] = saved_partial[i];
            }
            used[j] = false;
            if (budget_hit)
                return;
        }
    };
    dfs(dfs, 0);

    finish_value(rep, inst, incumbent);
    std::vector<std::uint32_t> img(N);
    for (std::uint64_t r = 0; r < N; ++r)
        img[best_order[r]] = static_cast<std::uint32_t>(r);
    rep.witness = Permutation(n, img);
    rep.complete = !budget_hit;
    if (budget_hit)
        rep.notes.push_back("node budget exhausted; best incumbent reported, optimality unproven");
    rep.wall_seconds = seconds_since(start);
    return rep;
}

DyadicRational signed_map_supremum(std::uint32_t n) {
    if (n < 1 || n > 2)
        throw std::invalid_argument("signed_map_supremum: n must be 1 or 2");
    KappaInstance inst(n);
    const std::uint64_t N = inst.size();
    const std::int64_t* ent = inst.entry_row().data();

    std::vector<std::uint32_t> image(N, 0);
    std::vector<std::int64_t> bucket(N);
    std::int64_t best = -1;
    const std::uint64_t map_count = [&] {
        std::uint64_t c = 1;
        for (std::uint64_t j = 0; j < N; ++j)
            c *= N;
        return c;
    }();
    for (std::uint64_t code = 0; code < map_count; ++code) {
        std::uint64_t c = code;
        for (std::uint64_t j = 0; j < N; ++j) {
            image[j] = static_cast<std::uint32_t>(c % N);
            c /= N;
        }
        for (std::uint64_t sbits = 0; sbits < (std::uint64_t(1) << N); ++sbits) {
            std::int64_t total = 0;
            for (std::uint64_t i = 0; i < N; ++i) {
                std::fill(bucket.begin(), bucket.end(), 0);
                for (std::uint64_t j = 0; j < N; ++j) {
                    std::int64_t e = ent[i ^ j];
                    bucket[image[j]] += ((sbits >> j) & 1) ? -e : e;
                }
                std::int64_t run = 0, sup = 0;
                for (std::uint64_t h = 0; h < N; ++h) {
                    run += bucket[h];
                    std::int64_t a = run < 0 ? -run : run;
                    if (a > sup)
                        sup = a;
                }
                total += sup;
            }
            if (total > best)
                best = total;
        }
    }
    return alpha_from_total(inst, best);
}

} // namespace umdsum
