#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umdsum/alpha.hpp"
#include "umdsum/permutation.hpp"

namespace umdsum {

enum class SearchMode { enumeration, branch_and_bound, local_search };

const char* to_string(SearchMode mode);

struct RestartSummary {
    std::uint32_t index = 0;
    DyadicRational final_value;
    std::uint32_t passes = 0;
};

struct SearchReport {
    std::uint32_t n = 0;
    SearchMode mode = SearchMode::enumeration;
    DyadicRational best_value;
    std::string best_decimal;
    std::optional<Permutation> witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned = 0;
    double wall_seconds = 0.0;   // reported in the run manifest, not in report JSON
    bool complete = true;        // false when a node budget ran out
    std::vector<std::uint64_t> seeds;
    std::uint32_t restarts = 0;
    std::uint32_t successful_restarts = 0;  // restarts reaching the overall best
    std::vector<RestartSummary> restart_summaries;
    std::vector<std::string> notes;
};

// Enumerates all 2^n! permutations (n <= 3). With use_swap_symmetry only one
// representative per orbit of the image-swap symmetry pi(i0) <-> pi(i0^1) is
// evaluated (pi(2m) < pi(2m+1) for all m); the maximum is unchanged.
// The witness is the lexicographically smallest maximizer of the enumerated set.
SearchReport exhaustive_search(std::uint32_t n, bool use_swap_symmetry);

// Rank-by-rank assignment with the admissible bound
//   B = sum_i max(S_partial(i), max(cur_i + P_i, N_i - cur_i)),
// P_i / N_i the positive / negative mass of row i's unassigned entries.
// Seeds the incumbent with the identity permutation; prunes at B <= incumbent.
// Returns a proven optimum unless node_budget runs out (then complete=false).
SearchReport branch_and_bound(std::uint32_t n, std::uint64_t node_budget);

// Exact maximum of alpha_signed_map over all maps and sign vectors (n <= 2).
DyadicRational signed_map_supremum(std::uint32_t n);

} // namespace umdsum
