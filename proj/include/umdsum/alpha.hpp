#pragma once

#include <cstdint>
#include <vector>

#include "umdsum/dyadic.hpp"
#include "umdsum/kappa.hpp"
#include "umdsum/permutation.hpp"

namespace umdsum {

// Exact value of the permutation functional together with the per-row
// suprema S^pi(i) and, per row, the first maximizing prefix end h.
struct AlphaValue {
    DyadicRational value;
    std::vector<DyadicRational> per_row;
    std::vector<std::uint32_t> argmax_h;
};

// Arbitrary (not necessarily injective) map on {0,...,2^n-1} plus a sign
// per index; the signed-map supremum ranges over these.
struct SignedMap {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> image;
    std::vector<int> signs;  // +1 / -1

    SignedMap(std::uint32_t n_, std::vector<std::uint32_t> image_, std::vector<int> signs_);
    std::uint64_t size() const { return image.size(); }
};

// S^pi(i): max over h of |sum of (-2)^{-kappa(i^j)} over j with pi(j) <= h|,
// diagonal term included. include_full_prefix=false drops the h = 2^n-1
// candidate (the alternative convention reported in verbose mode).
DyadicRational row_sup(const KappaInstance& inst, const Permutation& pi, std::uint64_t i,
                       bool include_full_prefix = true);

AlphaValue alpha(const KappaInstance& inst, const Permutation& pi,
                 bool include_full_prefix = true);

// 2^{-n} sum_i max_h |sum_{j: image(j) <= h} (-2)^{-kappa(i^j)} sign_j|
DyadicRational alpha_signed_map(const KappaInstance& inst, const SignedMap& m);

// The counting construction: rho(j) = |F_0| + ... + |F_{h-1}| + |{j' in F_h : j' < j}|
// for j in F_h = image^{-1}(h). Dominates the map's prefix suprema for every f.
Permutation map_to_permutation(const SignedMap& m);

// Lists members first in pi-order, then the complement in pi-order;
// dominates the A-restricted prefix suprema for every f.
Permutation subset_permutation(const std::vector<bool>& members, const Permutation& pi);

// --- scaled fast path used by the search loops ---

// row supremum as an integer at scale inst.entry_scale()
std::int64_t row_sup_scaled(const KappaInstance& inst, const std::vector<std::uint32_t>& order,
                            std::uint64_t i);

// sum of all row suprema at scale entry_scale (value = total / 2^{n+s})
std::int64_t alpha_total_scaled(const KappaInstance& inst, const std::vector<std::uint32_t>& order);

DyadicRational alpha_from_total(const KappaInstance& inst, std::int64_t total);

} // namespace umdsum
