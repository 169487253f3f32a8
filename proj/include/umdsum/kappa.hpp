#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "umdsum/dyadic.hpp"

namespace umdsum {

// number of binary digits, with kappa(0) = 2 so that
// (-2)^{-kappa(2i^1)} + (-2)^{-kappa(2i)} = -(-2)^{-kappa(i)} holds for all i
inline std::uint32_t kappa(std::uint64_t i) {
    if (i == 0)
        return 2;
    return 64u - static_cast<std::uint32_t>(__builtin_clzll(i));
}

// dyadic addition: digit-wise sum without carry
inline std::uint64_t dyadic_xor(std::uint64_t i, std::uint64_t j) {
    return i ^ j;
}

// Precomputed kappa table and scaled matrix entries for a fixed level count n.
// The matrix ((-2)^{-kappa(i^j)}) is XOR-circulant, so one row indexed by
// x = i^j suffices. All entries share the scale s = max(n, 2), making every
// entry, prefix sum and row supremum an integer at scale s.
class KappaInstance {
public:
    explicit KappaInstance(std::uint32_t n);

    std::uint32_t levels() const { return n_; }
    std::uint64_t size() const { return std::uint64_t(1) << n_; }
    std::uint32_t entry_scale() const { return scale_; }

    std::uint32_t kappa_at(std::uint64_t x) const { return kappa_table_[x]; }

    // (-2)^{-kappa(x)} * 2^s as a plain integer
    std::int64_t entry_scaled(std::uint64_t x) const { return entry_scaled_[x]; }
    const std::vector<std::int64_t>& entry_row() const { return entry_scaled_; }

    DyadicRational entry(std::uint64_t x) const;

    // matrix coefficient (-2)^{-kappa(i^j)}; throws on out-of-range indices
    DyadicRational matrix_entry(std::uint64_t i, std::uint64_t j) const;

    // |{j < 2^n : kappa(i^j) = k}|; equals 2^{k-1} for 3 <= k <= n
    std::uint64_t level_count(std::uint64_t i, std::uint32_t k) const;

    // sum over one full row, +1/4 for even n and -1/4 for odd n
    DyadicRational row_sum() const;

private:
    std::uint32_t n_;
    std::uint32_t scale_;
    std::vector<std::uint32_t> kappa_table_;
    std::vector<std::int64_t> entry_scaled_;
};

struct KappaCheckFailure {
    std::string property;
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    std::string detail;
};

struct KappaCheckReport {
    std::uint64_t lemma1_cases = 0;
    std::uint64_t property_pairs = 0;
    std::vector<KappaCheckFailure> failures;
    bool passed() const { return failures.empty(); }
    std::string summary() const;
};

// Verifies, in exact DyadicRational arithmetic, the kappa(0)=2 recursion
// (-2)^{-kappa(2i^1)} + (-2)^{-kappa(2i)} = -(-2)^{-kappa(i)} for all
// i < limit, and the minimal-block / sibling-interval / order / level
// composition properties on all ordered pairs (i, j), i != j, with
// i, j < floor(sqrt(pair_budget)).
KappaCheckReport check_kappa_identities(std::uint64_t limit,
                                        std::uint64_t pair_budget = std::uint64_t(1) << 20);

} // namespace umdsum
