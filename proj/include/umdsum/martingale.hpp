#pragma once

#include <cstdint>
#include <vector>

#include "umdsum/dyadic.hpp"
#include "umdsum/kappa.hpp"

namespace umdsum {

// Function constant on the 2^depth dyadic leaf intervals of [0,1), with
// vector values of a common dimension (dimension 1 = scalar instances).
struct LeafFunction {
    std::uint32_t depth = 0;
    std::uint32_t dim = 1;
    std::vector<std::vector<DyadicRational>> values;  // 2^depth entries

    LeafFunction(std::uint32_t depth_, std::uint32_t dim_,
                 std::vector<std::vector<DyadicRational>> values_);
    static LeafFunction scalar(std::uint32_t depth, std::vector<DyadicRational> leaves);
    std::uint64_t leaves() const { return values.size(); }
};

// E(f | F_k): dyadic block averages, returned at resolution 2^k
LeafFunction conditional_expectation(const LeafFunction& f, std::uint32_t k);

// Differences d_k = E(f|F_k) - E(f|F_{k-1}) for k = 1..depth under the
// f_0 == 0 convention (d_1 = E(f|F_1)), so that sum_k d_k reconstructs f.
std::vector<LeafFunction> leaves_to_differences(const LeafFunction& f);

// sum_{k=1}^{n} (2 d_{2k-1}(t) - d_{2k}(t)) - sum_{k=1}^{2n} (-2)^k
// integral over the sibling of Delta_k(t) of f. The differences here come
// from the full conditional-expectation chain (f_0 = the global mean), which
// is what makes the identity exact for every f. Identically zero.
std::vector<DyadicRational> eq10_residual(const LeafFunction& f, std::uint64_t t_index);

// lhs = L1 norm of sum_k (2 d_{2k-1} - d_{2k});
// rhs = 2/2^{2n} sum_i || sum_{j != i} (-2)^{-kappa(i^j)} x_j ||,
// x_j the leaf values. Exactly equal; norm is the max coordinate.
struct TransformIdentity {
    DyadicRational lhs;
    DyadicRational rhs;
};
TransformIdentity transform_identity_check(const LeafFunction& f);

// v_n = 2^{-n} sum_i || sum_j (-2)^{-kappa(i^j)} x_j || and the same at level
// n+1 on the duplicated input x'_{2j} = x'_{2j+1} = x_j. Exactly equal.
struct DuplicationValues {
    DyadicRational level_n;
    DyadicRational level_n_plus_1;
};
DuplicationValues duplication_invariance(const KappaInstance& inst,
                                         const std::vector<std::vector<DyadicRational>>& x);

// ( sum_k || sum_{h != k} Sigma_N e_h / (h-k) ||_inf^2 )^{1/2} / sqrt(N)
// for N = 2^n, inner sums in exact rational arithmetic; grows like n.
double hilbert_lower_bound(std::uint32_t n);

} // namespace umdsum
