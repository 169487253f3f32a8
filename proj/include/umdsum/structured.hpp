#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "umdsum/alpha.hpp"

namespace umdsum {

// pi(i^j) == pi(i)^pi(j) for all i, j. Exhaustive check for n <= 6,
// basis determination (pi(i) == xor of pi over set bits) for larger n.
bool is_linear(const Permutation& pi);

// kappa(pi(i^j)^pi(0)) == kappa(pi(i)^pi(j)) for all i, j.
bool is_pseudo_linear(const Permutation& pi);

// n x n matrix over GF(2); row r is a bit mask over columns.
struct Gf2Matrix {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> rows;

    static Gf2Matrix identity(std::uint32_t n);
    bool invertible() const;
    std::uint32_t apply(std::uint32_t x) const;  // y_r = <row_r, bits(x)>
};

// pi(i) = M . bits(i); throws when M is singular over GF(2)
Permutation linear_from_gf2_matrix(const Gf2Matrix& m);

// seeded generator of invertible matrices (test corpora)
Gf2Matrix random_invertible_gf2(std::uint32_t n, std::uint64_t seed);

enum class SetRelation { equal, less };

// A^pi_{<k or =k, <l or =l}(i, h) = {j : kappa(i^j) rel k, kappa(h^pi(j)) rel l}
struct ASetQuery {
    SetRelation k_relation = SetRelation::equal;
    SetRelation l_relation = SetRelation::equal;
    std::uint32_t k = 3;
    std::uint32_t l = 3;
    std::uint64_t i = 0;
    std::uint64_t h = 0;
};

std::uint64_t a_set_size(const KappaInstance& inst, const Permutation& pi, const ASetQuery& q);

// sizes of A_{<k,=l}(i,h): zero below k0, a power of two 2^{p_k} from k0 on,
// with p_{k+1} in {p_k, p_k+1}; the nonempty sizes are independent of (i,h)
struct ProfileReport {
    std::uint32_t l = 0;
    std::uint32_t k0 = 0;               // smallest k with a nonempty set; 0 when all empty
    std::vector<std::int32_t> p;        // exponent per k = 3..n, -1 while empty
    std::vector<std::uint64_t> sizes;   // |A_{<k,=l}| per k = 3..n at (0, pi(0))
};

// Requires is_pseudo_linear(pi); verifies the proposition's shape and the
// independence of the nonempty sizes from (i,h) along the way.
ProfileReport pseudo_linear_profile(const KappaInstance& inst, const Permutation& pi,
                                    std::uint32_t l);

// 2^{-n} sum_i |sum_{k,l=3}^n pi(i)_l (-2)^{-k} |A_{<k,=l}(i,pi(i))||,
// bits 1-indexed; requires is_pseudo_linear(pi)
DyadicRational diagonal_quantity(const KappaInstance& inst, const Permutation& pi);

struct Lemma7Result {
    DyadicRational lambda;
    std::optional<std::uint32_t> m_prime;
};

// lambda = (-1)^m sum_{k=m}^{n} (-1)^k 2^{-q_k} for q given on indices m..n
// with q_k >= 0 and q_{k+1} in {q_k, q_k+1}. m_prime is the smallest k with
// k = m (mod 2) and q_{k+1} = q_k + 1, when one exists. The lemma's bounds
// |lambda| <= 2 and 2^{-q_{m'}}/2 <= |lambda| <= 2*2^{-q_{m'}} are verified
// internally and a violation throws.
Lemma7Result lemma7_evaluate(const std::vector<std::uint32_t>& q, std::uint32_t m);

struct IdentityRatioRow {
    std::uint32_t n = 0;
    DyadicRational alpha_identity;
    double ratio_to_sqrt_n = 0.0;
};

// alpha_n(identity) and its ratio to sqrt(n) for n in [n_lo, n_hi], n_hi <= 14
std::vector<IdentityRatioRow> identity_alpha_ratio(std::uint32_t n_lo, std::uint32_t n_hi);

} // namespace umdsum
