#include "umdsum/martingale.hpp"

#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

namespace umdsum {

LeafFunction::LeafFunction(std::uint32_t depth_, std::uint32_t dim_,
                           std::vector<std::vector<DyadicRational>> values_)
    : depth(depth_), dim(dim_), values(std::move(values_)) {
    if (depth > 20)
        throw std::invalid_argument("LeafFunction: depth too large");
    if (dim == 0)
        throw std::invalid_argument("LeafFunction: dimension must be positive");
    if (values.size() != (std::uint64_t(1) << depth))
        throw std::invalid_argument("LeafFunction: expected 2^depth leaf values");
    for (const auto& v : values)
        if (v.size() != dim)
            throw std::invalid_argument("LeafFunction: inconsistent value dimension");
}

LeafFunction LeafFunction::scalar(std::uint32_t depth, std::vector<DyadicRational> leaves) {
    std::vector<std::vector<DyadicRational>> vals;
    vals.reserve(leaves.size());
    for (auto& v : leaves)
        vals.push_back({v});
    return LeafFunction(depth, 1, std::move(vals));
}

LeafFunction conditional_expectation(const LeafFunction& f, std::uint32_t k) {
    if (k > f.depth)
        throw std::invalid_argument("conditional_expectation: k exceeds depth");
    std::uint32_t drop = f.depth - k;
    std::uint64_t blocks = std::uint64_t(1) << k;
    std::uint64_t block_size = std::uint64_t(1) << drop;
    std::vector<std::vector<DyadicRational>> out(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::vector<DyadicRational> avg(f.dim);
        for (std::uint64_t t = 0; t < block_size; ++t) {
            const auto& leaf = f.values[b * block_size + t];
            for (std::uint32_t c = 0; c < f.dim; ++c)
                avg[c] += leaf[c];
        }
        for (std::uint32_t c = 0; c < f.dim; ++c)
            avg[c] = avg[c].times_pow2(-static_cast<std::int32_t>(drop));
        out[b] = std::move(avg);
    }
    return LeafFunction(k, f.dim, std::move(out));
}

std::vector<LeafFunction> leaves_to_differences(const LeafFunction& f) {
    if (f.depth < 1)
        throw std::invalid_argument("leaves_to_differences: depth must be >= 1");
    std::vector<LeafFunction> diffs;
    diffs.reserve(f.depth);
    LeafFunction prev = conditional_expectation(f, 1);
    diffs.push_back(prev);  // d_1 = f_1 under the f_0 == 0 convention
    for (std::uint32_t k = 2; k <= f.depth; ++k) {
        LeafFunction cur = conditional_expectation(f, k);
        std::vector<std::vector<DyadicRational>> d(cur.leaves());
        for (std::uint64_t b = 0; b < cur.leaves(); ++b) {
            d[b].resize(f.dim);
            for (std::uint32_t c = 0; c < f.dim; ++c)
                d[b][c] = cur.values[b][c] - prev.values[b >> 1][c];
        }
        diffs.emplace_back(k, f.dim, std::move(d));
        prev = std::move(cur);
    }
    return diffs;
}

namespace {

// value of E(f|F_k) on the block containing leaf t
const std::vector<DyadicRational>& at_leaf(const LeafFunction& fk, std::uint32_t full_depth,
                                           std::uint64_t t) {
    return fk.values[t >> (full_depth - fk.depth)];
}

DyadicRational max_coordinate_norm(const std::vector<DyadicRational>& v) {
    DyadicRational best;
    for (const auto& c : v) {
        DyadicRational a = c.abs();
        if (a > best)
            best = a;
    }
    return best;
}

} // namespace

std::vector<DyadicRational> eq10_residual(const LeafFunction& f, std::uint64_t t_index) {
    if (f.depth % 2 != 0 || f.depth == 0)
        throw std::invalid_argument("eq10_residual: depth must be even and positive");
    if (t_index >= f.leaves())
        throw std::out_of_range("eq10_residual: leaf index out of range");
    std::uint32_t m = f.depth;
    std::uint32_t n = m / 2;

    std::vector<LeafFunction> chain;  // E(f|F_k), k = 0..m
    chain.reserve(m + 1);
    for (std::uint32_t k = 0; k <= m; ++k)
        chain.push_back(conditional_expectation(f, k));

    std::vector<DyadicRational> lhs(f.dim);
    for (std::uint32_t k = 1; k <= n; ++k) {
        const auto& f2k = at_leaf(chain[2 * k], m, t_index);
        const auto& f2k1 = at_leaf(chain[2 * k - 1], m, t_index);
        const auto& f2k2 = at_leaf(chain[2 * k - 2], m, t_index);
        for (std::uint32_t c = 0; c < f.dim; ++c) {
            // 2 d_{2k-1} - d_{2k} = 3 f_{2k-1} - 2 f_{2k-2} - f_{2k}
            DyadicRational d_odd = f2k1[c] - f2k2[c];
            DyadicRational d_even = f2k[c] - f2k1[c];
            lhs[c] += d_odd.times_pow2(1) - d_even;
        }
    }

    std::vector<DyadicRational> rhs(f.dim);
    for (std::uint32_t k = 1; k <= m; ++k) {
        // sibling of Delta_k(t): flip the block index at level k
        std::uint64_t block = (t_index >> (m - k)) ^ 1;
        std::uint64_t lo = block << (m - k);
        std::uint64_t cnt = std::uint64_t(1) << (m - k);
        std::vector<DyadicRational> integral(f.dim);
        for (std::uint64_t j = lo; j < lo + cnt; ++j)
            for (std::uint32_t c = 0; c < f.dim; ++c)
                integral[c] += f.values[j][c];
        // integral over the sibling = block sum / 2^m; times (-2)^k
        for (std::uint32_t c = 0; c < f.dim; ++c) {
            DyadicRational term =
                integral[c].times_pow2(static_cast<std::int32_t>(k) - static_cast<std::int32_t>(m));
            rhs[c] += (k % 2 == 0) ? term : -term;
        }
    }

    std::vector<DyadicRational> residual(f.dim);
    for (std::uint32_t c = 0; c < f.dim; ++c)
        residual[c] = lhs[c] - rhs[c];
    return residual;
}

TransformIdentity transform_identity_check(const LeafFunction& f) {
    if (f.depth % 2 != 0 || f.depth == 0)
        throw std::invalid_argument("transform_identity_check: depth must be even and positive");
    std::uint32_t m = f.depth;
    std::uint32_t n = m / 2;
    std::uint64_t N = f.leaves();

    std::vector<LeafFunction> chain;
    chain.reserve(m + 1);
    for (std::uint32_t k = 0; k <= m; ++k)
        chain.push_back(conditional_expectation(f, k));

    TransformIdentity out;
    for (std::uint64_t t = 0; t < N; ++t) {
        std::vector<DyadicRational> g(f.dim);
        for (std::uint32_t k = 1; k <= n; ++k) {
            const auto& f2k = at_leaf(chain[2 * k], m, t);
            const auto& f2k1 = at_leaf(chain[2 * k - 1], m, t);
            const auto& f2k2 = at_leaf(chain[2 * k - 2], m, t);
            for (std::uint32_t c = 0; c < f.dim; ++c)
                g[c] += (f2k1[c] - f2k2[c]).times_pow2(1) - (f2k[c] - f2k1[c]);
        }
        out.lhs += max_coordinate_norm(g);
    }
    out.lhs = out.lhs.times_pow2(-static_cast<std::int32_t>(m));

    KappaInstance inst(m);
    for (std::uint64_t i = 0; i < N; ++i) {
        std::vector<DyadicRational> sum(f.dim);
        for (std::uint64_t j = 0; j < N; ++j) {
            if (j == i)
                continue;
            DyadicRational e = inst.entry(i ^ j);
            for (std::uint32_t c = 0; c < f.dim; ++c)
                sum[c] += e * f.values[j][c];
        }
        out.rhs += max_coordinate_norm(sum);
    }
    out.rhs = out.rhs.times_pow2(1 - static_cast<std::int32_t>(m));
    return out;
}

DuplicationValues duplication_invariance(const KappaInstance& inst,
                                         const std::vector<std::vector<DyadicRational>>& x) {
    std::uint64_t N = inst.size();
    if (x.size() != N)
        throw std::invalid_argument("duplication_invariance: expected 2^n vectors");
    std::uint32_t dim = x.empty() ? 1 : static_cast<std::uint32_t>(x[0].size());
    for (const auto& v : x)
        if (v.size() != dim)
            throw std::invalid_argument("duplication_invariance: inconsistent dimension");

    auto value_at = [dim](const KappaInstance& ii,
                          const std::vector<std::vector<DyadicRational>>& xs) {
        std::uint64_t M = ii.size();
        DyadicRational total;
        for (std::uint64_t i = 0; i < M; ++i) {
            std::vector<DyadicRational> sum(dim);
            for (std::uint64_t j = 0; j < M; ++j) {
                DyadicRational e = ii.entry(i ^ j);
                for (std::uint32_t c = 0; c < dim; ++c)
                    sum[c] += e * xs[j][c];
            }
            total += max_coordinate_norm(sum);
        }
        return total.times_pow2(-static_cast<std::int32_t>(ii.levels()));
    };

    DuplicationValues out;
    out.level_n = value_at(inst, x);
    std::vector<std::vector<DyadicRational>> dup(2 * N);
    for (std::uint64_t j = 0; j < N; ++j)
        dup[2 * j] = dup[2 * j + 1] = x[j];
    KappaInstance next(inst.levels() + 1);
    out.level_n_plus_1 = value_at(next, dup);
    return out;
}

double hilbert_lower_bound(std::uint32_t n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("hilbert_lower_bound: n must be in 1..12");
    const long N = long(1) << n;
    // Sigma_N e_h has coordinates (0,...,0,1,...,1) starting at position h, so
    // coordinate m of sum_{h != k} Sigma_N e_h/(h-k) is sum_{h <= m, h != k} 1/(h-k);
    // the max over m of |.| is tracked along a single pass.
    mpq_class sq_sum = 0;
    for (long k = 1; k <= N; ++k) {
        mpq_class run = 0, best = 0;
        for (long m = 1; m <= N; ++m) {
            if (m != k)
                run += mpq_class(1, m - k > 0 ? m - k : k - m) * (m > k ? 1 : -1);
            mpq_class a = run >= 0 ? run : mpq_class(-run);
            if (a > best)
                best = a;
        }
        sq_sum += best * best;
    }
    return std::sqrt(sq_sum.get_d() / static_cast<double>(N));
}

} // namespace umdsum
