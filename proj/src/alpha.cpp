#include "umdsum/alpha.hpp"

#include <algorithm>
#include <stdexcept>

namespace umdsum {

SignedMap::SignedMap(std::uint32_t n_, std::vector<std::uint32_t> image_, std::vector<int> signs_)
    : n(n_), image(std::move(image_)), signs(std::move(signs_)) {
    std::uint64_t N = std::uint64_t(1) << n;
    if (image.size() != N || signs.size() != N)
        throw std::invalid_argument("SignedMap: image and signs must have length 2^n");
    for (std::uint64_t j = 0; j < N; ++j) {
        if (image[j] >= N)
            throw std::invalid_argument("SignedMap: image out of range at index " + std::to_string(j));
        if (signs[j] != 1 && signs[j] != -1)
            throw std::invalid_argument("SignedMap: sign must be +1 or -1 at index " + std::to_string(j));
    }
}

namespace {

void require_match(const KappaInstance& inst, std::uint32_t n) {
    if (inst.levels() != n)
        throw std::invalid_argument("mismatched level count n");
}

} // namespace

std::int64_t row_sup_scaled(const KappaInstance& inst, const std::vector<std::uint32_t>& order,
                            std::uint64_t i) {
    const std::int64_t* ent = inst.entry_row().data();
    std::int64_t cur = 0, best = 0;
    for (std::uint32_t j : order) {
        cur += ent[i ^ j];
        std::int64_t a = cur < 0 ? -cur : cur;
        if (a > best)
            best = a;
    }
    return best;
}

std::int64_t alpha_total_scaled(const KappaInstance& inst, const std::vector<std::uint32_t>& order) {
    std::int64_t total = 0;
    for (std::uint64_t i = 0; i < inst.size(); ++i)
        total += row_sup_scaled(inst, order, i);
    return total;
}

DyadicRational alpha_from_total(const KappaInstance& inst, std::int64_t total) {
    return DyadicRational::from_num_scale(total, inst.entry_scale() + inst.levels());
}

DyadicRational row_sup(const KappaInstance& inst, const Permutation& pi, std::uint64_t i,
                       bool include_full_prefix) {
    require_match(inst, pi.levels());
    if (i >= inst.size())
        throw std::out_of_range("row_sup: row index out of range");
    auto order = pi.order();
    const std::int64_t* ent = inst.entry_row().data();
    std::uint64_t last = include_full_prefix ? inst.size() : inst.size() - 1;
    std::int64_t cur = 0, best = 0;
    for (std::uint64_t r = 0; r < last; ++r) {
        cur += ent[i ^ order[r]];
        std::int64_t a = cur < 0 ? -cur : cur;
        if (a > best)
            best = a;
    }
    return DyadicRational::from_num_scale(best, inst.entry_scale());
}

AlphaValue alpha(const KappaInstance& inst, const Permutation& pi, bool include_full_prefix) {
    require_match(inst, pi.levels());
    auto order = pi.order();
    const std::int64_t* ent = inst.entry_row().data();
    std::uint64_t N = inst.size();
    std::uint64_t last = include_full_prefix ? N : N - 1;

    AlphaValue out;
    out.per_row.reserve(N);
    out.argmax_h.reserve(N);
    std::int64_t total = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
        std::int64_t cur = 0, best = 0;
        std::uint32_t best_h = 0;
        for (std::uint64_t r = 0; r < last; ++r) {
            cur += ent[i ^ order[r]];
            std::int64_t a = cur < 0 ? -cur : cur;
            if (a > best) {
                best = a;
                best_h = static_cast<std::uint32_t>(r);
            }
        }
        total += best;
        out.per_row.push_back(DyadicRational::from_num_scale(best, inst.entry_scale()));
        out.argmax_h.push_back(best_h);
    }
    out.value = DyadicRational::from_num_scale(total, inst.entry_scale() + inst.levels());
    return out;
}

DyadicRational alpha_signed_map(const KappaInstance& inst, const SignedMap& m) {
    require_match(inst, m.n);
    std::uint64_t N = inst.size();
    const std::int64_t* ent = inst.entry_row().data();
    std::vector<std::int64_t> bucket(N);
    std::int64_t total = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
        std::fill(bucket.begin(), bucket.end(), 0);
        for (std::uint64_t j = 0; j < N; ++j)
            bucket[m.image[j]] += m.signs[j] * ent[i ^ j];
        std::int64_t cur = 0, best = 0;
        for (std::uint64_t h = 0; h < N; ++h) {
            cur += bucket[h];
            std::int64_t a = cur < 0 ? -cur : cur;
            if (a > best)
                best = a;
        }
        total += best;
    }
    return DyadicRational::from_num_scale(total, inst.entry_scale() + inst.levels());
}

Permutation map_to_permutation(const SignedMap& m) {
    std::uint64_t N = m.size();
    std::vector<std::uint32_t> fiber_size(N, 0);
    for (std::uint32_t v : m.image)
        ++fiber_size[v];
    std::vector<std::uint32_t> fiber_start(N, 0);
    std::uint32_t acc = 0;
    for (std::uint64_t h = 0; h < N; ++h) {
        fiber_start[h] = acc;
        acc += fiber_size[h];
    }
    // scanning j ascending orders each fiber by index
    std::vector<std::uint32_t> img(N);
    std::vector<std::uint32_t> used(N, 0);
    for (std::uint64_t j = 0; j < N; ++j) {
        std::uint32_t h = m.image[j];
        img[j] = fiber_start[h] + used[h]++;
    }
    return Permutation(m.n, std::move(img));
}

Permutation subset_permutation(const std::vector<bool>& members, const Permutation& pi) {
    std::uint64_t N = pi.size();
    if (members.size() != N)
        throw std::invalid_argument("subset_permutation: mask length mismatch");
    std::uint64_t in_a = 0;
    for (std::uint64_t j = 0; j < N; ++j)
        if (members[j])
            ++in_a;
    auto order = pi.order();
    std::vector<std::uint32_t> img(N);
    std::uint32_t next_a = 0, next_b = static_cast<std::uint32_t>(in_a);
    for (std::uint32_t j : order) {
        if (members[j])
            img[j] = next_a++;
        else
            img[j] = next_b++;
    }
    return Permutation(pi.levels(), std::move(img));
}

} // namespace umdsum
