#include "umdsum/structured.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "umdsum/optimize.hpp"

namespace umdsum {

bool is_linear(const Permutation& pi) {
    std::uint64_t N = pi.size();
    if (pi(0) != 0)
        return false;
    if (pi.levels() <= 6) {
        for (std::uint64_t i = 0; i < N; ++i)
            for (std::uint64_t j = 0; j < N; ++j)
                if (pi(i ^ j) != (pi(i) ^ pi(j)))
                    return false;
        return true;
    }
    // basis determination: images of the bit vectors force everything
    for (std::uint64_t i = 0; i < N; ++i) {
        std::uint32_t expect = 0;
        for (std::uint32_t b = 0; b < pi.levels(); ++b)
            if (i & (std::uint64_t(1) << b))
                expect ^= pi(std::uint64_t(1) << b);
        if (pi(i) != expect)
            return false;
    }
    return true;
}

bool is_pseudo_linear(const Permutation& pi) {
    std::uint64_t N = pi.size();
    std::uint32_t p0 = pi(0);
    for (std::uint64_t i = 0; i < N; ++i)
        for (std::uint64_t j = 0; j < N; ++j)
            if (kappa(pi(i ^ j) ^ p0) != kappa(pi(i) ^ pi(j)))
                return false;
    return true;
}

Gf2Matrix Gf2Matrix::identity(std::uint32_t n) {
    Gf2Matrix m;
    m.n = n;
    m.rows.resize(n);
    for (std::uint32_t r = 0; r < n; ++r)
        m.rows[r] = 1u << r;
    return m;
}

bool Gf2Matrix::invertible() const {
    std::vector<std::uint32_t> a = rows;
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t pivot = rank;
        while (pivot < n && !(a[pivot] & (1u << col)))
            ++pivot;
        if (pivot == n)
            return false;
        std::swap(a[rank], a[pivot]);
        for (std::uint32_t r = 0; r < n; ++r)
            if (r != rank && (a[r] & (1u << col)))
                a[r] ^= a[rank];
        ++rank;
    }
    return rank == n;
}

std::uint32_t Gf2Matrix::apply(std::uint32_t x) const {
    std::uint32_t y = 0;
    for (std::uint32_t r = 0; r < n; ++r)
        y |= static_cast<std::uint32_t>(__builtin_parity(rows[r] & x)) << r;
    return y;
}

Permutation linear_from_gf2_matrix(const Gf2Matrix& m) {
    if (!m.invertible())
        throw std::invalid_argument("linear_from_gf2_matrix: matrix is singular over GF(2)");
    std::uint64_t N = std::uint64_t(1) << m.n;
    std::vector<std::uint32_t> img(N);
    for (std::uint64_t x = 0; x < N; ++x)
        img[x] = m.apply(static_cast<std::uint32_t>(x));
    return Permutation(m.n, std::move(img));
}

Gf2Matrix random_invertible_gf2(std::uint32_t n, std::uint64_t seed) {
    Gf2Matrix m;
    m.n = n;
    m.rows.resize(n);
    std::uint64_t state = seed;
    do {
        for (std::uint32_t r = 0; r < n; ++r)
            m.rows[r] = static_cast<std::uint32_t>(rng_below(state, std::uint64_t(1) << n));
    } while (!m.invertible());
    return m;
}

std::uint64_t a_set_size(const KappaInstance& inst, const Permutation& pi, const ASetQuery& q) {
    if (pi.levels() != inst.levels())
        throw std::invalid_argument("a_set_size: mismatched level count");
    std::uint32_t n = inst.levels();
    std::uint64_t N = inst.size();
    if (q.i >= N || q.h >= N)
        throw std::invalid_argument("a_set_size: i or h out of range");
    auto check_level = [&](SetRelation rel, std::uint32_t v, const char* which) {
        if (rel == SetRelation::equal) {
            if (v < 3 || v > n)
                throw std::invalid_argument(std::string("a_set_size: ") + which +
                                            " must be in 3..n for the equal relation");
        } else if (v > n + 1) {
            throw std::invalid_argument(std::string("a_set_size: ") + which + " out of range");
        }
    };
    check_level(q.k_relation, q.k, "k");
    check_level(q.l_relation, q.l, "l");

    std::uint64_t count = 0;
    for (std::uint64_t j = 0; j < N; ++j) {
        std::uint32_t ki = kappa(q.i ^ j);
        std::uint32_t kh = kappa(q.h ^ pi(j));
        bool okk = q.k_relation == SetRelation::equal ? ki == q.k : ki < q.k;
        bool okl = q.l_relation == SetRelation::equal ? kh == q.l : kh < q.l;
        if (okk && okl)
            ++count;
    }
    return count;
}

namespace {

bool is_power_of_two(std::uint64_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

// histogram c[l][kappa] over j for fixed (i,h), then |A_{<k,=l}| by prefix sums
std::vector<std::uint64_t> sizes_less_k(const KappaInstance& inst, const Permutation& pi,
                                        std::uint64_t i, std::uint64_t h, std::uint32_t l) {
    std::uint32_t n = inst.levels();
    std::uint64_t N = inst.size();
    std::vector<std::uint64_t> by_kappa(n + 2, 0);
    for (std::uint64_t j = 0; j < N; ++j)
        if (kappa(h ^ pi(j)) == l)
            ++by_kappa[kappa(i ^ j)];
    std::vector<std::uint64_t> out;  // k = 3..n
    std::uint64_t acc = by_kappa[1] + by_kappa[2];
    for (std::uint32_t k = 3; k <= n; ++k) {
        out.push_back(acc);
        acc += by_kappa[k];
    }
    return out;
}

} // namespace

ProfileReport pseudo_linear_profile(const KappaInstance& inst, const Permutation& pi,
                                    std::uint32_t l) {
    if (!is_pseudo_linear(pi))
        throw std::invalid_argument("pseudo_linear_profile: permutation is not pseudo linear");
    std::uint32_t n = inst.levels();
    if (l < 3 || l > n)
        throw std::invalid_argument("pseudo_linear_profile: l must be in 3..n");

    ProfileReport rep;
    rep.l = l;
    rep.sizes = sizes_less_k(inst, pi, 0, pi(0), l);
    rep.p.assign(rep.sizes.size(), -1);

    for (std::size_t idx = 0; idx < rep.sizes.size(); ++idx) {
        std::uint64_t sz = rep.sizes[idx];
        std::uint32_t k = 3 + static_cast<std::uint32_t>(idx);
        if (sz == 0) {
            if (rep.k0 != 0)
                throw std::logic_error("pseudo_linear_profile: empty set above k0");
            continue;
        }
        if (rep.k0 == 0)
            rep.k0 = k;
        if (!is_power_of_two(sz))
            throw std::logic_error("pseudo_linear_profile: nonempty size is not a power of two");
        rep.p[idx] = static_cast<std::int32_t>(__builtin_ctzll(sz));
        if (idx > 0 && rep.p[idx - 1] >= 0 &&
            rep.p[idx] != rep.p[idx - 1] && rep.p[idx] != rep.p[idx - 1] + 1)
            throw std::logic_error("pseudo_linear_profile: p_{k+1} not in {p_k, p_k+1}");
    }

    // independence of (i,h): every nonempty size at level k must agree across
    // pairs (only k0 may move). Exhaustive over (i,h) up to n = 6, the
    // diagonal family plus a sampled grid beyond that.
    std::uint64_t N = inst.size();
    std::vector<std::uint64_t> common(rep.sizes.size(), 0);
    auto check_pair = [&](std::uint64_t i, std::uint64_t h) {
        auto sizes = sizes_less_k(inst, pi, i, h, l);
        for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
            if (sizes[idx] == 0)
                continue;
            if (!is_power_of_two(sizes[idx]))
                throw std::logic_error("pseudo_linear_profile: nonempty size is not a power of two");
            if (common[idx] == 0)
                common[idx] = sizes[idx];
            else if (common[idx] != sizes[idx])
                throw std::logic_error("pseudo_linear_profile: nonempty size depends on (i,h)");
        }
    };
    if (n <= 6) {
        for (std::uint64_t i = 0; i < N; ++i)
            for (std::uint64_t h = 0; h < N; ++h)
                check_pair(i, h);
    } else {
        for (std::uint64_t i = 0; i < N; ++i)
            check_pair(i, pi(i));
        std::uint64_t state = 0x5eedu + l;
        for (int t = 0; t < 64; ++t)
            check_pair(rng_below(state, N), rng_below(state, N));
    }
    for (std::size_t idx = 0; idx + 1 < common.size(); ++idx) {
        if (common[idx] == 0 || common[idx + 1] == 0)
            continue;
        if (common[idx + 1] != common[idx] && common[idx + 1] != 2 * common[idx])
            throw std::logic_error("pseudo_linear_profile: p_{k+1} not in {p_k, p_k+1}");
    }
    return rep;
}

DyadicRational diagonal_quantity(const KappaInstance& inst, const Permutation& pi) {
    if (!is_pseudo_linear(pi))
        throw std::invalid_argument("diagonal_quantity: permutation is not pseudo linear");
    std::uint32_t n = inst.levels();
    std::uint64_t N = inst.size();
    if (n < 3)
        return DyadicRational();

    std::int64_t total = 0;
    std::vector<std::vector<std::uint64_t>> hist(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint64_t i = 0; i < N; ++i) {
        for (auto& row : hist)
            std::fill(row.begin(), row.end(), 0);
        std::uint32_t hi = pi(i);
        for (std::uint64_t j = 0; j < N; ++j) {
            std::uint32_t kk = kappa(i ^ j);
            std::uint32_t ll = kappa(hi ^ pi(j));
            if (kk <= n && ll <= n)
                ++hist[ll][kk];
        }
        // inner sum at scale n: (-2)^{-k} -> sign * 2^{n-k}
        std::int64_t inner = 0;
        for (std::uint32_t l = 3; l <= n; ++l) {
            if (!((hi >> (l - 1)) & 1))
                continue;  // pi(i)_l, digits 1-indexed
            std::uint64_t acc = hist[l][1] + hist[l][2];  // |A_{<3,=l}|
            for (std::uint32_t k = 3; k <= n; ++k) {
                std::int64_t term = static_cast<std::int64_t>(acc) << (n - k);
                inner += (k % 2 == 0) ? term : -term;
                acc += hist[l][k];
            }
        }
        total += inner < 0 ? -inner : inner;
    }
    return DyadicRational::from_num_scale(total, 2 * n);
}

Lemma7Result lemma7_evaluate(const std::vector<std::uint32_t>& q, std::uint32_t m) {
    if (q.empty())
        throw std::invalid_argument("lemma7_evaluate: q must be nonempty");
    for (std::size_t idx = 0; idx + 1 < q.size(); ++idx)
        if (q[idx + 1] != q[idx] && q[idx + 1] != q[idx] + 1)
            throw std::invalid_argument("lemma7_evaluate: q must step by 0 or 1");

    Lemma7Result res;
    DyadicRational sum;
    for (std::size_t idx = 0; idx < q.size(); ++idx) {
        std::uint32_t k = m + static_cast<std::uint32_t>(idx);
        DyadicRational term = DyadicRational::from_num_scale(1, q[idx]);
        sum += (k % 2 == 0) ? term : -term;
    }
    res.lambda = (m % 2 == 0) ? sum : -sum;

    for (std::size_t idx = 0; idx + 1 < q.size(); ++idx) {
        std::uint32_t k = m + static_cast<std::uint32_t>(idx);
        if ((k + m) % 2 == 0 && q[idx + 1] == q[idx] + 1) {
            res.m_prime = k;
            break;
        }
    }

    DyadicRational mag = res.lambda.abs();
    if (mag > DyadicRational::from_integer(2))
        throw std::logic_error("lemma7_evaluate: |lambda| <= 2 violated");
    if (res.m_prime) {
        DyadicRational base = DyadicRational::from_num_scale(1, q[*res.m_prime - m]);
        if (mag < base.half() || mag > base.times_pow2(1))
            throw std::logic_error("lemma7_evaluate: lambda bracket violated");
    }
    return res;
}

std::vector<IdentityRatioRow> identity_alpha_ratio(std::uint32_t n_lo, std::uint32_t n_hi) {
    if (n_lo < 1 || n_hi > 14 || n_lo > n_hi)
        throw std::invalid_argument("identity_alpha_ratio: need 1 <= n_lo <= n_hi <= 14");
    std::vector<IdentityRatioRow> rows;
    for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
        KappaInstance inst(n);
        auto ident = Permutation::identity(n);
        auto order = ident.order();
        DyadicRational value = alpha_from_total(inst, alpha_total_scaled(inst, order));
        rows.push_back({n, value, value.to_double() / std::sqrt(static_cast<double>(n))});
    }
    return rows;
}

} // namespace umdsum
