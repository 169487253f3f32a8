#include "umdsum/kappa.hpp"

#include <cmath>
#include <stdexcept>

namespace umdsum {

KappaInstance::KappaInstance(std::uint32_t n) : n_(n) {
    if (n == 0 || n > 24)
        throw std::invalid_argument("KappaInstance: n must be in 1..24");
    scale_ = n < 2 ? 2 : n;
    std::uint64_t N = size();
    kappa_table_.resize(N);
    entry_scaled_.resize(N);
    for (std::uint64_t x = 0; x < N; ++x) {
        std::uint32_t k = kappa(x);
        kappa_table_[x] = k;
        std::int64_t mag = std::int64_t(1) << (scale_ - k);
        entry_scaled_[x] = (k % 2 == 0) ? mag : -mag;
    }
}

DyadicRational KappaInstance::entry(std::uint64_t x) const {
    if (x >= size())
        throw std::out_of_range("KappaInstance::entry: index out of range");
    return DyadicRational::from_num_scale(entry_scaled_[x], scale_);
}

DyadicRational KappaInstance::matrix_entry(std::uint64_t i, std::uint64_t j) const {
    if (i >= size() || j >= size())
        throw std::out_of_range("KappaInstance::matrix_entry: index out of range");
    return entry(i ^ j);
}

std::uint64_t KappaInstance::level_count(std::uint64_t i, std::uint32_t k) const {
    if (i >= size())
        throw std::out_of_range("KappaInstance::level_count: index out of range");
    if (k < 1 || k > (n_ < 2 ? 2 : n_))
        throw std::out_of_range("KappaInstance::level_count: level out of range");
    std::uint64_t count = 0;
    for (std::uint64_t j = 0; j < size(); ++j)
        if (kappa_table_[i ^ j] == k)
            ++count;
    return count;
}

DyadicRational KappaInstance::row_sum() const {
    DyadicRational sum;
    for (std::uint64_t x = 0; x < size(); ++x)
        sum += entry(x);
    return sum;
}

namespace {

inline std::uint32_t bit_at(std::uint64_t v, std::uint32_t k) {
    // 1-indexed digits: v = sum v_k 2^{k-1}
    return static_cast<std::uint32_t>((v >> (k - 1)) & 1);
}

} // namespace

std::string KappaCheckReport::summary() const {
    std::string s = "lemma1 cases: " + std::to_string(lemma1_cases) +
                    ", property pairs: " + std::to_string(property_pairs) +
                    ", failures: " + std::to_string(failures.size());
    for (const auto& f : failures) {
        s += "\n  " + f.property + " at (i=" + std::to_string(f.i) +
             ", j=" + std::to_string(f.j) + "): " + f.detail;
    }
    return s;
}

KappaCheckReport check_kappa_identities(std::uint64_t limit, std::uint64_t pair_budget) {
    KappaCheckReport report;
    if (limit < 1)
        throw std::invalid_argument("check_kappa_identities: limit must be >= 1");

    for (std::uint64_t i = 0; i < limit; ++i) {
        DyadicRational lhs = DyadicRational::neg_two_pow_minus(kappa((2 * i) ^ 1)) +
                             DyadicRational::neg_two_pow_minus(kappa(2 * i));
        DyadicRational rhs = -DyadicRational::neg_two_pow_minus(kappa(i));
        ++report.lemma1_cases;
        if (!(lhs == rhs)) {
            report.failures.push_back({"lemma1", i, 0,
                                       lhs.to_fraction_string() + " != " + rhs.to_fraction_string()});
            if (report.failures.size() > 16)
                return report;
        }
    }

    std::uint64_t p = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(pair_budget)));
    if (p < 2) p = 2;
    // choose the smallest n with i, j < 2^n for the sibling-interval property
    std::uint32_t n = 1;
    while ((std::uint64_t(1) << n) < p) ++n;

    auto fail = [&](const char* prop, std::uint64_t i, std::uint64_t j, const std::string& d) {
        report.failures.push_back({prop, i, j, d});
    };

    for (std::uint64_t i = 0; i < p && report.failures.size() <= 16; ++i) {
        // eq (3): 2^{kappa(i)-1} <= i < 2^{kappa(i)} for i != 0
        if (i != 0) {
            std::uint32_t k = kappa(i);
            if (!((std::uint64_t(1) << (k - 1)) <= i && i < (std::uint64_t(1) << k)))
                fail("eq3", i, 0, "digit-count bracket violated");
        }
        for (std::uint64_t j = 0; j < p; ++j) {
            if (i == j)
                continue;
            ++report.property_pairs;
            std::uint32_t kx = kappa(i ^ j);

            // eq (4): kappa(i^j) = min{k : i and j lie in one aligned block of 2^k}
            std::uint32_t mink = 0;
            for (std::uint32_t k = 1; k <= n; ++k) {
                if ((i >> k) == (j >> k)) {
                    mink = k;
                    break;
                }
            }
            if (mink != kx) {
                fail("eq4", i, j, "minimal block " + std::to_string(mink) +
                                  " vs kappa " + std::to_string(kx));
                continue;
            }

            // eq (5): i2^-n in the sibling of Delta_k(j2^-n) iff kappa(i^j) = n-k+1
            for (std::uint32_t k = 1; k <= n; ++k) {
                bool share_coarse = (i >> (n - k + 1)) == (j >> (n - k + 1));
                bool share_fine = (i >> (n - k)) == (j >> (n - k));
                bool sibling = share_coarse && !share_fine;
                if (sibling != (kx == n - k + 1)) {
                    fail("eq5", i, j, "k=" + std::to_string(k));
                    break;
                }
            }

            // eq (9): i < j iff j has digit 1 at position kappa(i^j)
            bool lt = i < j;
            if (lt != (bit_at(j, kx) == 1) || lt != (bit_at(i, kx) == 0)) {
                fail("eq9", i, j, "order criterion");
                continue;
            }

            // eqs (6)-(8), stated for levels k > 2
            std::uint32_t ki = kappa(i), kj = kappa(j);
            for (std::uint32_t k = 3; k <= n; ++k) {
                if (ki == k && kj == k && !(kx < k)) {
                    fail("eq6", i, j, "k=" + std::to_string(k));
                    break;
                }
                if (((ki == k && kj < k) || (kj == k && ki < k)) && kx != k) {
                    fail("eq7", i, j, "k=" + std::to_string(k));
                    break;
                }
                if (ki < k && kj < k && !(kx < k)) {
                    fail("eq8", i, j, "k=" + std::to_string(k));
                    break;
                }
            }
        }
    }
    return report;
}

} // namespace umdsum
