#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace umdsum {

// Exact dyadic rational numerator / 2^scale, kept in canonical form:
// numerator odd or zero, scale zero when numerator is zero.
// All arithmetic is exact; any overflow throws instead of wrapping.
class DyadicRational {
public:
    constexpr DyadicRational() = default;

    static DyadicRational from_integer(std::int64_t value);

    // value = numerator / 2^scale (canonicalized on construction)
    static DyadicRational from_num_scale(std::int64_t numerator, std::uint32_t scale);

    // (-2)^{-k} for k >= 0, i.e. sign (-1)^k, magnitude 2^{-k}
    static DyadicRational neg_two_pow_minus(std::uint32_t k);

    std::int64_t numerator() const { return num_; }
    std::uint32_t scale() const { return scale_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    DyadicRational operator-() const;
    DyadicRational abs() const;
    DyadicRational operator+(const DyadicRational& rhs) const;
    DyadicRational operator-(const DyadicRational& rhs) const;
    DyadicRational& operator+=(const DyadicRational& rhs);
    DyadicRational& operator-=(const DyadicRational& rhs);

    // exact product with 2^e (e may be negative)
    DyadicRational times_pow2(std::int32_t e) const;
    // exact halving, used by martingale block averages
    DyadicRational half() const { return times_pow2(-1); }

    DyadicRational operator*(const DyadicRational& rhs) const;

    bool operator==(const DyadicRational& rhs) const {
        return num_ == rhs.num_ && scale_ == rhs.scale_;
    }
    std::strong_ordering operator<=>(const DyadicRational& rhs) const;

    // Exact decimal expansion (always terminates: 1/2^s = 5^s/10^s).
    // Truncates after max_digits fractional digits and appends "..." if
    // anything nonzero remains, mirroring the paper's table style.
    std::string to_decimal(std::size_t max_digits = 10) const;
    // all fractional digits, no truncation marker
    std::string to_decimal_exact() const;
    // "num/2^scale" (or plain integer when scale == 0)
    std::string to_fraction_string() const;

    // Parse a terminating decimal string ("-0.59375"); throws if the value
    // is not a dyadic rational or does not fit.
    static DyadicRational parse_decimal(const std::string& text);

    double to_double() const;

private:
    std::int64_t num_ = 0;
    std::uint32_t scale_ = 0;
};

} // namespace umdsum
