#include "umdsum/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace umdsum {

namespace {

using i128 = __int128;

std::int64_t narrow_checked(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error("DyadicRational: 64-bit overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace

DyadicRational DyadicRational::from_integer(std::int64_t value) {
    return from_num_scale(value, 0);
}

DyadicRational DyadicRational::from_num_scale(std::int64_t numerator, std::uint32_t scale) {
    DyadicRational r;
    if (numerator == 0)
        return r;
    while (scale > 0 && (numerator & 1) == 0) {
        numerator >>= 1;
        --scale;
    }
    r.num_ = numerator;
    r.scale_ = scale;
    return r;
}

DyadicRational DyadicRational::neg_two_pow_minus(std::uint32_t k) {
    if (k >= 63)
        throw std::overflow_error("neg_two_pow_minus: exponent too large");
    std::int64_t n = (k % 2 == 0) ? 1 : -1;
    return from_num_scale(n, k);
}

DyadicRational DyadicRational::operator-() const {
    DyadicRational r;
    r.num_ = -num_;
    r.scale_ = scale_;
    return r;
}

DyadicRational DyadicRational::abs() const {
    return num_ < 0 ? -*this : *this;
}

DyadicRational DyadicRational::operator+(const DyadicRational& rhs) const {
    std::uint32_t s = scale_ > rhs.scale_ ? scale_ : rhs.scale_;
    if (s >= 126)
        throw std::overflow_error("DyadicRational: scale too large");
    i128 a = i128(num_) << (s - scale_);
    i128 b = i128(rhs.num_) << (s - rhs.scale_);
    i128 sum = a + b;
    // canonicalize in 128 bits before narrowing: the canonical numerator
    // can fit even when the aligned intermediates do not
    std::uint32_t sc = s;
    while (sc > 0 && sum != 0 && (sum & 1) == 0) {
        sum >>= 1;
        --sc;
    }
    if (sum == 0)
        return DyadicRational();
    DyadicRational r;
    r.num_ = narrow_checked(sum);
    r.scale_ = sc;
    return r;
}

DyadicRational DyadicRational::operator-(const DyadicRational& rhs) const {
    return *this + (-rhs);
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs) {
    *this = *this + rhs;
    return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& rhs) {
    *this = *this - rhs;
    return *this;
}

DyadicRational DyadicRational::times_pow2(std::int32_t e) const {
    if (num_ == 0)
        return DyadicRational();
    if (e >= 0) {
        if (e >= 63)
            throw std::overflow_error("times_pow2: exponent too large");
        i128 n = i128(num_) << e;
        std::uint32_t sc = scale_;
        while (sc > 0 && (n & 1) == 0) {
            n >>= 1;
            --sc;
        }
        DyadicRational r;
        r.num_ = narrow_checked(n);
        r.scale_ = sc;
        return r;
    }
    DyadicRational r;
    r.num_ = num_;
    std::uint32_t shift = static_cast<std::uint32_t>(-e);
    if (scale_ > UINT32_MAX - shift)
        throw std::overflow_error("times_pow2: scale overflow");
    r.scale_ = scale_ + shift;
    return r;
}

DyadicRational DyadicRational::operator*(const DyadicRational& rhs) const {
    if (num_ == 0 || rhs.num_ == 0)
        return DyadicRational();
    i128 p = i128(num_) * i128(rhs.num_);
    DyadicRational r;
    r.num_ = narrow_checked(p);  // both factors odd, product odd: already canonical
    r.scale_ = scale_ + rhs.scale_;
    return r;
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& rhs) const {
    std::uint32_t s = scale_ > rhs.scale_ ? scale_ : rhs.scale_;
    if (s >= 126)
        throw std::overflow_error("DyadicRational: scale too large");
    i128 a = i128(num_) << (s - scale_);
    i128 b = i128(rhs.num_) << (s - rhs.scale_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string DyadicRational::to_decimal(std::size_t max_digits) const {
    std::string out;
    std::int64_t n = num_;
    if (n < 0) {
        out.push_back('-');
        n = -n;
    }
    if (scale_ >= 60)
        throw std::overflow_error("to_decimal: scale too large for digit loop");
    std::int64_t ipart = n >> scale_;
    std::int64_t frac = n - (ipart << scale_);
    out += std::to_string(ipart);
    if (frac == 0)
        return out;
    out.push_back('.');
    std::size_t emitted = 0;
    while (frac != 0 && emitted < max_digits) {
        frac *= 10;
        out.push_back(static_cast<char>('0' + (frac >> scale_)));
        frac &= (std::int64_t(1) << scale_) - 1;
        ++emitted;
    }
    if (frac != 0)
        out += "...";
    return out;
}

std::string DyadicRational::to_decimal_exact() const {
    // a dyadic value at scale s has exactly <= s fractional digits
    return to_decimal(scale_ == 0 ? 1 : scale_);
}

std::string DyadicRational::to_fraction_string() const {
    if (scale_ == 0)
        return std::to_string(num_);
    return std::to_string(num_) + "/2^" + std::to_string(scale_);
}

DyadicRational DyadicRational::parse_decimal(const std::string& text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::string& dst) {
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            dst.push_back(text[pos++]);
    };
    std::string ip, fp;
    digits(ip);
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        digits(fp);
    }
    if (pos != text.size() || (ip.empty() && fp.empty()))
        throw std::invalid_argument("parse_decimal: malformed number '" + text + "'");
    i128 mantissa = 0;
    for (char c : ip) mantissa = mantissa * 10 + (c - '0');
    i128 pow5 = 1;
    for (char c : fp) {
        mantissa = mantissa * 10 + (c - '0');
        pow5 *= 5;
        if (mantissa > (i128(INT64_MAX) << 40))
            throw std::overflow_error("parse_decimal: too many digits");
    }
    // value = mantissa / 10^f = mantissa / (5^f * 2^f); dyadic iff 5^f | mantissa
    if (mantissa % pow5 != 0)
        throw std::invalid_argument("parse_decimal: '" + text + "' is not a dyadic rational");
    i128 n = mantissa / pow5;
    if (neg) n = -n;
    return from_num_scale(narrow_checked(n), static_cast<std::uint32_t>(fp.size()));
}

double DyadicRational::to_double() const {
    return std::ldexp(static_cast<double>(num_), -static_cast<int>(scale_));
}

} // namespace umdsum
