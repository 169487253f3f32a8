#include "umdsum/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace umdsum {

Permutation::Permutation(std::uint32_t n, std::vector<std::uint32_t> image)
    : n_(n), image_(std::move(image)) {
    if (n == 0 || n > 24)
        throw std::invalid_argument("Permutation: n must be in 1..24");
    std::uint64_t N = std::uint64_t(1) << n;
    if (image_.size() != N)
        throw std::invalid_argument("Permutation: expected " + std::to_string(N) +
                                    " images, got " + std::to_string(image_.size()));
    std::vector<bool> seen(N, false);
    for (std::uint64_t j = 0; j < N; ++j) {
        if (image_[j] >= N)
            throw std::invalid_argument("image out of range at index " + std::to_string(j));
        if (seen[image_[j]])
            throw std::invalid_argument("not a bijection at index " + std::to_string(j));
        seen[image_[j]] = true;
    }
}

Permutation Permutation::identity(std::uint32_t n) {
    std::vector<std::uint32_t> img(std::uint64_t(1) << n);
    std::iota(img.begin(), img.end(), 0u);
    return Permutation(n, std::move(img));
}

Permutation Permutation::parse_line(std::uint32_t n, const std::string& line) {
    std::istringstream in(line);
    std::vector<std::uint32_t> img;
    long long v;
    while (in >> v) {
        if (v < 0)
            throw std::invalid_argument("image out of range at index " + std::to_string(img.size()));
        img.push_back(static_cast<std::uint32_t>(v));
    }
    if (!in.eof()) {
        std::string tail;
        in.clear();
        in >> tail;
        throw std::invalid_argument("malformed permutation token '" + tail + "' at index " +
                                    std::to_string(img.size()));
    }
    return Permutation(n, std::move(img));
}

std::vector<std::uint32_t> Permutation::order() const {
    std::vector<std::uint32_t> ord(image_.size());
    for (std::uint64_t j = 0; j < image_.size(); ++j)
        ord[image_[j]] = static_cast<std::uint32_t>(j);
    return ord;
}

Permutation Permutation::inverse() const {
    return Permutation(n_, order());
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.levels() != inner.levels())
        throw std::invalid_argument("compose: level mismatch");
    std::vector<std::uint32_t> img(inner.size());
    for (std::uint64_t j = 0; j < inner.size(); ++j)
        img[j] = outer(inner(j));
    return Permutation(outer.levels(), std::move(img));
}

bool Permutation::is_identity() const {
    for (std::uint64_t j = 0; j < image_.size(); ++j)
        if (image_[j] != j)
            return false;
    return true;
}

std::string Permutation::to_line() const {
    std::string s;
    for (std::uint64_t j = 0; j < image_.size(); ++j) {
        if (j) s.push_back(' ');
        s += std::to_string(image_[j]);
    }
    return s;
}

} // namespace umdsum
