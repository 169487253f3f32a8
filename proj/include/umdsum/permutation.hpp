#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace umdsum {

// Bijection on {0,...,2^n-1}, stored as the image array pi(0),...,pi(2^n-1).
// Constructors reject non-bijections; the error message names the first
// offending index.
class Permutation {
public:
    Permutation(std::uint32_t n, std::vector<std::uint32_t> image);

    static Permutation identity(std::uint32_t n);

    // single text line of 2^n whitespace-separated 0-based images
    static Permutation parse_line(std::uint32_t n, const std::string& line);

    std::uint32_t levels() const { return n_; }
    std::uint64_t size() const { return image_.size(); }
    std::uint32_t operator()(std::uint64_t j) const { return image_[j]; }
    const std::vector<std::uint32_t>& image() const { return image_; }

    // order()[r] = the index whose rank is r, i.e. the inverse image array
    std::vector<std::uint32_t> order() const;
    Permutation inverse() const;

    // (outer . inner)(j) = outer(inner(j))
    friend Permutation compose(const Permutation& outer, const Permutation& inner);

    bool is_identity() const;
    std::string to_line() const;

    bool operator==(const Permutation& rhs) const = default;
    // lexicographic order on image arrays, used for witness tie-breaking
    bool lex_less(const Permutation& rhs) const { return image_ < rhs.image_; }

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> image_;
};

Permutation compose(const Permutation& outer, const Permutation& inner);

} // namespace umdsum
