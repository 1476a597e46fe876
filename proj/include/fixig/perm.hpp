#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fixig {

// Permutation of {0..n-1}, stored as its image array.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> images);  // validates bijection
    static Perm identity(int n);
    static Perm from_images(std::span<const int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[v]; }
    std::span<const std::uint8_t> images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& other) const { return img_ < other.img_; }

    std::string to_line() const;                   // "0 2 1 3"
    static Perm from_line(const std::string& s);

private:
    std::vector<std::uint8_t> img_;
};

// (a*b)(v) = a(b(v)); throws on degree mismatch.
Perm compose(const Perm& a, const Perm& b);

} // namespace fixig
