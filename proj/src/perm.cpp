#include "fixig/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace fixig {

namespace {

void validate_bijection(const std::vector<std::uint8_t>& img) {
    std::vector<bool> seen(img.size(), false);
    for (std::uint8_t v : img) {
        if (v >= img.size() || seen[v])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[v] = true;
    }
}

} // namespace

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    validate_bijection(img_);
}

Perm Perm::identity(int n) {
    std::vector<std::uint8_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::from_images(std::span<const int> images) {
    std::vector<std::uint8_t> img;
    img.reserve(images.size());
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()))
            throw std::invalid_argument("permutation image out of range");
        img.push_back(static_cast<std::uint8_t>(v));
    }
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<std::uint8_t> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
    Perm p;
    p.img_ = std::move(inv);
    return p;
}

std::string Perm::to_line() const {
    std::ostringstream out;
    for (int i = 0; i < degree(); ++i) {
        if (i) out << ' ';
        out << static_cast<int>(img_[i]);
    }
    return out.str();
}

Perm Perm::from_line(const std::string& s) {
    std::istringstream in(s);
    std::vector<int> images;
    int v = 0;
    while (in >> v) images.push_back(v);
    if (images.empty()) throw std::invalid_argument("empty permutation line");
    return from_images(images);
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: permutation degrees differ");
    std::vector<std::uint8_t> img(a.degree());
    for (int v = 0; v < a.degree(); ++v) img[v] = static_cast<std::uint8_t>(a(b(v)));
    return Perm(std::move(img));
}

} // namespace fixig
