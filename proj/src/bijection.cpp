#include "cspec/bijection.hpp"

#include <numeric>
#include <stdexcept>

namespace cspec {

VertexBijection::VertexBijection(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(n, false);
    for (int v : image_) {
        if (v < 0 || v >= n || seen[v]) throw std::domain_error("image is not a permutation of 0..n-1");
        seen[v] = true;
    }
}

VertexBijection VertexBijection::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return VertexBijection(std::move(img));
}

VertexBijection VertexBijection::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < n(); ++i) inv[image_[i]] = i;
    return VertexBijection(std::move(inv));
}

VertexBijection compose(const VertexBijection& outer, const VertexBijection& inner) {
    if (outer.n() != inner.n()) throw std::domain_error("composing bijections of different sizes");
    std::vector<int> img(inner.n());
    for (int i = 0; i < inner.n(); ++i) img[i] = outer(inner(i));
    return VertexBijection(std::move(img));
}

}  // namespace cspec
