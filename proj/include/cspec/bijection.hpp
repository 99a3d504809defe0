#pragma once

#include <vector>

namespace cspec {

/// A bijection of {0..n-1}: the "pseudoordering" indexing spectrum
/// enumeration. Immutable once constructed.
class VertexBijection {
public:
    VertexBijection() = default;
    /// Validates that `image` is a permutation of 0..n-1.
    explicit VertexBijection(std::vector<int> image);

    static VertexBijection identity(int n);

    int n() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[v]; }
    const std::vector<int>& image() const { return image_; }

    VertexBijection inverse() const;

    friend bool operator==(const VertexBijection&, const VertexBijection&) = default;
    friend bool operator<(const VertexBijection& a, const VertexBijection& b) {
        return a.image_ < b.image_;
    }

private:
    std::vector<int> image_;
};

/// compose(f, g)(x) = f(g(x)).
VertexBijection compose(const VertexBijection& outer, const VertexBijection& inner);

}  // namespace cspec
