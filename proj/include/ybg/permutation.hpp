#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "ybg/base.hpp"

namespace ybg {

/// Bijection of {0..n-1}. Immutable after construction.
class Permutation {
public:
    Permutation() = default;
    /// Identity on n points.
    explicit Permutation(int n);

    /// Validates that `images` is a bijection of {0..n-1}.
    static Permutation from_images(std::vector<int> images);
    /// Cycles in 1-based notation, e.g. from_cycles(4, {{1,4,3,2}}).
    static Permutation from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;
    int parity() const;  // +1 even, -1 odd
    int fixed_point_count() const;
    long long order() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

/// (a o b)(x) = a(b(x)); the right factor is applied first.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// Coordinate transport along p: out[p(i)] = v[i].
Vec transported(const Permutation& p, const Vec& v);

}  // namespace ybg
