#include "ybg/permutation.hpp"

#include <numeric>

namespace ybg {

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw error("permutation images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        const std::vector<int> c(cyc);
        for (std::size_t k = 0; k < c.size(); ++k) {
            int from = c[k] - 1, to = c[(k + 1) % c.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n) throw error("cycle entry out of range");
            img[static_cast<std::size_t>(from)] = to;
        }
    }
    return from_images(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

int Permutation::parity() const {
    std::vector<bool> seen(img_.size(), false);
    int cycles = 0;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) seen[static_cast<std::size_t>(j)] = true;
    }
    return (size() - cycles) % 2 == 0 ? 1 : -1;
}

int Permutation::fixed_point_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) == i) ++c;
    return c;
}

long long Permutation::order() const {
    std::vector<bool> seen(img_.size(), false);
    long long ord = 1;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        long long len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw error("compose: size mismatch");
    std::vector<int> img(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) img[static_cast<std::size_t>(i)] = a(b(i));
    return Permutation::from_images(std::move(img));
}

Vec transported(const Permutation& p, const Vec& v) {
    Vec out(v.size());
    for (int i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p(i))] = v[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace ybg
