#include "ybg/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace ybg {

namespace {

using int128 = __int128;

long long checked_narrow(int128 v) {
    if (v > int128(9223372036854775807LL) || v < -int128(9223372036854775807LL))
        throw error("integer overflow in exact matrix arithmetic");
    return static_cast<long long>(v);
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw error("from_rows: matrix is not square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::permutation_matrix(const Permutation& p) {
    IntMatrix m(p.size());
    for (int i = 0; i < p.size(); ++i) m.at(p(i), i) = 1;
    return m;
}

Vec IntMatrix::column(int j) const {
    Vec v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

void IntMatrix::set_column(int j, const Vec& v) {
    for (int i = 0; i < n_; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
}

Vec IntMatrix::row(int i) const {
    Vec v(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
    return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw error("matrix product: size mismatch");
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const long long aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j)
                out.at(i, j) = checked_narrow(int128(out.at(i, j)) + int128(aik) * rhs.at(k, j));
        }
    return out;
}

long long IntMatrix::determinant() const {
    if (n_ == 0) return 1;
    // Bareiss fraction-free elimination; every intermediate entry is a minor
    // of the input, so the arithmetic stays exact. Intermediates are bounded
    // by Hadamard's inequality; keep their products inside __int128.
    long double hadamard = 1.0L;
    long long max_abs = 0;
    for (long long v : a_) max_abs = std::max(max_abs, v < 0 ? -v : v);
    for (int i = 0; i < n_; ++i) hadamard *= static_cast<long double>(max_abs) * n_;
    if (hadamard > 1.5e18L) throw error("determinant: entries too large for exact evaluation");
    std::vector<int128> w(a_.begin(), a_.end());
    auto e = [&](int r, int c) -> int128& { return w[static_cast<std::size_t>(r) * n_ + c]; };
    int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n_ - 1; ++k) {
        if (e(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n_; ++r)
                if (e(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            for (int c = k; c < n_; ++c) std::swap(e(k, c), e(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
        prev = e(k, k);
    }
    return sign * checked_narrow(e(n_ - 1, n_ - 1));
}

bool IntMatrix::is_unimodular() const {
    const long long d = determinant();
    return d == 1 || d == -1;
}

std::optional<IntMatrix::GenPermDecomposition> IntMatrix::generalized_permutation() const {
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    std::vector<int> signs(static_cast<std::size_t>(n_), 0);
    std::vector<bool> row_used(static_cast<std::size_t>(n_), false);
    for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < n_; ++i) {
            const long long v = at(i, j);
            if (v == 0) continue;
            if (v != 1 && v != -1) return std::nullopt;
            if (pos[static_cast<std::size_t>(j)] != -1) return std::nullopt;  // second nonzero in column
            if (row_used[static_cast<std::size_t>(i)]) return std::nullopt;   // second nonzero in row
            pos[static_cast<std::size_t>(j)] = i;
            signs[static_cast<std::size_t>(j)] = static_cast<int>(v);
            row_used[static_cast<std::size_t>(i)] = true;
        }
        if (pos[static_cast<std::size_t>(j)] == -1) return std::nullopt;  // zero column
    }
    return GenPermDecomposition{Permutation::from_images(std::move(pos)), std::move(signs)};
}

IntMatrix IntMatrix::inverse_unimodular() const {
    const long long d = determinant();
    if (d != 1 && d != -1) throw error("inverse_unimodular: determinant is not +-1");
    IntMatrix inv(n_);
    if (n_ == 1) {
        inv.at(0, 0) = d;
        return inv;
    }
    IntMatrix minor(n_ - 1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            for (int r = 0, rr = 0; r < n_; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n_; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = at(r, c);
                    ++cc;
                }
                ++rr;
            }
            const long long cof = ((i + j) % 2 == 0 ? 1 : -1) * minor.determinant();
            inv.at(j, i) = d * cof;  // adjugate transposes indices
        }
    return inv;
}

IntMatrix IntMatrix::power(long long k) const {
    if (k < 0) throw error("power: negative exponent");
    IntMatrix acc = identity(n_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

}  // namespace ybg
