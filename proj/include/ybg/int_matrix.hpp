#pragma once

#include <optional>
#include <vector>

#include "ybg/base.hpp"
#include "ybg/permutation.hpp"

namespace ybg {

/// Dense square integer matrix; column j holds the image of the j-th basis
/// vector under the map it represents.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    /// P with P e_i = e_{p(i)}.
    static IntMatrix permutation_matrix(const Permutation& p);

    int size() const { return n_; }
    long long& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    long long at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    Vec column(int j) const;
    void set_column(int j, const Vec& v);
    Vec row(int i) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;
    /// Row-major lexicographic order; used to keep search output stable.
    bool operator<(const IntMatrix& rhs) const { return a_ < rhs.a_; }

    /// Exact integer determinant (fraction-free Bareiss elimination).
    long long determinant() const;
    bool is_unimodular() const;

    struct GenPermDecomposition {
        Permutation positions;   // column j is signs[j] * e_{positions(j)}
        std::vector<int> signs;  // each +1 or -1
    };
    /// Nonempty iff the matrix has exactly one nonzero entry per row and
    /// column and every nonzero entry is +-1.
    std::optional<GenPermDecomposition> generalized_permutation() const;

    /// Integer inverse via the adjugate; requires det = +-1.
    IntMatrix inverse_unimodular() const;

    IntMatrix power(long long k) const;  // k >= 0

private:
    int n_ = 0;
    std::vector<long long> a_;
};

}  // namespace ybg
