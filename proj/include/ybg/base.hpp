#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ybg {

/// Library-wide error for violated preconditions and malformed input.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vector in Z^n (the multiplicative word t_1^{a_1}...t_n^{a_n}
/// stored additively). All indices are 0-based internally.
using Vec = std::vector<long long>;

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), 0); }

inline Vec unit_vec(int n, int i) {
    Vec v = zero_vec(n);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline long long l1_norm(const Vec& v) {
    long long s = 0;
    for (long long x : v) s += x < 0 ? -x : x;
    return s;
}

/// Coordinatewise residues in [0, m).
inline Vec reduce_mod(const Vec& v, long long m) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = ((v[i] % m) + m) % m;
    return r;
}

}  // namespace ybg
