#pragma once

#include <optional>
#include <vector>

#include "ybg/garside.hpp"
#include "ybg/solution.hpp"

namespace ybg {

/// Brute-force ground truth at tiny scale: positive words modulo the
/// congruence generated by the defining relations. All relations preserve
/// length, so the congruence is length-graded and plain fixpoint closure
/// terminates. Words of length k are encoded as base-n integers, most
/// significant digit first.
struct WordClassTable {
    Solution s;
    int max_len = 0;
    // class_of[k][code] = class id of the length-k word `code`; class ids are
    // dense per length and the representative is the least code in the class.
    std::vector<std::vector<int>> class_of;
    std::vector<long long> class_count;  // index k

    long long encode(const std::vector<int>& word) const;
    std::vector<int> decode(long long code, int len) const;
    int class_id(const std::vector<int>& word) const;
    /// Lexicographically least member of the word's class.
    std::vector<int> representative(const std::vector<int>& word) const;
    std::vector<std::vector<int>> class_members(const std::vector<int>& word) const;
};

/// Requires n^max_len <= 10^6.
WordClassTable build_table(const Solution& s, int max_len);

/// class_count per length 1..max_len; bijectivity of pi onto nonnegative
/// vectors forces count(k) = C(n+k-1, k).
std::vector<long long> oracle_counts(const WordClassTable& t);

/// u divides v on the given side iff some member of v's class has a
/// prefix/suffix in u's class.
bool oracle_divides(const WordClassTable& t, const std::vector<int>& u,
                    const std::vector<int>& v, Side side);

/// Least-length common multiple w.r.t. right-divisibility, as a class
/// representative; nullopt if none exists within the table's length cap.
std::optional<std::vector<int>> oracle_lcm_right(const WordClassTable& t,
                                                 const std::vector<int>& u,
                                                 const std::vector<int>& v);

long long binomial(long long n, long long k);

}  // namespace ybg
