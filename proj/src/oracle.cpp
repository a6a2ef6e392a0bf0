#include "ybg/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ybg {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long WordClassTable::encode(const std::vector<int>& word) const {
    long long code = 0;
    for (int g : word) {
        if (g < 0 || g >= s.n) throw error("oracle: generator index out of range");
        code = code * s.n + g;
    }
    return code;
}

std::vector<int> WordClassTable::decode(long long code, int len) const {
    std::vector<int> word(static_cast<std::size_t>(len));
    for (int p = len - 1; p >= 0; --p) {
        word[static_cast<std::size_t>(p)] = static_cast<int>(code % s.n);
        code /= s.n;
    }
    return word;
}

int WordClassTable::class_id(const std::vector<int>& word) const {
    const int k = static_cast<int>(word.size());
    if (k < 1 || k > max_len) throw error("oracle: word length outside the table");
    return class_of[static_cast<std::size_t>(k)][static_cast<std::size_t>(encode(word))];
}

std::vector<std::vector<int>> WordClassTable::class_members(const std::vector<int>& word) const {
    const int k = static_cast<int>(word.size());
    const int id = class_id(word);
    std::vector<std::vector<int>> members;
    const auto& table = class_of[static_cast<std::size_t>(k)];
    for (long long code = 0; code < static_cast<long long>(table.size()); ++code)
        if (table[static_cast<std::size_t>(code)] == id) members.push_back(decode(code, k));
    return members;
}

std::vector<int> WordClassTable::representative(const std::vector<int>& word) const {
    const int k = static_cast<int>(word.size());
    const int id = class_id(word);
    const auto& table = class_of[static_cast<std::size_t>(k)];
    for (long long code = 0; code < static_cast<long long>(table.size()); ++code)
        if (table[static_cast<std::size_t>(code)] == id) return decode(code, k);
    throw error("oracle: class without members");
}

WordClassTable build_table(const Solution& s, int max_len) {
    long long total = 1;
    for (int k = 0; k < max_len; ++k) {
        total *= s.n;
        if (total > 1000000) throw error("build_table: n^L exceeds the cap");
    }
    WordClassTable t;
    t.s = s;
    t.max_len = max_len;
    t.class_of.resize(static_cast<std::size_t>(max_len) + 1);
    t.class_count.assign(static_cast<std::size_t>(max_len) + 1, 0);

    for (int k = 1; k <= max_len; ++k) {
        long long count = 1;
        for (int q = 0; q < k; ++q) count *= s.n;
        // union-find over all length-k words; each position rewrite
        // (a,b) -> S(a,b) merges two words of equal length
        std::vector<int> parent(static_cast<std::size_t>(count));
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> find_stack;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        };
        std::vector<long long> pow(static_cast<std::size_t>(k));
        pow[static_cast<std::size_t>(k - 1)] = 1;
        for (int p = k - 2; p >= 0; --p)
            pow[static_cast<std::size_t>(p)] = pow[static_cast<std::size_t>(p + 1)] * s.n;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> w = t.decode(code, k);
            for (int p = 0; p + 1 < k; ++p) {
                auto [a, b] = s.apply_s(w[static_cast<std::size_t>(p)], w[static_cast<std::size_t>(p + 1)]);
                const long long other = code +
                    (a - w[static_cast<std::size_t>(p)]) * pow[static_cast<std::size_t>(p)] +
                    (b - w[static_cast<std::size_t>(p + 1)]) * pow[static_cast<std::size_t>(p + 1)];
                unite(static_cast<int>(code), static_cast<int>(other));
            }
        }
        // dense class ids in order of least member
        std::vector<int>& cls = t.class_of[static_cast<std::size_t>(k)];
        cls.assign(static_cast<std::size_t>(count), -1);
        int next_id = 0;
        for (long long code = 0; code < count; ++code) {
            const int root = find(static_cast<int>(code));
            if (cls[static_cast<std::size_t>(root)] < 0) cls[static_cast<std::size_t>(root)] = next_id++;
            cls[static_cast<std::size_t>(code)] = cls[static_cast<std::size_t>(root)];
        }
        t.class_count[static_cast<std::size_t>(k)] = next_id;
    }
    return t;
}

std::vector<long long> oracle_counts(const WordClassTable& t) {
    return {t.class_count.begin() + 1, t.class_count.end()};
}

bool oracle_divides(const WordClassTable& t, const std::vector<int>& u, const std::vector<int>& v,
                    Side side) {
    const int lu = static_cast<int>(u.size()), lv = static_cast<int>(v.size());
    if (lu > lv) return false;
    if (lu == 0) return true;
    if (lv > t.max_len) throw error("oracle_divides: word length outside the table");
    const int want = t.class_id(u);
    for (const auto& member : t.class_members(v)) {
        std::vector<int> part;
        if (side == Side::Right)
            part.assign(member.end() - lu, member.end());
        else
            part.assign(member.begin(), member.begin() + lu);
        if (t.class_id(part) == want) return true;
    }
    return false;
}

std::optional<std::vector<int>> oracle_lcm_right(const WordClassTable& t, const std::vector<int>& u,
                                                 const std::vector<int>& v) {
    const int start = std::max<int>(1, static_cast<int>(std::max(u.size(), v.size())));
    for (int len = start; len <= t.max_len; ++len) {
        std::vector<std::vector<int>> hits;
        std::vector<int> seen_ids;
        long long count = 1;
        for (int q = 0; q < len; ++q) count *= t.s.n;
        for (long long code = 0; code < count; ++code) {
            const int id = t.class_of[static_cast<std::size_t>(len)][static_cast<std::size_t>(code)];
            if (std::find(seen_ids.begin(), seen_ids.end(), id) != seen_ids.end()) continue;
            seen_ids.push_back(id);
            std::vector<int> w = t.decode(code, len);
            if (oracle_divides(t, u, w, Side::Right) && oracle_divides(t, v, w, Side::Right))
                hits.push_back(std::move(w));
        }
        if (hits.size() == 1) return hits.front();
        if (hits.size() > 1) {
            // keep the ones every other hit is a multiple of
            for (const auto& h : hits) {
                bool minimal = true;
                for (const auto& o : hits)
                    if (!oracle_divides(t, h, o, Side::Right)) {
                        minimal = false;
                        break;
                    }
                if (minimal) return h;
            }
            throw error("oracle_lcm_right: multiple minimal common multiples");
        }
    }
    return std::nullopt;
}

}  // namespace ybg
