#include "ybg/io.hpp"

#include <fstream>
#include <sstream>

namespace ybg {

namespace {

// Strips '#' comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

long long to_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + tok + "'", line_no);
    }
}

struct LineReader {
    std::istream& in;
    int line_no = 0;
    bool next(std::vector<std::string>& toks) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            const std::string line = clean_line(raw);
            if (line.empty()) continue;
            toks = tokens_of(line);
            return true;
        }
        return false;
    }
};

}  // namespace

Solution parse_solution(std::istream& in) {
    LineReader rd{in};
    std::vector<std::string> toks;
    if (!rd.next(toks) || toks.size() != 2 || toks[0] != "n")
        throw parse_error("solution file must start with 'n <size>'", rd.line_no);
    const int n = static_cast<int>(to_int(toks[1], rd.line_no));
    if (n < 1 || n > 64) throw parse_error("unsupported solution size", rd.line_no);

    std::vector<Permutation> f(static_cast<std::size_t>(n), Permutation(0));
    std::vector<Permutation> g(f);
    std::vector<bool> have_f(static_cast<std::size_t>(n), false), have_g(have_f);
    for (int row = 0; row < 2 * n; ++row) {
        if (!rd.next(toks)) throw parse_error("missing permutation rows", rd.line_no);
        if (toks.size() != static_cast<std::size_t>(n) + 2 || (toks[0] != "f" && toks[0] != "g"))
            throw parse_error("expected 'f <i> <images>' or 'g <i> <images>'", rd.line_no);
        const int idx = static_cast<int>(to_int(toks[1], rd.line_no)) - 1;
        if (idx < 0 || idx >= n) throw parse_error("row index out of range", rd.line_no);
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const long long v = to_int(toks[static_cast<std::size_t>(k) + 2], rd.line_no);
            if (v < 1 || v > n) throw parse_error("image out of range", rd.line_no);
            img[static_cast<std::size_t>(k)] = static_cast<int>(v) - 1;
        }
        Permutation p;
        try {
            p = Permutation::from_images(std::move(img));
        } catch (const error& e) {
            throw parse_error(e.what(), rd.line_no);
        }
        auto& have = toks[0] == "f" ? have_f : have_g;
        if (have[static_cast<std::size_t>(idx)]) throw parse_error("duplicate row", rd.line_no);
        have[static_cast<std::size_t>(idx)] = true;
        (toks[0] == "f" ? f : g)[static_cast<std::size_t>(idx)] = std::move(p);
    }
    if (rd.next(toks)) throw parse_error("unexpected trailing content", rd.line_no);
    return Solution::create(std::move(f), std::move(g));
}

Solution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0);
    return parse_solution(in);
}

std::string format_solution(const Solution& s) {
    std::ostringstream os;
    os << "n " << s.n << "\n";
    for (int i = 0; i < s.n; ++i) {
        os << "f " << i + 1;
        for (int k = 0; k < s.n; ++k) os << ' ' << s.f[static_cast<std::size_t>(i)](k) + 1;
        os << "\n";
    }
    for (int i = 0; i < s.n; ++i) {
        os << "g " << i + 1;
        for (int k = 0; k < s.n; ++k) os << ' ' << s.g[static_cast<std::size_t>(i)](k) + 1;
        os << "\n";
    }
    return os.str();
}

Presentation parse_presentation(std::istream& in) {
    LineReader rd{in};
    std::vector<std::string> toks;
    Presentation p;
    int max_index = 0;
    while (rd.next(toks)) {
        if (toks[0] == "n" && toks.size() == 2) {
            p.n = static_cast<int>(to_int(toks[1], rd.line_no));
        } else if (toks[0] == "rel") {
            if (toks.size() != 6 || toks[3] != "=")
                throw parse_error("expected 'rel <i> <j> = <k> <l>'", rd.line_no);
            const int i = static_cast<int>(to_int(toks[1], rd.line_no)) - 1;
            const int j = static_cast<int>(to_int(toks[2], rd.line_no)) - 1;
            const int k = static_cast<int>(to_int(toks[4], rd.line_no)) - 1;
            const int l = static_cast<int>(to_int(toks[5], rd.line_no)) - 1;
            if (i < 0 || j < 0 || k < 0 || l < 0) throw parse_error("index out of range", rd.line_no);
            p.relations.push_back({i, j, k, l});
            max_index = std::max({max_index, i + 1, j + 1, k + 1, l + 1});
        } else if (toks[0] == "triv") {
            if (toks.size() != 3) throw parse_error("expected 'triv <i> <j>'", rd.line_no);
            const int i = static_cast<int>(to_int(toks[1], rd.line_no)) - 1;
            const int j = static_cast<int>(to_int(toks[2], rd.line_no)) - 1;
            if (i < 0 || j < 0) throw parse_error("index out of range", rd.line_no);
            p.trivial.emplace_back(i, j);
            max_index = std::max({max_index, i + 1, j + 1});
        } else {
            throw parse_error("unknown presentation line '" + toks[0] + "'", rd.line_no);
        }
    }
    if (p.n == 0) p.n = max_index;
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0);
    return parse_presentation(in);
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "n " << p.n << "\n";
    for (const auto& r : p.relations)
        os << "rel " << r.i + 1 << ' ' << r.j + 1 << " = " << r.k + 1 << ' ' << r.l + 1 << "\n";
    for (const auto& t : p.trivial) os << "triv " << t.first + 1 << ' ' << t.second + 1 << "\n";
    return os.str();
}

IntMatrix parse_matrix(std::istream& in) {
    LineReader rd{in};
    std::vector<std::string> toks;
    std::vector<std::vector<long long>> rows;
    while (rd.next(toks)) {
        std::vector<long long> row;
        row.reserve(toks.size());
        for (const auto& t : toks) row.push_back(to_int(t, rd.line_no));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty matrix", rd.line_no);
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw parse_error("matrix is not square", 0);
    return IntMatrix::from_rows(rows);
}

IntMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0);
    return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
    return os.str();
}

Permutation parse_permutation_line(const std::string& line, int line_no) {
    const auto toks = tokens_of(clean_line(line));
    std::vector<int> img;
    img.reserve(toks.size());
    for (const auto& t : toks) {
        const long long v = to_int(t, line_no);
        if (v < 1 || v > static_cast<long long>(toks.size()))
            throw parse_error("permutation image out of range", line_no);
        img.push_back(static_cast<int>(v) - 1);
    }
    try {
        return Permutation::from_images(std::move(img));
    } catch (const error& e) {
        throw parse_error(e.what(), line_no);
    }
}

std::string format_permutation(const Permutation& p) {
    std::ostringstream os;
    for (int i = 0; i < p.size(); ++i) os << (i ? " " : "") << p(i) + 1;
    return os.str();
}

std::string format_cycles(const Permutation& p) {
    std::ostringstream os;
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    bool any = false;
    for (int i = 0; i < p.size(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
        any = true;
        os << '(';
        int j = i;
        bool first = true;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            os << (first ? "" : " ") << j + 1;
            first = false;
            j = p(j);
        } while (j != i);
        os << ')';
    }
    return any ? os.str() : "id";
}

Word parse_word(const std::string& text, int n) {
    Word w;
    for (const auto& tok : tokens_of(clean_line(text))) {
        if (tok == "1") continue;  // identity token
        if (tok.size() < 2 || tok[0] != 'x') throw parse_error("bad word token '" + tok + "'", 0);
        const auto caret = tok.find('^');
        const std::string idx_part = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        const long long idx = to_int(idx_part, 0);
        if (idx < 1 || idx > n) throw parse_error("generator index out of range in '" + tok + "'", 0);
        long long exp = 1;
        if (caret != std::string::npos) exp = to_int(tok.substr(caret + 1), 0);
        const bool inv = exp < 0;
        for (long long k = 0; k < (inv ? -exp : exp); ++k)
            w.push_back({static_cast<int>(idx) - 1, inv});
    }
    return w;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) {
        os << (k ? " " : "") << 'x' << w[k].index + 1;
        if (w[k].inverse) os << "^-1";
    }
    return os.str();
}

std::string format_vec(const Vec& v) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (any) os << ' ';
        any = true;
        os << 't' << i + 1;
        if (v[i] != 1) os << '^' << v[i];
    }
    return any ? os.str() : "1";
}

}  // namespace ybg
