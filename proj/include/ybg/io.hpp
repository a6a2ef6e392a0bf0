#pragma once

#include <iosfwd>
#include <string>

#include "ybg/cocycle.hpp"
#include "ybg/int_matrix.hpp"
#include "ybg/solution.hpp"

namespace ybg {

/// Malformed text input; `line` is 1-based (0 when unknown).
struct parse_error : error {
    int line;
    parse_error(const std::string& what, int line_no) : error(what), line(line_no) {}
};

// All text formats are line-oriented, 1-based, with '#' comments.

// Solution file: `n <int>`, then n lines `f <i> <img1> ... <imgn>`,
// then n lines `g <i> <img1> ... <imgn>`.
Solution parse_solution(std::istream& in);
Solution load_solution(const std::string& path);
std::string format_solution(const Solution& s);

// Presentation file: optional `n <int>`, lines `rel <i> <j> = <k> <l>`
// and `triv <i> <j>`.
Presentation parse_presentation(std::istream& in);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

// Matrix file: n lines of n space-separated integers.
IntMatrix parse_matrix(std::istream& in);
IntMatrix load_matrix(const std::string& path);
std::string format_matrix(const IntMatrix& m);

/// One line of n space-separated 1-based images.
Permutation parse_permutation_line(const std::string& line, int line_no = 0);
std::string format_permutation(const Permutation& p);
/// Cycle notation for reports, e.g. "(2 4)" or "id".
std::string format_cycles(const Permutation& p);

// Word syntax: whitespace-separated `x<i>`, `x<i>^-1`, `x<i>^<k>`.
Word parse_word(const std::string& text, int n);
std::string format_word(const Word& w);

/// Multiplicative display of an exponent vector: "t1 t2^2 t3^-4"; "1" when zero.
std::string format_vec(const Vec& v);

}  // namespace ybg
