#pragma once

// Test-only reference computations. None of these call into the library's
// evaluation paths; they re-derive values from the defining formulas.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;
using Mat3 = std::array<std::array<Int, 3>, 3>;

inline Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

inline Mat3 mul3(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      c[i][j] = 0;
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// The block matrices u-hat, v-hat and their inverses, written out by hand.
inline Mat3 letter3(char c) {
  auto make = [](std::initializer_list<long> v) {
    Mat3 m;
    auto it = v.begin();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = *it++;
    return m;
  };
  switch (c) {
    case 'U': return make({1, 2, 0, 0, 1, 1, 0, 0, 1});
    case 'V': return make({1, 0, 1, 2, 1, 0, 0, 0, 1});
    case 'u': return make({1, -2, 2, 0, 1, -1, 0, 0, 1});
    case 'v': return make({1, 0, -1, -2, 1, 2, 0, 0, 1});
  }
  throw std::invalid_argument("letter3");
}

/// 3x3 product of the block matrices spelled by `word` (U, V, u, v).
inline Mat3 eval3(const std::string& word) {
  Mat3 m = identity3();
  for (char c : word) m = mul3(m, letter3(c));
  return m;
}

using Point = std::pair<long long, long long>;

// One application of alpha / beta / inverses straight from the definitions.
inline Point step(char c, Point p) {
  auto [x, y] = p;
  switch (c) {
    case 'U': return {x + 2 * y, y + 1};
    case 'V': return {x + 1, 2 * x + y};
    case 'u': return {x - 2 * (y - 1), y - 1};
    case 'v': return {x - 1, y - 2 * (x - 1)};
  }
  throw std::invalid_argument("step");
}

/// Iterates the generator |m| times (inverse for m < 0).
inline Point iterate(char gen, long long m, Point p) {
  const char c = m >= 0 ? gen : static_cast<char>(gen - 'A' + 'a');
  for (long long i = 0; i < (m >= 0 ? m : -m); ++i) p = step(c, p);
  return p;
}

/// Orbit of (0,0) in (Z/qZ)^2 by naive closure over a std::set.
inline std::set<Point> orbit_mod_q(long long q) {
  auto norm = [q](Point p) { return Point{((p.first % q) + q) % q, ((p.second % q) + q) % q}; };
  std::set<Point> seen{{0, 0}};
  std::vector<Point> stack{{0, 0}};
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (char c : std::string("UVuv")) {
      Point n = norm(step(c, p));
      if (seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen;
}

/// All points reachable from (0,0) by words of length <= depth in Z^2.
inline std::set<Point> ball(int depth) {
  std::set<Point> seen{{0, 0}};
  std::vector<Point> frontier{{0, 0}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Point> next;
    for (const Point& p : frontier)
      for (char c : std::string("UVuv")) {
        Point n = step(c, p);
        if (seen.insert(n).second) next.push_back(n);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Determinant by cofactor expansion (small matrices only).
inline Int det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][col] * det(minor);
    total += (col % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k
/// minors, d_k = D_k / D_{k-1}, stopping at the first D_k = 0.
inline std::vector<Int> invariant_factors_by_minors(const std::vector<std::vector<Int>>& m) {
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<Int> factors;
  Int previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    combinations(rows, k, 0, cur, row_sets);
    combinations(cols, k, 0, cur, col_sets);
    Int g = 0;
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) {
        std::vector<std::vector<Int>> sub;
        for (auto r : rs) {
          std::vector<Int> row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(std::move(row));
        }
        g = gcd(g, det(sub));
      }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

}  // namespace oracle
