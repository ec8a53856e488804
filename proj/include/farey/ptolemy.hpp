// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/fareywalk.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace farey {

using IntMatrix = std::vector<std::vector<Int>>;

enum class LabelMode { Symmetric, Skew };

struct Labeling {
  int n = 0;
  IntMatrix x;
  LabelMode mode = LabelMode::Symmetric;
};

namespace detail {

// K(c_lo..c_hi) with 1-based inclusive bounds; hi = lo - 1 is the empty continuant.
inline Int k_range(const Word& c, std::size_t lo, std::size_t hi) { return continuant(c, lo - 1, hi); }

// x[u][w] = continuant of the entries at the vertices strictly between u and w, going forward from u.
inline IntMatrix arc_table(const Word& c) {
  const std::size_t n = c.size();
  IntMatrix x(n, std::vector<Int>(n));
  for (std::size_t u = 0; u < n; ++u) {
    Int km1 = 0, k = 1;
    for (std::size_t step = 1; step < n; ++step) {
      x[u][(u + step) % n] = k;
      Int next = c[(u + step) % n] * k - km1;
      km1 = std::move(k);
      k = std::move(next);
    }
  }
  return x;
}

}  // namespace detail

inline bool euler_identity_holds(const Word& c, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (!(1 <= i && i <= j && j < k && k <= l && l <= c.size()))
    throw Error("BadIndices", "need 1 <= i <= j < k <= l <= n");
  using detail::k_range;
  Int lhs = k_range(c, i, k - 1) * k_range(c, j + 1, l);
  Int rhs = k_range(c, i, j - 1) * k_range(c, k + 1, l) + k_range(c, i, l) * k_range(c, j + 1, k - 1);
  return lhs == rhs;
}

// Every entry is the continuant of its forward arc; the mode only declares which symmetry verify_pp demands.
inline Labeling labeling_candidate(const Word& c, LabelMode mode) {
  require_positive(c);
  Labeling out;
  out.n = static_cast<int>(c.size());
  out.mode = mode;
  out.x = detail::arc_table(c);
  for (std::size_t u = 0; u < c.size(); ++u) out.x[u][u] = 0;
  return out;
}

inline Labeling labeling_from_word(const Word& c, LabelMode mode) {
  IdClass k = classify_id(c);
  if ((mode == LabelMode::Symmetric && k != IdClass::MinusId) || (mode == LabelMode::Skew && k != IdClass::PlusId))
    throw Error("WrongSign", "symmetric labelings need M = -Id, skew ones need M = +Id");
  return labeling_candidate(c, mode);
}

inline bool verify_pp(const Labeling& l) {
  const auto n = static_cast<std::size_t>(l.n);
  if (l.x.size() != n) return false;
  for (const auto& row : l.x)
    if (row.size() != n) return false;
  const Int sgn = l.mode == LabelMode::Symmetric ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (l.x[i][i] != 0 || l.x[i][(i + 1) % n] != 1) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (l.x[j][i] != sgn * l.x[i][j]) return false;
  }
  // Every quadruple read in cyclic order starting from a.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t pb = 0; pb < n; ++pb)
      for (std::size_t pc = pb; pc < n; ++pc)
        for (std::size_t pd = pc; pd < n; ++pd) {
          std::size_t i = a, k = (a + pb) % n, j = (a + pc) % n, m = (a + pd) % n;
          if (l.x[i][j] * l.x[k][m] != l.x[i][k] * l.x[j][m] + l.x[i][m] * l.x[k][j]) return false;
        }
  return true;
}

// Labels the polygon from x_{i,i} = 0, x_{i,i+1} = 1, x_{i-1,i+1} = c_i and the relations; empty if inconsistent.
inline std::optional<Labeling> fill_labeling(const Word& c) {
  for (LabelMode mode : {LabelMode::Symmetric, LabelMode::Skew}) {
    Labeling l = labeling_candidate(c, mode);
    if (verify_pp(l)) return l;
  }
  return std::nullopt;
}

inline bool determinant_formula_labels(const ProjRational& x) {
  Trs t = t_rs(x);
  Labeling l = labeling_from_word(t.quiddity, LabelMode::Symmetric);
  const auto& v = t.tri.labels;
  for (std::size_t u = 0; u < v.size(); ++u)
    for (std::size_t w = u + 1; w < v.size(); ++w)
      if (l.x[u][w] != v[u].num * v[w].den - v[u].den * v[w].num) return false;
  return true;
}

namespace detail {

inline IntMatrix omega_impl(const Word& c, bool plus) {
  const std::size_t n = c.size();
  IntMatrix m(2 * n, std::vector<Int>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][n + i] = c[i];
    m[n + i][i] = plus ? c[i] : Int(-c[i]);
    if (i + 1 < n) {
      m[i][n + i + 1] = 1;
      m[i + 1][n + i] = 1;
      m[n + i][i + 1] = plus ? 1 : -1;
      m[n + i + 1][i] = plus ? 1 : -1;
    }
  }
  for (std::size_t blk : {std::size_t{0}, n}) {
    m[blk][blk + n - 1] += 1;
    m[blk + n - 1][blk] += plus ? 1 : -1;
  }
  return m;
}

}  // namespace detail

inline IntMatrix omega_matrix(const Word& c) {
  if (c.empty()) throw Error("OutOfRange", "omega needs a nonempty word");
  return detail::omega_impl(c, false);
}

inline IntMatrix omega_plus_matrix(const Word& c) {
  if (c.empty()) throw Error("OutOfRange", "omega needs a nonempty word");
  return detail::omega_impl(c, true);
}

// Bareiss fraction-free elimination.
inline Int det_exact(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("OutOfRange", "matrix is not square");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline bool trace_pfaffian_check(const Word& c) {
  if (c.empty()) return true;
  Int tr = m_word(c).trace();
  if (det_exact(omega_matrix(c)) != tr * tr) return false;
  if (c.size() >= 2) {
    Int expect = tr * tr - 4;
    if (c.size() % 2 == 1) expect = -expect;
    if (det_exact(omega_plus_matrix(c)) != expect) return false;
  }
  return true;
}

}  // namespace farey
