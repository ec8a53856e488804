// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/modmat.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace farey {

using Diagonal = std::pair<int, int>;

struct Dissection {
  int n = 3;
  std::vector<Diagonal> diagonals;  // sorted, i < j
  friend bool operator==(const Dissection&, const Dissection&) = default;
};

inline bool crosses(const Diagonal& x, const Diagonal& y) {
  auto [i, j] = x;
  auto [k, l] = y;
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

inline Dissection make_dissection(int n, std::vector<Diagonal> diags) {
  if (n < 3) throw Error("InvalidDissection", "a polygon needs at least 3 vertices");
  for (auto& dg : diags) {
    if (dg.first > dg.second) std::swap(dg.first, dg.second);
    auto [i, j] = dg;
    if (i < 0 || j >= n) throw Error("InvalidDissection", "vertex index out of range");
    if (j - i < 2 || (i == 0 && j == n - 1))
      throw Error("InvalidDissection", "(" + std::to_string(i) + "," + std::to_string(j) + ") is a side, not a diagonal");
  }
  std::sort(diags.begin(), diags.end());
  if (std::adjacent_find(diags.begin(), diags.end()) != diags.end())
    throw Error("InvalidDissection", "repeated diagonal");
  for (std::size_t x = 0; x < diags.size(); ++x)
    for (std::size_t y = x + 1; y < diags.size(); ++y)
      if (crosses(diags[x], diags[y])) throw Error("InvalidDissection", "crossing diagonals");
  return {n, std::move(diags)};
}

// Each cell as its ascending vertex list (ascending order is also the cyclic order).
inline std::vector<std::vector<int>> cells_of(const Dissection& d) {
  std::vector<std::vector<int>> todo, done;
  std::vector<int> all(static_cast<std::size_t>(d.n));
  for (int i = 0; i < d.n; ++i) all[static_cast<std::size_t>(i)] = i;
  todo.push_back(std::move(all));
  while (!todo.empty()) {
    std::vector<int> cell = std::move(todo.back());
    todo.pop_back();
    bool split = false;
    for (const auto& [u, w] : d.diagonals) {
      auto iu = std::find(cell.begin(), cell.end(), u);
      auto iw = std::find(cell.begin(), cell.end(), w);
      if (iu == cell.end() || iw == cell.end()) continue;
      auto pu = iu - cell.begin(), pw = iw - cell.begin();
      auto m = static_cast<std::ptrdiff_t>(cell.size());
      if (pw - pu == 1 || (pu == 0 && pw == m - 1)) continue;
      std::vector<int> left(cell.begin() + pu, cell.begin() + pw + 1);
      std::vector<int> right(cell.begin(), cell.begin() + pu + 1);
      right.insert(right.end(), cell.begin() + pw, cell.end());
      todo.push_back(std::move(left));
      todo.push_back(std::move(right));
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(cell));
  }
  std::sort(done.begin(), done.end());
  return done;
}

inline std::vector<int> quiddity_small(const Dissection& d) {
  std::vector<int> q(static_cast<std::size_t>(d.n), 0);
  for (const auto& cell : cells_of(d))
    for (int v : cell) ++q[static_cast<std::size_t>(v)];
  return q;
}

inline Word quiddity_of(const Dissection& d) {
  Word w;
  for (int x : quiddity_small(d)) w.emplace_back(x);
  return w;
}

inline bool is_3d(const Dissection& d) {
  for (const auto& cell : cells_of(d))
    if (cell.size() % 3 != 0) return false;
  return true;
}

inline IdClass dissection_sign(const Dissection& d) {
  int even = 0;
  for (const auto& cell : cells_of(d)) {
    if (cell.size() % 3 != 0) throw Error("Not3d", "cell of size " + std::to_string(cell.size()));
    if (cell.size() % 2 == 0) ++even;
  }
  return even % 2 == 0 ? IdClass::MinusId : IdClass::PlusId;
}

struct SumDecomposition {
  Int sum;
  std::map<int, int> cells;  // k -> N_k, counting cells with 3k vertices
  Int predicted;             // 3n - 6 * sum (k-1) N_k - 6
  bool holds() const { return sum == predicted; }
};

inline SumDecomposition total_sum_decomposition(const Dissection& d) {
  SumDecomposition out;
  for (const auto& cell : cells_of(d)) {
    if (cell.size() % 3 != 0) throw Error("Not3d", "cell of size " + std::to_string(cell.size()));
    ++out.cells[static_cast<int>(cell.size() / 3)];
  }
  for (int x : quiddity_small(d)) out.sum += x;
  long long weighted = 0;
  for (auto [k, count] : out.cells) weighted += static_cast<long long>(k - 1) * count;
  out.predicted = Int(3 * d.n) - 6 * weighted - 6;
  return out;
}

struct Reduction {
  Word reduced;
  int sign_flips = 0;
};

// Leftmost position where (x,1,y) with x,y >= 2 or (x,1,1,y) starts, or npos.
inline std::size_t next_surgery(const Word& c) {
  for (std::size_t p = 0; p + 2 < c.size(); ++p) {
    if (c[p + 1] != 1) continue;
    if (c[p] >= 2 && c[p + 2] >= 2) return p;
    if (p + 3 < c.size() && c[p + 2] == 1) return p;
  }
  return static_cast<std::size_t>(-1);
}

// Applies the surgery starting at p; returns true if it flipped the sign.
inline bool apply_surgery(Word& c, std::size_t p) {
  if (c[p + 2] == 1) {
    c[p] += c[p + 3] - 1;
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(p) + 1, c.begin() + static_cast<std::ptrdiff_t>(p) + 4);
    return true;
  }
  c[p] -= 1;
  c[p + 2] -= 1;
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(p) + 1);
  return false;
}

inline Reduction reduce_word(Word c) {
  Reduction out;
  for (std::size_t p = next_surgery(c); p != static_cast<std::size_t>(-1); p = next_surgery(c)) {
    if (apply_surgery(c, p)) ++out.sign_flips;
  }
  out.reduced = std::move(c);
  return out;
}

inline Dissection reconstruct_triangulation(const Word& q) {
  const auto n = static_cast<int>(q.size());
  if (n < 3) throw Error("NotTotallyPositive", "need at least 3 entries");
  Int sum = 0;
  for (const Int& x : q) {
    if (x < 1) throw Error("NotTotallyPositive", "entries must be positive");
    sum += x;
  }
  if (sum != 3 * n - 6 || classify_id(q) != IdClass::MinusId)
    throw Error("NotTotallyPositive", "not a triangulation quiddity");
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::vector<Int> vals(q.begin(), q.end());
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
  std::vector<Diagonal> diags;
  while (verts.size() > 3) {
    std::size_t m = verts.size();
    std::size_t i = 0;
    while (i < m && vals[i] != 1) ++i;
    if (i == m) throw Error("NotTotallyPositive", "no ear available");
    std::size_t prev = (i + m - 1) % m, next = (i + 1) % m;
    diags.emplace_back(std::min(verts[prev], verts[next]), std::max(verts[prev], verts[next]));
    vals[prev] -= 1;
    vals[next] -= 1;
    if (vals[prev] < 1 || vals[next] < 1) throw Error("NotTotallyPositive", "ear cut produced a non-positive entry");
    verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i));
    vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(i));
  }
  if (vals[0] != 1 || vals[1] != 1 || vals[2] != 1) throw Error("NotTotallyPositive", "final triangle is not (1,1,1)");
  return make_dissection(n, std::move(diags));
}

namespace detail {

inline void check_enum_range(int n) {
  if (n < 3 || n > 12) throw Error("OutOfRange", "enumeration supports 3 <= n <= 12");
}

// All triangulations of the sub-polygon on vertices lo..hi (consecutive indices) whose base edge is (lo,hi).
inline std::vector<std::vector<Diagonal>> triangulate_range(int lo, int hi,
                                                            std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>>& memo) {
  if (hi - lo < 2) return {{}};
  auto key = std::make_pair(lo, hi);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<std::vector<Diagonal>> out;
  for (int apex = lo + 1; apex < hi; ++apex) {
    auto left = triangulate_range(lo, apex, memo);
    auto right = triangulate_range(apex, hi, memo);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<Diagonal> d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (apex - lo >= 2) d.emplace_back(lo, apex);
        if (hi - apex >= 2) d.emplace_back(apex, hi);
        out.push_back(std::move(d));
      }
  }
  memo[key] = out;
  return out;
}

// All 3d-dissections of the polygon on vertices lo..hi whose base edge (lo,hi) bounds one cell.
inline std::vector<std::vector<Diagonal>> dissect3_range(int lo, int hi,
                                                         std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>>& memo) {
  if (hi - lo < 2) return {{}};
  auto key = std::make_pair(lo, hi);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<std::vector<Diagonal>> out;
  const int inner = hi - lo - 1;
  for (unsigned mask = 1; mask < (1u << inner); ++mask) {
    int chosen = __builtin_popcount(mask);
    if ((chosen + 2) % 3 != 0) continue;
    std::vector<int> cell{lo};
    for (int t = 0; t < inner; ++t)
      if ((mask >> t) & 1u) cell.push_back(lo + 1 + t);
    cell.push_back(hi);
    std::vector<std::vector<Diagonal>> partial{{}};
    for (std::size_t s = 0; s + 1 < cell.size(); ++s) {
      int a = cell[s], b = cell[s + 1];
      if (b - a < 2) continue;
      auto sub = dissect3_range(a, b, memo);
      std::vector<std::vector<Diagonal>> next;
      for (const auto& p : partial)
        for (const auto& q : sub) {
          std::vector<Diagonal> d = p;
          d.insert(d.end(), q.begin(), q.end());
          d.emplace_back(a, b);
          next.push_back(std::move(d));
        }
      partial = std::move(next);
    }
    for (auto& p : partial) out.push_back(std::move(p));
  }
  memo[key] = out;
  return out;
}

inline std::vector<Dissection> finish(int n, std::vector<std::vector<Diagonal>> sets) {
  std::vector<Dissection> out;
  out.reserve(sets.size());
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    out.push_back({n, std::move(s)});
  }
  std::sort(out.begin(), out.end(), [](const Dissection& x, const Dissection& y) { return x.diagonals < y.diagonals; });
  return out;
}

}  // namespace detail

inline std::vector<Dissection> enumerate_triangulations(int n) {
  detail::check_enum_range(n);
  std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>> memo;
  return detail::finish(n, detail::triangulate_range(0, n - 1, memo));
}

inline std::vector<Dissection> enumerate_3d(int n) {
  detail::check_enum_range(n);
  std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>> memo;
  return detail::finish(n, detail::dissect3_range(0, n - 1, memo));
}

}  // namespace farey
