// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/fareywalk.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

namespace farey {

enum class PresRoute { Direct, Suffix, Generators };

struct MinPres {
  Word word;
  int sign = 1;  // m_word(word) = sign * A
  PresRoute route = PresRoute::Direct;
};

struct ConjClass {
  Word cycle;  // least rotation
  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

inline Word least_rotation(const Word& c) {
  Word best = c;
  for (std::size_t r = 1; r < c.size(); ++r) {
    Word rot(c.begin() + static_cast<std::ptrdiff_t>(r), c.end());
    rot.insert(rot.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
    if (rot < best) best = std::move(rot);
  }
  return best;
}

inline bool is_minimal(const Word& c) {
  for (const Int& x : c)
    if (x < 1) return false;
  if (c.empty()) return true;
  if (next_surgery(c) != static_cast<std::size_t>(-1)) return false;
  if (classify_id(c) != IdClass::Neither) return false;
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (c[i] >= 2) continue;
    bool head = i == 0 || (i == 1 && k > 2);
    bool tail = i + 1 == k || (i + 2 == k && k > 2);
    if (!head && !tail) return false;
  }
  return true;
}

namespace detail {

// Positive word of R^t, exact up to sign.
inline Word r_power_word(const Int& t) {
  Word w;
  if (t > 0) {
    w = {t + 1, 1, 1};
  } else if (t < 0) {
    w = {1, 1};
    for (Int i = 0; i < -t; ++i) w.emplace_back(2);
    w.emplace_back(1);
  }
  return w;
}

// Positive word of R^q S for any integer q, exact up to sign.
inline Word rs_block_word(const Int& q) {
  if (q >= 1) return {q};
  Word w = r_power_word(q - 1);
  w.emplace_back(1);
  return w;
}

// A = +-M(q_1..q_m) R^t with arbitrary integer q_i (only q_1 can be below 2).
inline std::pair<std::vector<Int>, Int> rs_decompose(Mat2 a) {
  if (a.c < 0) a = -a;
  std::vector<Int> qs;
  while (a.c != 0) {
    Int q = floor_div(a.a, a.c);
    if (q * a.c != a.a) q += 1;
    qs.push_back(q);
    Mat2 t{a.a - q * a.c, a.b - q * a.d, a.c, a.d};
    a = Mat2{t.c, t.d, -t.a, -t.b};
  }
  Int t = a.a * a.b;  // a = +-R^t
  return {qs, t};
}

inline int sign_between(const Mat2& x, const Mat2& a) { return x == a ? 1 : -1; }

inline bool shape_neg(const Mat2& m) { return m.a > 0 && m.b < 0 && m.c > 0 && m.d < 0; }

}  // namespace detail

inline MinPres minimal_presentation(const Mat2& a) {
  if (a.det() != 1) throw Error("NotUnimodular", "determinant must be 1");
  if (psl_eq(a, Mat2::identity())) throw Error("IsIdentity", "+-Id has the empty presentation");
  auto finish = [&](Word w, PresRoute route) -> std::optional<MinPres> {
    Word r = reduce_word(std::move(w)).reduced;
    Mat2 m = m_word(r);
    if (!psl_eq(m, a) || !is_minimal(r)) return std::nullopt;
    return MinPres{r, detail::sign_between(m, a), route};
  };
  struct Suffix {
    Mat2 x;
    Word inverse_word;
    PresRoute route;
  };
  const std::array<Suffix, 6> suffixes{{
      {Mat2::identity(), {}, PresRoute::Direct},
      {kR, make_word({1, 1, 2, 1}), PresRoute::Suffix},
      {kR.inverse(), make_word({2, 1, 1}), PresRoute::Suffix},
      {kS, make_word({1, 1, 2, 1, 1}), PresRoute::Suffix},
      {kR * kS, make_word({1, 1, 2, 1, 1, 1, 1, 2, 1}), PresRoute::Suffix},
      {kS * kR, make_word({1, 1, 2, 1, 1, 1, 2, 1, 1}), PresRoute::Suffix},
  }};
  for (const auto& s : suffixes) {
    Mat2 b = a * s.x;
    for (const Mat2& cand : {b, -b}) {
      if (!detail::shape_neg(cand) || cand.a <= -cand.b) continue;
      Word w = detail::negative_digits(cand.a, cand.c);
      if (!psl_eq(m_word(w), cand)) continue;
      w.insert(w.end(), s.inverse_word.begin(), s.inverse_word.end());
      if (auto r = finish(std::move(w), s.route)) return *r;
    }
  }
  auto [qs, t] = detail::rs_decompose(a);
  Word w;
  for (const Int& q : qs) {
    Word blk = detail::rs_block_word(q);
    w.insert(w.end(), blk.begin(), blk.end());
  }
  Word tail = detail::r_power_word(t);
  w.insert(w.end(), tail.begin(), tail.end());
  if (auto r = finish(std::move(w), PresRoute::Generators)) return *r;
  throw Error("InternalError", "no minimal presentation found for " + to_string(a));
}

// Cyclic surgery on a word read around a circle; stops at entries >= 2 or a parabolic remainder.
inline Word cyclic_reduce(Word c) {
  while (true) {
    const std::size_t n = c.size();
    if (n == 2 && (c[0] == 1 || c[1] == 1)) {
      Int x = c[0] == 1 ? c[1] : c[0];
      if (x - 2 < 1) return c;
      c = {x - 2};
      continue;
    }
    bool changed = false;
    for (std::size_t p = 0; p < n && !changed; ++p) {
      if (c[p] != 1) continue;
      std::size_t prev = (p + n - 1) % n, next = (p + 1) % n;
      if (n >= 4 && c[next] == 1) {
        std::size_t after = (p + 2) % n;
        Word out;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == next || i == after) continue;
          out.push_back(i == prev ? c[prev] + c[after] - 1 : c[i]);
        }
        c = std::move(out);
        changed = true;
      } else if (n >= 3 && c[prev] >= 2 && c[next] >= 2) {
        Word out;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p) continue;
          out.push_back(i == prev || i == next ? Int(c[i] - 1) : c[i]);
        }
        c = std::move(out);
        changed = true;
      }
    }
    if (!changed) return c;
  }
}

namespace detail {

inline void require_hyperbolic(const Mat2& a) {
  if (a.det() != 1) throw Error("NotUnimodular", "determinant must be 1");
  if (abs(a.trace()) < 3) throw Error("NotHyperbolic", "|trace| must be at least 3");
}

inline ConjClass checked_class(Word cycle) {
  for (const Int& x : cycle)
    if (x < 2) throw Error("InternalError", "class cycle has an entry below 2");
  return {least_rotation(cycle)};
}

// Class of a matrix with all entries positive and a != b, read off the dominant column.
inline std::optional<Word> positive_class(const Mat2& m) {
  if (m.a <= 0 || m.b <= 0 || m.c <= 0 || m.d <= 0 || m.a == m.b) return std::nullopt;
  if (m.a > m.b) {
    if (m.a <= m.c) return std::nullopt;
    Word w = negative_digits(m.a, m.c);
    w[0] += 1;
    return w;
  }
  if (m.b <= m.d) return std::nullopt;
  Word w = negative_digits(m.b, m.d);
  if (w.size() < 2) return std::nullopt;
  Word out;
  out.push_back(w.front() + w.back());
  out.insert(out.end(), w.begin() + 1, w.end() - 1);
  return out;
}

}  // namespace detail

inline ConjClass conjugacy_class_rational(const Mat2& a) {
  detail::require_hyperbolic(a);
  for (const Mat2& m : {a, -a})
    if (auto w = detail::positive_class(m)) return detail::checked_class(*w);
  return detail::checked_class(cyclic_reduce(minimal_presentation(a).word));
}

inline ConjClass conjugacy_class_surd(const Mat2& a0) {
  detail::require_hyperbolic(a0);
  Mat2 a = a0.trace() > 0 ? a0 : -a0;
  Int tr = a.trace();
  QuadSurd x = make_surd(a.a - a.d, 2 * a.c, tr * tr - 4);
  Word period = surd_negative_cf(x).period;
  // A power of a primitive element repeats the primitive period.
  Word cycle = period;
  while (abs(m_word(cycle).trace()) < tr) cycle.insert(cycle.end(), period.begin(), period.end());
  if (abs(m_word(cycle).trace()) != tr) throw Error("InternalError", "period does not match the trace");
  return detail::checked_class(cycle);
}

inline Word matrix_dissection_word(const Mat2& a) {
  Word w = minimal_presentation(a).word;
  Word v = minimal_presentation(a.inverse()).word;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// A 3d-dissection with the given quiddity, searched among all of them (n <= 12).
inline std::optional<Dissection> realize_dissection(const Word& q) {
  const auto n = static_cast<int>(q.size());
  if (n < 3 || n > 12) return std::nullopt;
  for (const auto& d : enumerate_3d(n))
    if (quiddity_of(d) == q) return d;
  return std::nullopt;
}

struct TMatrix {
  LabeledTriangulation tri;
  Word quiddity;
  std::size_t k = 0;  // number of leading vertices; vertex k-1 carries b/d
  Word prefix;
};

inline TMatrix t_matrix(const Mat2& a0) {
  Mat2 a = detail::shape_neg(a0) ? a0 : -a0;
  if (!detail::shape_neg(a)) throw Error("WrongShape", "need [[a,-b],[c,-d]] with a,b,c,d > 0");
  ProjRational ac = normalize(a.a, a.c), bd = normalize(-a.b, -a.d);
  auto d1 = detail::farey_descent(ac);
  auto d2 = detail::farey_descent(bd);
  std::set<std::array<ProjRational, 3>> tris;
  for (auto t : d1.triangles) {
    std::sort(t.begin(), t.end());
    tris.insert(t);
  }
  for (auto t : d2.triangles) {
    std::sort(t.begin(), t.end());
    tris.insert(t);
  }
  TMatrix out;
  out.tri = detail::assemble(std::vector<detail::Triangle>(tris.begin(), tris.end()));
  out.quiddity = quiddity_of(out.tri.base);
  auto it = std::find(out.tri.labels.begin(), out.tri.labels.end(), bd);
  out.k = static_cast<std::size_t>(it - out.tri.labels.begin()) + 1;
  out.prefix.assign(out.quiddity.begin(), out.quiddity.begin() + static_cast<std::ptrdiff_t>(out.k));
  return out;
}

}  // namespace farey
