// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/dissect.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace farey {

enum class Periodicity { Periodic, Antiperiodic };

struct WalkSeq {
  std::vector<SignedPair> points;
  Periodicity periodicity = Periodicity::Antiperiodic;
  friend bool operator==(const WalkSeq&, const WalkSeq&) = default;
};

struct FareyPolygon {
  std::vector<ProjRational> vertices;
  friend bool operator==(const FareyPolygon&, const FareyPolygon&) = default;
};

struct LabeledTriangulation {
  Dissection base;
  std::vector<ProjRational> labels;  // labels[v] for vertex v; decreasing from 1/0 to 0/1
};

enum class WalkKind { FareyPolygon, PositiveWalk, Walk, Invalid };

inline std::string to_string(WalkKind k) {
  switch (k) {
    case WalkKind::FareyPolygon: return "FareyPolygon";
    case WalkKind::PositiveWalk: return "PositiveWalk";
    case WalkKind::Walk: return "Walk";
    default: return "Invalid";
  }
}

inline WalkSeq walk_from_word(const Word& c) {
  require_positive(c);
  IdClass k = classify_id(c);
  if (k == IdClass::Neither) throw Error("NotASolution", "M(c) is not +-Id");
  WalkSeq w;
  w.periodicity = k == IdClass::MinusId ? Periodicity::Antiperiodic : Periodicity::Periodic;
  w.points.push_back({1, 0});
  if (c.size() > 1) {
    auto conv = convergents(Word(c.begin(), c.end() - 1), CfKind::Negative);
    w.points.insert(w.points.end(), conv.begin(), conv.end());
  }
  return w;
}

namespace detail {

// Point i of the walk extended to all integers by the periodicity flag.
inline SignedPair walk_point(const WalkSeq& w, long long i) {
  const auto n = static_cast<long long>(w.points.size());
  long long q = i >= 0 ? i / n : -((-i + n - 1) / n);
  long long r = i - q * n;
  SignedPair p = w.points[static_cast<std::size_t>(r)];
  if (w.periodicity == Periodicity::Antiperiodic && (q % 2 != 0)) p = -p;
  return p;
}

inline bool polygon_shape(const std::vector<ProjRational>& v) {
  if (v.size() < 3) return false;
  if (v.front() != ProjRational{1, 0} || v.back() != ProjRational{0, 1}) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] > v[i]) || !is_farey_edge(v[i - 1], v[i])) return false;
  return true;
}

}  // namespace detail

inline WalkKind classify_walk(const WalkSeq& w) {
  if (w.points.empty()) return WalkKind::Invalid;
  for (const auto& p : w.points)
    if ((p.num == 0 && p.den == 0) || gcd(p.num, p.den) != 1) return WalkKind::Invalid;
  const auto n = static_cast<long long>(w.points.size());
  bool all_plus = true;
  for (long long i = 0; i < n; ++i) {
    Int e = det(detail::walk_point(w, i), detail::walk_point(w, i + 1));
    if (e != 1 && e != -1) return WalkKind::Invalid;
    if (e != 1) all_plus = false;
  }
  if (!all_plus) return WalkKind::Walk;
  std::vector<ProjRational> reduced;
  for (const auto& p : w.points) reduced.push_back(normalize(p));
  if (w.periodicity == Periodicity::Antiperiodic && detail::polygon_shape(reduced)) return WalkKind::FareyPolygon;
  return WalkKind::PositiveWalk;
}

inline void check_polygon(const FareyPolygon& p) {
  if (!detail::polygon_shape(p.vertices))
    throw Error("NotAPolygon", "vertices must decrease from 1/0 to 0/1 along Farey edges");
}

inline Dissection farey_triangulate(const FareyPolygon& p) {
  check_polygon(p);
  const auto n = static_cast<int>(p.vertices.size());
  std::vector<Diagonal> diags;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (is_farey_edge(p.vertices[static_cast<std::size_t>(i)], p.vertices[static_cast<std::size_t>(j)])) diags.emplace_back(i, j);
    }
  if (static_cast<int>(diags.size()) != n - 3) throw Error("NotAPolygon", "Farey edges do not triangulate the polygon");
  return make_dissection(n, std::move(diags));
}

inline Word index_of_polygon(const FareyPolygon& p) {
  check_polygon(p);
  const std::size_t n = p.vertices.size();
  Word out;
  for (std::size_t i = 0; i < n; ++i) {
    SignedPair prev = i == 0 ? SignedPair{0, -1} : as_pair(p.vertices[i - 1]);
    SignedPair next = i + 1 == n ? SignedPair{-1, 0} : as_pair(p.vertices[i + 1]);
    const ProjRational& v = p.vertices[i];
    Int ci = 0;
    bool have = false;
    for (int part = 0; part < 2; ++part) {
      const Int& base = part == 0 ? v.num : v.den;
      if (base == 0) continue;
      Int sum = part == 0 ? prev.num + next.num : prev.den + next.den;
      if (sum % base != 0) throw Error("NonIntegerIndex", "at vertex " + to_string(v));
      Int q = sum / base;
      if (have && q != ci) throw Error("NonIntegerIndex", "numerator and denominator disagree at " + to_string(v));
      ci = q;
      have = true;
    }
    out.push_back(ci);
  }
  return out;
}

// Counts, at each vertex, the Farey triangles of the fan between the incoming and outgoing edges on the
// positive side. Around v the fan neighbors of `in` are in - k v, so the count is the k reaching `out`.
inline Word quiddity_from_walk(const WalkSeq& w) {
  WalkKind kind = classify_walk(w);
  if (kind != WalkKind::PositiveWalk && kind != WalkKind::FareyPolygon) throw Error("NotPositive", "walk is not positive");
  Word out;
  const auto len = static_cast<long long>(w.points.size());
  for (long long i = 1; i <= len; ++i) {
    SignedPair v = detail::walk_point(w, i - 1);
    SignedPair in = detail::walk_point(w, i - 2);
    SignedPair nx = detail::walk_point(w, i);
    Int k = det(in, nx);
    SignedPair fan{in.num - k * v.num, in.den - k * v.den};
    if (k < 1 || normalize(fan) != normalize(nx)) throw Error("NotPositive", "walk turns the wrong way");
    out.push_back(k);
  }
  return out;
}

namespace detail {

using Triangle = std::array<ProjRational, 3>;

struct Descent {
  std::vector<Triangle> triangles;
  std::vector<char> moves;  // 'R' or 'L' per step, first entry for the initial triangle
};

// Triangles of the Farey tessellation met on the way from the initial triangle (0/1,1/1,1/0) to x > 0.
inline Descent farey_descent(const ProjRational& x) {
  if (x.den == 0 || x.num <= 0) throw Error("OutOfRange", "descent needs a positive rational");
  Descent out;
  ProjRational zero{0, 1}, one{1, 1}, inf{1, 0};
  out.triangles.push_back({zero, one, inf});
  if (x == one) return out;
  ProjRational left = x > one ? one : zero;
  ProjRational right = x > one ? inf : one;
  out.moves.push_back(x > one ? 'R' : 'L');
  while (true) {
    ProjRational m = mediant(left, right);
    out.triangles.push_back({left, m, right});
    if (m == x) return out;
    if (x < m) {
      right = m;
      out.moves.push_back('L');
    } else {
      left = m;
      out.moves.push_back('R');
    }
  }
}

inline LabeledTriangulation assemble(const std::vector<Triangle>& triangles) {
  std::set<ProjRational> verts;
  for (const auto& t : triangles)
    for (const auto& v : t) verts.insert(v);
  LabeledTriangulation out;
  out.labels.assign(verts.rbegin(), verts.rend());
  const auto n = static_cast<int>(out.labels.size());
  auto idx = [&](const ProjRational& v) {
    auto it = std::lower_bound(out.labels.begin(), out.labels.end(), v, std::greater<>());
    return static_cast<int>(it - out.labels.begin());
  };
  std::set<Diagonal> diags;
  for (const auto& t : triangles)
    for (int e = 0; e < 3; ++e) {
      int u = idx(t[static_cast<std::size_t>(e)]), v = idx(t[static_cast<std::size_t>((e + 1) % 3)]);
      if (u > v) std::swap(u, v);
      if (v - u >= 2 && !(u == 0 && v == n - 1)) diags.insert({u, v});
    }
  out.base = make_dissection(n, std::vector<Diagonal>(diags.begin(), diags.end()));
  return out;
}

}  // namespace detail

inline bool labels_consistent(const LabeledTriangulation& lt) {
  if (lt.labels.size() != static_cast<std::size_t>(lt.base.n)) return false;
  for (const auto& cell : cells_of(lt.base)) {
    if (cell.size() != 3) return false;
    const auto& x = lt.labels[static_cast<std::size_t>(cell[0])];
    const auto& y = lt.labels[static_cast<std::size_t>(cell[1])];
    const auto& z = lt.labels[static_cast<std::size_t>(cell[2])];
    if (!is_farey_edge(x, y) || !is_farey_edge(y, z) || !is_farey_edge(x, z)) return false;
    if (mediant(x, y) != z && mediant(y, z) != x && mediant(x, z) != y) return false;
  }
  return true;
}

struct Trs {
  LabeledTriangulation tri;
  Word quiddity;
  Word a_data;
  std::size_t k = 0;  // vertex carrying r/s
};

inline Trs t_rs(const ProjRational& x) {
  if (x.den == 0 || x.num <= x.den) throw Error("OutOfRange", "t_rs needs r/s > 1, got " + to_string(x));
  auto descent = detail::farey_descent(x);
  Trs out;
  out.tri = detail::assemble(descent.triangles);
  out.quiddity = quiddity_of(out.tri.base);
  auto it = std::find(out.tri.labels.begin(), out.tri.labels.end(), x);
  out.k = static_cast<std::size_t>(it - out.tri.labels.begin());
  std::vector<char> moves = descent.moves;
  moves.push_back('L');
  for (std::size_t i = 0; i < moves.size();) {
    std::size_t j = i;
    while (j < moves.size() && moves[j] == moves[i]) ++j;
    out.a_data.emplace_back(static_cast<long long>(j - i));
    i = j;
  }
  return out;
}

inline FareyPolygon polygon_of_walk(const WalkSeq& w) {
  FareyPolygon p;
  for (const auto& pt : w.points) p.vertices.push_back(normalize(pt));
  return p;
}

}  // namespace farey
