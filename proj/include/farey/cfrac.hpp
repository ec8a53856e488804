// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/numcore.hpp"

#include <map>
#include <vector>

namespace farey {

using Word = std::vector<Int>;

struct PeriodicWord {
  Word prefix;
  Word period;
  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
};

enum class CfKind { Negative, Regular };

inline Word make_word(std::initializer_list<long long> xs) {
  Word w;
  w.reserve(xs.size());
  for (long long x : xs) w.emplace_back(x);
  return w;
}

inline void require_positive(const Word& w) {
  for (const Int& x : w)
    if (x < 1) throw Error("NonPositiveEntry", "word entries must be >= 1");
}

namespace detail {

// Negative expansion of any positive rational r/s; the first entry may be 1 when r/s <= 1.
inline Word negative_digits(Int r, Int s) {
  Word out;
  while (true) {
    Int q = floor_div(r, s);
    if (q * s == r) {
      out.push_back(q);
      return out;
    }
    Int c = q + 1;
    out.push_back(c);
    Int next = c * s - r;
    r = std::move(s);
    s = std::move(next);
  }
}

}  // namespace detail

inline Word expand_negative(const ProjRational& x) {
  if (x.den == 0 || x.num <= x.den) throw Error("OutOfRange", "expand_negative needs r/s > 1, got " + to_string(x));
  return detail::negative_digits(x.num, x.den);
}

inline Word expand_regular(const ProjRational& x) {
  if (x.den == 0 || x.num <= x.den) throw Error("OutOfRange", "expand_regular needs r/s > 1, got " + to_string(x));
  Word out;
  Int r = x.num, s = x.den;
  while (s != 0) {
    Int q = r / s;
    Int t = r - q * s;
    out.push_back(q);
    r = std::move(s);
    s = std::move(t);
  }
  if (out.size() % 2 == 1) {
    out.back() -= 1;
    out.emplace_back(1);
  }
  return out;
}

// K(w[lo..hi)); empty range gives 1.
inline Int continuant(const Word& w, std::size_t lo, std::size_t hi) {
  Int km1 = 0, k = 1;
  for (std::size_t i = lo; i < hi; ++i) {
    Int next = w[i] * k - km1;
    km1 = std::move(k);
    k = std::move(next);
  }
  return k;
}

inline Int continuant(const Word& w) { return continuant(w, 0, w.size()); }

inline SignedPair eval_negative(const Word& w) {
  if (w.empty()) return {1, 0};
  return {continuant(w), continuant(w, 1, w.size())};
}

inline ProjRational eval_regular(const Word& w) {
  require_positive(w);
  Int h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (const Int& a : w) {
    Int h = a * h1 + h2;
    Int k = a * k1 + k2;
    h2 = std::move(h1);
    h1 = std::move(h);
    k2 = std::move(k1);
    k1 = std::move(k);
  }
  return normalize(h1, k1);
}

inline Word regular_to_negative(const Word& a) {
  if (a.size() % 2 == 1) throw Error("OddLength", "regular word must have even length");
  require_positive(a);
  Word c;
  for (std::size_t i = 0; i < a.size(); i += 2) {
    c.push_back(a[i] + (i == 0 ? 1 : 2));
    for (Int t = 1; t < a[i + 1]; ++t) c.emplace_back(2);
  }
  return c;
}

inline Word negative_to_regular(const Word& c) {
  for (const Int& x : c)
    if (x < 2) throw Error("EntryBelowTwo", "negative word entries must be >= 2");
  if (c.empty()) throw Error("OutOfRange", "empty word");
  Word a;
  a.push_back(c[0] - 1);
  std::size_t i = 1;
  while (true) {
    Int twos = 0;
    while (i < c.size() && c[i] == 2) {
      ++twos;
      ++i;
    }
    a.push_back(twos + 1);
    if (i == c.size()) break;
    a.push_back(c[i] - 2);
    ++i;
  }
  return a;
}

inline std::vector<SignedPair> convergents(const Word& w, CfKind kind) {
  std::vector<SignedPair> out;
  out.reserve(w.size());
  if (kind == CfKind::Negative) {
    SignedPair prev{0, -1}, cur{1, 0};
    for (const Int& c : w) {
      SignedPair next{c * cur.num - prev.num, c * cur.den - prev.den};
      prev = std::move(cur);
      cur = std::move(next);
      out.push_back(cur);
    }
  } else {
    SignedPair prev{0, 1}, cur{1, 0};
    for (const Int& a : w) {
      SignedPair next{a * cur.num + prev.num, a * cur.den + prev.den};
      prev = std::move(cur);
      cur = std::move(next);
      out.push_back(cur);
    }
  }
  return out;
}

inline PeriodicWord surd_negative_cf(const QuadSurd& x0) {
  QuadSurd x = make_surd(x0.p, x0.q, x0.d);
  std::map<std::pair<Int, Int>, std::size_t> seen;
  Word digits;
  while (true) {
    auto key = std::make_pair(x.p, x.q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::size_t start = it->second;
      return {Word(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start)),
              Word(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end())};
    }
    seen.emplace(std::move(key), digits.size());
    auto [c, next] = surd_ceil_step(x);
    digits.push_back(std::move(c));
    x = std::move(next);
  }
}

}  // namespace farey
