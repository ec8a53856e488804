// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/cfrac.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace farey {

struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  Mat2 inverse() const { return {d, -b, -c, a}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

inline const Mat2 kR{1, 1, 0, 1};
inline const Mat2 kL{1, 0, 1, 1};
inline const Mat2 kS{0, -1, 1, 0};

inline Mat2 make_mat(const Int& a, const Int& b, const Int& c, const Int& d) {
  Mat2 m{a, b, c, d};
  if (m.det() != 1) throw Error("NotUnimodular", "determinant is " + m.det().str() + ", expected 1");
  return m;
}

inline Mat2 power(Mat2 base, Int e) {
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Mat2 out;
  while (e > 0) {
    if ((e & 1) != 0) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

inline bool psl_eq(const Mat2& x, const Mat2& y) { return x == y || x == -y; }

inline Mat2 m_word(const Word& c) {
  Mat2 m;
  for (const Int& ci : c) m = m * Mat2{ci, -1, 1, 0};
  return m;
}

inline Mat2 m_plus_word(const Word& a) {
  Mat2 m;
  for (const Int& ai : a) m = m * Mat2{ai, 1, 1, 0};
  return m;
}

enum class IdClass { MinusId, PlusId, Neither };

inline IdClass classify_mat(const Mat2& m) {
  if (m == Mat2::identity()) return IdClass::PlusId;
  if (m == -Mat2::identity()) return IdClass::MinusId;
  return IdClass::Neither;
}

inline IdClass classify_id(const Word& c) { return classify_mat(m_word(c)); }

inline std::string to_string(IdClass k) {
  switch (k) {
    case IdClass::MinusId: return "-Id";
    case IdClass::PlusId: return "+Id";
    default: return "neither";
  }
}

enum class Gen { R, L, S };

struct GenToken {
  Gen gen;
  Int exp;
  friend bool operator==(const GenToken&, const GenToken&) = default;
};

class GenWord {
public:
  GenWord() = default;

  // Appends with merging of equal adjacent letters; zero powers vanish.
  void push(Gen g, const Int& e) {
    if (e == 0) return;
    if (!tokens_.empty() && tokens_.back().gen == g) {
      tokens_.back().exp += e;
      if (tokens_.back().exp == 0) tokens_.pop_back();
      return;
    }
    tokens_.push_back({g, e});
  }
  const std::vector<GenToken>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }
  friend bool operator==(const GenWord&, const GenWord&) = default;

private:
  std::vector<GenToken> tokens_;
};

inline Mat2 eval_genword(const GenWord& g) {
  Mat2 m;
  for (const auto& t : g.tokens()) {
    switch (t.gen) {
      case Gen::R: m = m * Mat2{1, t.exp, 0, 1}; break;
      case Gen::L: m = m * Mat2{1, 0, t.exp, 1}; break;
      case Gen::S: m = m * power(kS, Int(((t.exp % 4) + 4) % 4)); break;
    }
  }
  return m;
}

inline GenWord to_rs_word(const Word& c) {
  GenWord g;
  for (const Int& ci : c) {
    g.push(Gen::R, ci);
    g.push(Gen::S, 1);
  }
  return g;
}

inline GenWord to_rl_word(const Word& a) {
  if (a.size() % 2 == 1) throw Error("OddLength", "regular word must have even length");
  GenWord g;
  for (std::size_t i = 0; i < a.size(); ++i) g.push(i % 2 == 0 ? Gen::R : Gen::L, a[i]);
  return g;
}

inline std::string to_string(const GenWord& g) {
  std::string out;
  for (const auto& t : g.tokens()) {
    if (!out.empty()) out += ' ';
    out += t.gen == Gen::R ? "R" : t.gen == Gen::L ? "L" : "S";
    if (t.exp != 1) out += "^" + t.exp.str();
  }
  return out;
}

// Accepts "R^2 S R^-1", "RSRS", "S^2".
inline GenWord parse_genword(const std::string& s) {
  GenWord g;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
      ++i;
      continue;
    }
    Gen gen;
    if (ch == 'R') gen = Gen::R;
    else if (ch == 'L') gen = Gen::L;
    else if (ch == 'S') gen = Gen::S;
    else throw Error("ParseError", std::string("unexpected character '") + ch + "' in generator word");
    ++i;
    Int e = 1;
    if (i < s.size() && s[i] == '^') {
      std::size_t j = ++i;
      if (j < s.size() && s[j] == '-') ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) != 0) ++j;
      e = parse_int(std::string_view(s).substr(i, j - i));
      i = j;
    }
    g.push(gen, e);
  }
  return g;
}

inline bool is_in_gamma(const Mat2& m) {
  return m.a >= m.b && m.b >= m.d && m.d > 0 && m.a >= m.c && m.c >= m.d;
}

inline std::string to_string(const Mat2& m) {
  return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

// Accepts "a b c d" or "[[a,b],[c,d]]".
inline Mat2 parse_matrix(const std::string& s) {
  std::vector<Int> v;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      v.push_back(parse_int(cur));
      cur.clear();
    }
  };
  for (char ch : s) {
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch)) != 0) {
      cur += ch;
    } else if (ch == ',' || ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch)) != 0) {
      flush();
    } else {
      throw Error("ParseError", std::string("unexpected character '") + ch + "' in matrix");
    }
  }
  flush();
  if (v.size() != 4) throw Error("ParseError", "a matrix needs exactly four entries");
  return make_mat(v[0], v[1], v[2], v[3]);
}

}  // namespace farey
