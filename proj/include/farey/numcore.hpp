// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace farey {

using Int = boost::multiprecision::cpp_int;

// Domain error carrying a stable kind name ("OutOfRange", "NotIrrational", ...).
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + (detail.empty() ? "" : ": " + detail)), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int isqrt(const Int& n) {
  if (n < 0) throw Error("OutOfRange", "square root of a negative number");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
  if (n < 0) return false;
  Int s = isqrt(n);
  return s * s == n;
}

inline std::string to_string(const Int& x) { return x.str(); }

inline Int parse_int(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw Error("ParseError", "expected an integer, got '" + std::string(s) + "'");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error("ParseError", "expected an integer, got '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Int(-v) : v;
}

// Point of the rational projective line; 1/0 is the canonical infinity.
struct ProjRational {
  Int num{1};
  Int den{0};

  bool is_infinity() const { return den == 0; }
  friend bool operator==(const ProjRational&, const ProjRational&) = default;

  // Extended real order with infinity above every rational.
  friend std::strong_ordering operator<=>(const ProjRational& x, const ProjRational& y) {
    if (x.den == 0 || y.den == 0) {
      if (x.den == 0 && y.den == 0) return std::strong_ordering::equal;
      return x.den == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    Int l = x.num * y.den;
    Int r = y.num * x.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// Coprime pair whose sign is kept: r/s and -r/-s are different points of the twofold cover.
struct SignedPair {
  Int num{1};
  Int den{0};
  friend bool operator==(const SignedPair&, const SignedPair&) = default;
  SignedPair operator-() const { return {-num, -den}; }
};

inline Int det(const SignedPair& x, const SignedPair& y) { return x.num * y.den - x.den * y.num; }

inline ProjRational normalize(const Int& num, const Int& den) {
  if (num == 0 && den == 0) throw Error("BothZero", "0/0 is not a point of the projective line");
  if (den == 0) return {1, 0};
  Int g = gcd(num, den);
  Int n = num / g;
  Int d = den / g;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

inline ProjRational normalize(const SignedPair& p) { return normalize(p.num, p.den); }

inline SignedPair as_pair(const ProjRational& x) { return {x.num, x.den}; }

inline ProjRational mediant(const ProjRational& x, const ProjRational& y) {
  return normalize(x.num + y.num, x.den + y.den);
}

inline bool is_farey_edge(const ProjRational& x, const ProjRational& y) {
  return abs(x.num * y.den - y.num * x.den) == 1;
}

inline std::string to_string(const ProjRational& x) { return x.num.str() + "/" + x.den.str(); }
inline std::string to_string(const SignedPair& x) { return x.num.str() + "/" + x.den.str(); }

// Accepts "r/s", "-r/s" or a bare integer "r".
inline ProjRational parse_rational(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return normalize(parse_int(s), 1);
  return normalize(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

// (p + sqrt(d)) / q with q | (d - p^2).
struct QuadSurd {
  Int p;
  Int q{1};
  Int d{2};
  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;
};

inline QuadSurd make_surd(const Int& p, const Int& q, const Int& d) {
  if (q == 0) throw Error("OutOfRange", "zero denominator in quadratic surd");
  if (d <= 0 || is_square(d)) throw Error("NotIrrational", "d = " + d.str() + " is not a positive non-square");
  if ((d - p * p) % q == 0) return {p, q, d};
  Int aq = abs(q);
  return {p * aq, q * aq, d * q * q};
}

inline Int surd_floor(const QuadSurd& x) {
  Int s = isqrt(x.d);
  if (x.q > 0) return floor_div(x.p + s, x.q);
  return floor_div(-x.p - s - 1, -x.q);
}

// x = c - 1/next with c = ceil(x).
inline std::pair<Int, QuadSurd> surd_ceil_step(const QuadSurd& x) {
  if (x.d <= 0 || is_square(x.d)) throw Error("NotIrrational", "d = " + x.d.str() + " is a perfect square");
  QuadSurd y = make_surd(x.p, x.q, x.d);
  Int c = surd_floor(y) + 1;
  Int p2 = c * y.q - y.p;
  Int q2 = (p2 * p2 - y.d) / y.q;
  return {c, QuadSurd{p2, q2, y.d}};
}

inline std::string to_string(const QuadSurd& x) {
  return "(" + x.p.str() + "+sqrt(" + x.d.str() + "))/" + x.q.str();
}

}  // namespace farey
