// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/present.hpp"
#include "farey/ptolemy.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <limits>
#include <string>
#include <string_view>

namespace farey {

using json = nlohmann::json;

inline std::string format_word(const Word& w) {
  std::string s;
  for (const Int& x : w) {
    if (!s.empty()) s += ',';
    s += x.str();
  }
  return s;
}

inline std::string format_negative(const Word& w) { return "[[" + format_word(w) + "]]"; }
inline std::string format_regular(const Word& w) { return "[" + format_word(w) + "]"; }
inline std::string format_periodic(const PeriodicWord& p) {
  return "[[" + format_word(p.prefix) + ";" + format_word(p.period) + "]]";
}

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return std::string(s);
}

inline Word parse_plain_word(std::string_view s) {
  Word w;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      w.push_back(parse_int(cur));
      cur.clear();
    }
  };
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) != 0) flush();
    else cur += ch;
  }
  flush();
  return w;
}

struct ParsedCf {
  CfKind kind;
  bool explicit_kind;
  Word word;
};

// "[[2,2,3]]" is negative, "[1,2,1,1]" regular, a bare list has no declared kind.
inline ParsedCf parse_cf(std::string_view text) {
  std::string s = trim(text);
  if (s.size() >= 4 && s.starts_with("[[") && s.ends_with("]]"))
    return {CfKind::Negative, true, parse_plain_word(std::string_view(s).substr(2, s.size() - 4))};
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
    return {CfKind::Regular, true, parse_plain_word(std::string_view(s).substr(1, s.size() - 2))};
  return {CfKind::Negative, false, parse_plain_word(s)};
}

inline Word parse_word(std::string_view text) {
  Word w = parse_cf(text).word;
  require_positive(w);
  return w;
}

inline PeriodicWord parse_periodic(std::string_view text) {
  std::string s = trim(text);
  if (!(s.starts_with("[[") && s.ends_with("]]"))) throw Error("ParseError", "periodic syntax is [[prefix;period]]");
  std::string body = s.substr(2, s.size() - 4);
  auto semi = body.find(';');
  if (semi == std::string::npos) throw Error("ParseError", "periodic syntax needs ';'");
  return {parse_plain_word(body.substr(0, semi)), parse_plain_word(body.substr(semi + 1))};
}

// "(p+sqrt(d))/q", "p+sqrt(d)", "sqrt(d)", "(p-sqrt(d))/q" is rejected, or "p,q,d".
inline QuadSurd parse_surd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (std::isspace(static_cast<unsigned char>(ch)) == 0) s += ch;
  if (s.find("sqrt") == std::string::npos) {
    Word parts;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        parts.push_back(parse_int(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(parse_int(cur));
    if (parts.size() != 3) throw Error("ParseError", "surd syntax is p,q,d or (p+sqrt(d))/q");
    return make_surd(parts[0], parts[1], parts[2]);
  }
  Int q = 1;
  auto slash = s.rfind('/');
  if (slash != std::string::npos && slash > s.find("sqrt")) {
    q = parse_int(s.substr(slash + 1));
    s = s.substr(0, slash);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto pos = s.find("sqrt");
  Int p = 0;
  if (pos > 0) {
    if (s[pos - 1] != '+') throw Error("ParseError", "expected p+sqrt(d)");
    p = parse_int(s.substr(0, pos - 1));
  }
  std::string rad = s.substr(pos + 4);
  if (rad.size() >= 2 && rad.front() == '(' && rad.back() == ')') rad = rad.substr(1, rad.size() - 2);
  return make_surd(p, q, parse_int(rad));
}

inline json to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw Error("ParseError", "expected an integer in JSON");
}

inline json to_json(const Word& w) {
  json a = json::array();
  for (const Int& x : w) a.push_back(to_json(x));
  return a;
}

inline json to_json(const ProjRational& x) { return json::array({to_json(x.num), to_json(x.den)}); }
inline json to_json(const SignedPair& x) { return json::array({to_json(x.num), to_json(x.den)}); }

inline json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

inline json to_json(const Dissection& d) {
  json diags = json::array();
  for (auto [i, j] : d.diagonals) diags.push_back(json::array({i, j}));
  return json{{"n", d.n}, {"diagonals", diags}};
}

inline Dissection dissection_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("diagonals"))
    throw Error("ParseError", "dissection JSON needs \"n\" and \"diagonals\"");
  std::vector<Diagonal> diags;
  for (const auto& e : j.at("diagonals")) {
    if (!e.is_array() || e.size() != 2) throw Error("ParseError", "each diagonal is a pair");
    diags.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_dissection(j.at("n").get<int>(), std::move(diags));
}

inline json to_json(const WalkSeq& w) {
  json pts = json::array();
  for (const auto& p : w.points) pts.push_back(to_json(p));
  return json{{"periodicity", w.periodicity == Periodicity::Antiperiodic ? "anti" : "periodic"}, {"points", pts}};
}

inline WalkSeq walk_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points")) throw Error("ParseError", "walk JSON needs \"points\"");
  WalkSeq w;
  std::string per = j.value("periodicity", "anti");
  if (per == "anti" || per == "antiperiodic") w.periodicity = Periodicity::Antiperiodic;
  else if (per == "periodic") w.periodicity = Periodicity::Periodic;
  else throw Error("ParseError", "periodicity must be \"anti\" or \"periodic\"");
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) throw Error("ParseError", "each point is a pair");
    w.points.push_back({int_from_json(p[0]), int_from_json(p[1])});
  }
  return w;
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const Int& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline json to_json(const Labeling& l) {
  return json{{"n", l.n}, {"mode", l.mode == LabelMode::Symmetric ? "symmetric" : "skew"}, {"x", to_json(l.x)}};
}

inline Labeling labeling_from_json(const json& j) {
  Labeling l;
  const json& rows = j.is_object() ? j.at("x") : j;
  if (j.is_object()) l.mode = j.value("mode", "symmetric") == "skew" ? LabelMode::Skew : LabelMode::Symmetric;
  l.n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    std::vector<Int> r;
    for (const auto& e : row) r.push_back(int_from_json(e));
    l.x.push_back(std::move(r));
  }
  return l;
}

inline json to_json(const LabeledTriangulation& lt) {
  json labels = json::array();
  for (const auto& x : lt.labels) labels.push_back(to_string(x));
  json out = to_json(lt.base);
  out["labels"] = labels;
  return out;
}

// Accepts a JSON list of "r/s" strings or [r,s] pairs, or a comma-separated list of "r/s".
inline FareyPolygon polygon_from_text(const std::string& text) {
  FareyPolygon p;
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[') {
    json j = json::parse(s);
    for (const auto& e : j) {
      if (e.is_string()) p.vertices.push_back(parse_rational(e.get<std::string>()));
      else p.vertices.push_back(normalize(int_from_json(e.at(0)), int_from_json(e.at(1))));
    }
    return p;
  }
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!trim(cur).empty()) p.vertices.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return p;
}

}  // namespace farey
