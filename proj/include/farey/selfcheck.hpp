// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/census.hpp"
#include "farey/io.hpp"
#include "farey/present.hpp"
#include "farey/ptolemy.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace farey::selfcheck {

struct Options {
  std::uint64_t seed = 20240601;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace oracle {

// Calls f on every word of length n with entries >= 1 and sum <= max_sum.
inline void for_each_word(int n, int max_sum, const std::function<void(const SmallWord&)>& f) {
  SmallWord w;
  std::function<void(int)> rec = [&](int sum) {
    if (static_cast<int>(w.size()) == n) {
      f(w);
      return;
    }
    int room = max_sum - sum - (n - static_cast<int>(w.size()) - 1);
    for (int c = 1; c <= room; ++c) {
      w.push_back(c);
      rec(sum + c);
      w.pop_back();
    }
  };
  rec(0);
}

struct M64 {
  std::int64_t a, b, c, d;
};

inline bool fits(const Mat2& m, std::int64_t limit) {
  for (const Int* x : {&m.a, &m.b, &m.c, &m.d})
    if (abs(*x) > limit) return false;
  return true;
}

// True if some positive word of length j < k with prefix sums below the bound equals A up to sign.
// The last two entries are solved from the 2x2 remainder, so only the first j-2 are enumerated.
inline bool shorter_word_exists(const Mat2& a, std::size_t k, int prefix_sum_bound) {
  const M64 A{static_cast<std::int64_t>(a.a), static_cast<std::int64_t>(a.b), static_cast<std::int64_t>(a.c),
              static_cast<std::int64_t>(a.d)};
  auto matches_pair = [&](const M64& p) {
    // T = P^{-1} A must be +-[[xy-1,-x],[y,-1]] with x,y >= 1.
    M64 t{p.d * A.a - p.b * A.c, p.d * A.b - p.b * A.d, -p.c * A.a + p.a * A.c, -p.c * A.b + p.a * A.d};
    if (t.d == 1) t = {-t.a, -t.b, -t.c, -t.d};
    if (t.d != -1) return false;
    std::int64_t x = -t.b, y = t.c;
    return x >= 1 && y >= 1 && t.a == x * y - 1;
  };
  if (k > 1) {
    // j = 1: A = +-[[x,-1],[1,0]].
    for (int s : {1, -1})
      if (A.b == -s && A.c == s && A.d == 0 && s * A.a >= 1) return true;
  }
  for (std::size_t j = 2; j < k; ++j) {
    const int free = static_cast<int>(j) - 2;
    bool found = false;
    std::function<void(int, int, const M64&)> rec = [&](int depth, int sum, const M64& p) {
      if (found) return;
      if (depth == free) {
        if (matches_pair(p)) found = true;
        return;
      }
      for (int c = 1; sum + c <= prefix_sum_bound - (free - depth - 1); ++c)
        rec(depth + 1, sum + c, M64{p.a * c + p.b, -p.a, p.c * c + p.d, -p.c});
    };
    rec(0, 0, M64{1, 0, 0, 1});
    if (found) return true;
  }
  return false;
}

inline Word cohn_pattern(int n, int which) {
  Word w{1, 1, n - 1};
  const std::vector<std::vector<int>> mids{{}, {3}, {2, 4}, {2, 3, 4}, {2, 4, 2, 4}};
  for (int x : mids[static_cast<std::size_t>(which)]) w.emplace_back(x);
  for (int i = 0; i < n; ++i) w.emplace_back(2);
  w.emplace_back(1);
  w.emplace_back(1);
  return w;
}

inline Mat2 random_rs_matrix(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), letter(0, 2);
  Mat2 m;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    switch (letter(rng)) {
      case 0: m = m * kR; break;
      case 1: m = m * kR.inverse(); break;
      default: m = m * kS; break;
    }
  }
  return m;
}

inline Word random_word(std::mt19937_64& rng, int min_len, int max_len, int max_entry) {
  std::uniform_int_distribution<int> len(min_len, max_len), entry(1, max_entry);
  Word w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.emplace_back(entry(rng));
  return w;
}

}  // namespace oracle

namespace detail {

inline std::string format_word_small(const SmallWord& w) { return format_word(to_word(w)); }

class Checker {
public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failures_;
  }
  template <class F>
  void guard(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, what + " threw " + e.what());
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& extra = "") const {
    std::ostringstream os;
    os << count_ - failures_ << "/" << count_ << " checks";
    if (!extra.empty()) os << ", " << extra;
    if (!first_failure_.empty()) os << "; first failure: " << first_failure_;
    return os.str();
  }

private:
  std::size_t count_ = 0, failures_ = 0;
  std::string first_failure_;
};

inline Word W(std::initializer_list<long long> xs) { return make_word(xs); }

}  // namespace detail

inline Result golden_examples() {
  detail::Checker ck;
  using detail::W;
  ck.guard("continued fractions", [&] {
    ck.expect(expand_negative(parse_rational("7/5")) == W({2, 2, 3}), "7/5 negative");
    ck.expect(expand_regular(parse_rational("7/5")) == W({1, 2, 1, 1}), "7/5 regular");
    ck.expect(regular_to_negative(W({1, 2, 1, 1})) == W({2, 2, 3}), "7/5 conversion");
    ck.expect(negative_to_regular(W({2, 2, 3})) == W({1, 2, 1, 1}), "7/5 inverse conversion");
    ck.expect(expand_negative(parse_rational("7/4")) == W({2, 4}), "7/4 negative");
    ck.expect(expand_regular(parse_rational("7/4")) == W({1, 1, 2, 1}), "7/4 regular");
    ck.expect(regular_to_negative(W({1, 1, 2, 1})) == W({2, 4}), "7/4 conversion");
    ck.expect(negative_to_regular(W({2, 4})) == W({1, 1, 2, 1}), "7/4 inverse conversion");
  });
  ck.guard("matrices", [&] {
    ck.expect(m_plus_word(W({1, 2, 1, 1})) == Mat2{7, 4, 5, 3}, "M+(1,2,1,1)");
    ck.expect(m_word(W({2, 2, 3})) == Mat2{7, -3, 5, -2}, "M(2,2,3)");
    ck.expect(conjugacy_class_rational(m_plus_word(W({1, 2, 1, 1}))) == ConjClass{least_rotation(W({3, 2, 3}))},
              "M+(1,2,1,1) conjugate to M(3,2,3)");
    ck.expect(conjugacy_class_surd(m_plus_word(W({1, 2, 1, 1}))) == ConjClass{least_rotation(W({3, 2, 3}))},
              "M+(1,2,1,1) conjugate to M(3,2,3), surd");
    ck.expect(classify_id(W({1, 1, 2, 1, 2, 1, 1})) == IdClass::PlusId, "M(1,1,2,1,2,1,1) = Id");
    ck.expect(classify_id(W({1, 1, 2, 1, 1, 1, 1, 2, 1, 1})) == IdClass::MinusId, "M(1,1,2,1,1,1,1,2,1,1) = -Id");
  });
  const Word hex = W({2, 2, 2, 5, 4, 2, 2, 1, 4, 2, 4, 1, 3, 2, 5, 1});
  ck.guard("hexadecagon", [&] {
    ck.expect(classify_id(hex) == IdClass::MinusId, "hexadecagon is -Id");
    ck.expect(quiddity_of(reconstruct_triangulation(hex)) == hex, "hexadecagon reconstruction");
    const std::vector<std::pair<int, int>> pts{{1, 0},     {2, 1},     {3, 2},   {4, 3},   {17, 13}, {64, 49},
                                               {111, 85},  {158, 121}, {47, 36}, {30, 23}, {13, 10}, {22, 17},
                                               {9, 7},     {5, 4},     {1, 1},   {0, 1}};
    WalkSeq w = walk_from_word(hex);
    bool same = w.points.size() == pts.size();
    for (std::size_t i = 0; same && i < pts.size(); ++i) same = w.points[i] == SignedPair{pts[i].first, pts[i].second};
    ck.expect(same, "Farey hexadecagon vertex list");
  });
  ck.guard("walks", [&] {
    WalkSeq w7{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {-1, -2}, {0, -1}}, Periodicity::Periodic};
    ck.expect(quiddity_from_walk(w7) == W({1, 1, 1, 1, 2, 1, 2}), "7-periodic walk");
    WalkSeq w10{{{1, 0}, {1, 1}, {1, 2}, {0, 1}, {-1, -1}, {-1, -2}, {0, -1}, {1, 0}, {1, 1}, {0, 1}},
                Periodicity::Antiperiodic};
    ck.expect(quiddity_from_walk(w10) == W({1, 2, 1, 1, 1, 1, 2, 1, 1, 1}), "10-antiperiodic walk");
  });
  ck.guard("minimal presentations", [&] {
    ck.expect(minimal_presentation(Mat2{2, -5, 1, -2}).word == W({3, 2, 1}), "[[2,-5],[1,-2]]");
    ck.expect(minimal_presentation(Mat2{13, -9, 3, -2}).word == W({5, 2, 2}), "[[13,-9],[3,-2]]");
    ck.expect(minimal_presentation(Mat2{10, 3, 3, 1}).word == W({4, 2, 2, 2, 1, 1}), "[[10,3],[3,1]]");
    ck.expect(minimal_presentation(Mat2{3, 10, 2, 7}).word == W({2, 2, 5, 1, 1}), "[[3,10],[2,7]]");
    ck.expect(minimal_presentation(kS).word == W({1, 1, 2, 1, 1}), "S");
  });
  ck.guard("conjugacy classes", [&] {
    const std::vector<std::pair<Mat2, Word>> cases{{Mat2{10, 3, 3, 1}, W({2, 2, 5})},
                                                   {Mat2{3, 10, 2, 7}, W({6, 2})},
                                                   {Mat2{2, 1, 1, 1}, W({3})},
                                                   {Mat2{5, 2, 2, 1}, W({4, 2})}};
    for (const auto& [m, cyc] : cases) {
      ck.expect(conjugacy_class_rational(m).cycle == least_rotation(cyc), "rational class of " + to_string(m));
      ck.expect(conjugacy_class_surd(m).cycle == least_rotation(cyc), "surd class of " + to_string(m));
    }
  });
  ck.guard("Cohn matrices", [&] {
    for (int n = 2; n <= 6; ++n) {
      Mat2 a{n, 1, 3 * n - n * n - 1, 3 - n};
      Mat2 an1{n + 1, 1, 3 * (n + 1) - (n + 1) * (n + 1) - 1, 3 - (n + 1)};
      Mat2 b = a * an1;
      const std::vector<Mat2> mats{a, b, a * b, a * a * b, a * b * b};
      for (int which = 0; which < 5; ++which) {
        Word pat = oracle::cohn_pattern(n, which);
        std::string tag = "Cohn n=" + std::to_string(n) + " #" + std::to_string(which);
        ck.expect(psl_eq(m_word(pat), mats[static_cast<std::size_t>(which)]), tag + " value");
        Word expect = n >= 3 ? pat : reduce_word(pat).reduced;
        ck.expect(minimal_presentation(mats[static_cast<std::size_t>(which)]).word == expect, tag + " minimal word");
      }
      ck.expect(conjugacy_class_rational(a).cycle == W({3}), "Cohn A class");
      ck.expect(conjugacy_class_rational(b).cycle == least_rotation(W({4, 2})), "Cohn B class");
    }
  });
  return {1, "golden examples", ck.ok(), ck.summary()};
}

inline Result census_equivalence(const Census& c, double seconds) {
  detail::Checker ck;
  std::ostringstream extra;
  for (const auto& r : c.rows) {
    std::string tag = "n=" + std::to_string(r.n);
    ck.expect(r.sets_equal, tag + " solution set differs from 3d-dissection quiddities");
    ck.expect(r.parity_ok, tag + " sign differs from even-cell parity");
    ck.expect(r.level_ok, tag + " level formula");
    ck.expect(r.gap_empty, tag + " solution above 3n-6");
    ck.expect(r.exact_agree, tag + " exact and int64 classifications disagree");
    extra << tag << ":" << r.solutions << " ";
  }
  ck.expect(c.rows.size() == 7, "census must cover n = 3..9");
  ck.expect(seconds <= 180.0, "census exceeded 180 s");
  extra << "in " << seconds << " s";
  return {2, "census equivalence n=3..9", ck.ok(), ck.summary(extra.str())};
}

inline Result catalan_count(const Census& c) {
  detail::Checker ck;
  std::ostringstream extra;
  for (const auto& r : c.rows) {
    int top = r.minus_by_sum.count(3 * r.n - 6) != 0 ? r.minus_by_sum.at(3 * r.n - 6) : 0;
    ck.expect(static_cast<std::uint64_t>(top) == catalan(r.n - 2), "n=" + std::to_string(r.n));
    ck.expect(r.triangulations == catalan(r.n - 2), "triangulation count n=" + std::to_string(r.n));
    extra << top << " ";
  }
  return {3, "totally positive count is Catalan(n-2)", ck.ok(), ck.summary("counts " + extra.str())};
}

inline Result farey_coincidence(const Census& c) {
  detail::Checker ck;
  for (const auto& [n, sols] : c.solutions) {
    if (n > 8) continue;
    for (const auto& s : sols) {
      int sum = 0;
      for (int x : s.word) sum += x;
      if (s.sign != IdClass::MinusId || sum != 3 * n - 6) continue;
      Word w = to_word(s.word);
      ck.guard("word " + detail::format_word_small(s.word), [&] {
        FareyPolygon p = polygon_of_walk(walk_from_word(w));
        ck.expect(quiddity_of(farey_triangulate(p)) == w, "triangulation of " + detail::format_word_small(s.word));
        ck.expect(index_of_polygon(p) == w, "index of " + detail::format_word_small(s.word));
      });
    }
  }
  return {4, "Farey triangulation coincides with the quiddity (n<=8)", ck.ok(), ck.summary()};
}

inline Result walk_round_trip(const Census& c) {
  detail::Checker ck;
  for (const auto& [n, sols] : c.solutions)
    for (const auto& s : sols) {
      Word w = to_word(s.word);
      ck.guard("word " + detail::format_word_small(s.word), [&] {
        ck.expect(quiddity_from_walk(walk_from_word(w)) == w, "round trip of " + detail::format_word_small(s.word));
      });
    }
  return {5, "walk round trip on the n<=9 census", ck.ok(), ck.summary()};
}

inline Result euler_identity(std::mt19937_64& rng) {
  detail::Checker ck;
  for (int t = 0; t < 1000; ++t) {
    Word c = oracle::random_word(rng, 2, 8, 9);
    const std::size_t n = c.size();
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j)
        for (std::size_t k = j + 1; k <= n; ++k)
          for (std::size_t l = k; l <= n; ++l) ck.expect(euler_identity_holds(c, i, j, k, l), "word " + format_word(c));
  }
  return {6, "Euler continuant identity", ck.ok(), ck.summary()};
}

inline Result ptolemy_equivalence(const Census& c) {
  detail::Checker ck;
  for (int n = 3; n <= 8; ++n) {
    std::map<SmallWord, IdClass> sign;
    for (const auto& s : c.solutions.at(n)) sign[s.word] = s.sign;
    oracle::for_each_word(n, 3 * n - 6, [&](const SmallWord& sw) {
      Word w = to_word(sw);
      auto it = sign.find(sw);
      bool minus = it != sign.end() && it->second == IdClass::MinusId;
      bool plus = it != sign.end() && it->second == IdClass::PlusId;
      ck.expect(verify_pp(labeling_candidate(w, LabelMode::Symmetric)) == minus, "symmetric " + detail::format_word_small(sw));
      ck.expect(verify_pp(labeling_candidate(w, LabelMode::Skew)) == plus, "skew " + detail::format_word_small(sw));
      ck.expect(fill_labeling(w).has_value() == (minus || plus), "filling " + detail::format_word_small(sw));
    });
    for (const auto& s : c.solutions.at(n)) {
      if (s.sign != IdClass::MinusId) continue;
      Labeling l = labeling_from_word(to_word(s.word), LabelMode::Symmetric);
      std::size_t w = std::min<std::size_t>(2, static_cast<std::size_t>(n) - 1);
      l.x[0][w] += 1;
      l.x[w][0] += 1;
      ck.expect(!verify_pp(l), "perturbed control n=" + std::to_string(n));
      break;
    }
  }
  return {7, "Ptolemy labelings: symmetric iff -Id, skew iff +Id (n<=8)", ck.ok(), ck.summary()};
}

inline Result pfaffian_trace(std::mt19937_64& rng) {
  auto t0 = std::chrono::steady_clock::now();
  detail::Checker ck;
  for (int t = 0; t < 1000; ++t) {
    Word c = oracle::random_word(rng, 1, 10, 6);
    ck.expect(trace_pfaffian_check(c), "word " + format_word(c));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ck.expect(secs <= 30.0, "exceeded 30 s");
  return {8, "Pfaffian trace formula and its plus-sign variant", ck.ok(), ck.summary()};
}

inline Result minimal_presentations(std::mt19937_64& rng) {
  auto t0 = std::chrono::steady_clock::now();
  detail::Checker ck;
  int searched = 0, identities = 0;
  for (int t = 0; t < 10000; ++t) {
    Mat2 a = oracle::random_rs_matrix(rng, 30);
    if (psl_eq(a, Mat2::identity())) {
      ++identities;
      bool threw = false;
      try {
        minimal_presentation(a);
      } catch (const Error& e) {
        threw = e.kind() == "IsIdentity";
      }
      ck.expect(threw, "identity must be rejected");
      continue;
    }
    ck.guard("matrix " + to_string(a), [&] {
      MinPres mp = minimal_presentation(a);
      ck.expect(m_word(mp.word) == (mp.sign == 1 ? a : -a),
                "sign bookkeeping for " + to_string(a));
      ck.expect(psl_eq(m_word(mp.word), a), "round trip for " + to_string(a));
      ck.expect(is_minimal(mp.word), "is_minimal for " + to_string(a));
      if (mp.word.size() <= 7 && oracle::fits(a, std::int64_t{1} << 40)) {
        Int sum = 0;
        for (const Int& x : mp.word) sum += x;
        ++searched;
        ck.expect(!oracle::shorter_word_exists(a, mp.word.size(), static_cast<int>(sum) + 4),
                  "shorter word exists for " + to_string(a));
      }
    });
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ck.expect(secs <= 120.0, "exceeded 120 s");
  std::ostringstream extra;
  extra << searched << " bounded searches, " << identities << " identities";
  return {9, "minimal presentation soundness and minimality", ck.ok(), ck.summary(extra.str())};
}

inline Result conjugacy_agreement(std::mt19937_64& rng) {
  detail::Checker ck;
  int done = 0;
  while (done < 1000) {
    Mat2 a = oracle::random_rs_matrix(rng, 30);
    if (abs(a.trace()) < 3) continue;
    ++done;
    ck.guard("matrix " + to_string(a), [&] {
      ConjClass r = conjugacy_class_rational(a);
      ck.expect(r == conjugacy_class_surd(a), "methods disagree on " + to_string(a));
      for (int g = 0; g < 10; ++g) {
        Mat2 x = oracle::random_rs_matrix(rng, 10);
        ck.expect(conjugacy_class_rational(x * a * x.inverse()) == r, "class changed under conjugation of " + to_string(a));
      }
    });
  }
  return {10, "conjugacy classes: rational and surd methods agree", ck.ok(), ck.summary()};
}

inline Result mirror_and_reversal() {
  detail::Checker ck;
  for (long long r = 2; r <= 200; ++r)
    for (long long s = 1; s < r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      ProjRational x{r, s};
      Word a = expand_regular(x);
      Word rev(a.rbegin(), a.rend());
      auto conv = convergents(a, CfKind::Regular);
      const std::size_t m2 = conv.size();
      ProjRational mirror = eval_regular(rev);
      ck.expect(normalize(conv[m2 - 1].num, conv[m2 - 2].num) == mirror, "mirror " + to_string(x));
      Trs t = t_rs(x);
      Word seg(t.quiddity.begin() + static_cast<std::ptrdiff_t>(t.k) + 1, t.quiddity.end() - 1);
      ck.expect(expand_negative(mirror) == seg, "reversal " + to_string(x));
      ck.expect(normalize(eval_negative(expand_negative(x))) == x, "negative round trip " + to_string(x));
      ck.expect(eval_regular(a) == x, "regular round trip " + to_string(x));
    }
  return {11, "mirror and reversal formulas (r<=200)", ck.ok(), ck.summary()};
}

inline std::vector<Result> run_all(const Options& opt, const std::function<void(const Result&)>& report = {}) {
  std::vector<Result> out;
  auto timed = [&](auto&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Result r = f();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (report) report(r);
    out.push_back(std::move(r));
  };
  unsigned threads = opt.threads != 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  std::mt19937_64 rng(opt.seed);
  timed([] { return golden_examples(); });
  auto t0 = std::chrono::steady_clock::now();
  Census census = run_census(9, threads);
  double census_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  timed([&] { return census_equivalence(census, census_secs); });
  timed([&] { return catalan_count(census); });
  timed([&] { return farey_coincidence(census); });
  timed([&] { return walk_round_trip(census); });
  timed([&] { return euler_identity(rng); });
  timed([&] { return ptolemy_equivalence(census); });
  timed([&] { return pfaffian_trace(rng); });
  timed([&] { return minimal_presentations(rng); });
  timed([&] { return conjugacy_agreement(rng); });
  timed([] { return mirror_and_reversal(); });
  return out;
}

}  // namespace farey::selfcheck
