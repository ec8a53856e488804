// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <set>

using namespace testing_support;

TEST(FareyWalk, FromWordGoldens) {
  WalkSeq w = walk_from_word(W({1, 1, 1}));
  EXPECT_EQ(w.points, (std::vector<SignedPair>{{1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(w.periodicity, Periodicity::Antiperiodic);
  WalkSeq p = walk_from_word(W({1, 1, 2, 1, 2, 1, 1}));
  EXPECT_EQ(p.points.size(), 7u);
  EXPECT_EQ(p.periodicity, Periodicity::Periodic);
  EXPECT_EQ(classify_walk(p), WalkKind::PositiveWalk);
  EXPECT_EQ(error_kind([] { walk_from_word(W({2, 2})); }), "NotASolution");
}

TEST(FareyWalk, Classification) {
  WalkSeq bad{{{1, 0}, {2, 1}, {0, 1}}, Periodicity::Antiperiodic};
  EXPECT_EQ(classify_walk(bad), WalkKind::Invalid);
  WalkSeq tri{{{1, 0}, {1, 1}, {0, 1}}, Periodicity::Antiperiodic};
  EXPECT_EQ(classify_walk(tri), WalkKind::FareyPolygon);
  WalkSeq mixed{{{1, 0}, {0, 1}, {1, 1}}, Periodicity::Antiperiodic};
  EXPECT_EQ(classify_walk(mixed), WalkKind::Walk);
  EXPECT_EQ(error_kind([&] { quiddity_from_walk(mixed); }), "NotPositive");
}

TEST(FareyWalk, CensusProperties) {
  for (const auto& [n, sols] : census9().solutions)
    for (const auto& s : sols) {
      Word c = to_word(s.word);
      WalkSeq w = walk_from_word(c);
      for (long long i = 0; i < n; ++i)
        EXPECT_EQ(det(farey::detail::walk_point(w, i), farey::detail::walk_point(w, i + 1)), 1);
      if (s.sign == IdClass::MinusId) EXPECT_EQ(farey::detail::walk_point(w, n + 1), -w.points[1]);
      // The count read off the walk must regenerate the same walk.
      Word q = quiddity_from_walk(w);
      EXPECT_EQ(walk_from_word(q), w);
      // Independent check through the recurrence p_{i+1} = c_i p_i - p_{i-1}.
      for (long long i = 0; i < n; ++i) {
        SignedPair prev = farey::detail::walk_point(w, i - 1), cur = farey::detail::walk_point(w, i),
                   nx = farey::detail::walk_point(w, i + 1);
        Int ci = c[static_cast<std::size_t>(i)];
        EXPECT_EQ(nx, (SignedPair{ci * cur.num - prev.num, ci * cur.den - prev.den}));
      }
    }
}

TEST(FareyWalk, SectionExampleWalks) {
  WalkSeq w7{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {-1, -2}, {0, -1}}, Periodicity::Periodic};
  EXPECT_EQ(quiddity_from_walk(w7), W({1, 1, 1, 1, 2, 1, 2}));
  WalkSeq w10{{{1, 0}, {1, 1}, {1, 2}, {0, 1}, {-1, -1}, {-1, -2}, {0, -1}, {1, 0}, {1, 1}, {0, 1}},
              Periodicity::Antiperiodic};
  EXPECT_EQ(quiddity_from_walk(w10), W({1, 2, 1, 1, 1, 1, 2, 1, 1, 1}));
}

TEST(FareyWalk, TriangulateAndIndex) {
  FareyPolygon hex{{{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1}}};
  Dissection d = farey_triangulate(hex);
  EXPECT_EQ(d.diagonals.size(), 3u);
  EXPECT_EQ(index_of_polygon(hex), quiddity_of(d));
  FareyPolygon tri{{{1, 0}, {1, 1}, {0, 1}}};
  EXPECT_TRUE(farey_triangulate(tri).diagonals.empty());
  FareyPolygon bad{{{1, 0}, {2, 1}, {0, 1}}};
  EXPECT_EQ(error_kind([&] { farey_triangulate(bad); }), "NotAPolygon");
}

TEST(FareyWalk, FareyPolygonsAreCatalan) {
  for (int n = 3; n <= 8; ++n) {
    std::set<std::vector<ProjRational>> polys;
    for (const auto& d : enumerate_triangulations(n)) {
      FareyPolygon p = polygon_of_walk(walk_from_word(quiddity_of(d)));
      EXPECT_EQ(classify_walk(walk_from_word(quiddity_of(d))), WalkKind::FareyPolygon);
      EXPECT_EQ(quiddity_of(farey_triangulate(p)), quiddity_of(d));
      polys.insert(p.vertices);
    }
    EXPECT_EQ(polys.size(), catalan(n - 2)) << n;
  }
}

TEST(FareyWalk, TrsSevenFifths) {
  Trs t = t_rs(parse_rational("7/5"));
  EXPECT_EQ(t.quiddity, W({2, 2, 3, 1, 2, 4, 1}));
  EXPECT_EQ(t.a_data, W({1, 2, 1, 1}));
  EXPECT_EQ(t.k, 3u);
  EXPECT_TRUE(labels_consistent(t.tri));
  EXPECT_EQ(error_kind([] { t_rs(parse_rational("1/2")); }), "OutOfRange");
}

TEST(FareyWalk, TrsLabelsAreConvergents) {
  for (long long r = 2; r <= 60; ++r)
    for (long long s = 1; s < r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      ProjRational x{r, s};
      Trs t = t_rs(x);
      EXPECT_TRUE(labels_consistent(t.tri));
      EXPECT_EQ(t.tri.labels[t.k], x);
      EXPECT_EQ(t.a_data, expand_regular(x));
      auto conv = convergents(expand_negative(x), CfKind::Negative);
      ASSERT_EQ(conv.size(), t.k);
      for (std::size_t i = 0; i < conv.size(); ++i) EXPECT_EQ(t.tri.labels[i + 1], normalize(conv[i]));
      Word prefix(t.quiddity.begin(), t.quiddity.begin() + static_cast<std::ptrdiff_t>(t.k));
      EXPECT_EQ(prefix, expand_negative(x));
      EXPECT_EQ(classify_id(t.quiddity), IdClass::MinusId);
    }
}
