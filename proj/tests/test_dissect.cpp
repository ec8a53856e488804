// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace testing_support;

TEST(Dissect, Construction) {
  EXPECT_EQ(error_kind([] { make_dissection(6, {{0, 3}, {1, 4}}); }), "InvalidDissection");
  EXPECT_EQ(error_kind([] { make_dissection(6, {{0, 1}}); }), "InvalidDissection");
  EXPECT_EQ(error_kind([] { make_dissection(2, {}); }), "InvalidDissection");
  EXPECT_EQ(error_kind([] { make_dissection(6, {{0, 7}}); }), "InvalidDissection");
  Dissection d = make_dissection(6, {{3, 0}});
  EXPECT_EQ(d.diagonals, (std::vector<Diagonal>{{0, 3}}));
  EXPECT_EQ(quiddity_of(d), W({2, 1, 1, 2, 1, 1}));
  EXPECT_FALSE(is_3d(d));
  EXPECT_EQ(error_kind([&] { dissection_sign(d); }), "Not3d");
}

TEST(Dissect, CatalanCounts) {
  for (int n = 3; n <= 11; ++n) EXPECT_EQ(enumerate_triangulations(n).size(), catalan(n - 2)) << n;
  EXPECT_EQ(enumerate_3d(6).size(), 15u);
  EXPECT_EQ(enumerate_3d(4).size(), 2u);
  EXPECT_EQ(error_kind([] { enumerate_3d(13); }), "OutOfRange");
}

// Every non-crossing diagonal subset of an n-gon, filtered by the 3d predicate.
std::set<std::vector<Diagonal>> brute_force_3d(int n) {
  std::vector<Diagonal> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) all.emplace_back(i, j);
  std::set<std::vector<Diagonal>> out;
  for (unsigned long mask = 0; mask < (1UL << all.size()); ++mask) {
    std::vector<Diagonal> pick;
    bool ok = true;
    for (std::size_t k = 0; k < all.size() && ok; ++k) {
      if ((mask >> k & 1UL) == 0) continue;
      for (const auto& e : pick)
        if (crosses(e, all[k])) ok = false;
      pick.push_back(all[k]);
    }
    if (!ok) continue;
    Dissection d = make_dissection(n, pick);
    if (is_3d(d)) out.insert(d.diagonals);
  }
  return out;
}

TEST(Dissect, Enumerate3dAgainstBruteForce) {
  for (int n = 3; n <= 8; ++n) {
    std::set<std::vector<Diagonal>> fast;
    for (const auto& d : enumerate_3d(n)) EXPECT_TRUE(fast.insert(d.diagonals).second) << "duplicate at n=" << n;
    EXPECT_EQ(fast, brute_force_3d(n)) << n;
  }
}

TEST(Dissect, SignParityAndSumFormula) {
  for (int n = 3; n <= 10; ++n)
    for (const auto& d : enumerate_3d(n)) {
      EXPECT_EQ(dissection_sign(d), classify_id(quiddity_of(d)));
      EXPECT_TRUE(total_sum_decomposition(d).holds());
    }
}

TEST(Dissect, SurgeryGoldens) {
  EXPECT_EQ(reduce_word(W({3, 1, 3})).reduced, W({2, 2}));
  Reduction r = reduce_word(W({2, 1, 1, 2}));
  EXPECT_EQ(r.reduced, W({3}));
  EXPECT_EQ(r.sign_flips, 1);
  EXPECT_EQ(reduce_word(W({5, 2, 2})).reduced, W({5, 2, 2}));
}

TEST(Dissect, ReductionIsConfluent) {
  // Applying applicable surgeries in random order must reach the leftmost-first result.
  for (int t = 0; t < 2000; ++t) {
    Word c = random_word(1, 12, 4);
    Reduction ref = reduce_word(c);
    Word w = c;
    int flips = 0;
    while (true) {
      std::vector<std::size_t> spots;
      for (std::size_t p = 0; p + 2 < w.size(); ++p) {
        if (w[p + 1] != 1) continue;
        if ((w[p] >= 2 && w[p + 2] >= 2) || (p + 3 < w.size() && w[p + 2] == 1)) spots.push_back(p);
      }
      if (spots.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
      if (apply_surgery(w, spots[pick(rng())])) ++flips;
    }
    EXPECT_EQ(w, ref.reduced) << format_word(c);
    EXPECT_EQ(flips % 2, ref.sign_flips % 2);
    Mat2 m = m_word(c);
    EXPECT_EQ(m_word(ref.reduced), ref.sign_flips % 2 == 0 ? m : -m);
  }
}

TEST(Dissect, ReconstructRoundTrip) {
  for (int n = 3; n <= 10; ++n)
    for (const auto& d : enumerate_triangulations(n)) {
      Word q = quiddity_of(d);
      EXPECT_EQ(quiddity_of(reconstruct_triangulation(q)), q);
    }
  Dissection sq = reconstruct_triangulation(W({1, 2, 1, 2}));
  EXPECT_EQ(sq.diagonals, (std::vector<Diagonal>{{1, 3}}));
  EXPECT_EQ(error_kind([] { reconstruct_triangulation(W({1, 1, 2, 1, 2, 1, 1})); }), "NotTotallyPositive");
  EXPECT_EQ(error_kind([] { reconstruct_triangulation(W({2, 2, 2})); }), "NotTotallyPositive");
}

TEST(Dissect, Hexadecagon) {
  Word hex = W({2, 2, 2, 5, 4, 2, 2, 1, 4, 2, 4, 1, 3, 2, 5, 1});
  Dissection d = reconstruct_triangulation(hex);
  EXPECT_EQ(d.n, 16);
  EXPECT_EQ(d.diagonals.size(), 13u);
  EXPECT_EQ(quiddity_of(d), hex);
}
