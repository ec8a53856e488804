// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

using namespace testing_support;

TEST(Ptolemy, EulerIdentityRandom) {
  for (int t = 0; t < 200; ++t) {
    Word c = random_word(2, 8, 9);
    const std::size_t n = c.size();
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j)
        for (std::size_t k = j + 1; k <= n; ++k)
          for (std::size_t l = k; l <= n; ++l) ASSERT_TRUE(euler_identity_holds(c, i, j, k, l)) << format_word(c);
  }
  EXPECT_EQ(error_kind([] { euler_identity_holds(W({2, 3}), 2, 1, 1, 2); }), "BadIndices");
}

TEST(Ptolemy, HandBuiltSquareFails) {
  Labeling l;
  l.n = 4;
  l.x = IntMatrix(4, std::vector<Int>(4, 1));
  for (int i = 0; i < 4; ++i) l.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  EXPECT_FALSE(verify_pp(l));
  Labeling ok = labeling_from_word(W({1, 2, 1, 2}), LabelMode::Symmetric);
  EXPECT_TRUE(verify_pp(ok));
  EXPECT_EQ(ok.x[0][2], 2);
  EXPECT_EQ(ok.x[1][3], 1);
}

TEST(Ptolemy, LabelingsFollowTheSign) {
  for (const auto& [n, sols] : census9().solutions) {
    if (n > 7) continue;
    for (const auto& s : sols) {
      Word c = to_word(s.word);
      LabelMode mode = s.sign == IdClass::MinusId ? LabelMode::Symmetric : LabelMode::Skew;
      LabelMode other = mode == LabelMode::Symmetric ? LabelMode::Skew : LabelMode::Symmetric;
      Labeling l = labeling_from_word(c, mode);
      EXPECT_TRUE(verify_pp(l)) << format_word(c);
      EXPECT_FALSE(verify_pp(labeling_candidate(c, other))) << format_word(c);
      EXPECT_EQ(error_kind([&] { labeling_from_word(c, other); }), "WrongSign");
      auto filled = fill_labeling(c);
      ASSERT_TRUE(filled.has_value());
      EXPECT_EQ(filled->mode, mode);
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t prev = (i + c.size() - 1) % c.size(), next = (i + 1) % c.size();
        if (c.size() > 2) EXPECT_EQ(l.x[prev][next], c[i]);
      }
    }
  }
  EXPECT_FALSE(fill_labeling(W({2, 2, 2})).has_value());
}

TEST(Ptolemy, DeterminantFormula) {
  for (long long r = 2; r <= 50; ++r)
    for (long long s = 1; s < r; ++s)
      if (std::gcd(r, s) == 1) EXPECT_TRUE(determinant_formula_labels({r, s})) << r << "/" << s;
}

TEST(Ptolemy, OmegaIsSkewAndDeterminantsAgree) {
  for (int t = 0; t < 40; ++t) {
    Word c = random_word(1, 4, 6);
    IntMatrix om = omega_matrix(c);
    for (std::size_t i = 0; i < om.size(); ++i)
      for (std::size_t j = 0; j < om.size(); ++j) EXPECT_EQ(om[i][j], -om[j][i]);
    EXPECT_EQ(det_exact(om), cofactor_det(om)) << format_word(c);
    IntMatrix op = omega_plus_matrix(c);
    EXPECT_EQ(det_exact(op), cofactor_det(op)) << format_word(c);
  }
}

TEST(Ptolemy, PfaffianTrace) {
  for (int t = 0; t < 300; ++t) {
    Word c = random_word(1, 10, 6);
    Int tr = m_word(c).trace();
    EXPECT_EQ(det_exact(omega_matrix(c)), tr * tr) << format_word(c);
    Int expect = tr * tr - 4;
    if (c.size() % 2 == 1) expect = -expect;
    EXPECT_EQ(det_exact(omega_plus_matrix(c)), expect) << format_word(c);
    EXPECT_TRUE(trace_pfaffian_check(c));
  }
}
