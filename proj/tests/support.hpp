// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/census.hpp"
#include "farey/io.hpp"
#include "farey/selfcheck.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace farey;

inline Word W(std::initializer_list<long long> xs) { return make_word(xs); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x5eed1234);
  return r;
}

inline Word random_word(int min_len, int max_len, int max_entry) {
  return selfcheck::oracle::random_word(rng(), min_len, max_len, max_entry);
}

// Laplace expansion along the first row; independent of the elimination used by the library.
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Int term = m[0][j] * cofactor_det(minor);
    total += j % 2 == 0 ? term : Int(-term);
  }
  return total;
}

// Continuant as the determinant of the tridiagonal matrix with c on the diagonal and 1 off it.
inline Int continuant_by_det(const Word& c) {
  const std::size_t n = c.size();
  IntMatrix m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = c[i];
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return cofactor_det(m);
}

inline const Census& census9() {
  static const Census c = run_census(9, 1);
  return c;
}

template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace testing_support
