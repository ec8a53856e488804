// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/dissect.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <set>
#include <thread>
#include <vector>

namespace farey {

using SmallWord = std::vector<int>;

struct Solution {
  SmallWord word;
  IdClass sign;
  friend bool operator<(const Solution& x, const Solution& y) { return x.word < y.word; }
};

namespace detail {

struct M64 {
  std::int64_t a, b, c, d;
};

inline M64 step(const M64& m, std::int64_t ci) { return {m.a * ci + m.b, -m.a, m.c * ci + m.d, -m.c}; }

inline void search(int n, int max_sum, SmallWord& prefix, int sum, const M64& m, std::vector<Solution>& out,
                   std::uint64_t& leaves) {
  const int depth = static_cast<int>(prefix.size());
  if (depth == n) {
    ++leaves;
    if (m.b == 0 && m.c == 0 && m.a == m.d && (m.a == 1 || m.a == -1))
      out.push_back({prefix, m.a == 1 ? IdClass::PlusId : IdClass::MinusId});
    return;
  }
  const int room = max_sum - sum - (n - depth - 1);
  for (int ci = 1; ci <= room; ++ci) {
    prefix.push_back(ci);
    search(n, max_sum, prefix, sum + ci, step(m, ci), out, leaves);
    prefix.pop_back();
  }
}

}  // namespace detail

struct SolveStats {
  std::uint64_t leaves = 0;
};

// Every positive word of length n with sum <= max_sum and M = +-Id, sorted; shards on the first entry.
inline std::vector<Solution> solve_words(int n, int max_sum, unsigned threads, SolveStats* stats = nullptr) {
  if (n < 1 || max_sum > 60) throw Error("OutOfRange", "word search supports n >= 1 and sums up to 60");
  const int top = max_sum - (n - 1);
  std::vector<std::future<std::pair<std::vector<Solution>, std::uint64_t>>> jobs;
  std::vector<std::pair<std::vector<Solution>, std::uint64_t>> results;
  auto run = [n, max_sum](int first) {
    std::vector<Solution> out;
    std::uint64_t leaves = 0;
    SmallWord prefix{first};
    detail::search(n, max_sum, prefix, first, detail::step({1, 0, 0, 1}, first), out, leaves);
    return std::make_pair(std::move(out), leaves);
  };
  threads = std::max(1u, threads);
  for (int first = 1; first <= top; ++first) {
    if (jobs.size() >= threads) {
      results.push_back(jobs.front().get());
      jobs.erase(jobs.begin());
    }
    jobs.push_back(std::async(std::launch::async, run, first));
  }
  for (auto& j : jobs) results.push_back(j.get());
  std::vector<Solution> all;
  std::uint64_t leaves = 0;
  for (auto& [sols, l] : results) {
    all.insert(all.end(), sols.begin(), sols.end());
    leaves += l;
  }
  std::sort(all.begin(), all.end());
  if (stats != nullptr) stats->leaves = leaves;
  return all;
}

inline Word to_word(const SmallWord& w) {
  Word out;
  for (int x : w) out.emplace_back(x);
  return out;
}

inline std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

struct CensusRow {
  int n = 0;
  std::map<int, int> minus_by_sum, plus_by_sum;
  std::size_t triangulations = 0, dissections = 0, solutions = 0;
  std::uint64_t leaves = 0;
  bool sets_equal = false;        // solutions == quiddities of 3d-dissections
  bool parity_ok = false;         // sign matches the even-cell parity
  bool level_ok = false;          // sign = MinusId iff (3n-6-sum)/6 even
  bool gap_empty = false;         // nothing with 3n-6 < sum <= 3n
  bool catalan_ok = false;        // MinusId count at sum 3n-6 is Catalan(n-2)
  bool exact_agree = false;       // unbounded-integer classification agrees with the int64 kernel
  double seconds = 0;
  bool ok() const { return sets_equal && parity_ok && level_ok && gap_empty && catalan_ok && exact_agree; }
};

struct Census {
  std::vector<CensusRow> rows;
  std::map<int, std::vector<Solution>> solutions;  // n -> solutions with sum <= 3n - 6
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.ok(); });
  }
};

inline CensusRow census_row(int n, unsigned threads, std::vector<Solution>* keep = nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  CensusRow row;
  row.n = n;
  SolveStats stats;
  auto sols = solve_words(n, 3 * n, threads, &stats);
  row.leaves = stats.leaves;
  row.gap_empty = true;
  row.exact_agree = true;
  row.level_ok = true;
  std::vector<Solution> kept;
  for (const auto& s : sols) {
    int sum = 0;
    for (int x : s.word) sum += x;
    if (sum > 3 * n - 6) {
      row.gap_empty = false;
      continue;
    }
    (s.sign == IdClass::MinusId ? row.minus_by_sum : row.plus_by_sum)[sum] += 1;
    if (classify_id(to_word(s.word)) != s.sign) row.exact_agree = false;
    int drop = 3 * n - 6 - sum;
    if (drop % 6 != 0 || ((drop / 6) % 2 == 0) != (s.sign == IdClass::MinusId)) row.level_ok = false;
    kept.push_back(s);
  }
  row.solutions = kept.size();
  auto dissections = enumerate_3d(n);
  row.dissections = dissections.size();
  row.triangulations = enumerate_triangulations(n).size();
  std::map<SmallWord, std::set<IdClass>> by_quiddity;
  for (const auto& d : dissections) by_quiddity[quiddity_small(d)].insert(dissection_sign(d));
  row.sets_equal = by_quiddity.size() == kept.size();
  row.parity_ok = true;
  for (const auto& s : kept) {
    auto it = by_quiddity.find(s.word);
    if (it == by_quiddity.end()) {
      row.sets_equal = false;
      continue;
    }
    if (it->second.size() != 1 || *it->second.begin() != s.sign) row.parity_ok = false;
  }
  int top = row.minus_by_sum.count(3 * n - 6) != 0 ? row.minus_by_sum.at(3 * n - 6) : 0;
  row.catalan_ok = static_cast<std::uint64_t>(top) == catalan(n - 2) && row.triangulations == catalan(n - 2);
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (keep != nullptr) *keep = std::move(kept);
  return row;
}

inline Census run_census(int n_max, unsigned threads) {
  if (n_max < 3 || n_max > 9) throw Error("OutOfRange", "census supports 3 <= n <= 9");
  Census c;
  for (int n = 3; n <= n_max; ++n) {
    std::vector<Solution> kept;
    c.rows.push_back(census_row(n, threads, &kept));
    c.solutions[n] = std::move(kept);
  }
  return c;
}

}  // namespace farey
