// SPDX-License-Identifier: Apache-2.0
#include "farey/io.hpp"

#include <iostream>

using namespace farey;

int main() {
  ProjRational x = parse_rational("7/5");
  std::cout << "7/5 = " << format_negative(expand_negative(x)) << " = " << format_regular(expand_regular(x)) << "\n";

  Word c = make_word({1, 1, 2, 1, 2, 1, 1});
  std::cout << "M(" << format_word(c) << ") = " << to_string(classify_id(c)) << "\n";

  Mat2 a = parse_matrix("[[2,-5],[1,-2]]");
  std::cout << to_string(a) << " = M(" << format_word(minimal_presentation(a).word) << ")\n";

  Mat2 h = parse_matrix("[[10,3],[3,1]]");
  std::cout << "class of " << to_string(h) << ": (" << format_word(conjugacy_class_rational(h).cycle) << ")\n";

  Trs t = t_rs(x);
  std::cout << "T_7/5 quiddity " << format_word(t.quiddity) << ", labels";
  for (const auto& v : t.tri.labels) std::cout << " " << to_string(v);
  std::cout << "\n";
}
