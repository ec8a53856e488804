// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/census.hpp"
#include "farey/io.hpp"
#include "farey/render.hpp"
#include "farey/selfcheck.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace farey::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string word_text(const Word& w) { return w.empty() ? "()" : format_word(w); }

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw Error("IoError", "cannot write " + path);
  f << body;
}

// "N:i-j,k-l" or the JSON object {"n":N,"diagonals":[[i,j],...]}.
inline Dissection parse_dissection(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '{') return dissection_from_json(json::parse(s));
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error("ParseError", "dissection syntax is N:i-j,k-l or JSON");
  int n = static_cast<int>(parse_int(s.substr(0, colon)));
  std::vector<Diagonal> diags;
  std::string rest = s.substr(colon + 1), cur;
  for (char ch : rest + ",") {
    if (ch != ',') {
      cur += ch;
      continue;
    }
    cur = trim(cur);
    if (!cur.empty()) {
      auto dash = cur.find('-', 1);
      if (dash == std::string::npos) throw Error("ParseError", "diagonal must be i-j: " + cur);
      diags.emplace_back(static_cast<int>(parse_int(cur.substr(0, dash))), static_cast<int>(parse_int(cur.substr(dash + 1))));
    }
    cur.clear();
  }
  return make_dissection(n, std::move(diags));
}

inline std::string dissection_text(const Dissection& d) {
  std::string s = std::to_string(d.n) + ":";
  for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(d.diagonals[i].first) + "-" + std::to_string(d.diagonals[i].second);
  }
  return s;
}

// "anti:1/0,1/1,0/1", "periodic:..." or JSON {"periodicity":..,"points":[[r,s],...]}.
inline WalkSeq parse_walk(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '{') return walk_from_json(json::parse(s));
  WalkSeq w;
  auto colon = s.find(':');
  std::string body = s;
  if (colon != std::string::npos) {
    std::string per = trim(s.substr(0, colon));
    if (per == "periodic") w.periodicity = Periodicity::Periodic;
    else if (per != "anti" && per != "antiperiodic") throw Error("ParseError", "periodicity must be anti or periodic");
    body = s.substr(colon + 1);
  }
  std::string cur;
  for (char ch : body + ",") {
    if (ch != ',') {
      cur += ch;
      continue;
    }
    cur = trim(cur);
    if (!cur.empty()) {
      auto slash = cur.find('/');
      if (slash == std::string::npos) throw Error("ParseError", "point must be r/s: " + cur);
      w.points.push_back({parse_int(cur.substr(0, slash)), parse_int(cur.substr(slash + 1))});
    }
    cur.clear();
  }
  return w;
}

inline std::string points_text(const std::vector<SignedPair>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

inline std::string labels_text(const std::vector<ProjRational>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

inline std::string matrix_text(const IntMatrix& m) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const Int& x : row) width = std::max(width, x.str().size());
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j == 0 ? "" : " ") << std::setw(static_cast<int>(width)) << row[j].str();
    os << "\n";
  }
  return os.str();
}

inline bool looks_like_surd(const std::string& s) {
  return s.find("sqrt") != std::string::npos || std::count(s.begin(), s.end(), ',') == 2;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions, Farey walks, polygon dissections and PSL(2,Z) presentations", "farey"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  bool as_json = false;
  std::string svg_path, dot_path, method = "both", input;
  int n_opt = 9;
  unsigned threads = 0;
  std::uint64_t seed = selfcheck::Options{}.seed;
  bool neg = false, reg = false, skew = false, triangulations_only = false;
  std::function<void()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& what,
                  std::function<void()> body, bool needs_input = true) {
    CLI::App* sub = parent->add_subcommand(name, help);
    if (needs_input) sub->add_option("input", input, what)->required();
    sub->add_flag("--json", as_json, "Emit JSON");
    sub->callback([&action, body = std::move(body)] { action = body; });
    return sub;
  };
  auto print_json = [&](const json& j) { out << j.dump() << "\n"; };

  // cf
  CLI::App* cf = app.add_subcommand("cf", "Continued fractions");
  cf->require_subcommand(1);
  auto* cf_expand = leaf(cf, "expand", "Expand a rational r/s > 1 or a quadratic surd", "r/s, (p+sqrt(d))/q or p,q,d", [&] {
    if (detail::looks_like_surd(input)) {
      QuadSurd x = parse_surd(input);
      PeriodicWord p = surd_negative_cf(x);
      if (as_json) print_json(json{{"prefix", to_json(p.prefix)}, {"period", to_json(p.period)}});
      else out << format_periodic(p) << "\n";
      return;
    }
    ProjRational x = parse_rational(input);
    bool both = !neg && !reg;
    if (as_json) {
      json j;
      if (neg || both) j["negative"] = to_json(expand_negative(x));
      if (reg || both) j["regular"] = to_json(expand_regular(x));
      print_json(j);
      return;
    }
    if (neg || both) out << format_negative(expand_negative(x)) << "\n";
    if (reg || both) out << format_regular(expand_regular(x)) << "\n";
  });
  cf_expand->add_flag("--neg", neg, "Negative expansion only");
  cf_expand->add_flag("--reg", reg, "Regular expansion only");
  leaf(cf, "convert", "Convert between [regular] and [[negative]] expansions", "[a1,...] or [[c1,...]]", [&] {
    ParsedCf p = parse_cf(input);
    if (!p.explicit_kind) throw UsageError("convert needs [a,...] (regular) or [[c,...]] (negative)");
    Word w = p.kind == CfKind::Regular ? regular_to_negative(p.word) : negative_to_regular(p.word);
    if (as_json) print_json(to_json(w));
    else out << (p.kind == CfKind::Regular ? format_negative(w) : format_regular(w)) << "\n";
  });
  leaf(cf, "eval", "Evaluate an expansion", "[a1,...] or [[c1,...]]; a bare list is negative", [&] {
    ParsedCf p = parse_cf(input);
    require_positive(p.word);
    ProjRational x = p.kind == CfKind::Regular ? eval_regular(p.word) : normalize(eval_negative(p.word));
    if (as_json) print_json(to_json(x));
    else out << to_string(x) << "\n";
  });

  // mat
  CLI::App* mat = app.add_subcommand("mat", "Matrices in PSL(2,Z)");
  mat->require_subcommand(1);
  leaf(mat, "word", "M(c1,...,ck)", "word", [&] {
    Mat2 m = m_word(parse_word(input));
    if (as_json) print_json(to_json(m));
    else out << to_string(m) << "\n";
  });
  leaf(mat, "plusword", "M+(a1,...,an)", "word", [&] {
    Mat2 m = m_plus_word(parse_word(input));
    if (as_json) print_json(to_json(m));
    else out << to_string(m) << "\n";
  });
  leaf(mat, "minpres", "Minimal positive presentation", "[[a,b],[c,d]]", [&] {
    MinPres mp = minimal_presentation(parse_matrix(input));
    if (as_json) print_json(json{{"word", to_json(mp.word)}, {"sign", mp.sign}});
    else out << detail::word_text(mp.word) << "\n";
  });
  auto* conj = leaf(mat, "conjclass", "Conjugacy class of a hyperbolic element", "[[a,b],[c,d]]", [&] {
    Mat2 m = parse_matrix(input);
    if (method != "rational" && method != "surd" && method != "both")
      throw UsageError("--method must be rational, surd or both");
    ConjClass c = method == "surd" ? conjugacy_class_surd(m) : conjugacy_class_rational(m);
    if (method == "both" && !(conjugacy_class_surd(m) == c)) throw Error("InternalError", "methods disagree");
    if (as_json) print_json(json{{"cycle", to_json(c.cycle)}});
    else out << "(" << format_word(c.cycle) << ")\n";
  });
  conj->add_option("--method", method, "rational, surd or both")->capture_default_str();
  leaf(mat, "gamma", "Membership in the semigroup generated by R and L", "[[a,b],[c,d]]", [&] {
    bool in = is_in_gamma(parse_matrix(input));
    if (as_json) print_json(json{{"in_gamma", in}});
    else out << (in ? "true" : "false") << "\n";
  });
  leaf(mat, "matdissect", "Quiddity of a dissection built from A and its inverse", "[[a,b],[c,d]]", [&] {
    Word w = matrix_dissection_word(parse_matrix(input));
    IdClass k = classify_id(w);
    if (as_json) print_json(json{{"word", to_json(w)}, {"class", to_string(k)}});
    else out << format_word(w) << " " << to_string(k) << "\n";
  });
  leaf(mat, "tmatrix", "Labeled triangulation of [[a,-b],[c,-d]]", "[[a,b],[c,d]]", [&] {
    TMatrix t = t_matrix(parse_matrix(input));
    if (as_json) {
      json j = to_json(t.tri);
      j["quiddity"] = to_json(t.quiddity);
      j["k"] = t.k;
      j["prefix"] = to_json(t.prefix);
      print_json(j);
      return;
    }
    out << "labels: " << detail::labels_text(t.tri.labels) << "\n";
    out << "quiddity: " << format_word(t.quiddity) << "\n";
    out << "prefix: " << format_word(t.prefix) << "\n";
  });

  // quiddity
  CLI::App* quid = app.add_subcommand("quiddity", "Solutions of M(c) = +-Id");
  quid->require_subcommand(1);
  leaf(quid, "check", "Classify M(c) as -Id, +Id or neither", "word", [&] {
    IdClass k = classify_id(parse_word(input));
    if (as_json) print_json(json{{"class", to_string(k)}});
    else out << to_string(k) << "\n";
  });
  leaf(quid, "reduce", "Apply surgeries until none applies", "word", [&] {
    Reduction r = reduce_word(parse_word(input));
    if (as_json) print_json(json{{"word", to_json(r.reduced)}, {"sign_flips", r.sign_flips}});
    else out << detail::word_text(r.reduced) << "\n";
  });
  auto* recon = leaf(quid, "reconstruct", "Triangulation with the given totally positive quiddity", "word", [&] {
    Dissection d = reconstruct_triangulation(parse_word(input));
    if (!svg_path.empty()) detail::write_file(svg_path, svg_dissection(d));
    if (!dot_path.empty()) detail::write_file(dot_path, dot_dissection(d));
    if (as_json) print_json(to_json(d));
    else out << detail::dissection_text(d) << "\n";
  });
  recon->add_option("--svg", svg_path, "Write an SVG drawing");
  recon->add_option("--dot", dot_path, "Write a Graphviz drawing");

  // dissect
  CLI::App* dis = app.add_subcommand("dissect", "Polygon dissections");
  dis->require_subcommand(1);
  auto* en = leaf(dis, "enumerate", "All 3d-dissections (or triangulations) of an n-gon", "", [&] {
    auto all = triangulations_only ? enumerate_triangulations(n_opt) : enumerate_3d(n_opt);
    if (as_json) {
      json a = json::array();
      for (const auto& d : all) {
        json j = to_json(d);
        j["quiddity"] = to_json(quiddity_of(d));
        j["class"] = to_string(dissection_sign(d));
        a.push_back(std::move(j));
      }
      print_json(a);
      return;
    }
    for (const auto& d : all)
      out << detail::dissection_text(d) << "  " << format_word(quiddity_of(d)) << "  " << to_string(dissection_sign(d)) << "\n";
    out << all.size() << " total\n";
  }, false);
  en->add_option("--n", n_opt, "Polygon size, 3..12")->required();
  en->add_flag("--triangulations", triangulations_only, "Full triangulations only");
  leaf(dis, "validate", "Check a dissection and report its cells", "N:i-j,... or JSON", [&] {
    Dissection d = detail::parse_dissection(input);
    bool ok3 = is_3d(d);
    json j{{"valid", true}, {"is_3d", ok3}};
    if (ok3) {
      SumDecomposition s = total_sum_decomposition(d);
      j["class"] = to_string(dissection_sign(d));
      j["sum"] = to_json(s.sum);
      j["sum_formula_holds"] = s.holds();
    }
    if (as_json) {
      print_json(j);
      return;
    }
    out << "valid" << (ok3 ? " 3d " + j["class"].get<std::string>() : " not-3d") << "\n";
  });
  leaf(dis, "quiddity", "Quiddity of a dissection", "N:i-j,... or JSON", [&] {
    Word q = quiddity_of(detail::parse_dissection(input));
    if (as_json) print_json(to_json(q));
    else out << format_word(q) << "\n";
  });

  // walk
  CLI::App* walk = app.add_subcommand("walk", "Walks in the Farey graph");
  walk->require_subcommand(1);
  leaf(walk, "from-word", "Walk generated by a solution word", "word", [&] {
    WalkSeq w = walk_from_word(parse_word(input));
    if (as_json) print_json(to_json(w));
    else out << (w.periodicity == Periodicity::Antiperiodic ? "anti: " : "periodic: ") << detail::points_text(w.points) << "\n";
  });
  leaf(walk, "classify", "FareyPolygon, PositiveWalk, Walk or Invalid", "anti:1/0,1/1,0/1 or JSON", [&] {
    WalkKind k = classify_walk(detail::parse_walk(input));
    if (as_json) print_json(json{{"kind", to_string(k)}});
    else out << to_string(k) << "\n";
  });
  leaf(walk, "quiddity", "Quiddity read off a positive walk", "anti:1/0,1/1,0/1 or JSON", [&] {
    Word q = quiddity_from_walk(detail::parse_walk(input));
    if (as_json) print_json(to_json(q));
    else out << format_word(q) << "\n";
  });

  // farey
  CLI::App* far = app.add_subcommand("farey", "Farey polygons and triangulations");
  far->require_subcommand(1);
  auto* trs = leaf(far, "trs", "Triangulation of r/s > 1 inside the Farey tessellation", "r/s", [&] {
    Trs t = t_rs(parse_rational(input));
    if (!svg_path.empty()) detail::write_file(svg_path, svg_farey_strip(t.tri));
    if (as_json) {
      json j = to_json(t.tri);
      j["quiddity"] = to_json(t.quiddity);
      j["regular"] = to_json(t.a_data);
      j["k"] = t.k;
      print_json(j);
      return;
    }
    out << "labels: " << detail::labels_text(t.tri.labels) << "\n";
    out << "quiddity: " << format_word(t.quiddity) << "\n";
    out << "diagonals: " << detail::dissection_text(t.tri.base) << "\n";
  });
  trs->add_option("--svg", svg_path, "Write an SVG drawing");
  leaf(far, "polygon", "Farey polygon of a totally positive solution word", "word", [&] {
    FareyPolygon p = polygon_of_walk(walk_from_word(parse_word(input)));
    if (as_json) {
      json a = json::array();
      for (const auto& v : p.vertices) a.push_back(to_string(v));
      print_json(a);
    } else {
      out << detail::labels_text(p.vertices) << "\n";
    }
  });
  leaf(far, "triangulate", "Farey triangulation of a polygon", "1/0,3/1,...,0/1 or JSON list", [&] {
    FareyPolygon p = polygon_from_text(input);
    Dissection d = farey_triangulate(p);
    Word q = quiddity_of(d);
    if (as_json) {
      json j = to_json(d);
      j["quiddity"] = to_json(q);
      j["index"] = to_json(index_of_polygon(p));
      print_json(j);
    } else {
      out << detail::dissection_text(d) << "  " << format_word(q) << "\n";
    }
  });

  // ptolemy
  CLI::App* pto = app.add_subcommand("ptolemy", "Continuant labelings and the Pfaffian trace");
  pto->require_subcommand(1);
  auto* table = leaf(pto, "table", "Ptolemy labeling of a solution word", "", [&] {
    Labeling l = labeling_from_word(parse_word(input), skew ? LabelMode::Skew : LabelMode::Symmetric);
    if (as_json) print_json(to_json(l));
    else out << detail::matrix_text(l.x);
  }, false);
  table->add_option("--word", input, "Solution word")->required();
  table->add_flag("--skew", skew, "Skew-symmetric labeling (for +Id words)");
  leaf(pto, "verify", "Check the Ptolemy relations on a labeling", "JSON matrix or {\"mode\":..,\"x\":..}", [&] {
    bool ok = verify_pp(labeling_from_json(json::parse(input)));
    if (as_json) print_json(json{{"holds", ok}});
    else out << (ok ? "true" : "false") << "\n";
  });
  leaf(pto, "pfaffian", "det of the block matrix against the trace", "word", [&] {
    Word c = parse_word(input);
    Int tr = m_word(c).trace();
    Int d = det_exact(omega_matrix(c)), dp = det_exact(omega_plus_matrix(c));
    bool ok = trace_pfaffian_check(c);
    if (as_json) {
      print_json(json{{"det", to_json(d)}, {"trace_squared", to_json(tr * tr)}, {"det_plus", to_json(dp)}, {"holds", ok}});
      return;
    }
    out << "det " << d << " trace^2 " << tr * tr << " det+ " << dp << " " << (ok ? "holds" : "fails") << "\n";
  });

  // census
  auto* cen = leaf(&app, "census", "Exhaustive solution census with cross-checks", "", [&] {
    Census c = run_census(n_opt, threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency()));
    if (as_json) {
      json rows = json::array();
      for (const auto& r : c.rows) {
        json m = json::object(), p = json::object();
        for (auto [s, k] : r.minus_by_sum) m[std::to_string(s)] = k;
        for (auto [s, k] : r.plus_by_sum) p[std::to_string(s)] = k;
        rows.push_back(json{{"n", r.n}, {"minus_by_sum", m}, {"plus_by_sum", p}, {"triangulations", r.triangulations},
                            {"dissections", r.dissections}, {"solutions", r.solutions}, {"sets_equal", r.sets_equal},
                            {"parity_ok", r.parity_ok}, {"level_ok", r.level_ok}, {"gap_empty", r.gap_empty},
                            {"catalan_ok", r.catalan_ok}, {"exact_agree", r.exact_agree}});
      }
      print_json(json{{"rows", rows}, {"ok", c.ok()}});
    } else {
      for (const auto& r : c.rows) {
        out << "n=" << r.n << "  -Id:";
        for (auto [s, k] : r.minus_by_sum) out << " sum" << s << "=" << k;
        out << "  +Id:";
        for (auto [s, k] : r.plus_by_sum) out << " sum" << s << "=" << k;
        out << "  triangulations=" << r.triangulations << " 3d-dissections=" << r.dissections
            << " words=" << r.solutions << "  " << (r.ok() ? "ok" : "MISMATCH") << "\n";
      }
    }
    if (!c.ok()) throw Error("CheckFailed", "census cross-check failed");
  }, false);
  cen->add_option("--n", n_opt, "Largest polygon size, 3..9")->capture_default_str();
  cen->add_option("--threads", threads, "Worker threads, 0 = all cores");

  // render
  auto* ren = leaf(&app, "render", "Draw a solution word, a dissection or T_{r/s}", "word, N:i-j,... or r/s", [&] {
    if (svg_path.empty() && dot_path.empty()) throw UsageError("render needs --svg PATH and/or --dot PATH");
    std::string s = trim(input);
    if (s.find('/') != std::string::npos) {
      Trs t = t_rs(parse_rational(s));
      if (!svg_path.empty()) detail::write_file(svg_path, svg_farey_strip(t.tri));
      if (!dot_path.empty()) detail::write_file(dot_path, dot_dissection(t.tri.base));
      return;
    }
    Dissection d;
    std::vector<std::string> labels;
    if (s.find(':') != std::string::npos || s.front() == '{') {
      d = detail::parse_dissection(s);
    } else {
      Word w = parse_word(s);
      auto r = realize_dissection(w);
      if (!r) d = reconstruct_triangulation(w);
      else d = *r;
      for (const Int& x : w) labels.push_back(x.str());
    }
    if (!svg_path.empty()) detail::write_file(svg_path, svg_dissection(d, labels));
    if (!dot_path.empty()) detail::write_file(dot_path, dot_dissection(d, labels));
  });
  ren->add_option("--svg", svg_path, "SVG output path");
  ren->add_option("--dot", dot_path, "Graphviz output path");

  // selfcheck
  auto* sc = leaf(&app, "selfcheck", "Run every property suite", "", [&] {
    bool all = true;
    selfcheck::Options opt{seed, threads};
    json rows = json::array();
    selfcheck::run_all(opt, [&](const selfcheck::Result& r) {
      all = all && r.passed;
      if (as_json) {
        rows.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        return;
      }
      out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " [" << std::fixed << std::setprecision(2)
          << r.seconds << " s] " << r.detail << "\n" << std::flush;
    });
    if (as_json) print_json(rows);
    if (!all) throw Error("CheckFailed", "selfcheck failed");
  }, false);
  sc->add_option("--seed", seed, "Seed for the randomized suites")->capture_default_str();
  sc->add_option("--threads", threads, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }
  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace farey::cli
