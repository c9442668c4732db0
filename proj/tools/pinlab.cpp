// Copyright 2026 The pinlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// pinlab: command-line front end. Every subcommand builds an ordered list
// of facts that is printed either as "key: value" lines or as one JSON
// object per input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pinlab/alternations.hpp"
#include "pinlab/bounds.hpp"
#include "pinlab/brute_force.hpp"
#include "pinlab/classes.hpp"
#include "pinlab/containment.hpp"
#include "pinlab/decompose.hpp"
#include "pinlab/enumerate.hpp"
#include "pinlab/experiments.hpp"
#include "pinlab/intervals.hpp"
#include "pinlab/monotone.hpp"
#include "pinlab/permutation.hpp"
#include "pinlab/pins.hpp"
#include "pinlab/plot.hpp"
#include "pinlab/series.hpp"
#include "pinlab/symmetry.hpp"
#include "pinlab/wedge.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pinlab;

struct Report {
  std::string command;
  json input;
  std::vector<std::pair<std::string, json>> fields;
  std::vector<json> witnesses;
  std::optional<double> seconds;

  void add(std::string key, json value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
};

std::string plain_value(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_array()) {
    // Elements that contain spaces (permutations) are comma separated.
    bool spaced = false;
    for (const auto& e : v)
      spaced = spaced || (e.is_string() && e.get<std::string>().find(' ') != std::string::npos);
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += spaced ? ", " : " ";
      out += plain_value(v[i]);
    }
    return out;
  }
  return v.dump();
}

void emit(const Report& r, bool structured, std::ostream& os) {
  if (structured) {
    json j;
    j["command"] = r.command;
    j["input"] = r.input;
    json result = json::object();
    for (const auto& [k, v] : r.fields) result[k] = v;
    j["result"] = result;
    j["witnesses"] = r.witnesses;
    j["timings"] = json::object();
    if (r.seconds) j["timings"]["seconds"] = *r.seconds;
    os << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : r.fields) os << k << ": " << plain_value(v) << "\n";
  for (const auto& w : r.witnesses) os << "witness: " << plain_value(w) << "\n";
  if (r.seconds) os << "seconds: " << *r.seconds << "\n";
}

std::string points_str(std::span<const Point> pts) { return format_points(pts); }

std::string perm_str(const Permutation& p) { return format_permutation(p); }

json index_list(const std::vector<int>& idx) {
  json a = json::array();
  for (int i : idx) a.push_back(i);
  return a;
}

std::string subset_str(const PointSubset& s) { return points_str(s.points()); }

// ---------------------------------------------------------------- commands

Report cmd_simple(const Permutation& pi) {
  Report r{"simple", perm_str(pi), {}, {}, {}};
  const bool s = is_simple(pi);
  r.add("simple", s);
  for (const auto& iv : intervals_of(pi))
    r.witnesses.push_back("[" + std::to_string(iv.a) + "," + std::to_string(iv.b) + "]");
  return r;
}

Report cmd_intervals(const Permutation& pi) {
  Report r{"intervals", perm_str(pi), {}, {}, {}};
  json list = json::array();
  for (const auto& iv : intervals_of(pi))
    list.push_back("[" + std::to_string(iv.a) + "," + std::to_string(iv.b) + "]");
  r.add("count", list.size());
  r.add("intervals", list);
  return r;
}

Report cmd_count(const Permutation& sigma, const Permutation& pi,
                 std::size_t limit) {
  Report r{"count", json{{"pattern", perm_str(sigma)}, {"permutation", perm_str(pi)}},
           {}, {}, {}};
  r.add("copies", count_copies_fast(sigma, pi));
  for (const auto& idx : copies(sigma, pi, limit)) r.witnesses.push_back(index_list(idx));
  return r;
}

PatternBudget parse_budget(const std::vector<std::string>& specs) {
  PatternBudget b;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw ParseError("budget '" + s + "' must look like PATTERN:R");
    int r = 0;
    try {
      r = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("budget '" + s + "' has a non-numeric bound");
    }
    b.push_back({parse_permutation(s.substr(0, colon)), r});
  }
  return b;
}

json budget_json(const std::vector<std::string>& specs) {
  json a = json::array();
  for (const auto& s : specs) a.push_back(s);
  return a;
}

Report cmd_class_count(const std::vector<std::string>& budget, int n) {
  Report r{"count", json{{"budget", budget_json(budget)}, {"length", n}}, {}, {}, {}};
  r.add("class-size", count_class(parse_budget(budget), n));
  return r;
}

void add_properness(Report& r, const PinSequence& seq) {
  const auto rep = properness_report(seq);
  auto labels = [](const std::vector<int>& v) {
    json a = json::array();
    for (int i : v) a.push_back("p" + std::to_string(i));
    return a;
  };
  const json mf = labels(rep.maximality_failures());
  const json sf = labels(rep.separation_failures());
  r.add("maximality-failures", mf);
  r.add("separation-failures", sf);
  r.add("proper", rep.proper());
  r.add("saturated", is_saturated(seq));
  r.add("right-reaching", is_right_reaching(seq));
}

Report cmd_pins_check(const Permutation& pi, const std::string& pins) {
  Report r{"pins check", json{{"permutation", perm_str(pi)}, {"pins", pins}}, {}, {}, {}};
  const auto pts = parse_points(pins);
  auto v = validate_pin_sequence(pi, pts);
  if (auto* bad = std::get_if<PinViolation>(&v)) {
    r.add("valid", false);
    r.add("violation", "pin " + std::to_string(bad->index) + ": " + bad->reason);
    return r;
  }
  const auto& seq = std::get<PinSequence>(v);
  r.add("valid", true);
  r.add("directions", seq.direction_string());
  add_properness(r, seq);
  return r;
}

std::pair<Point, Point> parse_start(const Permutation& pi, const std::string& from) {
  const auto pts = parse_points(from);
  if (pts.size() != 2) throw ParseError("--from needs exactly two points");
  for (const auto& p : pts)
    detail::require(pi.has_point(p), "point " + format_points(std::vector<Point>{p}) +
                                         " is not in the plot");
  return {pts[0], pts[1]};
}

Report cmd_pins_enumerate(const Permutation& pi, const std::string& from, int max_len) {
  Report r{"pins enumerate",
           json{{"permutation", perm_str(pi)}, {"from", from}, {"max-length", max_len}},
           {}, {}, {}};
  auto [p1, p2] = parse_start(pi, from);
  auto all = enumerate_proper_pin_sequences(pi, p1, p2, max_len);
  int saturated = 0, longest = 0;
  for (const auto& s : all) {
    saturated += is_saturated(s);
    longest = std::max(longest, s.size());
    r.witnesses.push_back(points_str(s.pins()) + " [" + s.direction_string() + "]" +
                          (is_saturated(s) ? " saturated" : ""));
  }
  r.add("sequences", all.size());
  r.add("saturated", saturated);
  r.add("longest", longest);
  return r;
}

Report cmd_pins_reach(const Permutation& pi, const std::string& from) {
  Report r{"pins reach", json{{"permutation", perm_str(pi)}, {"from", from}}, {}, {}, {}};
  auto [p1, p2] = parse_start(pi, from);
  const PinSequence seq = right_reaching_proper(pi, p1, p2);
  r.add("pins", points_str(seq.pins()));
  r.add("directions", seq.direction_string());
  add_properness(r, seq);
  return r;
}

Report cmd_pins_extract(const Permutation& pi, const std::string& pins,
                        std::optional<int> split_k) {
  Report r{"pins extract", json{{"permutation", perm_str(pi)}, {"pins", pins}}, {}, {}, {}};
  const PinSequence seq = make_pin_sequence(pi, parse_points(pins));
  detail::require(is_proper(seq), "pin sequence is not proper");
  const PointSubset sub = simple_pin_subset(seq);
  r.add("simple-subset", subset_str(sub));
  r.add("pattern", perm_str(sub.pattern()));
  if (split_k) {
    auto [a, b] = split_pin_sequence(seq, *split_k);
    r.add("A", subset_str(a));
    r.add("B", subset_str(b));
    r.add("overlap", a.overlap(b));
  }
  return r;
}

Report cmd_decompose(const Permutation& pi, int k, bool oracle, int max_overlap) {
  Report r{"decompose", json{{"permutation", perm_str(pi)}, {"k", k}}, {}, {}, {}};
  if (oracle) {
    auto w = brute_force_decompose(pi, k, max_overlap);
    r.add("max-overlap", max_overlap);
    r.add("exists", w.has_value());
    if (w) {
      r.add("A", subset_str(w->a));
      r.add("B", subset_str(w->b));
      r.add("overlap", w->overlap());
    }
    return r;
  }
  auto cert = find_structure(pi, k);
  r.add("certificate", cert ? json(cert->kind()) : json(nullptr));
  if (cert) {
    r.add("certificate-size", cert->size());
    if (const auto* seq = std::get_if<PinSequence>(&cert->structure)) {
      r.add("certificate-points", points_str(seq->pins()));
      r.add("certificate-directions", seq->direction_string());
    } else {
      r.add("certificate-points", subset_str(cert->points()));
      r.add("certificate-pattern", perm_str(cert->points().pattern()));
    }
  }
  const Decomposition d = decompose_simple(pi, k);
  r.add("route", d.route);
  r.add("A", subset_str(d.a));
  r.add("A-pattern", perm_str(d.a.pattern()));
  r.add("B", subset_str(d.b));
  r.add("B-pattern", perm_str(d.b.pattern()));
  r.add("overlap", d.overlap());
  for (const auto& t : d.trace) r.witnesses.push_back(t);
  return r;
}

Report cmd_enumerate(int n, bool count_only, bool cross_check) {
  Report r{"enumerate", json{{"n", n}}, {}, {}, {}};
  if (count_only) {
    r.add("count", count_simple_permutations(n));
  } else {
    const auto all = enumerate_simple_permutations(n);
    r.add("count", all.size());
    for (const auto& p : all) r.witnesses.push_back(perm_str(p));
    if (cross_check) {
      std::uint64_t literal = 0;
      for_each_permutation(n, [&](const std::vector<int>& v) {
        literal += is_simple_literal(Permutation(v));
      });
      r.add("literal-count", literal);
      r.add("agree", literal == all.size());
    }
  }
  return r;
}

Report report_experiment(const ExperimentReport& e, json input, bool timings) {
  Report r{"experiment " + e.name, std::move(input), {}, {}, {}};
  for (const auto& row : e.rows) {
    std::string line = status_name(row.status);
    line += " (simple: " + std::to_string(row.simple_count) + ")";
    if (row.counterexample) line += " counterexample: " + perm_str(*row.counterexample);
    r.add("n=" + std::to_string(row.n), line);
  }
  r.add("extremal", e.extremal ? json(*e.extremal)
                               : json("not determined within range"));
  if (timings) r.seconds = e.seconds;
  return r;
}

Report cmd_min_copies(const Permutation& sigma, int n, bool timings) {
  const auto start = std::chrono::steady_clock::now();
  Report r{"experiment min-copies", json{{"pattern", perm_str(sigma)}, {"n", n}}, {}, {}, {}};
  r.add("min-copies", min_copies_in_simples(sigma, n));
  if (timings)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report cmd_series(int rr, int order) {
  Report r{"series", json{{"r", rr}, {"order", order}}, {}, {}, {}};
  json coeffs = json::array();
  for (const auto& c : series_at_most_r_132(rr, order).integers()) coeffs.push_back(c.str());
  r.add("coefficients", coeffs);
  return r;
}

Report cmd_basis(const std::vector<std::string>& budget, int max_len) {
  Report r{"basis", json{{"budget", budget_json(budget)}, {"max-length", max_len}}, {}, {}, {}};
  const auto basis = minimal_nonmembers(parse_budget(budget), max_len);
  json list = json::array();
  for (const auto& p : basis) list.push_back(perm_str(p));
  r.add("size", basis.size());
  r.add("basis", list);
  return r;
}

void add_bound(Report& r, const std::string& key, const TowerBound& b) {
  r.add(key, b.symbolic());
  r.add(key + "-formula", "2*" + b.base.str() + "^" + b.exponent.str());
  if (b.value) r.add(key + "-value", b.value->str());
}

Report cmd_bounds(int k) {
  Report r{"bounds", json{{"k", k}}, {}, {}, {}};
  const auto b = structure_bounds(k);
  add_bound(r, "pin-or-alternation", b.pin_or_alternation);
  add_bound(r, "structure", b.structure);
  return r;
}

Report cmd_plot(const Permutation& pi, const std::string& pins, const std::string& svg,
                std::string& ascii) {
  Report r{"plot", json{{"permutation", perm_str(pi)}}, {}, {}, {}};
  std::optional<PinSequence> seq;
  if (!pins.empty()) {
    seq = make_pin_sequence(pi, parse_points(pins));
    r.input["pins"] = pins;
  }
  ascii = ascii_plot(pi, seq ? &*seq : nullptr);
  r.add("plot", ascii);
  if (!svg.empty()) {
    std::ofstream out(svg);
    detail::require(static_cast<bool>(out), "cannot write " + svg);
    out << svg_plot(pi, seq ? &*seq : nullptr);
    r.add("svg", svg);
  }
  return r;
}

Report cmd_alternation(const Permutation& pi, const std::string& op, int k) {
  Report r{"alternation " + op, json{{"permutation", perm_str(pi)}}, {}, {}, {}};
  if (op == "classify") {
    auto cls = classify_alternation(pi);
    r.add("alternation", cls.has_value());
    if (cls) r.add("class", cls->describe());
  } else if (op == "monotone") {
    const auto m = monotone_extract(pi.values());
    auto vals = [&](const MonotoneRun& run) {
      json a = json::array();
      for (auto p : run.positions) a.push_back(pi.values()[p]);
      return a;
    };
    r.add("increasing-length", m.increasing.size());
    r.add("increasing", vals(m.increasing));
    r.add("decreasing-length", m.decreasing.size());
    r.add("decreasing", vals(m.decreasing));
  } else if (op == "longest") {
    for (auto [name, shape] : {std::pair{"parallel", AlternationShape::parallel},
                               std::pair{"wedge", AlternationShape::wedge}}) {
      const PointSubset s = longest_alternation(pi, shape);
      r.add(std::string(name) + "-length", s.size());
      r.add(std::string(name), subset_str(s));
    }
  } else if (op == "extract") {
    r.input["k"] = k;
    const PointSubset s = parallel_or_wedge(pi, k);
    r.add("points", subset_str(s));
    r.add("pattern", perm_str(s.pattern()));
    r.add("class", classify_alternation(s)->describe());
  } else if (op == "split") {
    r.input["k"] = k;
    auto [a, b] = split_parallel(pi, k);
    r.add("A", index_list(a.indices()));
    r.add("A-pattern", perm_str(a.pattern()));
    r.add("B", index_list(b.indices()));
    r.add("B-pattern", perm_str(b.pattern()));
    r.add("overlap", a.overlap(b));
  } else {
    throw ParseError("unknown alternation operation '" + op + "'");
  }
  return r;
}

WedgeType wedge_type(int t) {
  if (t != 1 && t != 2) throw ParseError("--type must be 1 or 2");
  return t == 1 ? WedgeType::type1 : WedgeType::type2;
}

Symmetry symmetry_by_name(const std::string& name) {
  for (const auto& s : Symmetry::all())
    if (s.name() == name) return s;
  throw ParseError("unknown symmetry '" + name + "'");
}

Report cmd_wedge_generate(int type, int m, const std::string& orient) {
  Report r{"wedge generate", json{{"type", type}, {"m", m}, {"orientation", orient}},
           {}, {}, {}};
  const Permutation w = generate_wedge_simple({wedge_type(type), m, symmetry_by_name(orient)});
  r.add("permutation", perm_str(w));
  r.add("simple", is_simple(w));
  return r;
}

Report cmd_wedge_recognize(const Permutation& pi) {
  Report r{"wedge recognize", perm_str(pi), {}, {}, {}};
  auto spec = is_wedge_simple(pi);
  r.add("wedge-simple", spec.has_value());
  if (spec) {
    r.add("type", static_cast<int>(spec->type));
    r.add("m", spec->m);
    r.add("orientation", spec->orientation.name());
  }
  return r;
}

Report cmd_wedge_split(const Permutation& pi, int k) {
  Report r{"wedge split", json{{"permutation", perm_str(pi)}, {"k", k}}, {}, {}, {}};
  auto [a, b] = split_wedge_simple(pi, k);
  r.add("A", index_list(a.indices()));
  r.add("A-pattern", perm_str(a.pattern()));
  r.add("B", index_list(b.indices()));
  r.add("B-pattern", perm_str(b.pattern()));
  r.add("overlap", a.overlap(b));
  return r;
}

Report cmd_wedge_ledger(const Permutation& pi, const std::string& points, int k) {
  Report r{"wedge ledger", json{{"permutation", perm_str(pi)}, {"k", k}}, {}, {}, {}};
  const PointSubset wedge =
      points.empty() ? longest_alternation(pi, AlternationShape::wedge)
                     : PointSubset(pi, parse_points(points));
  r.input["wedge-points"] = subset_str(wedge);
  auto out = try_wedge_to_structure(pi, wedge, k);
  r.add("found", out.has_value());
  if (!out) return r;
  if (const auto* ws = std::get_if<WedgeSubset>(&out->structure)) {
    r.add("structure", "wedge");
    r.add("points", subset_str(ws->points));
    r.add("pattern", perm_str(ws->points.pattern()));
  } else {
    const auto& seq = std::get<PinSequence>(out->structure);
    r.add("structure", "pins");
    r.add("points", points_str(seq.pins()));
    r.add("directions", seq.direction_string());
  }
  r.add("normalization", out->normalization.name());
  for (const auto& e : out->ledger.entries)
    r.witnesses.push_back("p" + std::to_string(e.pin) + " " +
                          direction_code(e.direction) + " ws=" +
                          std::to_string(e.wedge_sum) + " wc=" +
                          std::to_string(e.wedge_contribution));
  return r;
}

Report cmd_transform(const Permutation& pi, const std::string& sym,
                     const std::string& indices) {
  Report r{"transform", json{{"permutation", perm_str(pi)}}, {}, {}, {}};
  if (!sym.empty()) {
    r.input["symmetry"] = sym;
    r.add("image", perm_str(apply_symmetry(pi, symmetry_by_name(sym))));
  }
  if (!indices.empty()) {
    r.input["indices"] = indices;
    std::vector<int> idx;
    std::string tok;
    std::istringstream is(indices);
    while (std::getline(is, tok, ',')) {
      try {
        idx.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad index '" + tok + "'");
      }
    }
    r.add("pattern", perm_str(PointSubset::from_indices(pi, idx).pattern()));
  }
  return r;
}

// --------------------------------------------------------------- plumbing

std::vector<Permutation> read_inputs(const std::string& positional,
                                     const std::string& file) {
  std::vector<Permutation> out;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error("cannot read " + file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_permutation(line));
    }
    return out;
  }
  if (positional.empty()) throw ParseError("a permutation (or --in FILE) is required");
  out.push_back(parse_permutation(positional));
  return out;
}

CLI::App* deepest(CLI::App* app) {
  for (auto* sub : app->get_subcommands())
    if (sub->parsed()) return deepest(sub);
  return app;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinlab: simple permutations, pin sequences and alternations"};
  app.require_subcommand(1);
  bool structured = false, timings = false;
  app.add_flag("--json", structured, "structured (JSON) output");
  app.add_flag("--timings", timings, "include wall-clock timings");

  std::string perm, in_file;
  auto perm_input = [&](CLI::App* sub) {
    sub->add_option("permutation", perm, "one-line notation");
    sub->add_option("--in", in_file, "file with one permutation per line");
    sub->add_flag("--json", structured, "structured (JSON) output");
  };

  auto* simple = app.add_subcommand("simple", "test simplicity");
  perm_input(simple);

  auto* intervals = app.add_subcommand("intervals", "list nontrivial intervals");
  perm_input(intervals);

  auto* count = app.add_subcommand("count", "count copies of a pattern, or class members");
  perm_input(count);
  std::string pattern;
  std::size_t limit = 5;
  std::vector<std::string> budget;
  int length = -1;
  count->add_option("--pattern", pattern, "pattern to count");
  count->add_option("--witnesses", limit, "witnesses to list")->capture_default_str();
  count->add_option("--budget", budget, "PATTERN:R limits defining a class");
  count->add_option("--length", length, "length for class counting");

  auto* pins = app.add_subcommand("pins", "pin sequences");
  pins->require_subcommand(1);
  std::string pin_list, from;
  int max_len = 64;
  std::optional<int> split_k;
  auto* pcheck = pins->add_subcommand("check", "validate and classify a pin sequence");
  perm_input(pcheck);
  pcheck->add_option("--pins", pin_list, "pins as i,v pairs")->required();
  auto* pen = pins->add_subcommand("enumerate", "all proper pin sequences from a pair");
  perm_input(pen);
  pen->add_option("--from", from, "starting pair p1 p2")->required();
  pen->add_option("--max-len", max_len, "maximum length")->capture_default_str();
  auto* preach = pins->add_subcommand("reach", "proper right-reaching pin sequence");
  perm_input(preach);
  preach->add_option("--from", from, "starting pair p1 p2")->required();
  auto* pext = pins->add_subcommand("extract", "simple subset of a proper sequence");
  perm_input(pext);
  pext->add_option("--pins", pin_list, "pins as i,v pairs")->required();
  pext->add_option("--split", split_k, "also split into two blocks for this k");

  auto* decompose = app.add_subcommand("decompose", "structure certificate and decomposition");
  perm_input(decompose);
  int k = 2, max_overlap = 2;
  bool oracle = false;
  decompose->add_option("--k", k, "size parameter")->capture_default_str();
  decompose->add_flag("--oracle", oracle, "use the exhaustive oracle instead");
  decompose->add_option("--max-overlap", max_overlap, "overlap cap for --oracle")
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "simple permutations of length n");
  int n = 4;
  bool count_only = false, cross_check = false;
  enumerate->add_option("n", n, "length")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_flag("--cross-check", cross_check, "recount with the literal checker");
  enumerate->add_flag("--json", structured, "structured (JSON) output");

  auto* experiment = app.add_subcommand("experiment", "exhaustive experiments");
  experiment->require_subcommand(1);
  int n_max = 8, r_param = 0;
  auto* edec = experiment->add_subcommand("decompose", "least length from which all simples decompose");
  edec->add_option("--k", k, "size parameter")->capture_default_str();
  edec->add_option("--n-max", n_max, "largest length")->capture_default_str();
  auto* eg = experiment->add_subcommand("copies", "least length from which all simples have > r copies of 132");
  eg->add_option("--r", r_param, "copy budget")->capture_default_str();
  eg->add_option("--n-max", n_max, "largest length")->capture_default_str();
  auto* emin = experiment->add_subcommand("min-copies", "fewest copies of a pattern in simples of length n");
  emin->add_option("--pattern", pattern, "pattern")->required();
  emin->add_option("--n", n, "length")->required();
  for (auto* sub : {edec, eg, emin}) {
    sub->add_flag("--json", structured, "structured (JSON) output");
    sub->add_flag("--timings", timings, "include wall-clock timings");
  }

  auto* series = app.add_subcommand("series", "generating function of at most r copies of 132");
  int order = 8;
  series->add_option("--r", r_param, "0 or 1")->capture_default_str();
  series->add_option("--order", order, "last coefficient index")->capture_default_str();
  series->add_flag("--json", structured, "structured (JSON) output");

  auto* basis = app.add_subcommand("basis", "minimal permutations outside a budget class");
  int basis_len = 6;
  basis->add_option("--budget", budget, "PATTERN:R limits")->required();
  basis->add_option("--max-len", basis_len, "longest basis element")->capture_default_str();
  basis->add_flag("--json", structured, "structured (JSON) output");

  auto* bounds = app.add_subcommand("bounds", "length thresholds for structure certificates");
  bounds->add_option("--k", k, "size parameter")->capture_default_str();
  bounds->add_flag("--json", structured, "structured (JSON) output");

  auto* plot = app.add_subcommand("plot", "ASCII plot, optionally SVG");
  perm_input(plot);
  std::string svg;
  plot->add_option("--pins", pin_list, "pins to overlay");
  plot->add_option("--svg", svg, "write an SVG plot to this file");

  auto* alternation = app.add_subcommand("alternation", "alternations inside a permutation");
  perm_input(alternation);
  std::string alt_op = "classify";
  alternation->add_option("--op", alt_op, "classify|monotone|longest|extract|split")
      ->capture_default_str();
  alternation->add_option("--k", k, "size parameter")->capture_default_str();

  auto* wedge = app.add_subcommand("wedge", "wedge simple permutations");
  wedge->require_subcommand(1);
  int wtype = 2, wm = 3;
  std::string orient = "identity", wpoints;
  auto* wgen = wedge->add_subcommand("generate", "family member");
  wgen->add_option("--type", wtype, "1 or 2")->capture_default_str();
  wgen->add_option("--m", wm, "half length")->capture_default_str();
  wgen->add_option("--orientation", orient, "symmetry name, e.g. inverse+reverse")
      ->capture_default_str();
  wgen->add_flag("--json", structured, "structured (JSON) output");
  auto* wrec = wedge->add_subcommand("recognize", "family membership");
  perm_input(wrec);
  auto* wsplit = wedge->add_subcommand("split", "two wedge simple halves");
  perm_input(wsplit);
  wsplit->add_option("--k", k, "size parameter")->capture_default_str();
  auto* wled = wedge->add_subcommand("ledger", "wedge ledger of a wedge alternation");
  perm_input(wled);
  wled->add_option("--k", k, "size parameter")->capture_default_str();
  wled->add_option("--points", wpoints, "wedge points (default: a longest wedge alternation)");

  auto* transform = app.add_subcommand("transform", "symmetries and patterns of subsets");
  perm_input(transform);
  std::string sym, indices;
  transform->add_option("--symmetry", sym, "symmetry name, e.g. inverse+complement");
  transform->add_option("--indices", indices, "comma-separated indices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << deepest(&app)->help();
    return 2;
  }

  try {
    std::ostringstream out;
    auto each = [&](auto fn) {
      for (const auto& pi : read_inputs(perm, in_file)) emit(fn(pi), structured, out);
    };
    if (simple->parsed()) {
      each(cmd_simple);
    } else if (intervals->parsed()) {
      each(cmd_intervals);
    } else if (count->parsed()) {
      if (!budget.empty()) {
        if (length < 0) throw ParseError("--budget needs --length");
        emit(cmd_class_count(budget, length), structured, out);
      } else {
        if (pattern.empty()) throw ParseError("count needs --pattern (or --budget)");
        const Permutation sigma = parse_permutation(pattern);
        each([&](const Permutation& pi) { return cmd_count(sigma, pi, limit); });
      }
    } else if (pcheck->parsed()) {
      each([&](const Permutation& pi) { return cmd_pins_check(pi, pin_list); });
    } else if (pen->parsed()) {
      each([&](const Permutation& pi) { return cmd_pins_enumerate(pi, from, max_len); });
    } else if (preach->parsed()) {
      each([&](const Permutation& pi) { return cmd_pins_reach(pi, from); });
    } else if (pext->parsed()) {
      each([&](const Permutation& pi) { return cmd_pins_extract(pi, pin_list, split_k); });
    } else if (decompose->parsed()) {
      each([&](const Permutation& pi) { return cmd_decompose(pi, k, oracle, max_overlap); });
    } else if (enumerate->parsed()) {
      emit(cmd_enumerate(n, count_only, cross_check), structured, out);
    } else if (edec->parsed()) {
      emit(report_experiment(empirical_f(k, n_max), json{{"k", k}, {"n-max", n_max}}, timings),
           structured, out);
    } else if (eg->parsed()) {
      emit(report_experiment(empirical_g(r_param, n_max),
                             json{{"r", r_param}, {"n-max", n_max}}, timings),
           structured, out);
    } else if (emin->parsed()) {
      emit(cmd_min_copies(parse_permutation(pattern), n, timings), structured, out);
    } else if (series->parsed()) {
      emit(cmd_series(r_param, order), structured, out);
    } else if (basis->parsed()) {
      emit(cmd_basis(budget, basis_len), structured, out);
    } else if (bounds->parsed()) {
      emit(cmd_bounds(k), structured, out);
    } else if (plot->parsed()) {
      for (const auto& pi : read_inputs(perm, in_file)) {
        std::string ascii;
        Report r = cmd_plot(pi, pin_list, svg, ascii);
        if (structured) {
          emit(r, true, out);
        } else {
          out << ascii;
          if (!svg.empty()) out << "svg: " << svg << "\n";
        }
      }
    } else if (alternation->parsed()) {
      each([&](const Permutation& pi) { return cmd_alternation(pi, alt_op, k); });
    } else if (wgen->parsed()) {
      emit(cmd_wedge_generate(wtype, wm, orient), structured, out);
    } else if (wrec->parsed()) {
      each(cmd_wedge_recognize);
    } else if (wsplit->parsed()) {
      each([&](const Permutation& pi) { return cmd_wedge_split(pi, k); });
    } else if (wled->parsed()) {
      each([&](const Permutation& pi) { return cmd_wedge_ledger(pi, wpoints, k); });
    } else if (transform->parsed()) {
      each([&](const Permutation& pi) { return cmd_transform(pi, sym, indices); });
    }
    std::cout << out.str();
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << deepest(&app)->help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
