// Copyright 2026 The Orbigrpd Authors
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


// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "orbi/bicat.hpp"
#include "orbi/builders.hpp"
#include "orbi/fixtures.hpp"
#include "orbi/gmap.hpp"
#include "orbi/inertia.hpp"
#include "orbi/io.hpp"

namespace orbi {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failures; the first few are reported.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok_ = false;
    if (failures_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome outcome() const {
    if (ok_) return {true, notes_};
    return {false, detail_ + (failures_ > 3 ? " (+" + std::to_string(failures_ - 3) + " more)" : "")};
  }

 private:
  bool ok_ = true;
  std::size_t failures_ = 0;
  std::string detail_;
  std::string notes_;
};

Vertex object(const Groupoid& g, const std::string& label) {
  auto v = g.objects().find(label);
  if (!v) throw std::runtime_error("no object " + label);
  return *v;
}

// Quotient-graph components of a mapping groupoid with the functors not of
// identity type, as labelled subgraphs of the orbit graph.
struct LabelledComponent {
  CombSpace graph;
  std::vector<std::uint64_t> colors;
};

std::vector<LabelledComponent> non_identity_components(const MappingGroupoid& m) {
  QuotientSpace q = quotient(*m.base);
  std::vector<LabelledComponent> out;
  for (const GmapComponent& c : gmap_component_report(m)) {
    if (c.identity_type) continue;
    LabelledComponent lc{induced_subgraph(*q.orbit_graph, c.orbits), {}};
    for (Vertex o : c.orbits) {
      std::uint64_t color = q.labels[o].order;
      for (std::size_t k : q.labels[o].element_orders) color = color * 31 + k;
      lc.colors.push_back(color);
    }
    out.push_back(std::move(lc));
  }
  return out;
}

std::vector<Vertex> identity_type_functors(const MappingGroupoid& m) {
  std::vector<Vertex> out;
  for (Vertex f = 0; f < m.functors.size(); ++f) {
    if (is_identity_type(m.functors[f])) out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome functors_from_the_point() {
  Check c;
  for (const std::string& name : fixture_names()) {
    GroupoidPtr h = make_fixture(name);
    MappingGroupoid m = build_gmap(make_fixture("pt_1"), h);
    c.expect(check_isomorphism(m.base, h).has_value(), name);
  }
  c.note(std::to_string(fixture_names().size()) + " fixtures");
  return c.outcome();
}

Outcome path_into_cone_chart() {
  Check c;
  auto x = make_space(3, {{0, 1}, {1, 2}});
  GroupAction a = rotation_action(3, 3, true);
  MappingGroupoid m = build_gmap(share(unit_groupoid(x)), share(build_translation_groupoid(a)));
  GroupoidPtr expected = share(oracle::map_space_translation(*x, a));
  c.expect(check_isomorphism(m.base, expected).has_value(), "not isomorphic");
  c.note(std::to_string(m.base->object_count()) + " maps, " + std::to_string(m.base->arrow_count()) +
         " arrows");
  return c.outcome();
}

Outcome inertia_isomorphisms() {
  Check c;
  for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"si", 2}, {"c3", 3}, {"tb", 6}}) {
    GroupoidPtr g = make_fixture(name);
    c.expect(minimal_exponent(*g) == n, name + " exponent");
    InertiaIsoResult r = verify_inertia_iso(g, 4);
    c.expect(r.n == n && r.ok(), name + " inertia iso");
    c.note(name + " n=" + std::to_string(r.n));
  }
  return c.outcome();
}

Outcome phi_embeddings() {
  Check c;
  std::size_t runs = 0;
  for (const std::string& name : fixture_names()) {
    for (std::size_t n = 1; n <= 6; ++n) {
      PhiReport r = verify_phi_properties(n, make_fixture(name));
      c.expect(r.embedding(), name + " n=" + std::to_string(n));
      ++runs;
    }
  }
  c.note(std::to_string(runs) + " pairs");
  return c.outcome();
}

Outcome tb_overlaps() {
  Check c;
  const Groupoid& tb = *make_fixture("tb");
  auto index = component_index(tb.arrows());
  auto chart = [&](Vertex x) { return tb.objects().label(x).substr(0, 1); };
  std::map<std::pair<std::string, std::string>, std::set<std::size_t>> hit;
  for (Vertex a = 0; a < tb.arrow_count(); ++a) {
    if (chart(tb.src(a)) != chart(tb.tgt(a))) hit[{chart(tb.src(a)), chart(tb.tgt(a))}].insert(index[a]);
  }
  c.expect(hit.size() == 6, "ordered chart pairs");
  for (const auto& [pair, comps] : hit) {
    c.expect(comps.size() == 18, pair.first + "->" + pair.second);
    c.expect(hit.count({pair.second, pair.first}) &&
                 comps.size() + hit.at({pair.second, pair.first}).size() == 36, "unordered");
  }
  c.note("18 per ordered pair, 36 per unordered pair");
  return c.outcome();
}

Outcome order_three_into_tb() {
  Check c;
  GroupoidPtr tb = make_fixture("tb");
  MappingGroupoid m = build_gmap(make_fixture("pt_z3"), tb, 4);
  Groupoid plain = full_subgroupoid(*m.base, identity_type_functors(m));
  c.expect(same_labelled_quotient(plain, *tb), "identity-type part");
  auto extra = non_identity_components(m);
  c.expect(extra.size() == 3, std::to_string(extra.size()) + " extra components");
  for (const auto& lc : extra) {
    c.expect(lc.graph.size() == 1, "not a point");
  }
  for (const GmapComponent& comp : gmap_component_report(m)) {
    if (comp.identity_type) continue;
    c.expect(comp.labels.size() == 1 && comp.labels[0].order == 3, "isotropy " + comp.to_string());
  }
  c.note(std::to_string(m.functors.size()) + " functors, " + std::to_string(extra.size()) +
         " extra points");
  return c.outcome();
}

Outcome order_two_into_tb() {
  Check c;
  GroupoidPtr tb = make_fixture("tb");
  MappingGroupoid m = build_gmap(make_fixture("pt_z2"), tb, 4);
  Groupoid plain = full_subgroupoid(*m.base, identity_type_functors(m));
  c.expect(same_labelled_quotient(plain, *tb), "identity-type part");
  QuotientSpace q = quotient(*m.base);
  std::size_t extra = 0;
  for (const GmapComponent& comp : gmap_component_report(m)) {
    if (comp.identity_type) continue;
    ++extra;
    for (const IsotropyLabel& l : comp.labels) c.expect(l.order == 2, "isotropy " + l.to_string());
    for (Vertex o : comp.orbits) {
      c.expect(q.orbit_graph->neighbors(o).size() == 2, "orbit degree");
    }
    c.note(std::to_string(comp.orbits.size()) + "-orbit cycle");
  }
  c.expect(extra == 1, std::to_string(extra) + " non-identity components");
  for (const char* center : {"A:c", "B:c", "C:c"}) {
    Vertex x = object(*tb, center);
    std::size_t at = 0;
    for (const auto& f : m.functors) at += f.f0[0] == x;
    c.expect(at == 4, std::string(center) + " has " + std::to_string(at));
  }
  c.note("4 functors per center");
  return c.outcome();
}

Outcome order_six_into_tb() {
  Check c;
  GroupoidPtr tb = make_fixture("tb");
  auto six = non_identity_components(build_gmap(make_fixture("pt_z6"), tb, 4));
  auto expected = non_identity_components(build_gmap(make_fixture("pt_z2"), tb, 4));
  for (auto& lc : non_identity_components(build_gmap(make_fixture("pt_z3"), tb, 4))) {
    expected.push_back(std::move(lc));
  }
  c.expect(six.size() == expected.size(), std::to_string(six.size()) + " vs " +
                                              std::to_string(expected.size()) + " components");
  std::vector<bool> used(expected.size(), false);
  for (const auto& lc : six) {
    bool matched = false;
    for (std::size_t i = 0; i < expected.size() && !matched; ++i) {
      if (used[i] || expected[i].graph.size() != lc.graph.size()) continue;
      if (find_graph_isomorphism(lc.graph, lc.colors, expected[i].graph, expected[i].colors)) {
        used[i] = matched = true;
      }
    }
    c.expect(matched, "unmatched component of size " + std::to_string(lc.graph.size()));
  }
  c.note(std::to_string(six.size()) + " components matched");
  return c.outcome();
}

Outcome obstructions() {
  Check c;
  GroupoidPtr t = make_fixture("teardrop");
  IntervalCover i1 = interval_fixture(1);
  IntervalCover i2 = interval_fixture(2);
  HomConstraints one;
  one.objects = {{i1.object(0, 0), teardrop_center(*t, 1)},
                 {i1.object(0, i1.length - 1), teardrop_center(*t, 2)}};
  c.expect(enumerate_homomorphisms(i1.groupoid, t, one).empty(), "path from I to T");
  HomConstraints two;
  two.objects = {{i2.object(0, 0), teardrop_center(*t, 1)},
                 {i2.object(1, i2.length - 1), teardrop_center(*t, 2)}};
  auto paths = enumerate_homomorphisms(i2.groupoid, t, two);
  c.expect(!paths.empty(), "no path from I^2 to T");
  if (!paths.empty()) {
    Span s{refine(i2, i1), paths.front()};
    c.expect(validate_span(s).empty(), "span invalid");
    c.note(std::to_string(paths.size()) + " paths via I^2");
  }

  // End to end across the silvered interval, in one piece and broken in two.
  auto across = [](const GroupoidPtr& g, std::size_t length, Vertex from, Vertex to) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < length; ++v) edges.push_back({v, v + 1});
    HomConstraints pins;
    pins.objects = {{0, from}, {static_cast<Vertex>(length - 1), to}};
    return enumerate_homomorphisms(share(unit_groupoid(make_space(length, edges))), g, pins).size();
  };
  GroupoidPtr si = make_fixture("si");
  GroupoidPtr si2 = make_fixture("si2");
  const std::size_t si_len = quotient(*si).orbits.size();
  const std::size_t si2_len = quotient(*si2).orbits.size();
  c.expect(across(si, si_len, object(*si, "0"), object(*si, "4")) > 0, "SI path");
  for (std::size_t len = si2_len; len <= si2_len + 4; ++len) {
    c.expect(across(si2, len, object(*si2, "P:3"), object(*si2, "Q:3")) == 0, "SI^2 path");
  }
  c.note("SI path found, SI^2 paths empty");
  return c.outcome();
}

Outcome equivalences_and_two_cells() {
  Check c;
  TwoCellExample ex = two_cell_example();
  const std::vector<const IntervalCover*> covers = {&ex.interval, &ex.right2, &ex.left2,
                                                    &ex.i3,       &ex.i4,     &ex.padded};
  for (const IntervalCover* cover : covers) {
    c.expect(check_essential_equivalence(refine(*cover, ex.interval)).ok(),
             std::to_string(cover->charts.size()) + " charts -> I");
  }
  c.expect(check_essential_equivalence(refine(interval_fixture(3), interval_fixture(1))).ok(), "I^3 fixture");
  for (const TwoCellDiagram* d : {&ex.d1, &ex.d2, &ex.d3}) {
    c.expect(validate_two_cell_diagram(*d).empty(), "diagram invalid");
  }
  c.expect(ex.witness3.refinement()->object_count() == ex.i3.groupoid->object_count(), "M is not I^3");
  c.expect(two_cells_equal(ex.d1, ex.d3, ex.witness3).equal, "d1 vs d3 via I^3");
  c.expect(two_cells_equal(ex.d1, ex.d2, ex.witness).equal, "d1 vs d2 via I^4");
  const std::size_t bound = ex.i3.groupoid->object_count();
  auto found = find_two_cell_witness(ex.d1, ex.d3, bound);
  c.expect(found.has_value(), "no witness within " + std::to_string(bound));
  if (found) {
    c.expect(two_cells_equal(ex.d1, ex.d3, *found).equal, "found witness fails");
    c.note("witness with " + std::to_string(found->refinement()->object_count()) + " objects");
  }
  return c.outcome();
}

Outcome oracle_suites() {
  Check c;
  std::vector<std::string> sources, targets;
  for (const std::string& name : fixture_names()) {
    GroupoidPtr g = make_fixture(name);
    if (g->arrow_count() <= 6) sources.push_back(name);
    if (g->arrow_count() <= 24) targets.push_back(name);
  }
  std::size_t pairs = 0;
  for (const auto& s : sources) {
    for (const auto& t : targets) {
      GroupoidPtr g = make_fixture(s), h = make_fixture(t);
      auto got = enumerate_homomorphisms(g, h);
      auto want = oracle::brute_force_homomorphisms(g, h);
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) {
        same = got[i].f0 == want[i].f0 && got[i].f1 == want[i].f1;
      }
      c.expect(same, s + "->" + t);
      for (std::size_t i = 0; i < std::min<std::size_t>(got.size(), 6); ++i) {
        for (std::size_t j = 0; j < std::min<std::size_t>(got.size(), 6); ++j) {
          auto nt = enumerate_nat_trans(got[i], got[j]);
          auto nt_want = oracle::brute_force_nat_trans(got[i], got[j]);
          bool eq = nt.size() == nt_want.size();
          for (std::size_t k = 0; eq && k < nt.size(); ++k) eq = nt[k].alpha == nt_want[k].alpha;
          c.expect(eq, "nat trans " + s + "->" + t);
        }
      }
      ++pairs;
    }
  }
  std::mt19937 rng(20261016);
  std::size_t mutations = 0, detected = 0;
  for (const std::string& name : fixture_names()) {
    GroupoidPtr g = make_fixture(name);
    for (const auto& m : oracle::single_entry_mutations(*g, 100, rng)) {
      ++mutations;
      detected += !validate_groupoid(Groupoid(m.data), 1).empty();
    }
  }
  c.expect(detected == mutations, std::to_string(mutations - detected) + " undetected mutations");
  c.note(std::to_string(pairs) + " pairs, " + std::to_string(detected) + "/" +
         std::to_string(mutations) + " mutations");
  return c.outcome();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome round_trip_and_cli() {
  Check c;
  for (const std::string& name : fixture_names()) {
    GroupoidPtr g = make_fixture(name);
    std::string text = serialize_groupoid(*g);
    Groupoid back = parse_groupoid(text);
    c.expect(back == *g && serialize_groupoid(back) == text, "round trip " + name);
  }
  for (const auto& [file, text] : cli::fixture_corpus()) {
    c.expect(slurp(std::string(ORBI_FIXTURE_DIR) + "/" + file) == text, "stale fixture " + file);
  }
  const std::string dir = ORBI_FIXTURE_DIR;
  const std::vector<std::vector<std::string>> commands = {
      {"validate", dir + "/tb.grpd"},
      {"quotient", dir + "/tb.grpd"},
      {"isotropy", dir + "/c3.grpd", "--object", "c"},
      {"etale", dir + "/teardrop.grpd"},
      {"hom-enum", dir + "/pt_z2.grpd", dir + "/si.grpd"},
      {"gmap", dir + "/pt_z3.grpd", dir + "/tb.grpd"},
      {"inertia", dir + "/si.grpd"},
      {"phi", dir + "/c3.grpd", "--iso"},
      {"morita", dir + "/i1.grpd", dir + "/i3.grpd"},
      {"morita", dir + "/pt_z2.grpd", dir + "/pt_z3.grpd"},
      {"span-compose", dir + "/teardrop_span.odg", "cone_path", "identity"},
      {"two-cell-verify", dir + "/two_cell.odg", "--second", "d3"},
      {"export-dot", dir + "/si.grpd", "--quotient"},
  };
  for (const auto& base : commands) {
    for (bool json : {false, true}) {
      std::vector<std::string> args = base;
      if (json) args.insert(args.begin(), "--json");
      std::vector<std::string> threaded = args;
      threaded.insert(threaded.begin(), {"--threads", "4"});
      std::ostringstream o1, o2, o3, err;
      int r1 = cli::run(args, o1, err);
      int r2 = cli::run(args, o2, err);
      int r3 = cli::run(threaded, o3, err);
      c.expect(r1 == r2 && r1 == r3 && o1.str() == o2.str() && o1.str() == o3.str(),
               "unstable: " + base[0]);
      c.expect(!o1.str().empty(), "no output: " + base[0]);
    }
  }
  c.note(std::to_string(fixture_names().size()) + " fixtures, " +
         std::to_string(commands.size() * 2) + " commands");
  return c.outcome();
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace orbi

int main() {
  using namespace orbi;
  const std::vector<Criterion> criteria = {
      {"point functors recover every fixture", functors_from_the_point},
      {"maps of a path into the cone chart", path_into_cone_chart},
      {"cyclic mapping groupoid is the inertia groupoid", inertia_isomorphisms},
      {"Phi is a full and faithful embedding", phi_embeddings},
      {"triangle billiard overlap counts", tb_overlaps},
      {"order three into the billiard", order_three_into_tb},
      {"order two into the billiard", order_two_into_tb},
      {"order six into the billiard", order_six_into_tb},
      {"teardrop and silvered interval obstructions", obstructions},
      {"essential equivalences and 2-cells", equivalences_and_two_cells},
      {"oracle suites and mutation detection", oracle_suites},
      {"round trip and byte-stable CLI", round_trip_and_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::printf("%s %2zu %s (%.1fs): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
