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

#include "orbi/fixtures.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "orbi/error.hpp"
#include "orbi/group.hpp"

namespace orbi {

namespace {

SpacePtr cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return make_space(n, edges);
}

SpacePtr path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return make_space(n, edges);
}

// Z/2 acting on a space by the given involution.
GroupAction reflection(SpacePtr space, const std::vector<Vertex>& flip) {
  std::vector<Vertex> id(space->size());
  for (Vertex v = 0; v < id.size(); ++v) id[v] = v;
  return {FiniteGroup::cyclic(2), std::move(space), {id, flip}};
}

Vertex object(const Groupoid& g, const std::string& label) {
  auto v = g.objects().find(label);
  if (!v) throw Error(ErrorCode::kInvalidArgument, "no object '" + label + "'");
  return *v;
}

}  // namespace

Groupoid build_si() {
  std::vector<Vertex> flip;
  for (Vertex v = 0; v < 8; ++v) flip.push_back((8 - v) % 8);
  return build_translation_groupoid(reflection(cycle(8), flip));
}

Groupoid build_si2() {
  std::vector<Vertex> flip;
  for (Vertex v = 0; v < 7; ++v) flip.push_back(6 - v);
  std::vector<Chart> charts{{"P", reflection(path(7), flip)}, {"Q", reflection(path(7), flip)}};
  return build_atlas_groupoid(charts, {{0, 1, {{5, 6}, {6, 5}}, {}}});
}

Groupoid build_c3() { return build_translation_groupoid(rotation_action(3, 3, true)); }

Groupoid build_teardrop() {
  const GroupAction disc = rotation_action(3, 3, true);
  const std::size_t n1 = disc.space->size();  // 9-cycle and centre
  std::vector<Edge> edges = disc.space->edges();
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n1; ++v) labels.push_back("D1:" + disc.space->label(v));
  const Vertex off = static_cast<Vertex>(n1);
  std::vector<Edge> k4;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) k4.push_back({a, b});
  }
  for (const Edge& e : k4) edges.push_back({e.a + off, e.b + off});
  for (int v = 0; v < 3; ++v) labels.push_back("D2:" + std::to_string(v));
  labels.push_back("D2:c");
  SpacePtr objects = make_space(labels.size(), edges, labels);

  std::vector<SheetFamily> families;
  for (std::size_t g = 0; g < disc.group.order(); ++g) {
    SheetFamily f;
    f.identity = g == disc.group.identity();
    for (Vertex v = 0; v < n1; ++v) {
      f.points.push_back({v, disc.act[g][v]});
      f.labels.push_back("D1:" + disc.group.name(g) + ":" + disc.space->label(v));
    }
    f.edges = disc.space->edges();
    families.push_back(std::move(f));
  }
  SheetFamily unit2;
  unit2.identity = true;
  for (Vertex v = 0; v < 4; ++v) {
    unit2.points.push_back({off + v, off + v});
    unit2.labels.push_back("D2:e:" + labels[off + v].substr(3));
  }
  unit2.edges = k4;
  families.push_back(std::move(unit2));
  // The annulus of the first disc wraps three times around the second.
  SheetFamily wrap, unwrap;
  for (Vertex v = 0; v < 9; ++v) {
    wrap.points.push_back({v, off + v % 3});
    unwrap.points.push_back({off + v % 3, v});
    wrap.labels.push_back("D1>D2:" + std::to_string(v));
    unwrap.labels.push_back("D1<D2:" + std::to_string(v));
    Vertex next = (v + 1) % 9;
    wrap.edges.push_back({std::min(v, next), std::max(v, next)});
  }
  unwrap.edges = wrap.edges;
  families.push_back(std::move(wrap));
  families.push_back(std::move(unwrap));
  return build_local_groupoid(objects, families);
}

Groupoid build_tb() {
  std::vector<Chart> charts;
  for (const char* name : {"A", "B", "C"}) charts.push_back({name, dihedral_action(3, 12, true)});
  // Chart i's mirror through vertex 6 (fixed by rs) meets chart i+1's
  // mirror through vertex 0 (fixed by s); the twist swaps the two sides.
  const std::size_t s = 3, rs = 4;
  std::vector<Gluing> gluings;
  for (std::size_t i = 0; i < 3; ++i) {
    Gluing gl{i, (i + 1) % 3, {}, {{rs, s}}};
    for (int o = -2; o <= 2; ++o) {
      gl.overlap.push_back({static_cast<Vertex>(6 + o), static_cast<Vertex>((36 + o) % 36)});
    }
    gluings.push_back(std::move(gl));
  }
  return build_atlas_groupoid(charts, gluings);
}

IntervalCover interval_fixture(std::size_t charts) {
  switch (charts) {
    case 1:
      return build_interval_cover({{0, 7}});
    case 2:
      return build_interval_cover({{0, 4}, {3, 7}});
    case 3:
      return build_interval_chain(3, 2, 4);
    default:
      throw Error(ErrorCode::kInvalidArgument, "interval fixtures have 1 to 3 charts");
  }
}

Vertex teardrop_center(const Groupoid& teardrop, int chart) {
  return object(teardrop, chart == 1 ? "D1:c" : "D2:c");
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "pt_1", "pt_z2", "pt_z3", "pt_z4", "pt_z2xz2", "pt_z6", "pt_d3", "si",
      "si2",  "c3",    "teardrop", "tb", "i1",    "i2",    "i3"};
  return names;
}

GroupoidPtr make_fixture(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, GroupoidPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  GroupoidPtr g;
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  if (name == "pt_1") g = share(build_point_groupoid(FiniteGroup::trivial()));
  else if (name == "pt_z2") g = share(build_point_groupoid(z2));
  else if (name == "pt_z3") g = share(build_point_groupoid(FiniteGroup::cyclic(3)));
  else if (name == "pt_z4") g = share(build_point_groupoid(FiniteGroup::cyclic(4)));
  else if (name == "pt_z2xz2") g = share(build_point_groupoid(FiniteGroup::product(z2, z2)));
  else if (name == "pt_z6") g = share(build_point_groupoid(FiniteGroup::cyclic(6)));
  else if (name == "pt_d3") g = share(build_point_groupoid(FiniteGroup::dihedral(3)));
  else if (name == "si") g = share(build_si());
  else if (name == "si2") g = share(build_si2());
  else if (name == "c3") g = share(build_c3());
  else if (name == "teardrop") g = share(build_teardrop());
  else if (name == "tb") g = share(build_tb());
  else if (name == "i1") g = interval_fixture(1).groupoid;
  else if (name == "i2") g = interval_fixture(2).groupoid;
  else if (name == "i3") g = interval_fixture(3).groupoid;
  else throw Error(ErrorCode::kInvalidArgument, "unknown fixture '" + name + "'");
  cache.emplace(name, g);
  return g;
}

namespace {

// The arrow from x to y; among several, the one whose label carries `tag`.
Vertex pick_arrow(const Groupoid& g, Vertex x, Vertex y, const std::string& tag) {
  if (x == y) return g.unit(x);
  auto between = g.arrows_between(x, y);
  for (Vertex a : between) {
    if (between.size() == 1 || g.arrows().label(a).find(tag) != std::string::npos) return a;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no arrow " + g.objects().label(x) + " -> " + g.objects().label(y));
}

NatTrans bridge(const Homomorphism& from, const Homomorphism& to, const std::string& tag = "") {
  NatTrans t{from, to, {}};
  for (Vertex m = 0; m < from.f0.size(); ++m) {
    t.alpha.push_back(pick_arrow(*from.target, from.f0[m], to.f0[m], tag));
  }
  return t;
}

// Chart 0 runs along chart A from vertex 2, the last chart along chart B
// four steps behind; gluing arrows use the untwisted overlap copy.
Homomorphism into_tb(const IntervalCover& cover, const GroupoidPtr& tb) {
  Homomorphism f{cover.groupoid, tb, {}, {}};
  const Groupoid& g = *cover.groupoid;
  const std::size_t last = cover.charts.size() - 1;
  for (Vertex x = 0; x < g.object_count(); ++x) {
    const long p = static_cast<long>(cover.position_of[x]);
    f.f0.push_back(cover.chart_of[x] == last ? object(*tb, "B:" + std::to_string((p + 32) % 36))
                                             : object(*tb, "A:" + std::to_string(p + 2)));
  }
  for (Vertex a = 0; a < g.arrow_count(); ++a) {
    f.f1.push_back(pick_arrow(*tb, f.f0[g.src(a)], f.f0[g.tgt(a)], ":e,e:"));
  }
  return f;
}

TwoCellDiagram diagram(const IntervalCover& middle, const Span& top, const IntervalCover& right2,
                       const Span& bottom, const IntervalCover& left2) {
  TwoCellDiagram d{top, bottom, refine(middle, right2), refine(middle, left2), {}, {}};
  d.alpha = bridge(compose(d.nu, top.left), compose(d.nu2, bottom.left));
  d.beta = bridge(compose(d.nu, top.right), compose(d.nu2, bottom.right), ":e,e:");
  return d;
}

TwoCellWitness witness(const TwoCellDiagram& d1, const TwoCellDiagram& d2, Homomorphism lambda1,
                       Homomorphism lambda2) {
  TwoCellWitness w{std::move(lambda1), std::move(lambda2), {}, {}};
  w.gamma = bridge(compose(w.lambda1, d1.nu), compose(w.lambda2, d2.nu));
  w.gamma2 = bridge(compose(w.lambda1, d1.nu2), compose(w.lambda2, d2.nu2));
  return w;
}

}  // namespace

TwoCellExample two_cell_example() {
  TwoCellExample ex;
  ex.interval = build_interval_cover({{0, 7}});
  ex.right2 = build_interval_cover({{0, 3}, {2, 7}});
  ex.left2 = build_interval_cover({{0, 5}, {4, 7}});
  ex.i3 = build_interval_cover({{0, 3}, {2, 5}, {4, 7}});
  ex.i4 = build_interval_cover({{0, 2}, {2, 4}, {4, 6}, {6, 7}});
  ex.tb = make_fixture("tb");
  Span top{refine(ex.right2, ex.interval), into_tb(ex.right2, ex.tb)};
  Span bottom{refine(ex.left2, ex.interval), into_tb(ex.left2, ex.tb)};
  ex.d1 = diagram(ex.i3, top, ex.right2, bottom, ex.left2);
  ex.d2 = diagram(ex.i4, top, ex.right2, bottom, ex.left2);
  ex.padded = build_interval_cover({{0, 3}, {2, 5}, {3, 4}, {4, 7}});
  ex.d3 = diagram(ex.padded, top, ex.right2, bottom, ex.left2);
  ex.witness = witness(ex.d1, ex.d2, refine(ex.i4, ex.i3), identity_homomorphism(ex.i4.groupoid));
  ex.witness3 =
      witness(ex.d1, ex.d3, identity_homomorphism(ex.i3.groupoid), refine(ex.i3, ex.padded));
  return ex;
}

}  // namespace orbi
