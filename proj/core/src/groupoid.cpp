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

#include "orbi/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "orbi/error.hpp"

namespace orbi {

namespace {

void check_table(const std::vector<Vertex>& table, std::size_t expected,
                 std::size_t range, const char* name) {
  if (table.size() != expected) {
    throw Error(ErrorCode::kDanglingId,
                std::string(name) + " table has " + std::to_string(table.size()) +
                    " rows, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= range) {
      throw Error(ErrorCode::kDanglingId,
                  std::string(name) + " row " + std::to_string(i) +
                      " refers to an undeclared vertex");
    }
  }
}

// Groups ids 0..n-1 into buckets keyed by key(id), each bucket sorted by
// (secondary(id), id).
template <typename Key, typename Secondary>
void bucket(std::size_t n, std::size_t buckets, Key key, Secondary secondary,
            std::vector<Vertex>& items, std::vector<std::size_t>& offset) {
  items.resize(n);
  std::iota(items.begin(), items.end(), 0);
  std::sort(items.begin(), items.end(), [&](Vertex a, Vertex b) {
    return std::make_tuple(key(a), secondary(a), a) <
           std::make_tuple(key(b), secondary(b), b);
  });
  offset.assign(buckets + 1, 0);
  for (Vertex a = 0; a < n; ++a) ++offset[key(a) + 1];
  for (std::size_t i = 0; i < buckets; ++i) offset[i + 1] += offset[i];
}

}  // namespace

Groupoid::Groupoid(GroupoidData data) : data_(std::move(data)) {
  if (!data_.objects || !data_.arrows) {
    throw Error(ErrorCode::kInvalidArgument, "groupoid needs object and arrow spaces");
  }
  const std::size_t n0 = data_.objects->size();
  const std::size_t n1 = data_.arrows->size();
  check_table(data_.src, n1, n0, "src");
  check_table(data_.tgt, n1, n0, "tgt");
  check_table(data_.unit, n0, n1, "unit");
  check_table(data_.inv, n1, n1, "inv");
  for (const CompEntry& e : data_.comp) {
    if (e.first >= n1 || e.second >= n1 || e.result >= n1) {
      throw Error(ErrorCode::kDanglingId, "comp row refers to an undeclared arrow");
    }
  }
  std::sort(data_.comp.begin(), data_.comp.end());
  for (std::size_t i = 1; i < data_.comp.size(); ++i) {
    if (data_.comp[i].first == data_.comp[i - 1].first &&
        data_.comp[i].second == data_.comp[i - 1].second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "composition table has two rows for the same pair");
    }
  }
  comp_offset_.assign(n1 + 1, 0);
  for (const CompEntry& e : data_.comp) ++comp_offset_[e.first + 1];
  for (std::size_t i = 0; i < n1; ++i) comp_offset_[i + 1] += comp_offset_[i];

  bucket(
      n1, n0, [this](Vertex a) { return data_.src[a]; },
      [this](Vertex a) { return data_.tgt[a]; }, out_, out_offset_);
  bucket(
      n1, n0, [this](Vertex a) { return data_.tgt[a]; },
      [this](Vertex a) { return data_.src[a]; }, in_, in_offset_);
}

std::span<const CompEntry> Groupoid::comp_row(Vertex first) const {
  return {data_.comp.data() + comp_offset_[first],
          comp_offset_[first + 1] - comp_offset_[first]};
}

std::optional<Vertex> Groupoid::comp(Vertex first, Vertex second) const {
  auto row = comp_row(first);
  auto it = std::lower_bound(row.begin(), row.end(), second,
                             [](const CompEntry& e, Vertex s) { return e.second < s; });
  if (it == row.end() || it->second != second) return std::nullopt;
  return it->result;
}

std::span<const Vertex> Groupoid::arrows_from(Vertex x) const {
  return {out_.data() + out_offset_[x], out_offset_[x + 1] - out_offset_[x]};
}

std::span<const Vertex> Groupoid::arrows_to(Vertex x) const {
  return {in_.data() + in_offset_[x], in_offset_[x + 1] - in_offset_[x]};
}

std::span<const Vertex> Groupoid::arrows_between(Vertex x, Vertex y) const {
  auto out = arrows_from(x);
  auto lo = std::lower_bound(out.begin(), out.end(), y,
                             [this](Vertex a, Vertex t) { return data_.tgt[a] < t; });
  auto hi = std::upper_bound(lo, out.end(), y,
                             [this](Vertex t, Vertex a) { return t < data_.tgt[a]; });
  return {out.data() + (lo - out.begin()), static_cast<std::size_t>(hi - lo)};
}

bool operator==(const Groupoid& g, const Groupoid& h) {
  const GroupoidData& a = g.data_;
  const GroupoidData& b = h.data_;
  return *a.objects == *b.objects && *a.arrows == *b.arrows && a.src == b.src &&
         a.tgt == b.tgt && a.unit == b.unit && a.inv == b.inv && a.comp == b.comp;
}

namespace {

class ViolationSink {
 public:
  explicit ViolationSink(std::size_t limit) : limit_(limit) {}
  bool full() const { return out_.size() >= limit_; }
  void add(const char* kind, std::vector<Vertex> witness, std::string detail) {
    if (!full()) out_.push_back({kind, std::move(witness), std::move(detail)});
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::size_t limit_;
  std::vector<Violation> out_;
};

void check_map(ViolationSink& sink, const CombSpace& dom, const CombSpace& cod,
               const std::vector<Vertex>& map, const char* name) {
  auto r = check_continuous(dom, cod, map);
  if (!r.ok) {
    sink.add(axiom::kContinuity, {r.witness->a, r.witness->b},
             std::string(name) + " tears the edge {" + dom.label(r.witness->a) +
                 "," + dom.label(r.witness->b) + "}");
  }
}

}  // namespace

std::vector<Violation> validate_groupoid(const Groupoid& g, std::size_t limit) {
  ViolationSink sink(limit);
  const CombSpace& obj = g.objects();
  const CombSpace& arr = g.arrows();
  auto name = [&arr](Vertex a) { return "'" + arr.label(a) + "'"; };

  for (Vertex x = 0; x < g.object_count() && !sink.full(); ++x) {
    Vertex u = g.unit(x);
    if (g.src(u) != x || g.tgt(u) != x) {
      sink.add(axiom::kUnitEndpoints, {u},
               "unit of '" + obj.label(x) + "' is not a loop at it");
    }
  }

  for (const CompEntry& e : g.comp_entries()) {
    if (sink.full()) break;
    if (g.tgt(e.first) != g.src(e.second)) {
      sink.add(axiom::kCompositionDomain, {e.first, e.second},
               "comp defined on non-composable pair " + name(e.first) + ", " +
                   name(e.second));
    } else if (g.src(e.result) != g.src(e.first) || g.tgt(e.result) != g.tgt(e.second)) {
      sink.add(axiom::kCompositionEndpoints, {e.first, e.second, e.result},
               "composite " + name(e.result) + " has the wrong endpoints");
    }
  }
  for (Vertex a = 0; a < g.arrow_count() && !sink.full(); ++a) {
    for (Vertex b : g.arrows_from(g.tgt(a))) {
      if (!g.comp(a, b)) {
        sink.add(axiom::kCompositionDomain, {a, b},
                 "no composite for " + name(a) + ", " + name(b));
        break;
      }
    }
  }

  for (Vertex a = 0; a < g.arrow_count() && !sink.full(); ++a) {
    auto right = g.comp(a, g.unit(g.tgt(a)));
    auto left = g.comp(g.unit(g.src(a)), a);
    if ((right && *right != a) || (left && *left != a)) {
      sink.add(axiom::kIdentity, {a}, "unit does not act trivially on " + name(a));
    }
  }

  for (Vertex a = 0; a < g.arrow_count() && !sink.full(); ++a) {
    Vertex i = g.inv(a);
    bool ok = g.src(i) == g.tgt(a) && g.tgt(i) == g.src(a);
    if (ok) {
      auto ai = g.comp(a, i);
      auto ia = g.comp(i, a);
      ok = ai && ia && *ai == g.unit(g.src(a)) && *ia == g.unit(g.tgt(a));
    }
    if (!ok) {
      sink.add(axiom::kInverse, {a, i}, name(i) + " is not inverse to " + name(a));
    }
  }

  for (const CompEntry& e : g.comp_entries()) {
    if (sink.full()) break;
    if (g.tgt(e.first) != g.src(e.second)) continue;
    for (Vertex c : g.arrows_from(g.tgt(e.second))) {
      auto bc = g.comp(e.second, c);
      auto left = g.comp(e.result, c);
      if (!bc || !left) continue;
      auto right = g.comp(e.first, *bc);
      if (right && *right != *left) {
        sink.add(axiom::kAssociativity, {e.first, e.second, c},
                 "composites of " + name(e.first) + ", " + name(e.second) + ", " +
                     name(c) + " disagree");
        break;
      }
    }
  }

  check_map(sink, arr, obj, g.data().src, "src");
  check_map(sink, arr, obj, g.data().tgt, "tgt");
  check_map(sink, obj, arr, g.data().unit, "unit");
  check_map(sink, arr, arr, g.data().inv, "inv");

  // comp must be continuous on the fiber product of tgt and src.
  for (const CompEntry& e : g.comp_entries()) {
    if (sink.full()) break;
    bool torn = false;
    auto visit = [&](Vertex a2) {
      auto row = g.comp_row(a2);
      auto check = [&](Vertex b2) {
        if (a2 == e.first && b2 == e.second) return;
        auto r = g.comp(a2, b2);
        if (r && !arr.near(*r, e.result) && !torn) {
          torn = true;
          sink.add(axiom::kContinuity, {e.first, e.second, a2, b2},
                   "comp tears the pair (" + name(e.first) + "," + name(e.second) +
                       ") from (" + name(a2) + "," + name(b2) + ")");
        }
      };
      if (row.empty()) return;
      check(e.second);
      for (Vertex b2 : arr.neighbors(e.second)) check(b2);
    };
    visit(e.first);
    for (Vertex a2 : arr.neighbors(e.first)) visit(a2);
  }
  return sink.take();
}

std::string IsotropyLabel::to_string() const {
  std::ostringstream os;
  os << order << ":[";
  for (std::size_t i = 0; i < element_orders.size(); ++i) {
    os << (i ? "," : "") << element_orders[i];
  }
  os << "]";
  return os.str();
}

IsotropyGroup isotropy_group(const Groupoid& g, Vertex x) {
  IsotropyGroup out;
  out.base_point = x;
  auto loops = g.loops(x);
  out.elements.assign(loops.begin(), loops.end());
  std::sort(out.elements.begin(), out.elements.end());
  const std::size_t n = out.elements.size();
  auto index = [&out, n](Vertex a) {
    auto it = std::lower_bound(out.elements.begin(), out.elements.end(), a);
    if (it == out.elements.end() || *it != a) return n;
    return static_cast<std::size_t>(it - out.elements.begin());
  };
  out.identity = index(g.unit(x));
  out.table.assign(n, std::vector<std::size_t>(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto r = g.comp(out.elements[i], out.elements[j]);
      if (r) out.table[i][j] = index(*r);
    }
  }
  return out;
}

FiniteGroup IsotropyGroup::as_group(const Groupoid& g) const {
  std::vector<std::string> names;
  for (Vertex a : elements) names.push_back(g.arrows().label(a));
  // The loop table is written "first, then second"; transpose so that
  // mul(a, b) reads as a after b.
  std::vector<std::vector<std::size_t>> t(table.size(), std::vector<std::size_t>(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) t[i][j] = table[j][i];
  }
  return FiniteGroup(std::move(names), std::move(t));
}

IsotropyLabel IsotropyGroup::label() const {
  IsotropyLabel out;
  const std::size_t n = elements.size();
  out.order = n;
  out.element_orders.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 1;
    std::size_t p = i;
    while (p != identity && p < n && k <= n) {
      p = table[p][i];
      ++k;
    }
    out.element_orders.push_back(p == identity ? k : 0);
  }
  std::sort(out.element_orders.begin(), out.element_orders.end());
  return out;
}

QuotientSpace quotient(const Groupoid& g) {
  const std::size_t n = g.object_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex a = 0; a < g.arrow_count(); ++a) {
    Vertex s = find(g.src(a)), t = find(g.tgt(a));
    if (s != t) parent[std::max(s, t)] = std::min(s, t);
  }
  QuotientSpace out;
  out.projection.assign(n, 0);
  std::vector<std::int64_t> orbit_of_root(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    Vertex r = find(x);
    if (orbit_of_root[r] < 0) {
      orbit_of_root[r] = static_cast<std::int64_t>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.projection[x] = static_cast<Vertex>(orbit_of_root[r]);
    out.orbits[out.projection[x]].push_back(x);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.objects().edges()) {
    Vertex p = out.projection[e.a], q = out.projection[e.b];
    if (p != q) edges.push_back({std::min(p, q), std::max(p, q)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> labels;
  for (const auto& orbit : out.orbits) {
    labels.push_back("[" + g.objects().label(orbit.front()) + "]");
    IsotropyLabel first = isotropy_group(g, orbit.front()).label();
    for (Vertex x : orbit) {
      if (x != orbit.front() && isotropy_group(g, x).label() != first) {
        out.representative_independent = false;
      }
    }
    out.labels.push_back(std::move(first));
  }
  out.orbit_graph = make_space(out.orbits.size(), edges, std::move(labels));
  return out;
}

EtaleResult check_etale(const Groupoid& g) {
  const CombSpace& arr = g.arrows();
  const CombSpace& obj = g.objects();
  for (Vertex a = 0; a < g.arrow_count(); ++a) {
    for (int which = 0; which < 2; ++which) {
      auto f = [&](Vertex b) { return which == 0 ? g.src(b) : g.tgt(b); };
      std::vector<Vertex> image{f(a)};
      bool ok = true;
      for (Vertex b : arr.neighbors(a)) {
        Vertex y = f(b);
        if (!obj.near(f(a), y)) ok = false;
        image.push_back(y);
      }
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) ok = false;
      if (!ok) return {false, a, which == 0 ? "src" : "tgt"};
    }
  }
  return {};
}

namespace {

// The sheets over v, or nullopt if v does not qualify.
std::optional<std::vector<std::vector<Vertex>>> sheets_over(
    const Groupoid& g, Vertex x, const std::vector<Vertex>& v) {
  const CombSpace& arr = g.arrows();
  const CombSpace& obj = g.objects();
  std::vector<bool> in_v(g.object_count(), false);
  for (Vertex y : v) in_v[y] = true;
  auto inside = [&](Vertex a) { return in_v[g.src(a)] && in_v[g.tgt(a)]; };

  std::vector<std::int64_t> sheet_of(g.arrow_count(), -1);
  std::vector<std::vector<Vertex>> sheets;
  auto loops = g.loops(x);
  std::vector<Vertex> sorted_loops(loops.begin(), loops.end());
  std::sort(sorted_loops.begin(), sorted_loops.end());
  for (Vertex l : sorted_loops) {
    if (sheet_of[l] >= 0) return std::nullopt;
    std::vector<Vertex> sheet;
    std::deque<Vertex> queue{l};
    sheet_of[l] = static_cast<std::int64_t>(sheets.size());
    while (!queue.empty()) {
      Vertex a = queue.front();
      queue.pop_front();
      sheet.push_back(a);
      for (Vertex b : arr.neighbors(a)) {
        if (sheet_of[b] < 0 && inside(b)) {
          sheet_of[b] = static_cast<std::int64_t>(sheets.size());
          queue.push_back(b);
        }
      }
    }
    std::sort(sheet.begin(), sheet.end());
    if (sheet.size() != v.size()) return std::nullopt;
    for (int which = 0; which < 2; ++which) {
      auto f = [&](Vertex b) { return which == 0 ? g.src(b) : g.tgt(b); };
      std::vector<Vertex> image;
      std::size_t edges = 0;
      for (Vertex a : sheet) {
        image.push_back(f(a));
        for (Vertex b : arr.neighbors(a)) {
          if (a < b && sheet_of[b] == sheet_of[a]) {
            ++edges;
            if (!obj.adjacent(f(a), f(b))) return std::nullopt;
          }
        }
      }
      std::sort(image.begin(), image.end());
      if (image != v) return std::nullopt;
      std::size_t v_edges = 0;
      for (Vertex y : v) {
        for (Vertex z : obj.neighbors(y)) v_edges += (y < z && in_v[z]) ? 1 : 0;
      }
      if (edges != v_edges) return std::nullopt;
    }
    sheets.push_back(std::move(sheet));
  }
  for (Vertex y : v) {
    for (Vertex a : g.arrows_from(y)) {
      if (in_v[g.tgt(a)] && sheet_of[a] < 0) return std::nullopt;
    }
  }
  return sheets;
}

}  // namespace

LocalStructure orbit_local_structure(const Groupoid& g, Vertex x) {
  EtaleResult etale = check_etale(g);
  if (!etale.ok) {
    throw Error(ErrorCode::kNotEtale,
                etale.map + " is not locally injective at '" +
                    g.arrows().label(*etale.witness) + "'");
  }
  LocalStructure out;
  out.base = x;
  out.neighborhood = {x};
  auto base = sheets_over(g, x, out.neighborhood);
  if (!base) {
    throw Error(ErrorCode::kNotEtale, "loops at the base do not form a group");
  }
  out.sheets = std::move(*base);
  for (std::size_t r = 1;; ++r) {
    std::vector<Vertex> v = ball(g.objects(), x, r);
    if (v.size() == out.neighborhood.size()) break;
    auto sheets = sheets_over(g, x, v);
    if (!sheets) break;
    out.radius = r;
    out.neighborhood = std::move(v);
    out.sheets = std::move(*sheets);
  }
  return out;
}

Groupoid unit_groupoid(SpacePtr space) {
  GroupoidData d;
  d.objects = space;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < space->size(); ++v) labels.push_back("1:" + space->label(v));
  d.arrows = make_space(space->size(), space->edges(), std::move(labels));
  for (Vertex v = 0; v < space->size(); ++v) {
    d.src.push_back(v);
    d.tgt.push_back(v);
    d.unit.push_back(v);
    d.inv.push_back(v);
    d.comp.push_back({v, v, v});
  }
  return Groupoid(std::move(d));
}

Groupoid full_subgroupoid(const Groupoid& g, const std::vector<Vertex>& objects) {
  constexpr Vertex kOut = static_cast<Vertex>(-1);
  std::vector<Vertex> obj_index(g.object_count(), kOut);
  for (Vertex i = 0; i < objects.size(); ++i) obj_index.at(objects[i]) = i;
  std::vector<Vertex> arrows;
  std::vector<Vertex> arr_index(g.arrow_count(), kOut);
  for (Vertex a = 0; a < g.arrow_count(); ++a) {
    if (obj_index[g.src(a)] != kOut && obj_index[g.tgt(a)] != kOut) {
      arr_index[a] = static_cast<Vertex>(arrows.size());
      arrows.push_back(a);
    }
  }
  GroupoidData d;
  d.objects = std::make_shared<const CombSpace>(induced_subgraph(g.objects(), objects));
  d.arrows = std::make_shared<const CombSpace>(induced_subgraph(g.arrows(), arrows));
  for (Vertex a : arrows) {
    d.src.push_back(obj_index[g.src(a)]);
    d.tgt.push_back(obj_index[g.tgt(a)]);
    d.inv.push_back(arr_index[g.inv(a)]);
  }
  for (Vertex x : objects) d.unit.push_back(arr_index[g.unit(x)]);
  for (const CompEntry& e : g.comp_entries()) {
    if (arr_index[e.first] != kOut && arr_index[e.second] != kOut) {
      d.comp.push_back({arr_index[e.first], arr_index[e.second], arr_index[e.result]});
    }
  }
  return Groupoid(std::move(d));
}

namespace {

SpacePtr union_space(const CombSpace& x, const CombSpace& y) {
  std::vector<Edge> edges = x.edges();
  const Vertex off = static_cast<Vertex>(x.size());
  for (const Edge& e : y.edges()) edges.push_back({e.a + off, e.b + off});
  std::vector<std::string> labels;
  for (Vertex v = 0; v < x.size(); ++v) labels.push_back("0." + x.label(v));
  for (Vertex v = 0; v < y.size(); ++v) labels.push_back("1." + y.label(v));
  return make_space(x.size() + y.size(), edges, std::move(labels));
}

}  // namespace

Groupoid disjoint_union(const Groupoid& g, const Groupoid& h) {
  GroupoidData d;
  d.objects = union_space(g.objects(), h.objects());
  d.arrows = union_space(g.arrows(), h.arrows());
  const Vertex o0 = static_cast<Vertex>(g.object_count());
  const Vertex o1 = static_cast<Vertex>(g.arrow_count());
  auto append = [](std::vector<Vertex>& out, const std::vector<Vertex>& in, Vertex off) {
    for (Vertex v : in) out.push_back(v + off);
  };
  append(d.src, g.data().src, 0);
  append(d.src, h.data().src, o0);
  append(d.tgt, g.data().tgt, 0);
  append(d.tgt, h.data().tgt, o0);
  append(d.unit, g.data().unit, 0);
  append(d.unit, h.data().unit, o1);
  append(d.inv, g.data().inv, 0);
  append(d.inv, h.data().inv, o1);
  d.comp = g.comp_entries();
  for (const CompEntry& e : h.comp_entries()) {
    d.comp.push_back({e.first + o1, e.second + o1, e.result + o1});
  }
  return Groupoid(std::move(d));
}

}  // namespace orbi
