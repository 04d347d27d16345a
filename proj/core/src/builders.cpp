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

#include "orbi/builders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "orbi/error.hpp"

namespace orbi {

Groupoid build_point_groupoid(const FiniteGroup& group) {
  GroupoidData d;
  d.objects = make_space(1, {}, {"*"});
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < group.order(); ++a) labels.push_back(group.name(a));
  d.arrows = make_space(group.order(), {}, std::move(labels));
  d.src.assign(group.order(), 0);
  d.tgt.assign(group.order(), 0);
  d.unit = {static_cast<Vertex>(group.identity())};
  for (std::size_t a = 0; a < group.order(); ++a) {
    d.inv.push_back(static_cast<Vertex>(group.inverse(a)));
    for (std::size_t b = 0; b < group.order(); ++b) {
      // a, then b
      d.comp.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b),
                        static_cast<Vertex>(group.mul(b, a))});
    }
  }
  return Groupoid(std::move(d));
}

Groupoid build_translation_groupoid(const GroupAction& action) {
  if (auto why = action_violation(action)) throw Error(ErrorCode::kInvalidAction, *why);
  const FiniteGroup& g = action.group;
  const CombSpace& x = *action.space;
  const std::size_t n = x.size();
  auto id = [n](std::size_t h, Vertex v) { return static_cast<Vertex>(h * n + v); };
  GroupoidData d;
  d.objects = action.space;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  const auto base_edges = x.edges();
  for (std::size_t h = 0; h < g.order(); ++h) {
    for (Vertex v = 0; v < n; ++v) labels.push_back(g.name(h) + ":" + x.label(v));
    for (const Edge& e : base_edges) edges.push_back({id(h, e.a), id(h, e.b)});
  }
  d.arrows = make_space(g.order() * n, edges, std::move(labels));
  for (std::size_t h = 0; h < g.order(); ++h) {
    for (Vertex v = 0; v < n; ++v) {
      Vertex hv = action.act[h][v];
      d.src.push_back(v);
      d.tgt.push_back(hv);
      d.inv.push_back(id(g.inverse(h), hv));
      for (std::size_t k = 0; k < g.order(); ++k) {
        d.comp.push_back({id(h, v), id(k, hv), id(g.mul(k, h), v)});
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) d.unit.push_back(id(g.identity(), v));
  return Groupoid(std::move(d));
}

namespace {

using Germ = std::vector<std::pair<Vertex, Vertex>>;

std::optional<Vertex> germ_at(const Germ& germ, Vertex s) {
  auto it = std::lower_bound(germ.begin(), germ.end(), std::make_pair(s, Vertex{0}));
  if (it == germ.end() || it->first != s) return std::nullopt;
  return it->second;
}

}  // namespace

Groupoid build_local_groupoid(SpacePtr objects, const std::vector<SheetFamily>& families) {
  GroupoidData d;
  d.objects = objects;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::vector<bool> identity;
  for (const SheetFamily& f : families) {
    const Vertex off = static_cast<Vertex>(d.src.size());
    if (f.labels.size() != f.points.size()) {
      throw Error(ErrorCode::kInvalidArgument, "family labels do not match its points");
    }
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      auto [s, t] = f.points[i];
      if (s >= objects->size() || t >= objects->size()) {
        throw Error(ErrorCode::kDanglingId, "family point outside the object space");
      }
      d.src.push_back(s);
      d.tgt.push_back(t);
      labels.push_back(f.labels[i]);
      identity.push_back(f.identity && s == t);
    }
    for (const Edge& e : f.edges) {
      edges.push_back({std::min(e.a, e.b) + off, std::max(e.a, e.b) + off});
    }
  }
  const std::size_t n1 = d.src.size();
  d.arrows = make_space(n1, edges, std::move(labels));
  const CombSpace& arr = *d.arrows;

  std::vector<Germ> germ(n1);
  for (Vertex a = 0; a < n1; ++a) {
    germ[a].push_back({d.src[a], d.tgt[a]});
    for (Vertex b : arr.neighbors(a)) germ[a].push_back({d.src[b], d.tgt[b]});
    std::sort(germ[a].begin(), germ[a].end());
  }
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> hom;
  std::vector<std::vector<Vertex>> out(objects->size());
  for (Vertex a = 0; a < n1; ++a) {
    hom[{d.src[a], d.tgt[a]}].push_back(a);
    out[d.src[a]].push_back(a);
  }

  d.unit.assign(objects->size(), static_cast<Vertex>(n1));
  for (Vertex a = 0; a < n1; ++a) {
    if (!identity[a]) continue;
    if (d.unit[d.src[a]] != n1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "two identity arrows at '" + objects->label(d.src[a]) + "'");
    }
    d.unit[d.src[a]] = a;
  }
  for (Vertex x = 0; x < objects->size(); ++x) {
    if (d.unit[x] == n1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no identity arrow at '" + objects->label(x) + "'");
    }
  }

  std::unordered_map<std::uint64_t, Vertex> table;
  auto key = [](Vertex a, Vertex b) { return (std::uint64_t{a} << 32) | b; };
  for (Vertex a = 0; a < n1; ++a) {
    for (Vertex b : out[d.tgt[a]]) {
      Germ composite;
      for (auto [s, t] : germ[a]) {
        if (auto t2 = germ_at(germ[b], t)) composite.push_back({s, *t2});
      }
      std::optional<Vertex> match;
      bool ambiguous = false;
      for (Vertex c : hom[{d.src[a], d.tgt[b]}]) {
        bool ok = std::all_of(composite.begin(), composite.end(), [&](auto st) {
          auto t = germ_at(germ[c], st.first);
          return t && *t == st.second;
        });
        if (!ok) continue;
        if (match) ambiguous = true;
        match = c;
      }
      if (!match || ambiguous) {
        throw Error(ErrorCode::kCompositionNotClosed,
                    std::string(match ? "ambiguous" : "no") + " composite for '" +
                        arr.label(a) + "' then '" + arr.label(b) + "'");
      }
      table.emplace(key(a, b), *match);
      d.comp.push_back({a, b, *match});
    }
  }
  for (Vertex a = 0; a < n1; ++a) {
    std::optional<Vertex> inverse;
    for (Vertex c : hom[{d.tgt[a], d.src[a]}]) {
      auto it = table.find(key(a, c));
      if (it != table.end() && it->second == d.unit[d.src[a]]) {
        inverse = c;
        break;
      }
    }
    if (!inverse) {
      throw Error(ErrorCode::kCompositionNotClosed,
                  "no inverse for '" + arr.label(a) + "'");
    }
    d.inv.push_back(*inverse);
  }
  return Groupoid(std::move(d));
}

Groupoid build_atlas_groupoid(const std::vector<Chart>& charts,
                              const std::vector<Gluing>& gluings) {
  if (charts.size() == 1 && gluings.empty()) {
    return build_translation_groupoid(charts.front().action);
  }
  std::vector<Vertex> offset;
  std::vector<Edge> object_edges;
  std::vector<std::string> object_labels;
  for (const Chart& c : charts) {
    if (auto why = action_violation(c.action)) {
      throw Error(ErrorCode::kInvalidAction, c.name + ": " + *why);
    }
    const Vertex off = static_cast<Vertex>(object_labels.size());
    offset.push_back(off);
    for (const Edge& e : c.action.space->edges()) object_edges.push_back({e.a + off, e.b + off});
    for (Vertex v = 0; v < c.action.space->size(); ++v) {
      object_labels.push_back(c.name + ":" + c.action.space->label(v));
    }
  }
  SpacePtr objects = make_space(object_labels.size(), object_edges, object_labels);

  std::vector<SheetFamily> families;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const GroupAction& a = charts[i].action;
    const CombSpace& x = *a.space;
    for (std::size_t g = 0; g < a.group.order(); ++g) {
      SheetFamily f;
      f.identity = g == a.group.identity();
      for (Vertex v = 0; v < x.size(); ++v) {
        f.points.push_back({offset[i] + v, offset[i] + a.act[g][v]});
        f.labels.push_back(charts[i].name + ":" + a.group.name(g) + ":" + x.label(v));
      }
      f.edges = x.edges();
      families.push_back(std::move(f));
    }
  }

  for (const Gluing& gl : gluings) {
    if (gl.from >= charts.size() || gl.to >= charts.size() || gl.from == gl.to) {
      throw Error(ErrorCode::kInvalidArgument, "gluing names an unknown chart pair");
    }
    const Chart& ci = charts[gl.from];
    const Chart& cj = charts[gl.to];
    const CombSpace& xi = *ci.action.space;
    const CombSpace& xj = *cj.action.space;
    const FiniteGroup& gi = ci.action.group;
    const FiniteGroup& gj = cj.action.group;
    const std::string tag = ci.name + ">" + cj.name;

    std::set<Vertex> seen_i, seen_j;
    for (auto [a, b] : gl.overlap) {
      if (a >= xi.size() || b >= xj.size()) {
        throw Error(ErrorCode::kGlueNotIso, tag + ": overlap vertex out of range");
      }
      if (!seen_i.insert(a).second || !seen_j.insert(b).second) {
        throw Error(ErrorCode::kGlueNotIso, tag + ": overlap map is not injective");
      }
    }
    std::vector<Edge> overlap_edges;
    for (std::size_t k = 0; k < gl.overlap.size(); ++k) {
      for (std::size_t l = k + 1; l < gl.overlap.size(); ++l) {
        bool ei = xi.adjacent(gl.overlap[k].first, gl.overlap[l].first);
        bool ej = xj.adjacent(gl.overlap[k].second, gl.overlap[l].second);
        if (ei != ej) {
          throw Error(ErrorCode::kGlueNotIso,
                      tag + ": overlap is not a subgraph isomorphism at '" +
                          xi.label(gl.overlap[k].first) + "','" +
                          xi.label(gl.overlap[l].first) + "'");
        }
        if (ei) overlap_edges.push_back({static_cast<Vertex>(k), static_cast<Vertex>(l)});
      }
    }

    std::set<std::pair<std::size_t, std::size_t>> twist(gl.twist.begin(), gl.twist.end());
    twist.insert({gi.identity(), gj.identity()});
    std::set<std::pair<Vertex, Vertex>> pair_set(gl.overlap.begin(), gl.overlap.end());
    for (auto [s, t] : twist) {
      if (s >= gi.order() || t >= gj.order()) {
        throw Error(ErrorCode::kInvalidArgument, tag + ": twist element out of range");
      }
      for (auto [s2, t2] : twist) {
        if (!twist.count({gi.mul(s, s2), gj.mul(t, t2)})) {
          throw Error(ErrorCode::kInvalidArgument, tag + ": twist is not a subgroup");
        }
      }
      for (auto [a, b] : gl.overlap) {
        if (!pair_set.count({ci.action.act[s][a], cj.action.act[t][b]})) {
          throw Error(ErrorCode::kGlueNotIso, tag + ": twist does not preserve the overlap");
        }
      }
    }

    std::vector<std::vector<bool>> done(gi.order(), std::vector<bool>(gj.order(), false));
    std::set<std::vector<std::pair<Vertex, Vertex>>> copies;
    for (std::size_t g = 0; g < gi.order(); ++g) {
      for (std::size_t h = 0; h < gj.order(); ++h) {
        if (done[g][h]) continue;
        for (auto [s, t] : twist) done[gi.mul(g, s)][gj.mul(h, t)] = true;
        SheetFamily fwd, back;
        const std::string coset = gi.name(g) + "," + gj.name(h);
        for (auto [a, b] : gl.overlap) {
          Vertex ga = offset[gl.from] + ci.action.act[g][a];
          Vertex hb = offset[gl.to] + cj.action.act[h][b];
          fwd.points.push_back({ga, hb});
          back.points.push_back({hb, ga});
          fwd.labels.push_back(tag + ":" + coset + ":" + xi.label(a));
          back.labels.push_back(ci.name + "<" + cj.name + ":" + coset + ":" + xi.label(a));
        }
        auto key = fwd.points;
        std::sort(key.begin(), key.end());
        if (!copies.insert(key).second) {
          throw Error(ErrorCode::kGlueNotIso,
                      tag + ": twist subgroup leaves two identical overlap copies");
        }
        fwd.edges = overlap_edges;
        back.edges = overlap_edges;
        families.push_back(std::move(fwd));
        families.push_back(std::move(back));
      }
    }
  }
  return build_local_groupoid(objects, families);
}

IntervalCover build_interval_cover(const std::vector<Interval>& charts) {
  if (charts.empty()) throw Error(ErrorCode::kBadOverlap, "no charts");
  IntervalCover out;
  out.charts = charts;
  std::size_t reach = 0;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const Interval& c = charts[i];
    if (c.first > c.last) throw Error(ErrorCode::kBadOverlap, "empty chart");
    if (i == 0 && c.first != 0) throw Error(ErrorCode::kBadOverlap, "cover must start at 0");
    if (i > 0 && (c.first < charts[i - 1].first || c.first > reach)) {
      throw Error(ErrorCode::kBadOverlap,
                  "chart " + std::to_string(i) + " does not overlap its predecessor");
    }
    reach = std::max(reach, c.last);
  }
  out.length = reach + 1;

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    out.object_at.emplace_back();
    for (std::size_t p = charts[i].first; p <= charts[i].last; ++p) {
      Vertex v = static_cast<Vertex>(labels.size());
      if (p > charts[i].first) edges.push_back({v - 1, v});
      out.object_at[i].push_back(v);
      out.chart_of.push_back(i);
      out.position_of.push_back(p);
      labels.push_back("I" + std::to_string(i) + ":" + std::to_string(p));
    }
  }
  SpacePtr objects = make_space(labels.size(), edges, labels);

  std::vector<SheetFamily> families;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    for (std::size_t j = 0; j < charts.size(); ++j) {
      std::size_t lo = std::max(charts[i].first, charts[j].first);
      std::size_t hi = std::min(charts[i].last, charts[j].last);
      if (lo > hi) continue;
      SheetFamily f;
      f.identity = i == j;
      for (std::size_t p = lo; p <= hi; ++p) {
        f.points.push_back({out.object(i, p), out.object(j, p)});
        f.labels.push_back(i == j ? "1@I" + std::to_string(i) + ":" + std::to_string(p)
                                  : "I" + std::to_string(i) + ">I" + std::to_string(j) +
                                        ":" + std::to_string(p));
        if (p > lo) {
          Vertex k = static_cast<Vertex>(p - lo);
          f.edges.push_back({k - 1, k});
        }
      }
      families.push_back(std::move(f));
    }
  }
  out.groupoid = share(build_local_groupoid(objects, families));
  return out;
}

IntervalCover build_interval_chain(std::size_t n, std::size_t overlap,
                                   std::size_t chart_length) {
  if (n == 0 || chart_length == 0) {
    throw Error(ErrorCode::kBadOverlap, "need at least one non-empty chart");
  }
  if (n > 1 && (overlap == 0 || overlap >= chart_length)) {
    throw Error(ErrorCode::kBadOverlap,
                "overlap " + std::to_string(overlap) + " does not fit charts of length " +
                    std::to_string(chart_length));
  }
  std::vector<Interval> charts;
  const std::size_t stride = chart_length - (n > 1 ? overlap : 0);
  for (std::size_t i = 0; i < n; ++i) {
    charts.push_back({i * stride, i * stride + chart_length - 1});
  }
  return build_interval_cover(charts);
}

Homomorphism refine(const IntervalCover& fine, const IntervalCover& coarse) {
  std::vector<std::size_t> target;
  for (std::size_t i = 0; i < fine.charts.size(); ++i) {
    const Interval& c = fine.charts[i];
    std::size_t found = coarse.charts.size();
    for (std::size_t j = 0; j < coarse.charts.size() && found == coarse.charts.size(); ++j) {
      if (coarse.charts[j].first <= c.first && c.last <= coarse.charts[j].last) found = j;
    }
    if (found == coarse.charts.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fine chart " + std::to_string(i) + " fits no coarse chart");
    }
    target.push_back(found);
  }
  const Groupoid& g = *fine.groupoid;
  const Groupoid& h = *coarse.groupoid;
  Homomorphism f{fine.groupoid, coarse.groupoid, {}, {}};
  for (Vertex x = 0; x < g.object_count(); ++x) {
    f.f0.push_back(coarse.object(target[fine.chart_of[x]], fine.position_of[x]));
  }
  for (Vertex a = 0; a < g.arrow_count(); ++a) {
    auto between = h.arrows_between(f.f0[g.src(a)], f.f0[g.tgt(a)]);
    if (between.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "coarse cover lacks a gluing arrow");
    }
    f.f1.push_back(between.front());
  }
  return f;
}

IntervalCover unbroken(const IntervalCover& cover) {
  return build_interval_cover({{0, cover.length - 1}});
}

}  // namespace orbi
