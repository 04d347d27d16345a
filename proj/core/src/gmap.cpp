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

#include "orbi/gmap.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "orbi/error.hpp"

namespace orbi {

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

// Placement order shared by the functor and transformation searches: objects
// breadth-first along edges and arrows, each object followed by the arrows
// that just became fully placed.
struct Plan {
  enum class Anchor { kNone, kEdge, kArrowOut, kArrowIn };
  struct Step {
    bool object = true;
    Vertex id = 0;
    Anchor anchor = Anchor::kNone;
    Vertex anchor_id = 0;
  };
  std::vector<Step> steps;
  std::vector<std::vector<std::size_t>> comp_touch;  // per arrow
  std::vector<Vertex> unit_of;                       // per arrow, kNone if not a unit

  explicit Plan(const Groupoid& g) : comp_touch(g.arrow_count()), unit_of(g.arrow_count(), kNone) {
    const std::size_t n0 = g.object_count();
    for (Vertex x = 0; x < n0; ++x) unit_of[g.unit(x)] = x;
    const auto& entries = g.comp_entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const CompEntry& e = entries[i];
      comp_touch[e.first].push_back(i);
      if (e.second != e.first) comp_touch[e.second].push_back(i);
      if (e.result != e.first && e.result != e.second) comp_touch[e.result].push_back(i);
    }
    std::vector<bool> placed(n0, false), queued(n0, false), arrow_done(g.arrow_count(), false);
    for (Vertex start = 0; start < n0; ++start) {
      if (queued[start]) continue;
      std::deque<Vertex> queue{start};
      queued[start] = true;
      while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        Step s{true, x, Anchor::kNone, 0};
        for (Vertex y : g.objects().neighbors(x)) {
          if (placed[y]) {
            s.anchor = Anchor::kEdge;
            s.anchor_id = y;
            break;
          }
        }
        if (s.anchor == Anchor::kNone) {
          for (Vertex a : g.arrows_to(x)) {
            if (placed[g.src(a)]) {
              s.anchor = Anchor::kArrowOut;
              s.anchor_id = a;
              break;
            }
          }
        }
        if (s.anchor == Anchor::kNone) {
          for (Vertex a : g.arrows_from(x)) {
            if (placed[g.tgt(a)]) {
              s.anchor = Anchor::kArrowIn;
              s.anchor_id = a;
              break;
            }
          }
        }
        steps.push_back(s);
        placed[x] = true;
        std::vector<Vertex> ready;
        for (Vertex a : g.arrows_from(x)) {
          if (placed[g.tgt(a)] && !arrow_done[a]) ready.push_back(a);
        }
        for (Vertex a : g.arrows_to(x)) {
          if (placed[g.src(a)] && !arrow_done[a]) ready.push_back(a);
        }
        std::sort(ready.begin(), ready.end(), [this](Vertex a, Vertex b) {
          return std::make_pair(unit_of[a] == kNone, a) < std::make_pair(unit_of[b] == kNone, b);
        });
        ready.erase(std::unique(ready.begin(), ready.end()), ready.end());
        for (Vertex a : ready) {
          arrow_done[a] = true;
          steps.push_back({false, a, Anchor::kNone, 0});
        }
        auto visit = [&](Vertex y) {
          if (!queued[y]) {
            queued[y] = true;
            queue.push_back(y);
          }
        };
        for (Vertex y : g.objects().neighbors(x)) visit(y);
        for (Vertex a : g.arrows_from(x)) visit(g.tgt(a));
        for (Vertex a : g.arrows_to(x)) visit(g.src(a));
      }
    }
  }
};

class HomSearch {
 public:
  HomSearch(const Groupoid& g, const Groupoid& h, const Plan& plan,
            const HomConstraints& constraints)
      : g_(g), h_(h), plan_(plan), pin0_(g.object_count(), kNone),
        pin1_(g.arrow_count(), kNone), f0_(g.object_count(), kNone),
        f1_(g.arrow_count(), kNone) {
    for (auto [x, y] : constraints.objects) {
      if (x >= g.object_count() || y >= h.object_count()) {
        throw Error(ErrorCode::kUndefinedVertex, "object constraint out of range");
      }
      pin0_[x] = y;
    }
    for (auto [a, b] : constraints.arrows) {
      if (a >= g.arrow_count() || b >= h.arrow_count()) {
        throw Error(ErrorCode::kUndefinedVertex, "arrow constraint out of range");
      }
      pin1_[a] = b;
    }
  }

  std::vector<Vertex> candidates(std::size_t depth) const {
    const Plan::Step& s = plan_.steps[depth];
    std::vector<Vertex> out;
    if (s.object) {
      if (pin0_[s.id] != kNone) return {pin0_[s.id]};
      switch (s.anchor) {
        case Plan::Anchor::kEdge: {
          Vertex y = f0_[s.anchor_id];
          out.push_back(y);
          out.insert(out.end(), h_.objects().neighbors(y).begin(), h_.objects().neighbors(y).end());
          break;
        }
        case Plan::Anchor::kArrowOut:
          for (Vertex b : h_.arrows_from(f0_[g_.src(s.anchor_id)])) out.push_back(h_.tgt(b));
          break;
        case Plan::Anchor::kArrowIn:
          for (Vertex b : h_.arrows_to(f0_[g_.tgt(s.anchor_id)])) out.push_back(h_.src(b));
          break;
        case Plan::Anchor::kNone:
          for (Vertex y = 0; y < h_.object_count(); ++y) out.push_back(y);
          break;
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    Vertex a = s.id;
    if (plan_.unit_of[a] != kNone) return {h_.unit(f0_[plan_.unit_of[a]])};
    auto hom = h_.arrows_between(f0_[g_.src(a)], f0_[g_.tgt(a)]);
    out.assign(hom.begin(), hom.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool object_ok(Vertex x, Vertex y) const {
    if (pin0_[x] != kNone && pin0_[x] != y) return false;
    for (Vertex z : g_.objects().neighbors(x)) {
      if (f0_[z] != kNone && !h_.objects().near(y, f0_[z])) return false;
    }
    return true;
  }

  bool arrow_ok(Vertex a, Vertex b) const {
    if (pin1_[a] != kNone && pin1_[a] != b) return false;
    if (h_.src(b) != f0_[g_.src(a)] || h_.tgt(b) != f0_[g_.tgt(a)]) return false;
    for (Vertex c : g_.arrows().neighbors(a)) {
      if (f1_[c] != kNone && !h_.arrows().near(b, f1_[c])) return false;
    }
    Vertex ia = g_.inv(a);
    if (ia == a && h_.inv(b) != b) return false;
    if (ia != a && f1_[ia] != kNone && f1_[ia] != h_.inv(b)) return false;
    const auto& entries = g_.comp_entries();
    auto image = [&](Vertex v) { return v == a ? b : f1_[v]; };
    for (std::size_t i : plan_.comp_touch[a]) {
      const CompEntry& e = entries[i];
      Vertex p = image(e.first), q = image(e.second), r = image(e.result);
      if (p == kNone || q == kNone || r == kNone) continue;
      auto hr = h_.comp(p, q);
      if (!hr || *hr != r) return false;
    }
    return true;
  }

  // Emit returns false to stop the search; run then returns false too.
  template <typename Emit>
  bool run(std::size_t depth, Emit& emit) {
    if (depth == plan_.steps.size()) return emit(f0_, f1_);
    const Plan::Step& s = plan_.steps[depth];
    for (Vertex c : candidates(depth)) {
      if (!descend(depth, s, c, emit)) return false;
    }
    return true;
  }

  template <typename Emit>
  bool descend(std::size_t depth, const Plan::Step& s, Vertex c, Emit& emit) {
    std::vector<Vertex>& slot = s.object ? f0_ : f1_;
    if (s.object ? !object_ok(s.id, c) : !arrow_ok(s.id, c)) return true;
    slot[s.id] = c;
    bool more = run(depth + 1, emit);
    slot[s.id] = kNone;
    return more;
  }

 private:
  const Groupoid& g_;
  const Groupoid& h_;
  const Plan& plan_;
  std::vector<Vertex> pin0_;
  std::vector<Vertex> pin1_;
  std::vector<Vertex> f0_;
  std::vector<Vertex> f1_;
};

bool functor_less(const Homomorphism& a, const Homomorphism& b) {
  return std::tie(a.f1, a.f0) < std::tie(b.f1, b.f0);
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const GroupoidPtr& g,
                                                  const GroupoidPtr& h,
                                                  const HomConstraints& constraints,
                                                  unsigned threads) {
  Plan plan(*g);
  std::vector<Homomorphism> out;
  auto collect = [&](std::vector<Homomorphism>& sink) {
    return [&sink, &g, &h](const std::vector<Vertex>& f0, const std::vector<Vertex>& f1) {
      sink.push_back({g, h, f0, f1});
      return true;
    };
  };
  if (threads <= 1 || plan.steps.empty()) {
    HomSearch search(*g, *h, plan, constraints);
    auto emit = collect(out);
    search.run(0, emit);
  } else {
    HomSearch probe(*g, *h, plan, constraints);
    const std::vector<Vertex> first = probe.candidates(0);
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<Homomorphism>> parts(threads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        HomSearch search(*g, *h, plan, constraints);
        auto emit = collect(parts[t]);
        for (std::size_t i = next++; i < first.size(); i = next++) {
          search.descend(0, plan.steps[0], first[i], emit);
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts) {
      out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
  }
  std::sort(out.begin(), out.end(), functor_less);
  return out;
}

bool for_each_homomorphism(const GroupoidPtr& g, const GroupoidPtr& h,
                           const HomConstraints& constraints,
                           const std::function<bool(const Homomorphism&)>& visit) {
  Plan plan(*g);
  HomSearch search(*g, *h, plan, constraints);
  auto emit = [&](const std::vector<Vertex>& f0, const std::vector<Vertex>& f1) {
    return visit(Homomorphism{g, h, f0, f1});
  };
  return search.run(0, emit);
}

std::vector<NatTrans> enumerate_nat_trans(const Homomorphism& f, const Homomorphism& f2) {
  if (f.source != f2.source || f.target != f2.target) {
    if (!(*f.source == *f2.source) || !(*f.target == *f2.target)) {
      throw Error(ErrorCode::kCodomainMismatch, "functors do not share source and target");
    }
  }
  const Groupoid& g = *f.source;
  const Groupoid& h = *f.target;
  Plan plan(g);
  std::vector<Vertex> objects;
  for (const auto& s : plan.steps) {
    if (s.object) objects.push_back(s.id);
  }
  std::vector<Vertex> alpha(g.object_count(), kNone);
  std::vector<NatTrans> out;
  std::function<void(std::size_t)> run = [&](std::size_t depth) {
    if (depth == objects.size()) {
      out.push_back({f, f2, alpha});
      return;
    }
    Vertex x = objects[depth];
    for (Vertex c : h.arrows_between(f.f0[x], f2.f0[x])) {
      bool ok = true;
      for (Vertex z : g.objects().neighbors(x)) {
        if (alpha[z] != kNone && !h.arrows().near(c, alpha[z])) {
          ok = false;
          break;
        }
      }
      alpha[x] = c;
      auto natural = [&](Vertex k) {
        Vertex s = alpha[g.src(k)], t = alpha[g.tgt(k)];
        if (s == kNone || t == kNone) return true;
        auto top = h.comp(s, f2.f1[k]);
        auto bottom = h.comp(f.f1[k], t);
        return top && bottom && *top == *bottom;
      };
      for (auto it = g.arrows_from(x).begin(); ok && it != g.arrows_from(x).end(); ++it) {
        ok = natural(*it);
      }
      for (auto it = g.arrows_to(x).begin(); ok && it != g.arrows_to(x).end(); ++it) {
        ok = natural(*it);
      }
      if (ok) run(depth + 1);
      alpha[x] = kNone;
    }
  };
  run(0);
  std::sort(out.begin(), out.end(),
            [](const NatTrans& a, const NatTrans& b) { return a.alpha < b.alpha; });
  return out;
}

NatTrans MappingGroupoid::transformation(Vertex arrow) const {
  const Arrow& a = transformations.at(arrow);
  return {functors[a.from], functors[a.to], a.alpha};
}

bool is_identity_type(const Homomorphism& f) {
  const Groupoid& h = *f.target;
  return std::all_of(f.f1.begin(), f.f1.end(),
                     [&h](Vertex b) { return h.src(b) == h.tgt(b) && h.unit(h.src(b)) == b; });
}

namespace {

bool pointwise_near(const CombSpace& space, const std::vector<Vertex>& a,
                    const std::vector<Vertex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!space.near(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

MappingGroupoid build_gmap(const GroupoidPtr& g, const GroupoidPtr& h, unsigned threads) {
  MappingGroupoid m;
  m.source = g;
  m.target = h;
  m.functors = enumerate_homomorphisms(g, h, {}, threads);
  const std::size_t n0 = m.functors.size();

  // Functors grouped by the image of the first object, to find candidate
  // endpoints of transformations.
  std::map<Vertex, std::vector<Vertex>> by_first;
  for (Vertex i = 0; i < n0; ++i) {
    by_first[g->object_count() ? m.functors[i].f0[0] : 0].push_back(i);
  }
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> between;
  for (Vertex i = 0; i < n0; ++i) {
    std::set<Vertex> targets;
    if (g->object_count() == 0) {
      targets.insert(i);
    } else {
      for (Vertex b : h->arrows_from(m.functors[i].f0[0])) {
        for (Vertex j : by_first[h->tgt(b)]) targets.insert(j);
      }
    }
    for (Vertex j : targets) {
      for (NatTrans& t : enumerate_nat_trans(m.functors[i], m.functors[j])) {
        between[{i, j}].push_back(static_cast<Vertex>(m.transformations.size()));
        m.transformations.push_back({i, j, std::move(t.alpha)});
      }
    }
  }
  const std::size_t n1 = m.transformations.size();
  auto lookup = [&](Vertex i, Vertex j, const std::vector<Vertex>& alpha) -> Vertex {
    auto it = between.find({i, j});
    if (it != between.end()) {
      for (Vertex a : it->second) {
        if (m.transformations[a].alpha == alpha) return a;
      }
    }
    throw Error(ErrorCode::kCompositionNotClosed, "transformation missing from the mapping groupoid");
  };

  // Functor adjacency, bucketed by the image of the first arrow.
  std::vector<Edge> object_edges;
  std::vector<std::vector<Vertex>> object_nbrs(n0);
  if (g->arrow_count() == 0) {
    // Without arrows every pair of functors agrees pointwise.
    for (Vertex i = 0; i < n0; ++i) {
      for (Vertex j = i + 1; j < n0; ++j) object_edges.push_back({i, j});
    }
  } else {
    std::map<Vertex, std::vector<Vertex>> by_arrow;
    for (Vertex i = 0; i < n0; ++i) by_arrow[m.functors[i].f1[0]].push_back(i);
    for (Vertex i = 0; i < n0; ++i) {
      Vertex b = m.functors[i].f1[0];
      std::vector<Vertex> near_images{b};
      near_images.insert(near_images.end(), h->arrows().neighbors(b).begin(),
                         h->arrows().neighbors(b).end());
      for (Vertex nb : near_images) {
        auto it = by_arrow.find(nb);
        if (it == by_arrow.end()) continue;
        for (Vertex j : it->second) {
          if (j > i && pointwise_near(h->arrows(), m.functors[i].f1, m.functors[j].f1)) {
            object_edges.push_back({i, j});
          }
        }
      }
    }
  }
  std::sort(object_edges.begin(), object_edges.end());
  for (const Edge& e : object_edges) {
    object_nbrs[e.a].push_back(e.b);
    object_nbrs[e.b].push_back(e.a);
  }

  std::vector<Edge> arrow_edges;
  for (Vertex a = 0; a < n1; ++a) {
    const auto& ta = m.transformations[a];
    std::vector<Vertex> from_near{ta.from}, to_near{ta.to};
    from_near.insert(from_near.end(), object_nbrs[ta.from].begin(), object_nbrs[ta.from].end());
    to_near.insert(to_near.end(), object_nbrs[ta.to].begin(), object_nbrs[ta.to].end());
    for (Vertex i : from_near) {
      for (Vertex j : to_near) {
        auto it = between.find({i, j});
        if (it == between.end()) continue;
        for (Vertex b : it->second) {
          if (b > a && pointwise_near(h->arrows(), ta.alpha, m.transformations[b].alpha)) {
            arrow_edges.push_back({a, b});
          }
        }
      }
    }
  }
  std::sort(arrow_edges.begin(), arrow_edges.end());

  GroupoidData d;
  std::vector<std::string> object_labels, arrow_labels;
  for (Vertex i = 0; i < n0; ++i) object_labels.push_back("F" + std::to_string(i));
  for (Vertex a = 0; a < n1; ++a) arrow_labels.push_back("T" + std::to_string(a));
  d.objects = make_space(n0, object_edges, std::move(object_labels));
  d.arrows = make_space(n1, arrow_edges, std::move(arrow_labels));
  for (Vertex i = 0; i < n0; ++i) {
    std::vector<Vertex> units;
    for (Vertex y : m.functors[i].f0) units.push_back(h->unit(y));
    d.unit.push_back(lookup(i, i, units));
  }
  for (Vertex a = 0; a < n1; ++a) {
    const auto& ta = m.transformations[a];
    d.src.push_back(ta.from);
    d.tgt.push_back(ta.to);
    std::vector<Vertex> inverse;
    for (Vertex t : ta.alpha) inverse.push_back(h->inv(t));
    d.inv.push_back(lookup(ta.to, ta.from, inverse));
  }
  for (Vertex a = 0; a < n1; ++a) {
    const auto& ta = m.transformations[a];
    for (auto it = between.lower_bound({ta.to, 0});
         it != between.end() && it->first.first == ta.to; ++it) {
      for (Vertex b : it->second) {
        const auto& tb = m.transformations[b];
        std::vector<Vertex> alpha;
        for (std::size_t x = 0; x < ta.alpha.size(); ++x) {
          auto r = h->comp(ta.alpha[x], tb.alpha[x]);
          if (!r) throw Error(ErrorCode::kCompositionNotClosed, "pointwise composite missing");
          alpha.push_back(*r);
        }
        d.comp.push_back({a, b, lookup(ta.from, tb.to, alpha)});
      }
    }
  }
  m.base = share(Groupoid(std::move(d)));
  m.etale = check_etale(*m.base).ok;
  return m;
}

std::string GmapComponent::to_string() const {
  std::ostringstream os;
  os << "orbits=" << orbits.size() << " functors=" << functor_count
     << (identity_type ? " identity-type" : "") << " isotropy={";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i].to_string();
  os << "} arrow-components={";
  for (std::size_t i = 0; i < arrow_components.size(); ++i) {
    os << (i ? " " : "") << arrow_components[i];
  }
  os << "}";
  return os.str();
}

std::vector<GmapComponent> gmap_component_report(const MappingGroupoid& m) {
  QuotientSpace q = quotient(*m.base);
  auto blocks = components(*q.orbit_graph);
  auto h_comp = component_index(m.target->arrows());
  std::vector<GmapComponent> out;
  for (const auto& block : blocks) {
    GmapComponent c;
    c.orbits = block;
    c.identity_type = true;
    std::set<std::size_t> hit;
    for (Vertex o : block) {
      c.labels.push_back(q.labels[o]);
      for (Vertex f : q.orbits[o]) {
        ++c.functor_count;
        const Homomorphism& fn = m.functors[f];
        c.identity_type = c.identity_type && is_identity_type(fn);
        for (Vertex b : fn.f1) hit.insert(h_comp[b]);
      }
    }
    std::sort(c.labels.begin(), c.labels.end());
    c.arrow_components.assign(hit.begin(), hit.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace orbi
