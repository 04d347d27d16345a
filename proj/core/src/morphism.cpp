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

#include "orbi/morphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "orbi/error.hpp"

namespace orbi {

namespace {

bool in_range(const std::vector<Vertex>& map, std::size_t size, std::size_t range) {
  if (map.size() != size) return false;
  return std::all_of(map.begin(), map.end(), [range](Vertex v) { return v < range; });
}

}  // namespace

std::vector<Violation> validate_homomorphism(const Homomorphism& f,
                                             std::size_t limit) {
  std::vector<Violation> out;
  auto add = [&](const char* kind, std::vector<Vertex> w, std::string detail) {
    if (out.size() < limit) out.push_back({kind, std::move(w), std::move(detail)});
  };
  const Groupoid& g = *f.source;
  const Groupoid& h = *f.target;
  if (!in_range(f.f0, g.object_count(), h.object_count()) ||
      !in_range(f.f1, g.arrow_count(), h.arrow_count())) {
    add(law::kShape, {}, "f0 or f1 is not a total map into the target");
    return out;
  }
  auto arrow = [&g](Vertex a) { return "'" + g.arrows().label(a) + "'"; };
  for (Vertex x = 0; x < g.object_count(); ++x) {
    if (f.f1[g.unit(x)] != h.unit(f.f0[x])) {
      add(law::kUnit, {x}, "unit of '" + g.objects().label(x) + "' is not sent to a unit");
    }
  }
  for (Vertex a = 0; a < g.arrow_count(); ++a) {
    if (h.src(f.f1[a]) != f.f0[g.src(a)]) add(law::kSource, {a}, "source of " + arrow(a));
    if (h.tgt(f.f1[a]) != f.f0[g.tgt(a)]) add(law::kTarget, {a}, "target of " + arrow(a));
  }
  for (const CompEntry& e : g.comp_entries()) {
    auto r = h.comp(f.f1[e.first], f.f1[e.second]);
    if (!r || *r != f.f1[e.result]) {
      add(law::kComposition, {e.first, e.second},
          "image of the composite of " + arrow(e.first) + ", " + arrow(e.second) +
              " is not the composite of the images");
    }
  }
  auto c0 = check_continuous(g.objects(), h.objects(), f.f0);
  if (!c0.ok) add(law::kContinuity, {c0.witness->a, c0.witness->b}, "f0 tears an edge");
  auto c1 = check_continuous(g.arrows(), h.arrows(), f.f1);
  if (!c1.ok) add(law::kContinuity, {c1.witness->a, c1.witness->b}, "f1 tears an edge");
  return out;
}

std::vector<Violation> validate_nat_trans(const NatTrans& a, std::size_t limit) {
  std::vector<Violation> out;
  auto add = [&](const char* kind, std::vector<Vertex> w, std::string detail) {
    if (out.size() < limit) out.push_back({kind, std::move(w), std::move(detail)});
  };
  const Groupoid& g = *a.from.source;
  const Groupoid& h = *a.from.target;
  if (!in_range(a.alpha, g.object_count(), h.arrow_count()) ||
      a.from.f0.size() != g.object_count() || a.to.f0.size() != g.object_count() ||
      a.from.f1.size() != g.arrow_count() || a.to.f1.size() != g.arrow_count()) {
    add(law::kShape, {}, "alpha or the functors have the wrong shape");
    return out;
  }
  for (Vertex x = 0; x < g.object_count(); ++x) {
    Vertex t = a.alpha[x];
    if (h.src(t) != a.from.f0[x] || h.tgt(t) != a.to.f0[x]) {
      add(law::kEndpoint, {x},
          "alpha('" + g.objects().label(x) + "') does not run from f0 to f'0");
    }
  }
  for (Vertex k = 0; k < g.arrow_count(); ++k) {
    Vertex x = g.src(k), y = g.tgt(k);
    auto top = h.comp(a.alpha[x], a.to.f1[k]);
    auto bottom = h.comp(a.from.f1[k], a.alpha[y]);
    if (!top || !bottom || *top != *bottom) {
      add(law::kNaturality, {k},
          "square at '" + g.arrows().label(k) + "' does not commute");
    }
  }
  auto c = check_continuous(g.objects(), h.arrows(), a.alpha);
  if (!c.ok) add(law::kContinuity, {c.witness->a, c.witness->b}, "alpha tears an edge");
  return out;
}

Homomorphism identity_homomorphism(GroupoidPtr g) {
  Homomorphism f{g, g, {}, {}};
  for (Vertex x = 0; x < g->object_count(); ++x) f.f0.push_back(x);
  for (Vertex a = 0; a < g->arrow_count(); ++a) f.f1.push_back(a);
  return f;
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (f.target != g.source && !(*f.target == *g.source)) {
    throw Error(ErrorCode::kCodomainMismatch, "homomorphisms are not composable");
  }
  Homomorphism out{f.source, g.target, {}, {}};
  for (Vertex v : f.f0) out.f0.push_back(g.f0.at(v));
  for (Vertex v : f.f1) out.f1.push_back(g.f1.at(v));
  return out;
}

NatTrans identity_transformation(const Homomorphism& f) {
  NatTrans out{f, f, {}};
  for (Vertex y : f.f0) out.alpha.push_back(f.target->unit(y));
  return out;
}

NatTrans vertical_compose(const NatTrans& a, const NatTrans& b) {
  const Groupoid& h = *a.from.target;
  NatTrans out{a.from, b.to, {}};
  for (Vertex x = 0; x < a.alpha.size(); ++x) {
    auto r = h.comp(a.alpha[x], b.alpha.at(x));
    if (!r) throw Error(ErrorCode::kCodomainMismatch, "transformations are not composable");
    out.alpha.push_back(*r);
  }
  return out;
}

NatTrans whisker(const NatTrans& a, const Homomorphism& k) {
  NatTrans out{compose(k, a.from), compose(k, a.to), {}};
  for (Vertex m : k.f0) out.alpha.push_back(a.alpha.at(m));
  return out;
}

NatTrans whisker(const Homomorphism& h, const NatTrans& a) {
  NatTrans out{compose(a.from, h), compose(a.to, h), {}};
  for (Vertex t : a.alpha) out.alpha.push_back(h.f1.at(t));
  return out;
}

EssentialEquivalence check_essential_equivalence(const Homomorphism& f) {
  const Groupoid& g = *f.source;
  const Groupoid& h = *f.target;
  EssentialEquivalence out;
  QuotientSpace q = quotient(h);
  std::vector<bool> hit(q.orbits.size(), false);
  for (Vertex y : f.f0) hit[q.projection[y]] = true;
  out.e1 = true;
  for (Vertex y = 0; y < h.object_count() && out.e1; ++y) {
    if (!hit[q.projection[y]]) {
      out.e1 = false;
      out.unreached = y;
    }
  }
  out.e2 = true;
  for (Vertex x = 0; x < g.object_count() && out.e2; ++x) {
    for (Vertex x2 = 0; x2 < g.object_count() && out.e2; ++x2) {
      auto source = g.arrows_between(x, x2);
      auto target = h.arrows_between(f.f0[x], f.f0[x2]);
      bool ok = source.size() == target.size();
      if (ok) {
        std::vector<Vertex> image;
        for (Vertex a : source) image.push_back(f.f1[a]);
        std::sort(image.begin(), image.end());
        std::vector<Vertex> expected(target.begin(), target.end());
        std::sort(expected.begin(), expected.end());
        ok = image == expected;
      }
      if (!ok) {
        out.e2 = false;
        out.not_full = std::make_pair(x, x2);
      }
    }
  }
  return out;
}

namespace {

// Objects and arrows of a groupoid as one relational structure. Vertex ids
// are objects first, then arrows offset by the object count.
enum Rel : std::uint8_t {
  kObjEdge, kArrEdge, kSrc, kSrcRev, kTgt, kTgtRev, kUnit, kUnitRev, kInv, kInvRev,
};

constexpr Rel reverse(Rel r) {
  switch (r) {
    case kObjEdge: return kObjEdge;
    case kArrEdge: return kArrEdge;
    case kSrc: return kSrcRev;
    case kSrcRev: return kSrc;
    case kTgt: return kTgtRev;
    case kTgtRev: return kTgt;
    case kUnit: return kUnitRev;
    case kUnitRev: return kUnit;
    case kInv: return kInvRev;
    case kInvRev: return kInv;
  }
  return r;
}

using RelEdge = std::pair<std::uint8_t, Vertex>;

struct Structure {
  const Groupoid& g;
  std::size_t n0;
  std::size_t size;
  std::vector<std::vector<RelEdge>> adj;
  // Composition entries touching each arrow (indices into comp_entries()).
  std::vector<std::vector<std::size_t>> comp_touch;

  explicit Structure(const Groupoid& grp)
      : g(grp), n0(grp.object_count()), size(n0 + grp.arrow_count()), adj(size),
        comp_touch(grp.arrow_count()) {
    auto link = [this](Vertex a, Rel r, Vertex b) {
      adj[a].push_back({r, b});
      adj[b].push_back({reverse(r), a});
    };
    for (const Edge& e : g.objects().edges()) link(e.a, kObjEdge, e.b);
    for (const Edge& e : g.arrows().edges()) {
      link(static_cast<Vertex>(e.a + n0), kArrEdge, static_cast<Vertex>(e.b + n0));
    }
    for (Vertex a = 0; a < g.arrow_count(); ++a) {
      Vertex va = static_cast<Vertex>(a + n0);
      link(va, kSrc, g.src(a));
      link(va, kTgt, g.tgt(a));
      link(va, kInv, static_cast<Vertex>(g.inv(a) + n0));
    }
    for (Vertex x = 0; x < n0; ++x) link(x, kUnit, static_cast<Vertex>(g.unit(x) + n0));
    for (auto& list : adj) std::sort(list.begin(), list.end());
    const auto& entries = g.comp_entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const CompEntry& e = entries[i];
      comp_touch[e.first].push_back(i);
      if (e.second != e.first) comp_touch[e.second].push_back(i);
      if (e.result != e.first && e.result != e.second) comp_touch[e.result].push_back(i);
    }
  }

  bool has(Vertex v, RelEdge r) const {
    return std::binary_search(adj[v].begin(), adj[v].end(), r);
  }
};

bool joint_refine(const Structure& x, std::vector<std::uint64_t>& cx,
                  const Structure& y, std::vector<std::uint64_t>& cy) {
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> dict;
    auto signatures = [&dict](const Structure& s, const std::vector<std::uint64_t>& c) {
      std::vector<std::vector<std::uint64_t>> sig(s.size);
      for (Vertex v = 0; v < s.size; ++v) {
        std::vector<std::uint64_t> parts;
        for (auto [r, w] : s.adj[v]) parts.push_back((c[w] << 4) | r);
        std::sort(parts.begin(), parts.end());
        sig[v].push_back(c[v]);
        sig[v].insert(sig[v].end(), parts.begin(), parts.end());
        dict.emplace(sig[v], 0);
      }
      return sig;
    };
    auto sx = signatures(x, cx);
    auto sy = signatures(y, cy);
    std::uint64_t next = 0;
    for (auto& [key, id] : dict) id = next++;
    for (Vertex v = 0; v < x.size; ++v) cx[v] = dict[sx[v]];
    for (Vertex v = 0; v < y.size; ++v) cy[v] = dict[sy[v]];
    std::vector<std::size_t> hx(dict.size()), hy(dict.size());
    for (auto c : cx) ++hx[c];
    for (auto c : cy) ++hy[c];
    if (hx != hy) return false;
    if (dict.size() == classes) return true;
    classes = dict.size();
  }
}

class IsoSearch {
 public:
  IsoSearch(const Structure& x, const Structure& y, std::vector<std::uint64_t> cx,
            std::vector<std::uint64_t> cy)
      : x_(x), y_(y), cx_(std::move(cx)), cy_(std::move(cy)),
        fwd_(x.size, kNone), back_(y.size, kNone), score_(x.size, 0) {}

  bool run() { return step(0); }
  const std::vector<Vertex>& mapping() const { return fwd_; }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  Vertex pick() const {
    Vertex best = kNone;
    for (Vertex v = 0; v < x_.size; ++v) {
      if (fwd_[v] != kNone) continue;
      if (best == kNone || score_[v] > score_[best]) best = v;
    }
    return best;
  }

  bool consistent(Vertex v, Vertex c) const {
    if (cx_[v] != cy_[c] || back_[c] != kNone) return false;
    for (auto [r, w] : x_.adj[v]) {
      Vertex image = w == v ? c : fwd_[w];
      if (image != kNone && !y_.has(c, {r, image})) return false;
    }
    for (auto [r, w] : y_.adj[c]) {
      Vertex pre = w == c ? v : back_[w];
      if (pre != kNone && !x_.has(v, {r, pre})) return false;
    }
    if (v >= x_.n0) {
      const auto& entries = x_.g.comp_entries();
      auto image = [&](Vertex a) -> Vertex {
        Vertex va = static_cast<Vertex>(a + x_.n0);
        Vertex m = va == v ? c : fwd_[va];
        return m == kNone ? kNone : static_cast<Vertex>(m - y_.n0);
      };
      for (std::size_t i : x_.comp_touch[v - x_.n0]) {
        const CompEntry& e = entries[i];
        Vertex a = image(e.first), b = image(e.second), r = image(e.result);
        if (a == kNone || b == kNone || r == kNone) continue;
        auto hr = y_.g.comp(a, b);
        if (!hr || *hr != r) return false;
      }
    }
    return true;
  }

  void assign(Vertex v, Vertex c, int delta) {
    fwd_[v] = delta > 0 ? c : kNone;
    back_[c] = delta > 0 ? v : kNone;
    for (auto [r, w] : x_.adj[v]) score_[w] += delta;
  }

  bool step(std::size_t depth) {
    if (depth == x_.size) return true;
    Vertex v = pick();
    std::vector<Vertex> candidates;
    bool anchored = false;
    for (auto [r, w] : x_.adj[v]) {
      if (fwd_[w] == kNone) continue;
      std::vector<Vertex> list;
      for (auto [r2, u] : y_.adj[fwd_[w]]) {
        if (r2 == reverse(static_cast<Rel>(r))) list.push_back(u);
      }
      if (!anchored || list.size() < candidates.size()) candidates = std::move(list);
      anchored = true;
    }
    if (!anchored) {
      for (Vertex u = 0; u < y_.size; ++u) {
        if (cy_[u] == cx_[v] && back_[u] == kNone) candidates.push_back(u);
      }
    }
    for (Vertex c : candidates) {
      if (!consistent(v, c)) continue;
      assign(v, c, +1);
      if (step(depth + 1)) return true;
      assign(v, c, -1);
    }
    return false;
  }

  const Structure& x_;
  const Structure& y_;
  std::vector<std::uint64_t> cx_;
  std::vector<std::uint64_t> cy_;
  std::vector<Vertex> fwd_;
  std::vector<Vertex> back_;
  std::vector<int> score_;
};

}  // namespace

std::optional<IsomorphismWitness> check_isomorphism(const GroupoidPtr& g,
                                                    const GroupoidPtr& h) {
  if (g->object_count() != h->object_count() || g->arrow_count() != h->arrow_count() ||
      g->objects().edge_count() != h->objects().edge_count() ||
      g->arrows().edge_count() != h->arrows().edge_count() ||
      g->comp_entries().size() != h->comp_entries().size()) {
    return std::nullopt;
  }
  Structure x(*g), y(*h);
  std::vector<std::uint64_t> cx(x.size), cy(y.size);
  for (Vertex v = 0; v < x.size; ++v) cx[v] = v < x.n0 ? 0 : 1;
  for (Vertex v = 0; v < y.size; ++v) cy[v] = v < y.n0 ? 0 : 1;
  if (!joint_refine(x, cx, y, cy)) return std::nullopt;
  IsoSearch search(x, y, std::move(cx), std::move(cy));
  if (!search.run()) return std::nullopt;
  const auto& map = search.mapping();
  IsomorphismWitness w{{g, h, {}, {}}, {h, g, {}, {}}};
  w.forward.f0.assign(map.begin(), map.begin() + x.n0);
  for (std::size_t a = x.n0; a < x.size; ++a) w.forward.f1.push_back(map[a] - y.n0);
  w.backward.f0.resize(h->object_count());
  w.backward.f1.resize(h->arrow_count());
  for (Vertex v = 0; v < g->object_count(); ++v) w.backward.f0[w.forward.f0[v]] = v;
  for (Vertex a = 0; a < g->arrow_count(); ++a) w.backward.f1[w.forward.f1[a]] = a;
  return w;
}

}  // namespace orbi
