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

#include "orbi/inertia.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "orbi/builders.hpp"
#include "orbi/error.hpp"

namespace orbi {

std::optional<Vertex> InertiaGroupoid::object_of(Vertex loop) const {
  auto it = std::lower_bound(loops.begin(), loops.end(), loop);
  if (it == loops.end() || *it != loop) return std::nullopt;
  return static_cast<Vertex>(it - loops.begin());
}

InertiaGroupoid build_inertia(const GroupoidPtr& g) {
  const Groupoid& p = *g;
  InertiaGroupoid out;
  out.parent = g;
  for (Vertex a = 0; a < p.arrow_count(); ++a) {
    if (p.src(a) == p.tgt(a)) out.loops.push_back(a);
  }
  const std::size_t n0 = out.loops.size();
  auto conjugate = [&p](Vertex h, Vertex loop) {
    auto r = p.comp(p.inv(h), loop);
    auto s = r ? p.comp(*r, h) : std::nullopt;
    if (!s) throw Error(ErrorCode::kCompositionNotClosed, "conjugate is undefined");
    return *s;
  };

  std::vector<std::string> object_labels;
  std::vector<Edge> object_edges;
  for (Vertex o = 0; o < n0; ++o) {
    object_labels.push_back(p.arrows().label(out.loops[o]));
    for (Vertex b : p.arrows().neighbors(out.loops[o])) {
      if (auto q = out.object_of(b); q && *q > o) object_edges.push_back({o, *q});
    }
  }

  GroupoidData d;
  std::map<std::pair<Vertex, Vertex>, Vertex> arrow_id;  // (h, object)
  std::vector<std::string> arrow_labels;
  for (Vertex o = 0; o < n0; ++o) {
    const Vertex loop = out.loops[o];
    for (Vertex h : p.arrows_from(p.src(loop))) {
      Vertex target = *out.object_of(conjugate(h, loop));
      arrow_id[{h, o}] = static_cast<Vertex>(out.conj.size());
      out.conj.push_back({h, o});
      d.src.push_back(o);
      d.tgt.push_back(target);
      arrow_labels.push_back(p.arrows().label(h) + "|" + p.arrows().label(loop));
    }
  }
  std::vector<Edge> arrow_edges;
  for (Vertex k = 0; k < out.conj.size(); ++k) {
    auto [h, o] = out.conj[k];
    std::vector<Vertex> hs{h}, ls{out.loops[o]};
    hs.insert(hs.end(), p.arrows().neighbors(h).begin(), p.arrows().neighbors(h).end());
    ls.insert(ls.end(), p.arrows().neighbors(out.loops[o]).begin(),
              p.arrows().neighbors(out.loops[o]).end());
    for (Vertex h2 : hs) {
      for (Vertex l2 : ls) {
        auto o2 = out.object_of(l2);
        if (!o2) continue;
        auto it = arrow_id.find({h2, *o2});
        if (it != arrow_id.end() && it->second > k) arrow_edges.push_back({k, it->second});
      }
    }
  }
  std::sort(arrow_edges.begin(), arrow_edges.end());
  d.objects = make_space(n0, object_edges, std::move(object_labels));
  d.arrows = make_space(out.conj.size(), arrow_edges, std::move(arrow_labels));
  for (Vertex o = 0; o < n0; ++o) d.unit.push_back(arrow_id.at({p.unit(p.src(out.loops[o])), o}));
  for (Vertex k = 0; k < out.conj.size(); ++k) {
    auto [h, o] = out.conj[k];
    d.inv.push_back(arrow_id.at({p.inv(h), d.tgt[k]}));
    for (Vertex h2 : p.arrows_from(p.tgt(h))) {
      d.comp.push_back({k, arrow_id.at({h2, d.tgt[k]}), arrow_id.at({*p.comp(h, h2), o})});
    }
  }
  out.base = share(Groupoid(std::move(d)));
  return out;
}

std::size_t minimal_exponent(const Groupoid& g) {
  QuotientSpace q = quotient(g);
  std::size_t n = 1;
  for (const auto& orbit : q.orbits) {
    n = std::lcm(n, g.loops(orbit.front()).size());
  }
  return n;
}

PhiFunctor phi_functor(std::size_t n, const GroupoidPtr& g, unsigned threads) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  PhiFunctor out;
  out.n = n;
  GroupoidPtr point = share(build_point_groupoid(FiniteGroup::cyclic(n)));
  out.gmap = build_gmap(point, g, threads);
  out.inertia = build_inertia(g);
  const Vertex generator = n > 1 ? 1 : 0;
  out.phi = {out.gmap.base, out.inertia.base, {}, {}};
  for (const Homomorphism& f : out.gmap.functors) {
    out.phi.f0.push_back(*out.inertia.object_of(f.f1[generator]));
  }
  const Groupoid& base = *out.inertia.base;
  for (const auto& t : out.gmap.transformations) {
    Vertex from = out.phi.f0[t.from];
    Vertex image = static_cast<Vertex>(base.arrow_count());
    for (Vertex k : base.arrows_from(from)) {
      if (out.inertia.conj[k].first == t.alpha[0]) image = k;
    }
    if (image == base.arrow_count()) {
      throw Error(ErrorCode::kCompositionNotClosed, "transformation has no conjugation arrow");
    }
    out.phi.f1.push_back(image);
  }
  return out;
}

PhiReport verify_phi_properties(const PhiFunctor& p) {
  PhiReport r;
  const Groupoid& src = *p.gmap.base;
  const Groupoid& dst = *p.inertia.base;
  r.valid = validate_homomorphism(p.phi).empty();
  std::set<Vertex> objects(p.phi.f0.begin(), p.phi.f0.end());
  std::set<Vertex> arrows(p.phi.f1.begin(), p.phi.f1.end());
  r.injective_on_objects = objects.size() == p.phi.f0.size();
  r.surjective_on_objects = objects.size() == dst.object_count();
  r.surjective_on_arrows = arrows.size() == dst.arrow_count();
  r.full = true;
  r.faithful = true;
  for (Vertex x = 0; x < src.object_count(); ++x) {
    for (Vertex y = 0; y < src.object_count(); ++y) {
      auto from = src.arrows_between(x, y);
      auto to = dst.arrows_between(p.phi.f0[x], p.phi.f0[y]);
      std::set<Vertex> image;
      for (Vertex a : from) image.insert(p.phi.f1[a]);
      if (image.size() != from.size()) r.faithful = false;
      if (image.size() != to.size()) r.full = false;
    }
  }
  return r;
}

PhiReport verify_phi_properties(std::size_t n, const GroupoidPtr& g) {
  return verify_phi_properties(phi_functor(n, g));
}

InertiaIsoResult verify_inertia_iso(const GroupoidPtr& g, unsigned threads) {
  InertiaIsoResult out;
  out.n = minimal_exponent(*g);
  PhiFunctor p = phi_functor(out.n, g, threads);
  out.report = verify_phi_properties(p);
  out.witness = check_isomorphism(p.gmap.base, p.inertia.base);
  return out;
}

}  // namespace orbi
