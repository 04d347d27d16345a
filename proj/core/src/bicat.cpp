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

#include "orbi/bicat.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "orbi/error.hpp"
#include "orbi/gmap.hpp"

namespace orbi {

namespace {

bool same(const GroupoidPtr& a, const GroupoidPtr& b) { return a == b || *a == *b; }

void add(std::vector<Violation>& out, const char* kind, std::string detail,
         std::vector<Vertex> witness = {}) {
  out.push_back({kind, std::move(witness), std::move(detail)});
}

void append(std::vector<Violation>& out, const std::vector<Violation>& more,
            const std::string& where) {
  for (const Violation& v : more) out.push_back({v.kind, v.witness, where + ": " + v.detail});
}

}  // namespace

std::vector<Violation> validate_span(const Span& s) {
  std::vector<Violation> out;
  if (!same(s.left.source, s.right.source)) {
    add(out, span_check::kShape, "legs start at different groupoids");
    return out;
  }
  append(out, validate_groupoid(*s.apex()), span_check::kApex);
  append(out, validate_homomorphism(s.left), span_check::kLeftLeg);
  append(out, validate_homomorphism(s.right), span_check::kRightLeg);
  if (!out.empty()) return out;
  EssentialEquivalence e = check_essential_equivalence(s.left);
  if (!e.e1) add(out, span_check::kE1, "object not reached", {*e.unreached});
  if (!e.e2) add(out, span_check::kE2, "hom-set not matched", {e.not_full->first, e.not_full->second});
  return out;
}

Span identity_span(const GroupoidPtr& g) {
  return {identity_homomorphism(g), identity_homomorphism(g)};
}

WeakPullback weak_pullback(const Homomorphism& f, const Homomorphism& g) {
  if (!same(f.target, g.target)) {
    throw Error(ErrorCode::kCodomainMismatch, "weak pullback legs have different targets");
  }
  const Groupoid& a = *f.source;
  const Groupoid& b = *g.source;
  const Groupoid& h = *f.target;
  WeakPullback out;

  std::map<std::tuple<Vertex, Vertex, Vertex>, Vertex> object_id;
  std::vector<std::string> object_labels;
  for (Vertex x = 0; x < a.object_count(); ++x) {
    for (Vertex y = 0; y < b.object_count(); ++y) {
      for (Vertex t : h.arrows_between(f.f0[x], g.f0[y])) {
        object_id[{x, t, y}] = static_cast<Vertex>(out.triples.size());
        out.triples.push_back({x, t, y});
        object_labels.push_back("(" + a.objects().label(x) + "|" + h.arrows().label(t) + "|" +
                                b.objects().label(y) + ")");
      }
    }
  }
  std::vector<Edge> object_edges;
  for (Vertex p = 0; p < out.triples.size(); ++p) {
    const auto& tp = out.triples[p];
    std::vector<Vertex> xs{tp[0]}, ys{tp[2]};
    xs.insert(xs.end(), a.objects().neighbors(tp[0]).begin(), a.objects().neighbors(tp[0]).end());
    ys.insert(ys.end(), b.objects().neighbors(tp[2]).begin(), b.objects().neighbors(tp[2]).end());
    for (Vertex x : xs) {
      for (Vertex y : ys) {
        for (Vertex t : h.arrows_between(f.f0[x], g.f0[y])) {
          Vertex q = object_id.at({x, t, y});
          if (q > p && h.arrows().near(t, tp[1])) object_edges.push_back({p, q});
        }
      }
    }
  }
  std::sort(object_edges.begin(), object_edges.end());

  // Arrow (u, v) out of object p; its target carries u^-1 t v.
  struct Arrow {
    Vertex u, v, from, to;
  };
  std::vector<Arrow> arrows;
  std::map<std::tuple<Vertex, Vertex, Vertex>, Vertex> arrow_id;  // (u, v, from)
  GroupoidData d;
  for (Vertex p = 0; p < out.triples.size(); ++p) {
    const auto& tp = out.triples[p];
    for (Vertex u : a.arrows_from(tp[0])) {
      for (Vertex v : b.arrows_from(tp[2])) {
        auto left = h.comp(h.inv(f.f1[u]), tp[1]);
        auto moved = left ? h.comp(*left, g.f1[v]) : std::nullopt;
        if (!moved) throw Error(ErrorCode::kCompositionNotClosed, "pullback arrow has no target");
        Vertex q = object_id.at({a.tgt(u), *moved, b.tgt(v)});
        arrow_id[{u, v, p}] = static_cast<Vertex>(arrows.size());
        arrows.push_back({u, v, p, q});
      }
    }
  }
  std::vector<Edge> arrow_edges;
  std::vector<std::string> arrow_labels;
  for (Vertex k = 0; k < arrows.size(); ++k) {
    const Arrow& r = arrows[k];
    arrow_labels.push_back("(" + a.arrows().label(r.u) + "|" + h.arrows().label(out.triples[r.from][1]) +
                           "|" + b.arrows().label(r.v) + ")");
    std::vector<Vertex> us{r.u}, vs{r.v};
    us.insert(us.end(), a.arrows().neighbors(r.u).begin(), a.arrows().neighbors(r.u).end());
    vs.insert(vs.end(), b.arrows().neighbors(r.v).begin(), b.arrows().neighbors(r.v).end());
    for (Vertex u : us) {
      for (Vertex v : vs) {
        for (Vertex t : h.arrows_between(f.f0[a.src(u)], g.f0[b.src(v)])) {
          if (!h.arrows().near(t, out.triples[r.from][1])) continue;
          auto it = arrow_id.find({u, v, object_id.at({a.src(u), t, b.src(v)})});
          if (it != arrow_id.end() && it->second > k) arrow_edges.push_back({k, it->second});
        }
      }
    }
  }
  std::sort(arrow_edges.begin(), arrow_edges.end());

  d.objects = make_space(out.triples.size(), object_edges, std::move(object_labels));
  d.arrows = make_space(arrows.size(), arrow_edges, std::move(arrow_labels));
  for (Vertex p = 0; p < out.triples.size(); ++p) {
    const auto& tp = out.triples[p];
    d.unit.push_back(arrow_id.at({a.unit(tp[0]), b.unit(tp[2]), p}));
  }
  for (const Arrow& r : arrows) {
    d.src.push_back(r.from);
    d.tgt.push_back(r.to);
    d.inv.push_back(arrow_id.at({a.inv(r.u), b.inv(r.v), r.to}));
  }
  for (Vertex k = 0; k < arrows.size(); ++k) {
    const Arrow& r = arrows[k];
    const auto& tq = out.triples[r.to];
    for (Vertex u : a.arrows_from(tq[0])) {
      for (Vertex v : b.arrows_from(tq[2])) {
        Vertex second = arrow_id.at({u, v, r.to});
        Vertex result = arrow_id.at({*a.comp(r.u, u), *b.comp(r.v, v), r.from});
        d.comp.push_back({k, second, result});
      }
    }
  }
  out.apex = share(Groupoid(std::move(d)));
  out.first = {out.apex, f.source, {}, {}};
  out.second = {out.apex, g.source, {}, {}};
  for (const auto& tp : out.triples) {
    out.first.f0.push_back(tp[0]);
    out.second.f0.push_back(tp[2]);
  }
  for (const Arrow& r : arrows) {
    out.first.f1.push_back(r.u);
    out.second.f1.push_back(r.v);
  }
  out.cell = {compose(out.first, f), compose(out.second, g), {}};
  for (const auto& tp : out.triples) out.cell.alpha.push_back(tp[1]);
  return out;
}

Span compose_spans(const Span& s1, const Span& s2) {
  if (!same(s1.right.target, s2.left.target)) {
    throw Error(ErrorCode::kCodomainMismatch, "spans do not meet in the same groupoid");
  }
  WeakPullback p = weak_pullback(s1.right, s2.left);
  return {compose(p.first, s1.left), compose(p.second, s2.right)};
}

std::vector<Violation> validate_two_cell_diagram(const TwoCellDiagram& d) {
  std::vector<Violation> out;
  append(out, validate_span(d.top), "top");
  append(out, validate_span(d.bottom), "bottom");
  if (!same(d.nu.target, d.top.apex()) || !same(d.nu2.target, d.bottom.apex()) ||
      !same(d.nu.source, d.nu2.source)) {
    add(out, span_check::kShape, "refinement maps do not match the spans");
    return out;
  }
  append(out, validate_homomorphism(d.nu), "nu");
  append(out, validate_homomorphism(d.nu2), "nu2");
  append(out, validate_nat_trans(d.alpha), "alpha");
  append(out, validate_nat_trans(d.beta), "beta");
  if (!out.empty()) return out;
  auto check_ends = [&](const NatTrans& t, const Homomorphism& from, const Homomorphism& to,
                        const char* name) {
    if (t.from.f1 != from.f1 || t.from.f0 != from.f0 || t.to.f1 != to.f1 || t.to.f0 != to.f0 ||
        !same(t.from.target, from.target)) {
      add(out, law::kEndpoint, std::string(name) + " does not run between the composites");
    }
  };
  check_ends(d.alpha, compose(d.nu, d.top.left), compose(d.nu2, d.bottom.left), "alpha");
  check_ends(d.beta, compose(d.nu, d.top.right), compose(d.nu2, d.bottom.right), "beta");
  return out;
}

namespace {

void bad_witness(const std::string& why) { throw Error(ErrorCode::kBadWitness, why); }

void require_transformation(const NatTrans& t, const Homomorphism& from, const Homomorphism& to,
                            const char* name) {
  if (!same(t.from.target, from.target) || t.alpha.size() != from.f0.size()) {
    bad_witness(std::string(name) + " has the wrong shape");
  }
  const Groupoid& h = *from.target;
  for (Vertex m = 0; m < from.f0.size(); ++m) {
    Vertex a = t.alpha[m];
    if (a >= h.arrow_count() || h.src(a) != from.f0[m] || h.tgt(a) != to.f0[m]) {
      bad_witness(std::string(name) + " has a wrong endpoint at object " + std::to_string(m));
    }
  }
  NatTrans resolved{from, to, t.alpha};
  if (!validate_nat_trans(resolved, 1).empty()) {
    bad_witness(std::string(name) + " is not natural");
  }
}

}  // namespace

TwoCellComparison two_cells_equal(const TwoCellDiagram& d1, const TwoCellDiagram& d2,
                                  const TwoCellWitness& w) {
  if (!same(d1.top.apex(), d2.top.apex()) || !same(d1.bottom.apex(), d2.bottom.apex())) {
    bad_witness("diagrams do not share their spans");
  }
  if (!same(w.lambda1.target, d1.middle()) || !same(w.lambda2.target, d2.middle()) ||
      !same(w.lambda1.source, w.lambda2.source)) {
    bad_witness("refinement maps do not land in the diagram middles");
  }
  for (const Homomorphism* lambda : {&w.lambda1, &w.lambda2}) {
    if (!validate_homomorphism(*lambda, 1).empty() ||
        !check_essential_equivalence(*lambda).ok()) {
      bad_witness("refinement map is not an essential equivalence");
    }
  }
  const Homomorphism top1 = compose(w.lambda1, d1.nu), top2 = compose(w.lambda2, d2.nu);
  const Homomorphism bot1 = compose(w.lambda1, d1.nu2), bot2 = compose(w.lambda2, d2.nu2);
  require_transformation(w.gamma, top1, top2, "gamma");
  require_transformation(w.gamma2, bot1, bot2, "gamma2");

  TwoCellComparison out;
  const Groupoid& m = *w.refinement();
  for (int side = 1; side <= 2 && out.equal; ++side) {
    const Homomorphism& leg = side == 1 ? d1.top.left : d1.top.right;
    const Homomorphism& leg2 = side == 1 ? d1.bottom.left : d1.bottom.right;
    const NatTrans& c1 = side == 1 ? d1.alpha : d1.beta;
    const NatTrans& c2 = side == 1 ? d2.alpha : d2.beta;
    const Groupoid& target = *leg.target;
    for (Vertex x = 0; x < m.object_count(); ++x) {
      auto lhs = target.comp(leg.f1[w.gamma.alpha[x]], c2.alpha[w.lambda2.f0[x]]);
      auto rhs = target.comp(c1.alpha[w.lambda1.f0[x]], leg2.f1[w.gamma2.alpha[x]]);
      if (!lhs || !rhs) bad_witness("pasting composite is undefined");
      if (*lhs != *rhs) {
        out.equal = false;
        out.failing_condition = side;
        out.object = x;
        break;
      }
    }
  }
  return out;
}

namespace {

// Tries every pair of connecting transformations for fixed lambdas.
std::optional<TwoCellWitness> try_lambdas(const TwoCellDiagram& d1, const TwoCellDiagram& d2,
                                          const Homomorphism& lambda1,
                                          const Homomorphism& lambda2,
                                          const std::optional<NatTrans>& fixed_gamma) {
  const Homomorphism top1 = compose(lambda1, d1.nu), top2 = compose(lambda2, d2.nu);
  const Homomorphism bot1 = compose(lambda1, d1.nu2), bot2 = compose(lambda2, d2.nu2);
  std::vector<NatTrans> gammas =
      fixed_gamma ? std::vector<NatTrans>{*fixed_gamma} : enumerate_nat_trans(top1, top2);
  if (gammas.empty()) return std::nullopt;
  std::vector<NatTrans> gammas2 = enumerate_nat_trans(bot1, bot2);
  for (const NatTrans& g : gammas) {
    for (const NatTrans& g2 : gammas2) {
      TwoCellWitness w{lambda1, lambda2, g, g2};
      if (two_cells_equal(d1, d2, w).equal) return w;
    }
  }
  return std::nullopt;
}

std::optional<TwoCellWitness> try_one_sided(const TwoCellDiagram& d1, const TwoCellDiagram& d2,
                                            bool refine_first) {
  // M is one middle with the identity into itself; the other lambda ranges
  // over essential equivalences into the other middle.
  const GroupoidPtr& m = refine_first ? d2.middle() : d1.middle();
  const GroupoidPtr& other = refine_first ? d1.middle() : d2.middle();
  const Homomorphism id = identity_homomorphism(m);
  std::optional<TwoCellWitness> found;
  for_each_homomorphism(m, other, {}, [&](const Homomorphism& lambda) {
    if (!check_essential_equivalence(lambda).ok()) return true;
    found = refine_first ? try_lambdas(d1, d2, lambda, id, std::nullopt)
                         : try_lambdas(d1, d2, id, lambda, std::nullopt);
    return !found;
  });
  return found;
}

}  // namespace

std::optional<TwoCellWitness> find_two_cell_witness(const TwoCellDiagram& d1,
                                                    const TwoCellDiagram& d2,
                                                    std::size_t bound) {
  if (!same(d1.top.apex(), d2.top.apex()) || !same(d1.bottom.apex(), d2.bottom.apex())) {
    return std::nullopt;
  }
  const std::size_t n1 = d1.middle()->object_count();
  const std::size_t n2 = d2.middle()->object_count();
  if (same(d1.middle(), d2.middle()) && n1 <= bound) {
    Homomorphism id = identity_homomorphism(d1.middle());
    if (auto w = try_lambdas(d1, d2, id, identity_homomorphism(d2.middle()), std::nullopt)) {
      return w;
    }
  }
  if (n1 <= bound) {
    if (auto w = try_one_sided(d1, d2, false)) return w;
  }
  if (n2 <= bound) {
    if (auto w = try_one_sided(d1, d2, true)) return w;
  }
  WeakPullback p = weak_pullback(d1.nu, d2.nu);
  if (p.apex->object_count() <= bound) {
    if (check_essential_equivalence(p.first).ok() && check_essential_equivalence(p.second).ok()) {
      NatTrans gamma{compose(p.first, d1.nu), compose(p.second, d2.nu), p.cell.alpha};
      if (auto w = try_lambdas(d1, d2, p.first, p.second, gamma)) return w;
    }
  }
  return std::nullopt;
}

bool same_labelled_quotient(const Groupoid& g, const Groupoid& h) {
  QuotientSpace qg = quotient(g), qh = quotient(h);
  if (qg.orbits.size() != qh.orbits.size()) return false;
  std::vector<IsotropyLabel> all = qg.labels;
  all.insert(all.end(), qh.labels.begin(), qh.labels.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto colors = [&all](const QuotientSpace& q) {
    std::vector<std::uint64_t> out;
    for (const IsotropyLabel& l : q.labels) {
      out.push_back(static_cast<std::uint64_t>(std::lower_bound(all.begin(), all.end(), l) - all.begin()));
    }
    return out;
  };
  return find_graph_isomorphism(*qg.orbit_graph, colors(qg), *qh.orbit_graph, colors(qh))
      .has_value();
}

MoritaResult morita_equivalent(const GroupoidPtr& g, const GroupoidPtr& h, std::size_t bound) {
  MoritaResult out;
  if (!same_labelled_quotient(*g, *h)) {
    out.status = MoritaStatus::kFastReject;
    QuotientSpace qg = quotient(*g), qh = quotient(*h);
    std::vector<IsotropyLabel> lg = qg.labels, lh = qh.labels;
    std::sort(lg.begin(), lg.end());
    std::sort(lh.begin(), lh.end());
    out.reason = lg != lh ? "isotropy labels differ" : "orbit graphs are not isomorphic";
    return out;
  }
  if (same(g, h)) {
    out.status = MoritaStatus::kSpan;
    out.span = identity_span(g);
    return out;
  }
  if (g->object_count() <= bound) {
    if (auto iso = check_isomorphism(g, h)) {
      out.status = MoritaStatus::kSpan;
      out.span = Span{identity_homomorphism(g), iso->forward};
      return out;
    }
  }
  // Apex G with the identity on the left, or apex H with the identity on
  // the right.
  for (int side = 0; side < 2 && !out.span; ++side) {
    const GroupoidPtr& apex = side == 0 ? g : h;
    const GroupoidPtr& other = side == 0 ? h : g;
    if (apex->object_count() > bound) continue;
    for_each_homomorphism(apex, other, {}, [&](const Homomorphism& f) {
      if (!check_essential_equivalence(f).ok()) return true;
      out.span = side == 0 ? Span{identity_homomorphism(g), f} : Span{f, identity_homomorphism(h)};
      return false;
    });
  }
  if (out.span) {
    out.status = MoritaStatus::kSpan;
  } else {
    out.reason = "no apex within " + std::to_string(bound) + " objects";
  }
  return out;
}

}  // namespace orbi
