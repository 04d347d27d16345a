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

#include <gtest/gtest.h>

#include <algorithm>

#include "orbi/builders.hpp"
#include "orbi/error.hpp"
#include "orbi/fixtures.hpp"
#include "orbi/gmap.hpp"

namespace orbi {
namespace {

bool has_kind(const std::vector<Violation>& v, const std::string& kind) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == kind; });
}

// I <- I^2 -> T, running from one cone point of the teardrop to the other.
Span teardrop_span() {
  GroupoidPtr t = make_fixture("teardrop");
  IntervalCover i2 = interval_fixture(2);
  HomConstraints pins;
  pins.objects = {{i2.object(0, 0), teardrop_center(*t, 1)},
                  {i2.object(1, i2.length - 1), teardrop_center(*t, 2)}};
  auto paths = enumerate_homomorphisms(i2.groupoid, t, pins);
  if (paths.empty()) throw std::runtime_error("no path");
  return {refine(i2, interval_fixture(1)), paths.front()};
}

NatTrans inverse(const NatTrans& a) {
  NatTrans out{a.to, a.from, {}};
  for (Vertex h : a.alpha) out.alpha.push_back(a.from.target->inv(h));
  return out;
}

TwoCellWitness mirrored(const TwoCellWitness& w) {
  return {w.lambda2, w.lambda1, inverse(w.gamma), inverse(w.gamma2)};
}

TwoCellWitness identity_witness(const TwoCellDiagram& d) {
  Homomorphism id = identity_homomorphism(d.middle());
  return {id, id, identity_transformation(d.nu), identity_transformation(d.nu2)};
}

TEST(ValidateSpan, IdentityAndTeardrop) {
  EXPECT_TRUE(validate_span(identity_span(make_fixture("tb"))).empty());
  EXPECT_TRUE(validate_span(teardrop_span()).empty());
}

TEST(ValidateSpan, ChartInclusionFailsE1) {
  GroupoidPtr tb = make_fixture("tb");
  GroupoidPtr chart = share(build_translation_groupoid(dihedral_action(3, 12, true)));
  Homomorphism inc{chart, tb, {}, {}};
  for (Vertex x = 0; x < chart->object_count(); ++x) {
    inc.f0.push_back(*tb->objects().find("A:" + chart->objects().label(x)));
  }
  for (Vertex a = 0; a < chart->arrow_count(); ++a) {
    inc.f1.push_back(*tb->arrows().find("A:" + chart->arrows().label(a)));
  }
  auto v = validate_span({inc, identity_homomorphism(chart)});
  EXPECT_TRUE(has_kind(v, span_check::kE1));
  EXPECT_FALSE(has_kind(v, span_check::kE2));
}

TEST(ValidateSpan, LegsMustShareTheApex) {
  Span s{identity_homomorphism(make_fixture("si")), identity_homomorphism(make_fixture("c3"))};
  EXPECT_TRUE(has_kind(validate_span(s), span_check::kShape));
}

TEST(WeakPullback, IdentityLegIsAnEquivalence) {
  Span s = teardrop_span();
  Span id = identity_span(s.right.target);
  WeakPullback p = weak_pullback(s.right, id.left);
  EXPECT_TRUE(validate_groupoid(*p.apex).empty());
  EXPECT_TRUE(validate_homomorphism(p.first).empty());
  EXPECT_TRUE(validate_homomorphism(p.second).empty());
  EXPECT_TRUE(validate_nat_trans(p.cell).empty());
  EXPECT_TRUE(check_essential_equivalence(p.first).ok());
}

TEST(WeakPullback, CodomainMismatch) {
  try {
    weak_pullback(identity_homomorphism(make_fixture("si")),
                  identity_homomorphism(make_fixture("c3")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCodomainMismatch);
  }
}

TEST(ComposeSpans, WithIdentityCountsArrowsOutOfTheImage) {
  Span s = teardrop_span();
  const Groupoid& t = *s.right.target;
  Span c = compose_spans(s, identity_span(s.right.target));
  std::size_t expected = 0;
  for (Vertex k : s.right.f0) {
    for (Vertex a = 0; a < t.arrow_count(); ++a) expected += t.src(a) == k;
  }
  EXPECT_EQ(c.apex()->object_count(), expected);
  EXPECT_TRUE(validate_span(c).empty());
}

TEST(ComposeSpans, RefinementsOfTheIntervalStayAPath) {
  IntervalCover i1 = interval_fixture(1), i2 = interval_fixture(2), i3 = interval_fixture(3);
  Span s1{refine(i2, i1), refine(i2, i1)};
  Span s2{refine(i3, i1), refine(i3, i1)};
  Span c = compose_spans(s1, s2);
  EXPECT_TRUE(validate_span(c).empty());
  QuotientSpace q = quotient(*c.apex());
  auto blocks = components(*q.orbit_graph);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(q.orbits.size(), i1.length);
  EXPECT_EQ(q.orbit_graph->edge_count(), i1.length - 1);
  for (const auto& l : q.labels) EXPECT_EQ(l.order, 1u);
}

TEST(ComposeSpans, AssociativeUpToEquivalence) {
  IntervalCover i1 = interval_fixture(1), i2 = interval_fixture(2), i3 = interval_fixture(3);
  Span a{refine(i2, i1), refine(i2, i1)};
  Span b{refine(i3, i1), refine(i3, i1)};
  Span c = identity_span(i1.groupoid);
  Span left = compose_spans(compose_spans(a, b), c);
  Span right = compose_spans(a, compose_spans(b, c));
  ASSERT_LE(left.apex()->object_count(), 200u);
  ASSERT_LE(right.apex()->object_count(), 200u);
  // Both apexes map to I by essential equivalences, so they share a quotient.
  EXPECT_TRUE(same_labelled_quotient(*left.apex(), *right.apex()));
  MoritaResult m = morita_equivalent(left.apex(), right.apex(), 200);
  EXPECT_EQ(m.status, MoritaStatus::kSpan);
}

TEST(TwoCells, Reflexive) {
  TwoCellExample ex = two_cell_example();
  EXPECT_TRUE(two_cells_equal(ex.d1, ex.d1, identity_witness(ex.d1)).equal);
}

TEST(TwoCells, IntervalExampleAgrees) {
  TwoCellExample ex = two_cell_example();
  for (const TwoCellDiagram* d : {&ex.d1, &ex.d2, &ex.d3}) {
    EXPECT_TRUE(validate_two_cell_diagram(*d).empty());
    EXPECT_TRUE(validate_span(d->top).empty());
    EXPECT_TRUE(validate_span(d->bottom).empty());
  }
  // The left-hand cell is the identity.
  for (Vertex x = 0; x < ex.d1.alpha.alpha.size(); ++x) {
    EXPECT_EQ(ex.d1.alpha.alpha[x], ex.interval.groupoid->unit(ex.d1.alpha.from.f0[x]));
  }
  EXPECT_EQ(ex.witness3.refinement()->object_count(), ex.i3.groupoid->object_count());
  EXPECT_TRUE(two_cells_equal(ex.d1, ex.d3, ex.witness3).equal);
  EXPECT_TRUE(two_cells_equal(ex.d1, ex.d2, ex.witness).equal);
}

TEST(TwoCells, SymmetricUnderMirroredWitness) {
  TwoCellExample ex = two_cell_example();
  EXPECT_TRUE(two_cells_equal(ex.d2, ex.d1, mirrored(ex.witness)).equal);
  EXPECT_TRUE(two_cells_equal(ex.d3, ex.d1, mirrored(ex.witness3)).equal);
}

TEST(TwoCells, DifferentBetaIsCaught) {
  // Both spans are * <- * -> *_{Z/2}; the right-hand cells differ by the generator.
  GroupoidPtr pt = make_fixture("pt_1");
  GroupoidPtr z2 = make_fixture("pt_z2");
  Homomorphism id = identity_homomorphism(pt);
  Homomorphism trivial{pt, z2, {0}, {z2->unit(0)}};
  Span s{id, trivial};
  TwoCellDiagram d{s, s, id, id, identity_transformation(id), identity_transformation(trivial)};
  TwoCellDiagram d2 = d;
  d2.beta.alpha = {1};
  ASSERT_TRUE(validate_two_cell_diagram(d).empty());
  ASSERT_TRUE(validate_two_cell_diagram(d2).empty());
  EXPECT_TRUE(two_cells_equal(d, d, identity_witness(d)).equal);
  TwoCellComparison c = two_cells_equal(d, d2, identity_witness(d));
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.failing_condition, 2);
  EXPECT_EQ(c.object, Vertex{0});
  EXPECT_FALSE(find_two_cell_witness(d, d2, 4).has_value());
  EXPECT_TRUE(find_two_cell_witness(d2, d2, 4).has_value());
}

TEST(TwoCells, BadWitness) {
  TwoCellExample ex = two_cell_example();
  TwoCellWitness w = ex.witness3;
  std::swap(w.lambda1, w.lambda2);
  try {
    two_cells_equal(ex.d1, ex.d3, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadWitness);
  }
}

TEST(FindWitness, IdentityAndRefinement) {
  TwoCellExample ex = two_cell_example();
  const std::size_t bound = ex.i3.groupoid->object_count();
  auto same = find_two_cell_witness(ex.d1, ex.d1, bound);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(two_cells_equal(ex.d1, ex.d1, *same).equal);
  for (const TwoCellDiagram* d : {&ex.d2, &ex.d3}) {
    auto w = find_two_cell_witness(ex.d1, *d, bound);
    ASSERT_TRUE(w.has_value());
    EXPECT_LE(w->refinement()->object_count(), bound);
    EXPECT_TRUE(two_cells_equal(ex.d1, *d, *w).equal);
    EXPECT_TRUE(check_essential_equivalence(w->lambda1).ok());
  }
  EXPECT_FALSE(find_two_cell_witness(ex.d1, ex.d2, 4).has_value());
}

TEST(Morita, Examples) {
  GroupoidPtr tb = make_fixture("tb");
  MoritaResult self = morita_equivalent(tb, tb, 12);
  ASSERT_EQ(self.status, MoritaStatus::kSpan);
  EXPECT_EQ(self.span->left.f1, identity_homomorphism(tb).f1);
  EXPECT_EQ(self.span->right.f1, identity_homomorphism(tb).f1);

  MoritaResult iv = morita_equivalent(interval_fixture(1).groupoid, interval_fixture(3).groupoid, 12);
  ASSERT_EQ(iv.status, MoritaStatus::kSpan);
  EXPECT_TRUE(validate_span(*iv.span).empty());
  EXPECT_TRUE(check_essential_equivalence(iv.span->right).ok());

  MoritaResult z = morita_equivalent(make_fixture("pt_z2"), make_fixture("pt_z3"), 12);
  EXPECT_EQ(z.status, MoritaStatus::kFastReject);
  EXPECT_EQ(z.reason, "isotropy labels differ");

  MoritaResult far = morita_equivalent(make_fixture("si"), make_fixture("si2"), 12);
  EXPECT_EQ(far.status, MoritaStatus::kFastReject);
}

TEST(Morita, StrictCopy) {
  GroupoidPtr c3 = make_fixture("c3");
  GroupoidPtr copy = share(build_translation_groupoid(rotation_action(3, 3, true)));
  MoritaResult m = morita_equivalent(c3, copy, 12);
  ASSERT_EQ(m.status, MoritaStatus::kSpan);
  EXPECT_EQ(m.span->apex()->object_count(), c3->object_count());
  EXPECT_TRUE(validate_span(*m.span).empty());
}

TEST(Morita, InconclusiveBelowBound) {
  MoritaResult m = morita_equivalent(interval_fixture(1).groupoid, interval_fixture(3).groupoid, 4);
  EXPECT_EQ(m.status, MoritaStatus::kNotFoundWithinBound);
  EXPECT_FALSE(m.span.has_value());
}

}  // namespace
}  // namespace orbi
