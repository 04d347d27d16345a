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

// The two lifts of an interval into the silvered interval: f runs along the
// upper half, f2 agrees on the left chart and reflects the right chart.
struct SilveredLifts {
  IntervalCover i2 = interval_fixture(2);
  GroupoidPtr si = make_fixture("si");
  Homomorphism f, f2;
  NatTrans alpha;

  static constexpr Vertex kTau = 8;  // arrow (tau, y) has id 8 + y

  SilveredLifts() {
    const Groupoid& g = *i2.groupoid;
    f = {i2.groupoid, si, {}, {}};
    f2 = f;
    auto tau = [](Vertex y) { return static_cast<Vertex>((8 - y) % 8); };
    for (Vertex x = 0; x < g.object_count(); ++x) {
      const Vertex y = static_cast<Vertex>(std::min<std::size_t>(i2.position_of[x], 4));
      f.f0.push_back(y);
      f2.f0.push_back(i2.chart_of[x] == 0 ? y : tau(y));
    }
    for (Vertex a = 0; a < g.arrow_count(); ++a) {
      const bool glue = i2.chart_of[g.src(a)] != i2.chart_of[g.tgt(a)];
      f.f1.push_back(si->unit(f.f0[g.src(a)]));
      f2.f1.push_back(glue ? kTau + f2.f0[g.src(a)] : si->unit(f2.f0[g.src(a)]));
    }
    alpha = {f, f2, {}};
    for (Vertex x = 0; x < g.object_count(); ++x) {
      alpha.alpha.push_back(i2.chart_of[x] == 0 ? si->unit(f.f0[x]) : kTau + f.f0[x]);
    }
  }
};

TEST(ValidateHomomorphism, IdentityIsValid) {
  for (const auto& name : fixture_names()) {
    EXPECT_TRUE(validate_homomorphism(identity_homomorphism(make_fixture(name))).empty()) << name;
  }
}

TEST(ValidateHomomorphism, OrderThreeArrowCannotHitAReflection) {
  GroupoidPtr z3 = make_fixture("pt_z3");
  GroupoidPtr si = make_fixture("si");
  Homomorphism f{z3, si, {0}, {si->unit(0), 8, 8}};
  EXPECT_TRUE(has_kind(validate_homomorphism(f), law::kComposition));
}

TEST(ValidateHomomorphism, ShapeAndEndpoints) {
  GroupoidPtr z2 = make_fixture("pt_z2");
  GroupoidPtr si = make_fixture("si");
  EXPECT_TRUE(has_kind(validate_homomorphism({z2, si, {0}, {0}}), law::kShape));
  // (tau, 1) runs 1 -> 7, not a loop at 1.
  EXPECT_FALSE(validate_homomorphism({z2, si, {1}, {1, 9}}).empty());
}

TEST(ValidateHomomorphism, SilveredLiftsAreFunctors) {
  SilveredLifts s;
  EXPECT_TRUE(validate_homomorphism(s.f).empty());
  EXPECT_TRUE(validate_homomorphism(s.f2).empty());
}

TEST(ValidateNatTrans, IdentityTransformation) {
  SilveredLifts s;
  EXPECT_TRUE(validate_nat_trans(identity_transformation(s.f)).empty());
}

TEST(ValidateNatTrans, SilveredReflection) {
  SilveredLifts s;
  EXPECT_TRUE(validate_nat_trans(s.alpha).empty());
}

TEST(ValidateNatTrans, FlippedValueBreaksEndpoint) {
  SilveredLifts s;
  NatTrans bad = s.alpha;
  const Vertex x = s.i2.object(1, 3);
  bad.alpha[x] = s.si->unit(s.f.f0[x]);
  auto v = validate_nat_trans(bad);
  ASSERT_TRUE(has_kind(v, law::kEndpoint));
  EXPECT_EQ(v.front().witness.front(), x);
}

TEST(ValidateNatTrans, NaturalityFailureNamesTheArrow) {
  // alpha = tau at the fixed point 0 between the identity-on-arrows functor
  // and itself is natural; alpha = tau at 0 for f(a) = tau is natural too,
  // but alpha from the trivial functor to the tau functor is not.
  GroupoidPtr z2 = make_fixture("pt_z2");
  GroupoidPtr si = make_fixture("si");
  Homomorphism trivial{z2, si, {0}, {0, 0}};
  Homomorphism twisted{z2, si, {0}, {0, 8}};
  EXPECT_TRUE(validate_nat_trans({trivial, trivial, {8}}).empty());
  auto v = validate_nat_trans({trivial, twisted, {8}});
  ASSERT_TRUE(has_kind(v, law::kNaturality));
  EXPECT_EQ(v.front().witness.front(), Vertex{1});
}

TEST(Compose, FunctorsAndTransformations) {
  SilveredLifts s;
  IntervalCover i4 = build_interval_cover({{0, 2}, {2, 4}, {4, 6}, {6, 7}});
  Homomorphism r = refine(i4, s.i2);
  Homomorphism rf = compose(r, s.f);
  EXPECT_TRUE(validate_homomorphism(rf).empty());
  EXPECT_EQ(rf.source, i4.groupoid);
  EXPECT_TRUE(validate_nat_trans(whisker(s.alpha, r)).empty());
  NatTrans back{s.f2, s.f, {}};
  for (Vertex a : s.alpha.alpha) back.alpha.push_back(s.si->inv(a));
  NatTrans loop = vertical_compose(s.alpha, back);
  EXPECT_TRUE(validate_nat_trans(loop).empty());
  for (Vertex x = 0; x < loop.alpha.size(); ++x) EXPECT_EQ(loop.alpha[x], s.si->unit(s.f.f0[x]));
  Homomorphism id = identity_homomorphism(s.si);
  EXPECT_TRUE(validate_nat_trans(whisker(id, s.alpha)).empty());
  try {
    compose(s.f, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCodomainMismatch);
  }
}

TEST(EssentialEquivalence, IdentityAndGlueMaps) {
  EXPECT_TRUE(check_essential_equivalence(identity_homomorphism(make_fixture("tb"))).ok());
  for (std::size_t n = 2; n <= 3; ++n) {
    EssentialEquivalence e = check_essential_equivalence(refine(interval_fixture(n), interval_fixture(1)));
    EXPECT_TRUE(e.e1 && e.e2) << n;
  }
}

TEST(EssentialEquivalence, ChartInclusionMissesOtherCharts) {
  GroupoidPtr tb = make_fixture("tb");
  GroupoidPtr chart = share(build_translation_groupoid(dihedral_action(3, 12, true)));
  Homomorphism inc{chart, tb, {}, {}};
  for (Vertex x = 0; x < chart->object_count(); ++x) {
    inc.f0.push_back(*tb->objects().find("A:" + chart->objects().label(x)));
  }
  for (Vertex a = 0; a < chart->arrow_count(); ++a) {
    inc.f1.push_back(*tb->arrows().find("A:" + chart->arrows().label(a)));
  }
  ASSERT_TRUE(validate_homomorphism(inc).empty());
  EssentialEquivalence e = check_essential_equivalence(inc);
  EXPECT_TRUE(e.e2);
  EXPECT_FALSE(e.e1);
  ASSERT_TRUE(e.unreached.has_value());
  EXPECT_NE(tb->objects().label(*e.unreached).substr(0, 2), "A:");
}

TEST(EssentialEquivalence, FoldIsNotFull) {
  // Z/2 -> 1 loses the reflection.
  Homomorphism f{make_fixture("pt_z2"), make_fixture("pt_1"), {0}, {0, 0}};
  EssentialEquivalence e = check_essential_equivalence(f);
  EXPECT_TRUE(e.e1);
  EXPECT_FALSE(e.e2);
  EXPECT_TRUE(e.not_full.has_value());
}

TEST(Isomorphism, SelfAndNonIsomorphicGroups) {
  GroupoidPtr si = make_fixture("si");
  auto w = check_isomorphism(si, si);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(validate_homomorphism(w->forward).empty());
  EXPECT_TRUE(validate_homomorphism(w->backward).empty());
  Homomorphism round = compose(w->forward, w->backward);
  EXPECT_EQ(round.f1, identity_homomorphism(si).f1);
  EXPECT_FALSE(check_isomorphism(make_fixture("pt_z4"), make_fixture("pt_z2xz2")).has_value());
  EXPECT_FALSE(check_isomorphism(make_fixture("pt_z6"), make_fixture("pt_d3")).has_value());
}

TEST(Isomorphism, MappingGroupoidFromPointIsTheTarget) {
  GroupoidPtr si = make_fixture("si");
  EXPECT_TRUE(check_isomorphism(build_gmap(make_fixture("pt_1"), si).base, si).has_value());
}

}  // namespace
}  // namespace orbi
