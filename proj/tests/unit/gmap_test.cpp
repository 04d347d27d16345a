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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "orbi/builders.hpp"
#include "orbi/fixtures.hpp"

namespace orbi {
namespace {

std::size_t nontrivial_on_arrows(const std::vector<Homomorphism>& homs) {
  return static_cast<std::size_t>(std::count_if(
      homs.begin(), homs.end(), [](const Homomorphism& f) { return !is_identity_type(f); }));
}

Vertex arrow(const Groupoid& g, const std::string& label) { return *g.arrows().find(label); }
Vertex object(const Groupoid& g, const std::string& label) { return *g.objects().find(label); }

TEST(EnumerateHomomorphisms, FromThePointMatchesObjects) {
  for (const std::string name : {"si", "c3", "tb", "i2"}) {
    GroupoidPtr h = make_fixture(name);
    auto homs = enumerate_homomorphisms(make_fixture("pt_1"), h);
    ASSERT_EQ(homs.size(), h->object_count()) << name;
    std::set<Vertex> images;
    for (const auto& f : homs) images.insert(f.f0[0]);
    EXPECT_EQ(images.size(), h->object_count());
  }
}

TEST(EnumerateHomomorphisms, OrderThreeIntoSilveredIntervalIsTrivial) {
  auto homs = enumerate_homomorphisms(make_fixture("pt_z3"), make_fixture("si"));
  EXPECT_EQ(homs.size(), 8u);
  EXPECT_EQ(nontrivial_on_arrows(homs), 0u);
}

TEST(EnumerateHomomorphisms, OrderFourHitsTheFixedPoints) {
  GroupoidPtr si = make_fixture("si");
  auto homs = enumerate_homomorphisms(make_fixture("pt_z4"), si);
  EXPECT_EQ(nontrivial_on_arrows(homs), 2u);
  std::set<Vertex> at;
  for (const auto& f : homs) {
    if (!is_identity_type(f)) at.insert(f.f0[0]);
  }
  EXPECT_EQ(at, (std::set<Vertex>{0, 4}));
}

TEST(EnumerateHomomorphisms, ConstraintsPin) {
  GroupoidPtr si = make_fixture("si");
  HomConstraints pin;
  pin.objects = {{0, 4}};
  auto homs = enumerate_homomorphisms(make_fixture("pt_z2"), si, pin);
  ASSERT_EQ(homs.size(), 2u);
  for (const auto& f : homs) EXPECT_EQ(f.f0[0], 4u);
  pin.arrows = {{1, 12}};
  homs = enumerate_homomorphisms(make_fixture("pt_z2"), si, pin);
  ASSERT_EQ(homs.size(), 1u);
  EXPECT_EQ(homs[0].f1[1], 12u);
}

TEST(EnumerateHomomorphisms, ThreadCountDoesNotChangeTheList) {
  GroupoidPtr g = make_fixture("pt_z2");
  GroupoidPtr tb = make_fixture("tb");
  auto one = enumerate_homomorphisms(g, tb, {}, 1);
  auto four = enumerate_homomorphisms(g, tb, {}, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].f0, four[i].f0);
    EXPECT_EQ(one[i].f1, four[i].f1);
  }
}

TEST(EnumerateHomomorphisms, EarlyStop) {
  std::size_t seen = 0;
  bool finished = for_each_homomorphism(make_fixture("pt_1"), make_fixture("tb"), {},
                                        [&](const Homomorphism&) { return ++seen < 5; });
  EXPECT_FALSE(finished);
  EXPECT_EQ(seen, 5u);
}

TEST(EnumerateNatTrans, CenterOfTheGroup) {
  for (const auto& [name, center] :
       std::vector<std::pair<std::string, std::size_t>>{{"pt_z4", 4}, {"pt_d3", 1}, {"pt_z6", 6}}) {
    Homomorphism id = identity_homomorphism(make_fixture(name));
    EXPECT_EQ(enumerate_nat_trans(id, id).size(), center) << name;
  }
}

TEST(EnumerateNatTrans, DistinctFixedPointsAreUnrelated) {
  auto homs = enumerate_homomorphisms(make_fixture("pt_z4"), make_fixture("si"));
  std::vector<Homomorphism> twisted;
  for (auto& f : homs) {
    if (!is_identity_type(f)) twisted.push_back(f);
  }
  ASSERT_EQ(twisted.size(), 2u);
  EXPECT_TRUE(enumerate_nat_trans(twisted[0], twisted[1]).empty());
  EXPECT_EQ(enumerate_nat_trans(twisted[0], twisted[0]).size(), 2u);
}

TEST(EnumerateNatTrans, TwoChoicesBetweenMirrorFunctors) {
  GroupoidPtr z2 = make_fixture("pt_z2");
  GroupoidPtr tb = make_fixture("tb");
  const Groupoid& t = *tb;
  // s fixes A:0; conjugating by r moves it to r^2 s at A:12.
  Homomorphism f{z2, tb, {object(t, "A:0")}, {t.unit(object(t, "A:0")), arrow(t, "A:s:0")}};
  Homomorphism f2{z2, tb, {object(t, "A:12")}, {t.unit(object(t, "A:12")), arrow(t, "A:r^2s:12")}};
  ASSERT_TRUE(validate_homomorphism(f).empty());
  ASSERT_TRUE(validate_homomorphism(f2).empty());
  auto ts = enumerate_nat_trans(f, f2);
  EXPECT_EQ(ts.size(), 2u);
  for (const auto& a : ts) EXPECT_TRUE(validate_nat_trans(a).empty());
}

TEST(BuildGmap, StructureMaps) {
  MappingGroupoid m = build_gmap(make_fixture("pt_z2"), make_fixture("si"));
  const Groupoid& b = *m.base;
  EXPECT_TRUE(validate_groupoid(b).empty());
  ASSERT_EQ(m.functors.size(), b.object_count());
  ASSERT_EQ(m.transformations.size(), b.arrow_count());
  for (Vertex a = 0; a < b.arrow_count(); ++a) {
    EXPECT_EQ(b.src(a), m.transformations[a].from);
    EXPECT_EQ(b.tgt(a), m.transformations[a].to);
    EXPECT_TRUE(validate_nat_trans(m.transformation(a)).empty());
    const auto& inv = m.transformations[b.inv(a)];
    for (Vertex x = 0; x < inv.alpha.size(); ++x) {
      EXPECT_EQ(inv.alpha[x], m.target->inv(m.transformations[a].alpha[x]));
    }
  }
  for (Vertex f = 0; f < b.object_count(); ++f) {
    const auto& u = m.transformations[b.unit(f)];
    EXPECT_EQ(u.alpha[0], m.target->unit(m.functors[f].f0[0]));
  }
  EXPECT_TRUE(m.etale);
}

TEST(BuildGmap, MirrorFunctorHasOrderTwoIsotropy) {
  MappingGroupoid m = build_gmap(make_fixture("pt_z2"), make_fixture("tb"));
  const Groupoid& t = *m.target;
  for (Vertex f = 0; f < m.functors.size(); ++f) {
    if (m.functors[f].f1[1] == arrow(t, "A:s:0")) {
      EXPECT_EQ(isotropy_group(*m.base, f).elements.size(), 2u);
      return;
    }
  }
  FAIL() << "no mirror functor at A:0";
}

TEST(BuildGmap, OrderTwoIntoTbPerChart) {
  MappingGroupoid m = build_gmap(make_fixture("pt_z2"), make_fixture("tb"));
  const CombSpace& functors = m.base->objects();
  std::vector<Vertex> mirror, plain;
  for (Vertex f = 0; f < m.functors.size(); ++f) {
    (is_identity_type(m.functors[f]) ? plain : mirror).push_back(f);
  }
  // One chart-sized component of constant functors per chart.
  auto plain_blocks = components(induced_subgraph(functors, plain));
  ASSERT_EQ(plain_blocks.size(), 3u);
  for (const auto& b : plain_blocks) EXPECT_EQ(b.size(), 37u);
  // Three mirror lines per chart, each through the center.
  auto mirror_blocks = components(induced_subgraph(functors, mirror));
  EXPECT_EQ(mirror_blocks.size(), 9u);
  for (const auto& b : mirror_blocks) EXPECT_EQ(b.size(), 3u);
}

TEST(BuildGmap, ConePointAndIdentitySubgroupoid) {
  GroupoidPtr c3 = make_fixture("c3");
  MappingGroupoid m = build_gmap(make_fixture("pt_z3"), c3);
  std::vector<Vertex> plain;
  for (Vertex f = 0; f < m.functors.size(); ++f) {
    if (is_identity_type(m.functors[f])) plain.push_back(f);
  }
  EXPECT_TRUE(check_isomorphism(share(full_subgroupoid(*m.base, plain)), c3).has_value());
  auto report = gmap_component_report(m);
  std::size_t cone = 0;
  for (const auto& c : report) {
    if (c.identity_type) continue;
    ++cone;
    ASSERT_EQ(c.labels.size(), 1u);
    EXPECT_EQ(c.labels[0].order, 3u);
  }
  // r and r^2 at the center are not conjugate in an abelian group.
  EXPECT_EQ(cone, 2u);
}

TEST(ComponentReport, PointIntoPointGroup) {
  auto report = gmap_component_report(build_gmap(make_fixture("pt_1"), make_fixture("pt_d3")));
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].functor_count, 1u);
  ASSERT_EQ(report[0].labels.size(), 1u);
  EXPECT_EQ(report[0].labels[0].order, 6u);
  EXPECT_TRUE(report[0].identity_type);
}

TEST(BuildGmap, IntervalIntoConeIsATranslationGroupoid) {
  // Maps of a 2-path into the C3 chart, acted on by Z/3.
  auto x = make_space(2, {{0, 1}});
  GroupAction a = rotation_action(3, 3, true);
  MappingGroupoid m = build_gmap(share(unit_groupoid(x)), share(build_translation_groupoid(a)));
  GroupoidPtr expected = share(oracle::map_space_translation(*x, a));
  EXPECT_EQ(m.base->object_count(), expected->object_count());
  EXPECT_TRUE(check_isomorphism(m.base, expected).has_value());
}

}  // namespace
}  // namespace orbi
