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


#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orbi/builders.hpp"
#include "orbi/fixtures.hpp"
#include "orbi/gmap.hpp"

namespace orbi {
namespace {

struct Named {
  std::string name;
  GroupoidPtr g;
};

std::vector<Named> point_sources() {
  std::vector<Named> out;
  for (const std::string& name : fixture_names()) {
    if (name.rfind("pt_", 0) == 0) out.push_back({name, make_fixture(name)});
  }
  return out;
}

std::vector<Named> unit_sources() {
  return {{"unit_1", share(unit_groupoid(make_space(1)))},
          {"unit_path2", share(unit_groupoid(make_space(2, {{0, 1}})))},
          {"unit_path3", share(unit_groupoid(make_space(3, {{0, 1}, {1, 2}})))},
          {"unit_pair", share(unit_groupoid(make_space(2)))}};
}

std::vector<Named> targets() {
  // Every fixture with at most 24 arrows, plus the cone chart.
  std::vector<Named> out;
  for (const std::string& name : fixture_names()) {
    GroupoidPtr g = make_fixture(name);
    if (g->arrow_count() <= 24 || name == "c3") out.push_back({name, g});
  }
  return out;
}

void expect_same_homs(const std::vector<Homomorphism>& got, const std::vector<Homomorphism>& want,
                      const std::string& what) {
  ASSERT_EQ(got.size(), want.size()) << what;
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].f0, want[i].f0) << what << " #" << i;
    EXPECT_EQ(got[i].f1, want[i].f1) << what << " #" << i;
  }
}

void check_pair(const Named& s, const Named& t) {
  const std::string what = s.name + " -> " + t.name;
  auto want = oracle::brute_force_homomorphisms(s.g, t.g);
  auto got = enumerate_homomorphisms(s.g, t.g);
  expect_same_homs(got, want, what);
  expect_same_homs(enumerate_homomorphisms(s.g, t.g, {}, 3), want, what + " threaded");

  // Natural transformations between a bounded selection of pairs.
  const std::size_t cap = std::min<std::size_t>(got.size(), 8);
  for (std::size_t i = 0; i < cap; ++i) {
    for (std::size_t j = 0; j < cap; ++j) {
      auto nt = enumerate_nat_trans(got[i], got[j]);
      auto nt_want = oracle::brute_force_nat_trans(got[i], got[j]);
      ASSERT_EQ(nt.size(), nt_want.size()) << what << " " << i << "=>" << j;
      for (std::size_t k = 0; k < nt.size(); ++k) EXPECT_EQ(nt[k].alpha, nt_want[k].alpha);
    }
  }
}

TEST(Oracle, HomomorphismsFromPointGroupoids) {
  for (const Named& s : point_sources()) {
    ASSERT_LE(s.g->arrow_count(), 6u);
    for (const Named& t : targets()) check_pair(s, t);
  }
}

TEST(Oracle, HomomorphismsFromUnitGroupoids) {
  for (const Named& s : unit_sources()) {
    for (const Named& t : targets()) check_pair(s, t);
  }
}

TEST(Oracle, PinsFilterTheBruteForceList) {
  auto s = make_fixture("pt_z4");
  auto t = make_fixture("si");
  auto all = oracle::brute_force_homomorphisms(s, t);
  for (Vertex y = 0; y < t->object_count(); ++y) {
    HomConstraints c;
    c.objects = {{0, y}};
    std::vector<Homomorphism> want;
    for (const auto& f : all) {
      if (f.f0[0] == y) want.push_back(f);
    }
    expect_same_homs(enumerate_homomorphisms(s, t, c), want, "pin " + std::to_string(y));
  }
}

TEST(Oracle, ContinuousMapsMatchUnitHomomorphisms) {
  auto path = make_space(3, {{0, 1}, {1, 2}});
  auto cycle = make_space(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto maps = oracle::continuous_maps(*path, *cycle);
  auto homs = enumerate_homomorphisms(share(unit_groupoid(path)), share(unit_groupoid(cycle)));
  std::vector<std::vector<Vertex>> f0s;
  for (const auto& f : homs) f0s.push_back(f.f0);
  std::sort(f0s.begin(), f0s.end());
  EXPECT_EQ(f0s, maps);
  EXPECT_EQ(maps.size(), 4u * 3u * 3u);
}

}  // namespace
}  // namespace orbi
