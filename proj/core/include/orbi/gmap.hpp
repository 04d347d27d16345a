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

#ifndef ORBI_GMAP_HPP_
#define ORBI_GMAP_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orbi/groupoid.hpp"
#include "orbi/morphism.hpp"

namespace orbi {

// Pins f0 on chosen objects and f1 on chosen arrows of the source.
struct HomConstraints {
  std::vector<std::pair<Vertex, Vertex>> objects;
  std::vector<std::pair<Vertex, Vertex>> arrows;
};

// Every homomorphism g -> h satisfying the constraints, sorted by f1 (then
// f0). The search may fan out over `threads` workers; the result does not
// depend on the thread count.
std::vector<Homomorphism> enumerate_homomorphisms(const GroupoidPtr& g,
                                                  const GroupoidPtr& h,
                                                  const HomConstraints& constraints = {},
                                                  unsigned threads = 1);

// Visits homomorphisms in search order (not sorted) until visit returns
// false. Returns false if the visit was cut short.
bool for_each_homomorphism(const GroupoidPtr& g, const GroupoidPtr& h,
                           const HomConstraints& constraints,
                           const std::function<bool(const Homomorphism&)>& visit);

// Every natural transformation f => f2, sorted by alpha.
std::vector<NatTrans> enumerate_nat_trans(const Homomorphism& f, const Homomorphism& f2);

struct MappingGroupoid {
  struct Arrow {
    Vertex from = 0;
    Vertex to = 0;
    std::vector<Vertex> alpha;
  };

  GroupoidPtr base;
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<Homomorphism> functors;  // object vertex -> functor
  std::vector<Arrow> transformations;  // arrow vertex -> (f, alpha, f')
  bool etale = false;

  NatTrans transformation(Vertex arrow) const;
};

// Objects are the homomorphisms g -> h and arrows the natural
// transformations. Two functors are adjacent when their f1 agree up to
// adjacency at every arrow; two transformations are adjacent when their
// endpoints are and their alphas agree up to adjacency at every object.
MappingGroupoid build_gmap(const GroupoidPtr& g, const GroupoidPtr& h, unsigned threads = 1);

struct GmapComponent {
  std::vector<Vertex> orbits;            // quotient vertices, sorted
  std::size_t functor_count = 0;
  std::vector<IsotropyLabel> labels;     // sorted multiset over orbits
  std::vector<std::size_t> arrow_components;  // components of h's arrow space hit
  bool identity_type = false;            // every functor sends arrows to units
  std::string to_string() const;
};

// One entry per connected component of the quotient, in order of least
// quotient vertex.
std::vector<GmapComponent> gmap_component_report(const MappingGroupoid& m);

// True if f1 sends every arrow to a unit.
bool is_identity_type(const Homomorphism& f);

}  // namespace orbi

#endif  // ORBI_GMAP_HPP_
