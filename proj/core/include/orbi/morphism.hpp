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

#ifndef ORBI_MORPHISM_HPP_
#define ORBI_MORPHISM_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbi/groupoid.hpp"

namespace orbi {

struct Homomorphism {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<Vertex> f0;  // objects of source -> objects of target
  std::vector<Vertex> f1;  // arrows of source -> arrows of target
};

// alpha(x): from.f0(x) -> to.f0(x).
struct NatTrans {
  Homomorphism from;
  Homomorphism to;
  std::vector<Vertex> alpha;
};

namespace law {
inline constexpr const char* kShape = "structure map";
inline constexpr const char* kUnit = "unit preservation";
inline constexpr const char* kSource = "source preservation";
inline constexpr const char* kTarget = "target preservation";
inline constexpr const char* kComposition = "composition preservation";
inline constexpr const char* kContinuity = "continuity";
inline constexpr const char* kEndpoint = "endpoint";
inline constexpr const char* kNaturality = "naturality";
}  // namespace law

std::vector<Violation> validate_homomorphism(const Homomorphism& f,
                                             std::size_t limit = 64);
std::vector<Violation> validate_nat_trans(const NatTrans& a,
                                          std::size_t limit = 64);

Homomorphism identity_homomorphism(GroupoidPtr g);
// g after f. Throws Error(kCodomainMismatch) if f.target is not g.source.
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);
NatTrans identity_transformation(const Homomorphism& f);
// a, then b (pointwise composition).
NatTrans vertical_compose(const NatTrans& a, const NatTrans& b);
// a whiskered by k on the source side: (f k => f' k).
NatTrans whisker(const NatTrans& a, const Homomorphism& k);
// a whiskered by h on the target side: (h f => h f').
NatTrans whisker(const Homomorphism& h, const NatTrans& a);

struct EssentialEquivalence {
  bool e1 = false;
  bool e2 = false;
  std::optional<Vertex> unreached;                   // object of the target
  std::optional<std::pair<Vertex, Vertex>> not_full;  // pair of source objects
  bool ok() const { return e1 && e2; }
};

// E1 is checked as set-level essential surjectivity; E2 as a bijection on
// every hom-set.
EssentialEquivalence check_essential_equivalence(const Homomorphism& f);

struct IsomorphismWitness {
  Homomorphism forward;
  Homomorphism backward;
};

// Strict isomorphism: bijective on objects and arrows, preserving and
// reflecting adjacency, structure maps and composition.
std::optional<IsomorphismWitness> check_isomorphism(const GroupoidPtr& g,
                                                    const GroupoidPtr& h);

}  // namespace orbi

#endif  // ORBI_MORPHISM_HPP_
