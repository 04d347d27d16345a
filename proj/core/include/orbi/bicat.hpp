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

#ifndef ORBI_BICAT_HPP_
#define ORBI_BICAT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbi/groupoid.hpp"
#include "orbi/morphism.hpp"

namespace orbi {

// G <- K -> H. The left leg must be an essential equivalence.
struct Span {
  Homomorphism left;
  Homomorphism right;
  const GroupoidPtr& apex() const { return left.source; }
};

namespace span_check {
inline constexpr const char* kApex = "apex";
inline constexpr const char* kLeftLeg = "left leg";
inline constexpr const char* kRightLeg = "right leg";
inline constexpr const char* kShape = "shape";
inline constexpr const char* kE1 = "E1";
inline constexpr const char* kE2 = "E2";
}  // namespace span_check

std::vector<Violation> validate_span(const Span& s);
Span identity_span(const GroupoidPtr& g);

// Weak pullback of f: A -> H and g: B -> H. Objects are triples (a, h, b)
// with h: f(a) -> g(b); an arrow (u, v) from (a, h, b) runs to
// (a', u^-1 h v, b'). `cell` is the canonical f first => g second.
struct WeakPullback {
  GroupoidPtr apex;
  Homomorphism first;
  Homomorphism second;
  NatTrans cell;
  std::vector<std::vector<Vertex>> triples;  // object -> {a, h, b}
};

// Throws Error(kCodomainMismatch) unless f and g share a target.
WeakPullback weak_pullback(const Homomorphism& f, const Homomorphism& g);

// (G <- K -> H) then (H <- K' -> L), with apex the weak pullback of
// K -> H <- K'. Throws Error(kCodomainMismatch) if the middle groupoids
// differ.
Span compose_spans(const Span& s1, const Span& s2);

// alpha: top.left nu => bottom.left nu2 and
// beta: top.right nu => bottom.right nu2, where nu: L -> K_top and
// nu2: L -> K_bottom.
struct TwoCellDiagram {
  Span top;
  Span bottom;
  Homomorphism nu;
  Homomorphism nu2;
  NatTrans alpha;
  NatTrans beta;
  const GroupoidPtr& middle() const { return nu.source; }
};

std::vector<Violation> validate_two_cell_diagram(const TwoCellDiagram& d);

// Common refinement of two diagrams over the same spans:
// lambda1: M -> L1, lambda2: M -> L2, gamma: nu_1 lambda1 => nu_2 lambda2
// and gamma2: nu2_1 lambda1 => nu2_2 lambda2.
struct TwoCellWitness {
  Homomorphism lambda1;
  Homomorphism lambda2;
  NatTrans gamma;
  NatTrans gamma2;
  const GroupoidPtr& refinement() const { return lambda1.source; }
};

struct TwoCellComparison {
  bool equal = true;
  // 1: the pasting composites into the left target differ.
  // 2: the pasting composites into the right target differ.
  std::optional<int> failing_condition;
  std::optional<Vertex> object;  // first object of M where they differ
};

// Compares the pasted transformations of d1 and d2 along the witness,
// object by object on M. Throws Error(kBadWitness) if the lambdas are not
// essential equivalences or any endpoint does not match.
TwoCellComparison two_cells_equal(const TwoCellDiagram& d1, const TwoCellDiagram& d2,
                                  const TwoCellWitness& w);

// Searches refinements M with at most `bound` objects: the middles
// themselves and their weak pullback over the top apex. Nullopt means no
// witness within the bound, not that the 2-cells differ.
std::optional<TwoCellWitness> find_two_cell_witness(const TwoCellDiagram& d1,
                                                    const TwoCellDiagram& d2,
                                                    std::size_t bound);

enum class MoritaStatus { kSpan, kFastReject, kNotFoundWithinBound };

struct MoritaResult {
  MoritaStatus status = MoritaStatus::kNotFoundWithinBound;
  std::optional<Span> span;  // both legs essential equivalences
  std::string reason;
};

// Rejects quickly when the labelled quotients differ; otherwise tries
// apexes G and H (at most `bound` objects) with an essential equivalence
// onto the other side.
MoritaResult morita_equivalent(const GroupoidPtr& g, const GroupoidPtr& h, std::size_t bound);

// Isomorphism of orbit graphs respecting isotropy labels.
bool same_labelled_quotient(const Groupoid& g, const Groupoid& h);

}  // namespace orbi

#endif  // ORBI_BICAT_HPP_
