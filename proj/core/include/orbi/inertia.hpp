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

#ifndef ORBI_INERTIA_HPP_
#define ORBI_INERTIA_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orbi/gmap.hpp"
#include "orbi/groupoid.hpp"
#include "orbi/morphism.hpp"

namespace orbi {

// Objects are the loops of the parent; the arrow (h, g) runs from the loop
// g at x to its conjugate h^-1 g h at tgt(h) (composition read left to
// right).
struct InertiaGroupoid {
  GroupoidPtr base;
  GroupoidPtr parent;
  std::vector<Vertex> loops;                      // object -> parent arrow
  std::vector<std::pair<Vertex, Vertex>> conj;    // arrow -> (h, object)

  std::optional<Vertex> object_of(Vertex loop) const;
};

InertiaGroupoid build_inertia(const GroupoidPtr& g);

// lcm of the isotropy group orders over the orbits.
std::size_t minimal_exponent(const Groupoid& g);

// Phi from GMap(*_{Z/n}, G) to the inertia groupoid: a functor goes to the
// image of the generator, a transformation to its component at the point.
struct PhiFunctor {
  std::size_t n = 1;
  MappingGroupoid gmap;
  InertiaGroupoid inertia;
  Homomorphism phi;
};

PhiFunctor phi_functor(std::size_t n, const GroupoidPtr& g, unsigned threads = 1);

struct PhiReport {
  bool valid = false;  // phi passes validate_homomorphism
  bool injective_on_objects = false;
  bool full = false;
  bool faithful = false;
  bool surjective_on_objects = false;
  bool surjective_on_arrows = false;
  bool embedding() const { return valid && injective_on_objects && full && faithful; }
};

PhiReport verify_phi_properties(const PhiFunctor& p);
PhiReport verify_phi_properties(std::size_t n, const GroupoidPtr& g);

struct InertiaIsoResult {
  std::size_t n = 1;
  PhiReport report;
  std::optional<IsomorphismWitness> witness;  // GMap(*_{Z/n}, G) -> inertia
  bool ok() const {
    return witness.has_value() && report.embedding() && report.surjective_on_objects &&
           report.surjective_on_arrows;
  }
};

InertiaIsoResult verify_inertia_iso(const GroupoidPtr& g, unsigned threads = 1);

}  // namespace orbi

#endif  // ORBI_INERTIA_HPP_
