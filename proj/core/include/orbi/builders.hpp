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

#ifndef ORBI_BUILDERS_HPP_
#define ORBI_BUILDERS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbi/group.hpp"
#include "orbi/groupoid.hpp"
#include "orbi/morphism.hpp"

namespace orbi {

// One object, one arrow per group element.
Groupoid build_point_groupoid(const FiniteGroup& group);

// Arrow (g, x) has id g * |X| + x, runs x -> gx, and comp((g,x),(h,gx)) is
// (hg, x). Throws Error(kInvalidAction) if the action is not valid.
Groupoid build_translation_groupoid(const GroupAction& action);

// A connected family of arrows given by their (source, target) pairs in a
// shared object space, with edges between family members.
struct SheetFamily {
  std::vector<std::pair<Vertex, Vertex>> points;
  std::vector<Edge> edges;  // indices into points
  std::vector<std::string> labels;
  bool identity = false;  // the units live in identity families
};

// Assembles a groupoid from arrow families that act as local isomorphisms
// between neighbourhoods. Composites and inverses are located by comparing
// the local maps of candidate arrows; Error(kCompositionNotClosed) is raised
// if a composite matches no arrow or more than one.
Groupoid build_local_groupoid(SpacePtr objects, const std::vector<SheetFamily>& families);

struct Gluing {
  std::size_t from = 0;
  std::size_t to = 0;
  // Vertex pairs (in chart `from`, in chart `to`) of the overlap.
  std::vector<std::pair<Vertex, Vertex>> overlap;
  // Subgroup of G_from x G_to whose elements identify copies of the overlap.
  std::vector<std::pair<std::size_t, std::size_t>> twist;
};

struct Chart {
  std::string name;
  GroupAction action;
};

// Objects are the disjoint union of the chart spaces. Arrows are the chart
// translations plus one copy of each overlap per twist coset in
// G_from x G_to, together with inverse copies.
// Errors: kInvalidAction, kGlueNotIso, kCompositionNotClosed.
Groupoid build_atlas_groupoid(const std::vector<Chart>& charts,
                              const std::vector<Gluing>& gluings);

struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
};

struct IntervalCover {
  std::vector<Interval> charts;
  std::size_t length = 0;  // number of positions
  GroupoidPtr groupoid;
  std::vector<std::vector<Vertex>> object_at;  // [chart][position - first]
  std::vector<std::size_t> chart_of;           // per object
  std::vector<std::size_t> position_of;        // per object

  Vertex object(std::size_t chart, std::size_t position) const {
    return object_at[chart][position - charts[chart].first];
  }
};

// Path charts over positions 0..length-1 with one gluing arrow per shared
// position and ordered pair of charts. Charts must overlap in sequence.
// Throws Error(kBadOverlap) otherwise.
IntervalCover build_interval_cover(const std::vector<Interval>& charts);

// n charts of chart_length positions, consecutive charts sharing `overlap`
// positions. Throws Error(kBadOverlap) unless 0 < overlap < chart_length
// (the overlap is ignored for n = 1).
IntervalCover build_interval_chain(std::size_t n, std::size_t overlap,
                                   std::size_t chart_length = 4);

// Sends each chart of `fine` into the first chart of `coarse` containing it.
// Throws Error(kInvalidArgument) if some chart fits nowhere.
Homomorphism refine(const IntervalCover& fine, const IntervalCover& coarse);

// The single-chart cover of the same positions.
IntervalCover unbroken(const IntervalCover& cover);

}  // namespace orbi

#endif  // ORBI_BUILDERS_HPP_
