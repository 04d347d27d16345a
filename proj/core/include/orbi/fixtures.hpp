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

#ifndef ORBI_FIXTURES_HPP_
#define ORBI_FIXTURES_HPP_

#include <string>
#include <vector>

#include "orbi/bicat.hpp"
#include "orbi/builders.hpp"
#include "orbi/groupoid.hpp"

namespace orbi {

// Named models shipped with the library:
//   pt_1 pt_z2 pt_z3 pt_z4 pt_z2xz2 pt_z6 pt_d3  point groupoids
//   si        Z/2 acting on an 8-cycle by v -> -v
//   si2       the same interval split into two reflected 7-path charts
//   c3        Z/3 on a 9-cycle with a centre
//   teardrop  a Z/3 disc glued 3:1 onto a trivial disc along an annulus
//   tb        three D3 charts glued pairwise along mirror neighbourhoods
//   i1 i2 i3  covers of an 8-position interval by 1, 2 and 3 charts
const std::vector<std::string>& fixture_names();
// Cached. Throws Error(kInvalidArgument) for an unknown name.
GroupoidPtr make_fixture(const std::string& name);

Groupoid build_si();
Groupoid build_si2();
Groupoid build_c3();
Groupoid build_teardrop();
Groupoid build_tb();
IntervalCover interval_fixture(std::size_t charts);

// Centre objects of the two teardrop charts ("D1:c" and "D2:c").
Vertex teardrop_center(const Groupoid& teardrop, int chart);

// Two 2-cell diagrams between the spans I <- RI2 -> TB and I <- LI2 -> TB
// that paste to the same 2-cell. d1 has middle I3, d2 the finer I4, and
// `witness` refines d2's middle into d1's.
struct TwoCellExample {
  IntervalCover interval;  // one chart
  IntervalCover right2;    // [0,3] [2,7]
  IntervalCover left2;     // [0,5] [4,7]
  IntervalCover i3;        // [0,3] [2,5] [4,7]
  IntervalCover i4;        // [0,2] [2,4] [4,6] [6,7]
  IntervalCover padded;    // [0,3] [2,5] [3,4] [4,7]
  GroupoidPtr tb;
  TwoCellDiagram d1;
  TwoCellDiagram d2;
  TwoCellDiagram d3;        // middle `padded`
  TwoCellWitness witness;   // d1 vs d2, refinement i4
  TwoCellWitness witness3;  // d1 vs d3, refinement i3
};

TwoCellExample two_cell_example();

}  // namespace orbi

#endif  // ORBI_FIXTURES_HPP_
