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

#ifndef ORBI_GROUPOID_HPP_
#define ORBI_GROUPOID_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbi/combspace.hpp"
#include "orbi/group.hpp"

namespace orbi {

// comp(first, second) = result means "first, then second": first: x -> y,
// second: y -> z, result: x -> z.
struct CompEntry {
  Vertex first = 0;
  Vertex second = 0;
  Vertex result = 0;
  friend bool operator==(const CompEntry&, const CompEntry&) = default;
  friend auto operator<=>(const CompEntry&, const CompEntry&) = default;
};

struct GroupoidData {
  SpacePtr objects;
  SpacePtr arrows;
  std::vector<Vertex> src;
  std::vector<Vertex> tgt;
  std::vector<Vertex> unit;
  std::vector<Vertex> inv;
  std::vector<CompEntry> comp;
};

// Structure maps and an explicit composition table. The constructor only
// checks that every table is total and in range (Error kDanglingId); the
// groupoid axioms are checked by validate_groupoid.
class Groupoid {
 public:
  explicit Groupoid(GroupoidData data);

  const CombSpace& objects() const { return *data_.objects; }
  const CombSpace& arrows() const { return *data_.arrows; }
  std::size_t object_count() const { return data_.objects->size(); }
  std::size_t arrow_count() const { return data_.arrows->size(); }

  Vertex src(Vertex a) const { return data_.src[a]; }
  Vertex tgt(Vertex a) const { return data_.tgt[a]; }
  Vertex unit(Vertex x) const { return data_.unit[x]; }
  Vertex inv(Vertex a) const { return data_.inv[a]; }
  std::optional<Vertex> comp(Vertex first, Vertex second) const;
  // Sorted by (first, second).
  const std::vector<CompEntry>& comp_entries() const { return data_.comp; }
  // Entries with the given first arrow.
  std::span<const CompEntry> comp_row(Vertex first) const;

  // Arrows leaving x, sorted by (target, id).
  std::span<const Vertex> arrows_from(Vertex x) const;
  // Arrows entering x, sorted by (source, id).
  std::span<const Vertex> arrows_to(Vertex x) const;
  std::span<const Vertex> arrows_between(Vertex x, Vertex y) const;
  std::span<const Vertex> loops(Vertex x) const { return arrows_between(x, x); }

  const GroupoidData& data() const { return data_; }

  friend bool operator==(const Groupoid& g, const Groupoid& h);

 private:
  GroupoidData data_;
  std::vector<std::size_t> comp_offset_;
  std::vector<Vertex> out_;
  std::vector<std::size_t> out_offset_;
  std::vector<Vertex> in_;
  std::vector<std::size_t> in_offset_;
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

inline GroupoidPtr share(Groupoid g) {
  return std::make_shared<const Groupoid>(std::move(g));
}

struct Violation {
  std::string kind;
  std::vector<Vertex> witness;
  std::string detail;
};

namespace axiom {
inline constexpr const char* kStructureMap = "structure map";
inline constexpr const char* kUnitEndpoints = "unit endpoints";
inline constexpr const char* kCompositionDomain = "composition domain";
inline constexpr const char* kCompositionEndpoints = "composition endpoints";
inline constexpr const char* kIdentity = "identity law";
inline constexpr const char* kInverse = "inverse law";
inline constexpr const char* kAssociativity = "associativity";
inline constexpr const char* kContinuity = "continuity";
}  // namespace axiom

// Empty result means the groupoid axioms hold. At most `limit` violations
// are collected.
std::vector<Violation> validate_groupoid(const Groupoid& g,
                                         std::size_t limit = 64);

struct IsotropyLabel {
  std::size_t order = 1;
  std::vector<std::size_t> element_orders{1};
  friend bool operator==(const IsotropyLabel&, const IsotropyLabel&) = default;
  friend auto operator<=>(const IsotropyLabel&, const IsotropyLabel&) = default;
  std::string to_string() const;
};

struct IsotropyGroup {
  Vertex base_point = 0;
  std::vector<Vertex> elements;              // sorted arrow ids
  std::vector<std::vector<std::size_t>> table;  // indices into elements
  std::size_t identity = 0;                  // index of unit(base_point)

  // Throws Error(kInvalidGroup) if the restricted table is not a group.
  FiniteGroup as_group(const Groupoid& g) const;
  IsotropyLabel label() const;
};

// Loops at x with the restricted composition table. The table follows the
// groupoid's "first, then second" convention.
IsotropyGroup isotropy_group(const Groupoid& g, Vertex x);

struct QuotientSpace {
  SpacePtr orbit_graph;
  std::vector<Vertex> projection;           // object -> orbit
  std::vector<std::vector<Vertex>> orbits;  // ordered by least member
  std::vector<IsotropyLabel> labels;
  bool representative_independent = true;
};

QuotientSpace quotient(const Groupoid& g);

struct EtaleResult {
  bool ok = true;
  std::optional<Vertex> witness;
  std::string map;  // "src" or "tgt" on failure
};

EtaleResult check_etale(const Groupoid& g);

struct LocalStructure {
  Vertex base = 0;
  std::size_t radius = 0;
  std::vector<Vertex> neighborhood;        // sorted object ids
  std::vector<std::vector<Vertex>> sheets;  // one per loop at base
};

// Largest ball V around x on which the arrows with both ends in V split into
// one sheet per loop at x, each mapped isomorphically onto V by src and tgt.
// Throws Error(kNotEtale) if check_etale fails.
LocalStructure orbit_local_structure(const Groupoid& g, Vertex x);

Groupoid unit_groupoid(SpacePtr space);
// Full subgroupoid on the given objects (renumbered in the order given).
Groupoid full_subgroupoid(const Groupoid& g, const std::vector<Vertex>& objects);
Groupoid disjoint_union(const Groupoid& g, const Groupoid& h);

}  // namespace orbi

#endif  // ORBI_GROUPOID_HPP_
