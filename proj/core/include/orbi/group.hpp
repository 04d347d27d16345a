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

#ifndef ORBI_GROUP_HPP_
#define ORBI_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbi/combspace.hpp"

namespace orbi {

// A finite group given by its multiplication table. mul(a, b) is the usual
// product ab, so for actions (ab)x = a(bx).
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup({"e"}, {{0}}) {}
  // Throws Error(kInvalidGroup) unless the table is a group table.
  FiniteGroup(std::vector<std::string> names,
              std::vector<std::vector<std::size_t>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  // Order 2n. Element k + n*b is r^k s^b; r rotates, s reflects.
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  const std::string& name(std::size_t a) const { return names_[a]; }
  std::optional<std::size_t> find(const std::string& name) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

// Sorted element orders: the invariant used for isotropy labels.
std::vector<std::size_t> element_orders(const FiniteGroup& g);

// Bijection phi with phi(ab) = phi(a)phi(b), or nullopt.
std::optional<std::vector<std::size_t>> find_group_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h);

struct GroupAction {
  FiniteGroup group;
  SpacePtr space;
  std::vector<std::vector<Vertex>> act;  // act[g][x]
};

// Nullopt for a valid action, otherwise a description of the first failure.
std::optional<std::string> action_violation(const GroupAction& action);

// Action of the cyclic group Z/n on a ring of n*step vertices by
// v -> v + step, plus an optional fixed centre joined to every ring vertex.
GroupAction rotation_action(std::size_t n, std::size_t step, bool center);
// Action of the dihedral group on a ring of n*step vertices: r^k s^b sends v
// to (-1)^b v + k*step. Optional fixed centre joined to the ring.
GroupAction dihedral_action(std::size_t n, std::size_t step, bool center);

}  // namespace orbi

#endif  // ORBI_GROUP_HPP_
