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

#ifndef ORBI_COMBSPACE_HPP_
#define ORBI_COMBSPACE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orbi {

using Vertex = std::uint32_t;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A finite simple graph standing in for a topological space. Vertices are
// 0..size()-1, each carrying a unique text label. Adjacency is reflexive for
// the purpose of near(): every vertex is near itself.
class CombSpace {
 public:
  CombSpace() = default;
  // Throws Error(kInvalidSpace) on self-loops, duplicate edges, out of range
  // endpoints or duplicate labels. Empty labels default to decimal ids.
  explicit CombSpace(std::size_t n, const std::vector<Edge>& edges = {},
                     std::vector<std::string> labels = {});

  std::size_t size() const { return adjacency_.size(); }
  bool empty() const { return adjacency_.empty(); }
  std::size_t edge_count() const { return edge_count_; }

  // Sorted, excludes v itself.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const;
  bool near(Vertex a, Vertex b) const { return a == b || adjacent(a, b); }
  // Every edge once, with a < b, in lexicographic order.
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(const std::string& label) const;

  friend bool operator==(const CombSpace& x, const CombSpace& y) {
    return x.adjacency_ == y.adjacency_ && x.labels_ == y.labels_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> by_label_;
  std::size_t edge_count_ = 0;
};

using SpacePtr = std::shared_ptr<const CombSpace>;

inline SpacePtr make_space(std::size_t n, const std::vector<Edge>& edges = {},
                           std::vector<std::string> labels = {}) {
  return std::make_shared<const CombSpace>(n, edges, std::move(labels));
}

// Connected components ordered by least vertex; each block sorted.
std::vector<std::vector<Vertex>> components(const CombSpace& space);
// Component number of every vertex, consistent with components().
std::vector<std::size_t> component_index(const CombSpace& space);

struct ContinuousMap {
  SpacePtr domain;
  SpacePtr codomain;
  std::vector<Vertex> assignment;
};

struct ContinuityResult {
  bool ok = true;
  std::optional<Edge> witness;  // first domain edge that is torn apart
};

// Throws Error(kUndefinedVertex) if the assignment is not total on the
// domain or names a vertex outside the codomain.
ContinuityResult check_continuous(const ContinuousMap& map);
ContinuityResult check_continuous(const CombSpace& domain,
                                  const CombSpace& codomain,
                                  const std::vector<Vertex>& assignment);

// g after f. Throws kCodomainMismatch if f.codomain is not g.domain.
ContinuousMap compose(const ContinuousMap& f, const ContinuousMap& g);

struct FiberProduct {
  SpacePtr space;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // vertex -> (a, b)
  ContinuousMap first;
  ContinuousMap second;
};

// Pairs (a, b) with f(a) = g(b), ordered lexicographically. Throws
// kCodomainMismatch unless f and g share a codomain of equal shape.
FiberProduct fiber_product(const ContinuousMap& f, const ContinuousMap& g);

// Subgraph on the given vertices, relabelled in the order given.
CombSpace induced_subgraph(const CombSpace& space,
                           const std::vector<Vertex>& vertices);

// Vertices within graph distance radius of center, sorted.
std::vector<Vertex> ball(const CombSpace& space, Vertex center,
                         std::size_t radius);

// Colour-preserving graph isomorphism, or nullopt. Colours may be empty.
std::optional<std::vector<Vertex>> find_graph_isomorphism(
    const CombSpace& x, const std::vector<std::uint64_t>& x_colors,
    const CombSpace& y, const std::vector<std::uint64_t>& y_colors);

}  // namespace orbi

#endif  // ORBI_COMBSPACE_HPP_
