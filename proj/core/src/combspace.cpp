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

#include "orbi/combspace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "orbi/error.hpp"

namespace orbi {

CombSpace::CombSpace(std::size_t n, const std::vector<Edge>& edges,
                     std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (labels_.empty()) labels_.resize(n);
  if (labels_.size() != n) {
    throw Error(ErrorCode::kInvalidSpace, "label count does not match vertex count");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (labels_[v].empty()) labels_[v] = std::to_string(v);
    if (!by_label_.emplace(labels_[v], v).second) {
      throw Error(ErrorCode::kInvalidSpace, "duplicate vertex id '" + labels_[v] + "'");
    }
  }
  for (const Edge& e : edges) {
    if (e.a >= n || e.b >= n) {
      throw Error(ErrorCode::kInvalidSpace, "edge endpoint is not a vertex");
    }
    if (e.a == e.b) {
      throw Error(ErrorCode::kInvalidSpace,
                  "self-loop at '" + labels_[e.a] + "'");
    }
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw Error(ErrorCode::kInvalidSpace,
                  "duplicate edge at '" + labels_[v] + "'");
    }
  }
  edge_count_ = edges.size();
}

bool CombSpace::adjacent(Vertex a, Vertex b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> CombSpace::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < adjacency_.size(); ++a) {
    for (Vertex b : adjacency_[a]) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

std::optional<Vertex> CombSpace::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> component_index(const CombSpace& space) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(space.size(), kUnset);
  std::size_t next = 0;
  std::deque<Vertex> queue;
  for (Vertex start = 0; start < space.size(); ++start) {
    if (comp[start] != kUnset) continue;
    comp[start] = next;
    queue.push_back(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : space.neighbors(v)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<Vertex>> components(const CombSpace& space) {
  auto comp = component_index(space);
  std::size_t count = 0;
  for (std::size_t c : comp) count = std::max(count, c + 1);
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < space.size(); ++v) out[comp[v]].push_back(v);
  return out;
}

ContinuityResult check_continuous(const CombSpace& domain,
                                  const CombSpace& codomain,
                                  const std::vector<Vertex>& assignment) {
  if (assignment.size() != domain.size()) {
    throw Error(ErrorCode::kUndefinedVertex,
                "assignment is not total on the domain");
  }
  for (Vertex v = 0; v < assignment.size(); ++v) {
    if (assignment[v] >= codomain.size()) {
      throw Error(ErrorCode::kUndefinedVertex,
                  "vertex '" + domain.label(v) + "' maps outside the codomain");
    }
  }
  for (Vertex a = 0; a < domain.size(); ++a) {
    for (Vertex b : domain.neighbors(a)) {
      if (a < b && !codomain.near(assignment[a], assignment[b])) {
        return {false, Edge{a, b}};
      }
    }
  }
  return {};
}

ContinuityResult check_continuous(const ContinuousMap& map) {
  return check_continuous(*map.domain, *map.codomain, map.assignment);
}

ContinuousMap compose(const ContinuousMap& f, const ContinuousMap& g) {
  if (f.codomain != g.domain && !(*f.codomain == *g.domain)) {
    throw Error(ErrorCode::kCodomainMismatch, "cannot compose maps");
  }
  ContinuousMap out{f.domain, g.codomain, {}};
  out.assignment.reserve(f.assignment.size());
  for (Vertex v : f.assignment) out.assignment.push_back(g.assignment.at(v));
  return out;
}

FiberProduct fiber_product(const ContinuousMap& f, const ContinuousMap& g) {
  if (f.codomain != g.codomain && !(*f.codomain == *g.codomain)) {
    throw Error(ErrorCode::kCodomainMismatch,
                "fiber product needs a shared codomain");
  }
  std::vector<std::vector<Vertex>> by_image(f.codomain->size());
  for (Vertex b = 0; b < g.assignment.size(); ++b) {
    by_image.at(g.assignment[b]).push_back(b);
  }
  FiberProduct out;
  std::map<std::pair<Vertex, Vertex>, Vertex> index;
  for (Vertex a = 0; a < f.assignment.size(); ++a) {
    for (Vertex b : by_image.at(f.assignment[a])) {
      index.emplace(std::make_pair(a, b), static_cast<Vertex>(out.pairs.size()));
      out.pairs.emplace_back(a, b);
    }
  }
  const CombSpace& x = *f.domain;
  const CombSpace& y = *g.domain;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(out.pairs.size());
  for (Vertex p = 0; p < out.pairs.size(); ++p) {
    auto [a, b] = out.pairs[p];
    labels.push_back("(" + x.label(a) + "," + y.label(b) + ")");
    std::vector<Vertex> na{a};
    na.insert(na.end(), x.neighbors(a).begin(), x.neighbors(a).end());
    std::vector<Vertex> nb{b};
    nb.insert(nb.end(), y.neighbors(b).begin(), y.neighbors(b).end());
    for (Vertex a2 : na) {
      for (Vertex b2 : nb) {
        auto it = index.find({a2, b2});
        if (it != index.end() && it->second > p) edges.push_back({p, it->second});
      }
    }
  }
  out.space = make_space(out.pairs.size(), edges, std::move(labels));
  out.first = {out.space, f.domain, {}};
  out.second = {out.space, g.domain, {}};
  for (auto [a, b] : out.pairs) {
    out.first.assignment.push_back(a);
    out.second.assignment.push_back(b);
  }
  return out;
}

CombSpace induced_subgraph(const CombSpace& space,
                           const std::vector<Vertex>& vertices) {
  std::vector<std::int64_t> position(space.size(), -1);
  std::vector<std::string> labels;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    position.at(vertices[i]) = i;
    labels.push_back(space.label(vertices[i]));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex w : space.neighbors(vertices[i])) {
      if (position[w] > static_cast<std::int64_t>(i)) {
        edges.push_back({i, static_cast<Vertex>(position[w])});
      }
    }
  }
  return CombSpace(vertices.size(), edges, std::move(labels));
}

std::vector<Vertex> ball(const CombSpace& space, Vertex center,
                         std::size_t radius) {
  std::vector<std::size_t> dist(space.size(), static_cast<std::size_t>(-1));
  std::deque<Vertex> queue{center};
  dist[center] = 0;
  std::vector<Vertex> out;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    out.push_back(v);
    if (dist[v] == radius) continue;
    for (Vertex w : space.neighbors(v)) {
      if (dist[w] == static_cast<std::size_t>(-1)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Joint colour refinement over two graphs so the resulting colours are
// comparable. Returns false if the colour histograms diverge.
bool refine_colors(const CombSpace& x, std::vector<std::uint64_t>& cx,
                   const CombSpace& y, std::vector<std::uint64_t>& cy) {
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> dict;
    auto step = [&dict](const CombSpace& s, const std::vector<std::uint64_t>& c) {
      std::vector<std::vector<std::uint64_t>> sig(s.size());
      for (Vertex v = 0; v < s.size(); ++v) {
        std::vector<std::uint64_t> nb;
        for (Vertex w : s.neighbors(v)) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        sig[v].push_back(c[v]);
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        dict.emplace(sig[v], 0);
      }
      return sig;
    };
    auto sx = step(x, cx);
    auto sy = step(y, cy);
    std::uint64_t next = 0;
    for (auto& [key, id] : dict) id = next++;
    for (Vertex v = 0; v < x.size(); ++v) cx[v] = dict[sx[v]];
    for (Vertex v = 0; v < y.size(); ++v) cy[v] = dict[sy[v]];
    std::vector<std::uint64_t> hx(dict.size()), hy(dict.size());
    for (auto c : cx) ++hx[c];
    for (auto c : cy) ++hy[c];
    if (hx != hy) return false;
    if (dict.size() == classes) return true;
    classes = dict.size();
  }
}

struct GraphMatcher {
  const CombSpace& x;
  const CombSpace& y;
  const std::vector<std::uint64_t>& cx;
  const std::vector<std::uint64_t>& cy;
  std::vector<Vertex> order;
  std::vector<std::int64_t> fwd;
  std::vector<std::int64_t> back;

  bool consistent(Vertex v, Vertex c) const {
    if (cx[v] != cy[c] || back[c] >= 0) return false;
    for (Vertex w : x.neighbors(v)) {
      if (fwd[w] >= 0 && !y.adjacent(c, static_cast<Vertex>(fwd[w]))) return false;
    }
    for (Vertex w : y.neighbors(c)) {
      if (back[w] >= 0 && !x.adjacent(v, static_cast<Vertex>(back[w]))) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    std::vector<Vertex> candidates;
    std::optional<Vertex> anchor;
    for (Vertex w : x.neighbors(v)) {
      if (fwd[w] >= 0) {
        anchor = static_cast<Vertex>(fwd[w]);
        break;
      }
    }
    if (anchor) {
      candidates = y.neighbors(*anchor);
    } else {
      candidates.resize(y.size());
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (Vertex c : candidates) {
      if (!consistent(v, c)) continue;
      fwd[v] = c;
      back[c] = v;
      if (search(depth + 1)) return true;
      fwd[v] = -1;
      back[c] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_graph_isomorphism(
    const CombSpace& x, const std::vector<std::uint64_t>& x_colors,
    const CombSpace& y, const std::vector<std::uint64_t>& y_colors) {
  if (x.size() != y.size() || x.edge_count() != y.edge_count()) return std::nullopt;
  std::vector<std::uint64_t> cx = x_colors.empty()
                                      ? std::vector<std::uint64_t>(x.size(), 0)
                                      : x_colors;
  std::vector<std::uint64_t> cy = y_colors.empty()
                                      ? std::vector<std::uint64_t>(y.size(), 0)
                                      : y_colors;
  if (cx.size() != x.size() || cy.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument, "colour vector has the wrong size");
  }
  if (!refine_colors(x, cx, y, cy)) return std::nullopt;

  GraphMatcher m{x, y, cx, cy, {}, std::vector<std::int64_t>(x.size(), -1),
                 std::vector<std::int64_t>(y.size(), -1)};
  // Breadth-first order inside each component so every vertex after the
  // first has an already placed neighbour.
  std::vector<bool> seen(x.size(), false);
  for (Vertex s = 0; s < x.size(); ++s) {
    if (seen[s]) continue;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      m.order.push_back(v);
      for (Vertex w : x.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  if (!m.search(0)) return std::nullopt;
  std::vector<Vertex> out(x.size());
  for (Vertex v = 0; v < x.size(); ++v) out[v] = static_cast<Vertex>(m.fwd[v]);
  return out;
}

}  // namespace orbi
