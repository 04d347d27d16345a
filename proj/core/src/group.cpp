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

#include "orbi/group.hpp"

#include <algorithm>
#include <functional>

#include "orbi/error.hpp"

namespace orbi {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0 || names_.size() != n) {
    throw Error(ErrorCode::kInvalidGroup, "group table and names disagree");
  }
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::kInvalidGroup, "ragged table");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorCode::kInvalidGroup, "entry out of range");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (std::size_t a = 0; a < n && is_identity; ++a) {
      is_identity = table_[e][a] == a && table_[a][e] == a;
    }
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::kInvalidGroup, "no identity element");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) {
      throw Error(ErrorCode::kInvalidGroup, "element '" + names_[a] + "' has no inverse");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw Error(ErrorCode::kInvalidGroup, "table is not associative");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "dihedral group of order 0");
  const std::size_t order = 2 * n;
  std::vector<std::string> names(order);
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t k = x % n, b = x / n;
    std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
    names[x] = r + (b ? "s" : "");
    if (names[x].empty()) names[x] = "e";
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t l = y % n, c = y / n;
      // r^k s^b r^l s^c = r^(k + (-1)^b l) s^(b + c)
      std::size_t rot = b ? (k + n - l) % n : (k + l) % n;
      table[x][y] = rot + n * ((b + c) % 2);
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t order = g.order() * m;
  std::vector<std::string> names(order);
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x) {
    names[x] = "(" + g.name(x / m) + "," + h.name(x % m) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      table[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t p = a; p != identity_; p = mul(p, a)) ++k;
  return k;
}

std::optional<std::size_t> FiniteGroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order(); ++a) out.push_back(g.element_order(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::size_t>> find_group_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order();
  if (n != h.order() || element_orders(g) != element_orders(h)) return std::nullopt;
  std::vector<std::size_t> phi(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t a) -> bool {
    if (a == n) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (phi[g.mul(x, y)] != h.mul(phi[x], phi[y])) return false;
        }
      }
      return true;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || g.element_order(a) != h.element_order(c)) continue;
      phi[a] = c;
      bool ok = true;
      for (std::size_t b = 0; b <= a && ok; ++b) {
        std::size_t ab = g.mul(a, b), ba = g.mul(b, a);
        if (ab <= a && phi[ab] != h.mul(phi[a], phi[b])) ok = false;
        if (ba <= a && phi[ba] != h.mul(phi[b], phi[a])) ok = false;
      }
      if (!ok) continue;
      used[c] = true;
      if (extend(a + 1)) return true;
      used[c] = false;
    }
    phi[a] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return phi;
}

std::optional<std::string> action_violation(const GroupAction& action) {
  const FiniteGroup& g = action.group;
  const CombSpace& x = *action.space;
  if (action.act.size() != g.order()) return "action table has the wrong number of rows";
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto& row = action.act[a];
    if (row.size() != x.size()) return "action row for '" + g.name(a) + "' is not total";
    std::vector<bool> hit(x.size(), false);
    for (Vertex v : row) {
      if (v >= x.size() || hit[v]) return "'" + g.name(a) + "' is not a bijection";
      hit[v] = true;
    }
    for (Vertex u = 0; u < x.size(); ++u) {
      for (Vertex w : x.neighbors(u)) {
        if (!x.adjacent(row[u], row[w])) {
          return "'" + g.name(a) + "' does not preserve the edge {" + x.label(u) +
                 "," + x.label(w) + "}";
        }
      }
    }
  }
  for (Vertex v = 0; v < x.size(); ++v) {
    if (action.act[g.identity()][v] != v) return "identity does not act trivially";
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      for (Vertex v = 0; v < x.size(); ++v) {
        if (action.act[a][action.act[b][v]] != action.act[g.mul(a, b)][v]) {
          return "action is not compatible with the product of '" + g.name(a) +
                 "' and '" + g.name(b) + "'";
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

SpacePtr ring_space(std::size_t ring, bool center) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < ring; ++v) {
    Vertex a = static_cast<Vertex>(v), b = static_cast<Vertex>((v + 1) % ring);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < ring; ++v) labels.push_back(std::to_string(v));
  if (center) {
    for (std::size_t v = 0; v < ring; ++v) {
      edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(ring)});
    }
    labels.push_back("c");
  }
  return make_space(ring + (center ? 1 : 0), edges, std::move(labels));
}

}  // namespace

GroupAction rotation_action(std::size_t n, std::size_t step, bool center) {
  const std::size_t ring = n * step;
  if (ring < 3) throw Error(ErrorCode::kInvalidArgument, "ring needs three vertices");
  GroupAction out{FiniteGroup::cyclic(n), ring_space(ring, center), {}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vertex> row;
    for (std::size_t v = 0; v < ring; ++v) row.push_back(static_cast<Vertex>((v + k * step) % ring));
    if (center) row.push_back(static_cast<Vertex>(ring));
    out.act.push_back(std::move(row));
  }
  return out;
}

GroupAction dihedral_action(std::size_t n, std::size_t step, bool center) {
  const std::size_t ring = n * step;
  if (ring < 3) throw Error(ErrorCode::kInvalidArgument, "ring needs three vertices");
  GroupAction out{FiniteGroup::dihedral(n), ring_space(ring, center), {}};
  for (std::size_t x = 0; x < 2 * n; ++x) {
    std::size_t k = x % n, b = x / n;
    std::vector<Vertex> row;
    for (std::size_t v = 0; v < ring; ++v) {
      std::size_t w = b ? (ring - v) % ring : v;
      row.push_back(static_cast<Vertex>((w + k * step) % ring));
    }
    if (center) row.push_back(static_cast<Vertex>(ring));
    out.act.push_back(std::move(row));
  }
  return out;
}

}  // namespace orbi
