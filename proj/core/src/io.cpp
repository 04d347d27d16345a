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

#include "orbi/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "orbi/error.hpp"

namespace orbi {

namespace {

constexpr int kFormatVersion = 1;

void write_space(std::ostringstream& os, const CombSpace& s) {
  for (Vertex v = 0; v < s.size(); ++v) os << v << ' ' << s.label(v) << '\n';
  for (const Edge& e : s.edges()) os << "edge " << e.a << ' ' << e.b << '\n';
}

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

class LineParser {
 public:
  LineParser(std::string line, std::size_t number) : line_(std::move(line)), number_(number) {
    std::size_t i = 0;
    while (i < line_.size()) {
      while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
      if (i == line_.size()) break;
      std::size_t start = i;
      while (i < line_.size() && !std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
      tokens_.push_back({line_.substr(start, i - start), start + 1});
    }
  }

  const std::vector<Token>& tokens() const { return tokens_; }

  [[noreturn]] void fail(std::size_t column, const std::string& why) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(number_) + ", column " +
                                            std::to_string(column) + ": " + why);
  }

  Vertex id(std::size_t k) const {
    if (k >= tokens_.size()) fail(line_.size() + 1, "expected an id");
    const Token& t = tokens_[k];
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(t.column, "expected an id, got '" + t.text + "'");
    }
    return v;
  }

  void expect_count(std::size_t n) const {
    if (tokens_.size() > n) fail(tokens_[n].column, "unexpected '" + tokens_[n].text + "'");
    if (tokens_.size() < n) fail(line_.size() + 1, "missing field");
  }

  // Everything after the first token, trimmed.
  std::string rest() const {
    if (tokens_.size() < 2) return "";
    std::size_t start = tokens_[1].column - 1;
    std::size_t end = line_.find_last_not_of(" \t\r");
    return line_.substr(start, end + 1 - start);
  }

  std::size_t number() const { return number_; }

 private:
  std::string line_;
  std::size_t number_;
  std::vector<Token> tokens_;
};

struct SpaceBuilder {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> edge_lines;
};

void dangling(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kDanglingId, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string serialize_groupoid(const Groupoid& g) {
  std::ostringstream os;
  os << "format_version " << kFormatVersion << '\n';
  os << "[objects]\n";
  write_space(os, g.objects());
  os << "[arrows]\n";
  write_space(os, g.arrows());
  const GroupoidData& d = g.data();
  auto table = [&os](const char* name, const std::vector<Vertex>& t) {
    os << '[' << name << "]\n";
    for (Vertex v = 0; v < t.size(); ++v) os << v << ' ' << t[v] << '\n';
  };
  table("src", d.src);
  table("tgt", d.tgt);
  table("unit", d.unit);
  table("inv", d.inv);
  os << "[comp]\n";
  for (const CompEntry& e : g.comp_entries()) {
    os << e.first << ' ' << e.second << ' ' << e.result << '\n';
  }
  return os.str();
}

Groupoid parse_groupoid(const std::string& text) {
  static const std::vector<std::string> kSections{"objects", "arrows", "src", "tgt",
                                                  "unit",    "inv",    "comp"};
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  bool have_version = false;
  std::string section;
  std::set<std::string> seen;
  SpaceBuilder spaces[2];
  std::map<std::string, std::vector<std::pair<Vertex, Vertex>>> rows;
  std::map<std::string, std::vector<std::size_t>> row_lines;
  std::vector<CompEntry> comp;
  std::vector<std::size_t> comp_lines;

  while (std::getline(in, raw)) {
    ++number;
    LineParser line(raw, number);
    const auto& tok = line.tokens();
    if (tok.empty() || tok[0].text[0] == '#') continue;
    if (!have_version) {
      if (tok[0].text != "format_version") line.fail(tok[0].column, "expected format_version");
      line.expect_count(2);
      if (line.id(1) != kFormatVersion) line.fail(tok[1].column, "unsupported format version");
      have_version = true;
      continue;
    }
    if (tok[0].text.front() == '[') {
      line.expect_count(1);
      const std::string& t = tok[0].text;
      std::string name = t.size() > 2 && t.back() == ']' ? t.substr(1, t.size() - 2) : "";
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) {
        line.fail(tok[0].column, "unknown section '" + t + "'");
      }
      if (!seen.insert(name).second) line.fail(tok[0].column, "repeated section '" + t + "'");
      section = name;
      continue;
    }
    if (section.empty()) line.fail(tok[0].column, "content before the first section");
    if (section == "objects" || section == "arrows") {
      SpaceBuilder& sb = spaces[section == "arrows"];
      if (tok[0].text == "edge") {
        line.expect_count(3);
        sb.edge_lines.push_back({{line.id(1), line.id(2)}, number});
        continue;
      }
      Vertex v = line.id(0);
      if (v != sb.labels.size()) {
        line.fail(tok[0].column, "expected id " + std::to_string(sb.labels.size()));
      }
      std::string label = line.rest();
      sb.labels.push_back(label.empty() ? std::to_string(v) : label);
    } else if (section == "comp") {
      line.expect_count(3);
      comp.push_back({line.id(0), line.id(1), line.id(2)});
      comp_lines.push_back(number);
    } else {
      line.expect_count(2);
      rows[section].push_back({line.id(0), line.id(1)});
      row_lines[section].push_back(number);
    }
  }
  if (!have_version) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(number + 1) +
                                            ", column 1: missing format_version");
  }
  for (const std::string& s : kSections) {
    if (!seen.count(s)) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(number + 1) +
                                              ", column 1: missing section [" + s + "]");
    }
  }

  GroupoidData d;
  for (int k = 0; k < 2; ++k) {
    SpaceBuilder& sb = spaces[k];
    for (auto [e, at] : sb.edge_lines) {
      if (e.a >= sb.labels.size() || e.b >= sb.labels.size()) {
        dangling(at, "edge names an undeclared vertex");
      }
      sb.edges.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
    }
    (k == 0 ? d.objects : d.arrows) = make_space(sb.labels.size(), sb.edges, sb.labels);
  }
  const std::size_t n0 = d.objects->size(), n1 = d.arrows->size();
  auto fill = [&](const std::string& name, std::size_t domain, std::size_t range) {
    std::vector<Vertex> out(domain, static_cast<Vertex>(-1));
    const auto& r = rows[name];
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto [k, v] = r[i];
      std::size_t at = row_lines[name][i];
      if (k >= domain || v >= range) dangling(at, "[" + name + "] names an undeclared vertex");
      if (out[k] != static_cast<Vertex>(-1)) dangling(at, "[" + name + "] repeats a row");
      out[k] = v;
    }
    for (std::size_t k = 0; k < domain; ++k) {
      if (out[k] == static_cast<Vertex>(-1)) {
        throw Error(ErrorCode::kDanglingId, "[" + name + "] has no row for " + std::to_string(k));
      }
    }
    return out;
  };
  d.src = fill("src", n1, n0);
  d.tgt = fill("tgt", n1, n0);
  d.unit = fill("unit", n0, n1);
  d.inv = fill("inv", n1, n1);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const CompEntry& e = comp[i];
    if (e.first >= n1 || e.second >= n1 || e.result >= n1) {
      dangling(comp_lines[i], "[comp] names an undeclared arrow");
    }
  }
  d.comp = std::move(comp);
  return Groupoid(std::move(d));
}

// ---------------------------------------------------------------------------
// Diagram documents.

using nlohmann::json;

std::string serialize_diagram_document(const DiagramDocument& doc) {
  json j;
  j["format_version"] = kFormatVersion;
  j["groupoids"] = doc.groupoids;
  j["homomorphisms"] = json::object();
  for (const auto& [name, h] : doc.homomorphisms) {
    j["homomorphisms"][name] = {{"source", h.source}, {"target", h.target}, {"f0", h.f0}, {"f1", h.f1}};
  }
  j["transformations"] = json::object();
  for (const auto& [name, t] : doc.transformations) {
    j["transformations"][name] = {{"from", t.from}, {"to", t.to}, {"alpha", t.alpha}};
  }
  j["spans"] = json::object();
  for (const auto& [name, s] : doc.spans) {
    j["spans"][name] = {{"left", s.left}, {"right", s.right}};
  }
  j["diagrams"] = json::object();
  for (const auto& [name, d] : doc.diagrams) {
    j["diagrams"][name] = {{"top", d.top},   {"bottom", d.bottom}, {"nu", d.nu},
                           {"nu2", d.nu2},   {"alpha", d.alpha},   {"beta", d.beta}};
  }
  j["witnesses"] = json::object();
  for (const auto& [name, w] : doc.witnesses) {
    j["witnesses"][name] = {{"lambda1", w.lambda1}, {"lambda2", w.lambda2},
                            {"gamma", w.gamma},     {"gamma2", w.gamma2}};
  }
  return j.dump(2) + "\n";
}

DiagramDocument parse_diagram_document(const std::string& text) {
  DiagramDocument doc;
  try {
    json j = json::parse(text);
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw Error(ErrorCode::kParseError, "unsupported format version");
    }
    auto section = [&j](const char* name) { return j.contains(name) ? j.at(name) : json::object(); };
    const json groupoids = section("groupoids"), homs = section("homomorphisms"),
               trans = section("transformations"), spans = section("spans"),
               diagrams = section("diagrams"), witnesses = section("witnesses");
    doc.groupoids = groupoids.get<std::map<std::string, std::string>>();
    for (const auto& [name, h] : homs.items()) {
      doc.homomorphisms[name] = {h.at("source"), h.at("target"), h.at("f0"), h.at("f1")};
    }
    for (const auto& [name, t] : trans.items()) {
      doc.transformations[name] = {t.at("from"), t.at("to"), t.at("alpha")};
    }
    for (const auto& [name, s] : spans.items()) {
      doc.spans[name] = {s.at("left"), s.at("right")};
    }
    for (const auto& [name, d] : diagrams.items()) {
      doc.diagrams[name] = {d.at("top"), d.at("bottom"), d.at("nu"),
                            d.at("nu2"), d.at("alpha"),  d.at("beta")};
    }
    for (const auto& [name, w] : witnesses.items()) {
      doc.witnesses[name] = {w.at("lambda1"), w.at("lambda2"), w.at("gamma"), w.at("gamma2")};
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return doc;
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) {
    throw Error(ErrorCode::kDanglingId, std::string("unknown ") + kind + " '" + name + "'");
  }
  return it->second;
}

}  // namespace

ResolvedDiagrams resolve(const DiagramDocument& doc,
                         const std::function<GroupoidPtr(const std::string&)>& load) {
  ResolvedDiagrams out;
  for (const auto& [name, path] : doc.groupoids) out.groupoids[name] = load(path);
  for (const auto& [name, h] : doc.homomorphisms) {
    Homomorphism f{lookup(out.groupoids, h.source, "groupoid"),
                   lookup(out.groupoids, h.target, "groupoid"), h.f0, h.f1};
    auto in_range = [](const std::vector<Vertex>& m, std::size_t n, std::size_t range) {
      return m.size() == n && std::all_of(m.begin(), m.end(), [range](Vertex v) { return v < range; });
    };
    if (!in_range(f.f0, f.source->object_count(), f.target->object_count()) ||
        !in_range(f.f1, f.source->arrow_count(), f.target->arrow_count())) {
      throw Error(ErrorCode::kDanglingId, "homomorphism '" + name + "' has a bad table");
    }
    out.homomorphisms[name] = std::move(f);
  }
  auto chain = [&](const std::vector<std::string>& names) {
    if (names.empty()) throw Error(ErrorCode::kDanglingId, "empty homomorphism chain");
    Homomorphism f = lookup(out.homomorphisms, names.front(), "homomorphism");
    for (std::size_t i = 1; i < names.size(); ++i) {
      f = compose(f, lookup(out.homomorphisms, names[i], "homomorphism"));
    }
    return f;
  };
  for (const auto& [name, t] : doc.transformations) {
    NatTrans n{chain(t.from), chain(t.to), t.alpha};
    if (n.alpha.size() != n.from.source->object_count() ||
        std::any_of(n.alpha.begin(), n.alpha.end(),
                    [&](Vertex v) { return v >= n.from.target->arrow_count(); })) {
      throw Error(ErrorCode::kDanglingId, "transformation '" + name + "' has a bad table");
    }
    out.transformations[name] = std::move(n);
  }
  for (const auto& [name, s] : doc.spans) {
    out.spans[name] = {lookup(out.homomorphisms, s.left, "homomorphism"),
                       lookup(out.homomorphisms, s.right, "homomorphism")};
  }
  for (const auto& [name, d] : doc.diagrams) {
    out.diagrams[name] = {lookup(out.spans, d.top, "span"),
                          lookup(out.spans, d.bottom, "span"),
                          lookup(out.homomorphisms, d.nu, "homomorphism"),
                          lookup(out.homomorphisms, d.nu2, "homomorphism"),
                          lookup(out.transformations, d.alpha, "transformation"),
                          lookup(out.transformations, d.beta, "transformation")};
  }
  for (const auto& [name, w] : doc.witnesses) {
    out.witnesses[name] = {lookup(out.homomorphisms, w.lambda1, "homomorphism"),
                           lookup(out.homomorphisms, w.lambda2, "homomorphism"),
                           lookup(out.transformations, w.gamma, "transformation"),
                           lookup(out.transformations, w.gamma2, "transformation")};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph export.

namespace {

std::string dot_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Groupoid& g, const DotOptions& options) {
  std::ostringstream os;
  const CombSpace& obj = g.objects();
  os << "graph " << dot_string(options.name) << " {\n";
  auto blocks = components(obj);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=" << dot_string("component " + std::to_string(c)) << ";\n";
    for (Vertex x : blocks[c]) {
      std::size_t order = g.loops(x).size();
      std::string label = obj.label(x) + (order > 1 ? "\n" + std::to_string(order) : "");
      os << "    o" << x << " [label=" << dot_string(label) << "];\n";
    }
    for (Vertex x : blocks[c]) {
      for (Vertex y : obj.neighbors(x)) {
        if (y > x) os << "    o" << x << " -- o" << y << ";\n";
      }
    }
    os << "  }\n";
  }
  if (options.arrow_summary && g.arrow_count() > 0) {
    auto object_component = component_index(obj);
    auto sheets = components(g.arrows());
    os << "  subgraph cluster_arrows {\n";
    os << "    label=\"arrow components\";\n";
    for (std::size_t k = 0; k < sheets.size(); ++k) {
      Vertex a = sheets[k].front();
      std::string label = std::to_string(sheets[k].size()) + " arrows\n" +
                          std::to_string(object_component[g.src(a)]) + " -> " +
                          std::to_string(object_component[g.tgt(a)]);
      os << "    a" << k << " [shape=box,label=" << dot_string(label) << "];\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const QuotientSpace& q, const DotOptions& options) {
  std::ostringstream os;
  const CombSpace& graph = *q.orbit_graph;
  os << "graph " << dot_string(options.name) << " {\n";
  auto blocks = components(graph);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=" << dot_string("component " + std::to_string(c)) << ";\n";
    for (Vertex x : blocks[c]) {
      std::string label = graph.label(x);
      if (q.labels[x].order > 1) label += "\n" + std::to_string(q.labels[x].order);
      os << "    q" << x << " [label=" << dot_string(label) << "];\n";
    }
    for (Vertex x : blocks[c]) {
      for (Vertex y : graph.neighbors(x)) {
        if (y > x) os << "    q" << x << " -- q" << y << ";\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace orbi
