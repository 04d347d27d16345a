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

#ifndef ORBI_IO_HPP_
#define ORBI_IO_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbi/bicat.hpp"
#include "orbi/groupoid.hpp"

namespace orbi {

// Text form of a groupoid:
//
//   format_version 1
//   [objects]
//   <id> <label>
//   edge <id> <id>
//   [arrows]
//   ...same shape...
//   [src] [tgt] [unit] [inv]
//   <id> <id>
//   [comp]
//   <first> <second> <result>
//
// '#' starts a comment line. Ids in [objects] and [arrows] must be listed
// as 0, 1, 2, ... in order.
std::string serialize_groupoid(const Groupoid& g);
// Throws Error(kParseError) with line and column, or Error(kDanglingId)
// for references to undeclared vertices and missing table rows. Does not
// run validate_groupoid.
Groupoid parse_groupoid(const std::string& text);

// Named groupoids, homomorphisms, transformations, spans, 2-cell diagrams
// and witnesses, stored as JSON. Groupoids are referenced by file path.
// Transformation endpoints are chains of homomorphism names applied left
// to right.
struct DiagramDocument {
  struct Hom {
    std::string source;
    std::string target;
    std::vector<Vertex> f0;
    std::vector<Vertex> f1;
  };
  struct Trans {
    std::vector<std::string> from;
    std::vector<std::string> to;
    std::vector<Vertex> alpha;
  };
  struct SpanRef {
    std::string left;
    std::string right;
  };
  struct DiagramRef {
    std::string top, bottom, nu, nu2, alpha, beta;
  };
  struct WitnessRef {
    std::string lambda1, lambda2, gamma, gamma2;
  };

  std::map<std::string, std::string> groupoids;  // name -> path
  std::map<std::string, Hom> homomorphisms;
  std::map<std::string, Trans> transformations;
  std::map<std::string, SpanRef> spans;
  std::map<std::string, DiagramRef> diagrams;
  std::map<std::string, WitnessRef> witnesses;
};

std::string serialize_diagram_document(const DiagramDocument& doc);
// Throws Error(kParseError) on malformed input.
DiagramDocument parse_diagram_document(const std::string& text);

struct ResolvedDiagrams {
  std::map<std::string, GroupoidPtr> groupoids;
  std::map<std::string, Homomorphism> homomorphisms;
  std::map<std::string, NatTrans> transformations;
  std::map<std::string, Span> spans;
  std::map<std::string, TwoCellDiagram> diagrams;
  std::map<std::string, TwoCellWitness> witnesses;
};

// Throws Error(kDanglingId) for unknown names or out of range ids and
// Error(kCodomainMismatch) for chains that do not compose.
ResolvedDiagrams resolve(const DiagramDocument& doc,
                         const std::function<GroupoidPtr(const std::string&)>& load);

struct DotOptions {
  std::string name = "G";
  bool arrow_summary = true;  // groupoids only
};

// Object graph clustered by component, plus one node per arrow component
// with its size and endpoint components.
std::string export_dot(const Groupoid& g, const DotOptions& options = {});
// Orbit graph clustered by component; isotropy orders above 1 annotate
// the vertices.
std::string export_dot(const QuotientSpace& q, const DotOptions& options = {});

}  // namespace orbi

#endif  // ORBI_IO_HPP_
