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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbi/bicat.hpp"
#include "orbi/builders.hpp"
#include "orbi/error.hpp"
#include "orbi/fixtures.hpp"
#include "orbi/gmap.hpp"
#include "orbi/inertia.hpp"
#include "orbi/io.hpp"

namespace orbi::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Outcome {
  Json report;
  bool ok = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path.string() + "'");
  out << text;
}

// "fixture:<name>" selects a built-in model, anything else is a file.
class Loader {
 public:
  GroupoidPtr operator()(const std::string& spec) {
    auto it = cache_.find(spec);
    if (it != cache_.end()) return it->second;
    GroupoidPtr g = spec.rfind("fixture:", 0) == 0 ? make_fixture(spec.substr(8))
                                                   : share(parse_groupoid(read_file(spec)));
    cache_.emplace(spec, g);
    return g;
  }

 private:
  std::map<std::string, GroupoidPtr> cache_;
};

Json labels(const CombSpace& space, const std::vector<Vertex>& ids) {
  Json out = Json::array();
  for (Vertex v : ids) out.push_back(space.label(v));
  return out;
}

Json violations_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const Violation& v : vs) {
    out.push_back({{"kind", v.kind}, {"witness", v.witness}, {"detail", v.detail}});
  }
  return out;
}

void render(const Json& j, std::ostream& os, int indent);

bool scalar_list(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_value(const std::string& key, const Json& v, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_primitive()) {
    os << pad << key << ": " << scalar(v) << '\n';
  } else if (v.is_array() && scalar_list(v)) {
    os << pad << key << ":";
    for (const Json& e : v) os << ' ' << scalar(e);
    os << '\n';
  } else if (v.is_array()) {
    os << pad << key << ":\n";
    for (const Json& e : v) {
      os << pad << "  -\n";
      render(e, os, indent + 4);
    }
  } else {
    os << pad << key << ":\n";
    render(v, os, indent + 2);
  }
}

void render(const Json& j, std::ostream& os, int indent) {
  if (!j.is_object()) {
    os << std::string(indent, ' ') << scalar(j) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) render_value(k, v, os, indent);
}

// ---------------------------------------------------------------------------
// Commands.

Outcome cmd_validate(const GroupoidPtr& g) {
  auto vs = validate_groupoid(*g);
  Outcome o;
  o.ok = vs.empty();
  o.report = {{"objects", g->object_count()},
              {"arrows", g->arrow_count()},
              {"valid", o.ok},
              {"violations", violations_json(vs)}};
  return o;
}

Json quotient_json(const QuotientSpace& q) {
  Json orbits = Json::array();
  for (Vertex o = 0; o < q.orbits.size(); ++o) {
    orbits.push_back({{"label", q.orbit_graph->label(o)},
                      {"size", q.orbits[o].size()},
                      {"isotropy", q.labels[o].to_string()}});
  }
  Json edges = Json::array();
  for (const Edge& e : q.orbit_graph->edges()) {
    edges.push_back(q.orbit_graph->label(e.a) + " -- " + q.orbit_graph->label(e.b));
  }
  return {{"orbit_count", q.orbits.size()},
          {"components", components(*q.orbit_graph).size()},
          {"representative_independent", q.representative_independent},
          {"orbits", orbits},
          {"edges", edges}};
}

Outcome cmd_quotient(const GroupoidPtr& g) {
  QuotientSpace q = quotient(*g);
  return {quotient_json(q), q.representative_independent};
}

Outcome cmd_isotropy(const GroupoidPtr& g, const std::string& object) {
  Outcome o;
  auto describe = [&g](Vertex x) {
    IsotropyGroup iso = isotropy_group(*g, x);
    FiniteGroup group = iso.as_group(*g);
    bool abelian = true;
    for (std::size_t a = 0; a < group.order(); ++a) {
      for (std::size_t b = 0; b < group.order(); ++b) abelian = abelian && group.mul(a, b) == group.mul(b, a);
    }
    return Json{{"object", g->objects().label(x)},
                {"order", iso.elements.size()},
                {"label", iso.label().to_string()},
                {"abelian", abelian},
                {"elements", labels(g->arrows(), iso.elements)}};
  };
  if (!object.empty()) {
    auto x = g->objects().find(object);
    if (!x) throw Error(ErrorCode::kInvalidArgument, "no object '" + object + "'");
    o.report = describe(*x);
    return o;
  }
  Json all = Json::array();
  for (const auto& orbit : quotient(*g).orbits) all.push_back(describe(orbit.front()));
  o.report = {{"orbits", all}};
  return o;
}

Outcome cmd_etale(const GroupoidPtr& g) {
  EtaleResult e = check_etale(*g);
  Outcome o;
  o.ok = e.ok;
  o.report = {{"etale", e.ok}};
  if (!e.ok) {
    o.report["map"] = e.map;
    o.report["witness"] = g->arrows().label(*e.witness);
  }
  return o;
}

HomConstraints parse_pins(const Groupoid& g, const Groupoid& h, const std::vector<std::string>& pins) {
  HomConstraints c;
  for (const std::string& pin : pins) {
    auto eq = pin.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "pin '" + pin + "' lacks '='");
    auto x = g.objects().find(pin.substr(0, eq));
    auto y = h.objects().find(pin.substr(eq + 1));
    if (!x || !y) throw Error(ErrorCode::kInvalidArgument, "pin '" + pin + "' names an unknown object");
    c.objects.push_back({*x, *y});
  }
  return c;
}

Outcome cmd_hom_enum(const GroupoidPtr& g, const GroupoidPtr& h, const std::vector<std::string>& pins,
                     std::size_t limit, unsigned threads) {
  auto homs = enumerate_homomorphisms(g, h, parse_pins(*g, *h, pins), threads);
  Json list = Json::array();
  for (std::size_t i = 0; i < homs.size() && i < limit; ++i) {
    list.push_back({{"f0", labels(h->objects(), homs[i].f0)}, {"f1", labels(h->arrows(), homs[i].f1)}});
  }
  return {{{"count", homs.size()}, {"homomorphisms", list}}, true};
}

Json component_json(const GmapComponent& c) {
  Json iso = Json::array();
  for (const auto& l : c.labels) iso.push_back(l.to_string());
  return {{"orbits", c.orbits.size()},
          {"functors", c.functor_count},
          {"identity_type", c.identity_type},
          {"isotropy", iso},
          {"arrow_components", c.arrow_components}};
}

Outcome cmd_gmap(const GroupoidPtr& g, const GroupoidPtr& h, const std::string& out_path,
                 unsigned threads) {
  MappingGroupoid m = build_gmap(g, h, threads);
  auto vs = validate_groupoid(*m.base);
  Json comps = Json::array();
  for (const auto& c : gmap_component_report(m)) comps.push_back(component_json(c));
  if (!out_path.empty()) write_file(out_path, serialize_groupoid(*m.base));
  return {{{"functors", m.functors.size()},
           {"transformations", m.transformations.size()},
           {"valid", vs.empty()},
           {"etale", m.etale},
           {"quotient_orbits", quotient(*m.base).orbits.size()},
           {"components", comps}},
          vs.empty()};
}

Outcome cmd_inertia(const GroupoidPtr& g, const std::string& out_path) {
  InertiaGroupoid in = build_inertia(g);
  auto vs = validate_groupoid(*in.base);
  if (!out_path.empty()) write_file(out_path, serialize_groupoid(*in.base));
  QuotientSpace q = quotient(*in.base);
  return {{{"objects", in.base->object_count()},
           {"arrows", in.base->arrow_count()},
           {"valid", vs.empty()},
           {"minimal_exponent", minimal_exponent(*g)},
           {"quotient", quotient_json(q)}},
          vs.empty()};
}

Outcome cmd_phi(const GroupoidPtr& g, std::size_t n, bool iso, unsigned threads) {
  if (n == 0) n = minimal_exponent(*g);
  PhiFunctor p = phi_functor(n, g, threads);
  PhiReport r = verify_phi_properties(p);
  Outcome o;
  o.report = {{"n", n},
              {"functors", p.gmap.functors.size()},
              {"loops", p.inertia.loops.size()},
              {"valid", r.valid},
              {"injective_on_objects", r.injective_on_objects},
              {"full", r.full},
              {"faithful", r.faithful},
              {"surjective_on_objects", r.surjective_on_objects},
              {"surjective_on_arrows", r.surjective_on_arrows}};
  o.ok = r.embedding();
  if (iso) {
    bool found = check_isomorphism(p.gmap.base, p.inertia.base).has_value();
    o.report["isomorphic"] = found;
    o.ok = o.ok && found;
  }
  return o;
}

Outcome cmd_morita(const GroupoidPtr& g, const GroupoidPtr& h, std::size_t bound) {
  MoritaResult r = morita_equivalent(g, h, bound);
  Outcome o;
  const char* status = r.status == MoritaStatus::kSpan         ? "SPAN"
                       : r.status == MoritaStatus::kFastReject ? "FAST_REJECT"
                                                               : "NOT_FOUND_WITHIN_BOUND";
  o.report = {{"status", status}};
  if (!r.reason.empty()) o.report["reason"] = r.reason;
  if (r.span) {
    o.report["apex_objects"] = r.span->apex()->object_count();
    o.report["apex_arrows"] = r.span->apex()->arrow_count();
    o.report["span_valid"] = validate_span(*r.span).empty();
  }
  o.ok = r.status == MoritaStatus::kSpan;
  return o;
}

ResolvedDiagrams load_document(const std::string& path, Loader& load) {
  DiagramDocument doc = parse_diagram_document(read_file(path));
  const fs::path base = fs::path(path).parent_path();
  return resolve(doc, [&](const std::string& file) {
    return load(file.rfind("fixture:", 0) == 0 ? file : (base / file).string());
  });
}

template <typename Map>
const typename Map::mapped_type& named(const Map& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::kInvalidArgument, std::string("no ") + kind + " '" + name + "'");
  return it->second;
}

Outcome cmd_span_compose(const ResolvedDiagrams& doc, const std::string& first,
                         const std::string& second) {
  const Span& s1 = named(doc.spans, first, "span");
  const Span& s2 = named(doc.spans, second, "span");
  Span s = compose_spans(s1, s2);
  auto vs = validate_span(s);
  QuotientSpace q = quotient(*s.apex());
  return {{{"apex_objects", s.apex()->object_count()},
           {"apex_arrows", s.apex()->arrow_count()},
           {"apex_orbits", q.orbits.size()},
           {"valid", vs.empty()},
           {"violations", violations_json(vs)}},
          vs.empty()};
}

Json homomorphism_json(const Homomorphism& f) {
  return {{"f0", labels(f.target->objects(), f.f0)}};
}

Outcome cmd_two_cell(const ResolvedDiagrams& doc, const std::string& d1_name,
                     const std::string& d2_name, const std::string& witness_name, std::size_t bound) {
  const TwoCellDiagram& d1 = named(doc.diagrams, d1_name, "diagram");
  const TwoCellDiagram& d2 = named(doc.diagrams, d2_name, "diagram");
  Outcome o;
  bool valid = validate_two_cell_diagram(d1).empty() && validate_two_cell_diagram(d2).empty();
  o.report["diagrams_valid"] = valid;
  std::optional<TwoCellWitness> w;
  if (!witness_name.empty()) {
    w = named(doc.witnesses, witness_name, "witness");
  } else {
    w = find_two_cell_witness(d1, d2, bound);
    o.report["search_bound"] = bound;
    o.report["witness_found"] = w.has_value();
  }
  if (!w) {
    o.report["result"] = "NOT_FOUND_WITHIN_BOUND";
    o.ok = false;
    return o;
  }
  o.report["refinement_objects"] = w->refinement()->object_count();
  o.report["lambda1"] = homomorphism_json(w->lambda1);
  o.report["lambda2"] = homomorphism_json(w->lambda2);
  TwoCellComparison c = two_cells_equal(d1, d2, *w);
  o.report["equal"] = c.equal;
  if (!c.equal) {
    o.report["failing_condition"] = *c.failing_condition;
    o.report["object"] = w->refinement()->objects().label(*c.object);
  }
  o.ok = valid && c.equal;
  return o;
}

// ---------------------------------------------------------------------------
// Fixture corpus.

DiagramDocument::Hom hom_ref(const Homomorphism& f, const std::string& source,
                             const std::string& target) {
  return {source, target, f.f0, f.f1};
}

std::string two_cell_document() {
  TwoCellExample ex = two_cell_example();
  DiagramDocument doc;
  doc.groupoids = {{"interval", "i1.grpd"}, {"right2", "ri2.grpd"}, {"left2", "li2.grpd"},
                   {"i3", "i3.grpd"},       {"i4", "i4.grpd"},      {"padded", "i3p.grpd"},
                   {"tb", "tb.grpd"}};
  auto& h = doc.homomorphisms;
  h["ups_r"] = hom_ref(ex.d1.top.left, "right2", "interval");
  h["phi_r"] = hom_ref(ex.d1.top.right, "right2", "tb");
  h["ups_l"] = hom_ref(ex.d1.bottom.left, "left2", "interval");
  h["phi_l"] = hom_ref(ex.d1.bottom.right, "left2", "tb");
  h["nu_1"] = hom_ref(ex.d1.nu, "i3", "right2");
  h["nu2_1"] = hom_ref(ex.d1.nu2, "i3", "left2");
  h["nu_2"] = hom_ref(ex.d2.nu, "i4", "right2");
  h["nu2_2"] = hom_ref(ex.d2.nu2, "i4", "left2");
  h["lambda1"] = hom_ref(ex.witness.lambda1, "i4", "i3");
  h["lambda2"] = hom_ref(ex.witness.lambda2, "i4", "i4");
  h["nu_3"] = hom_ref(ex.d3.nu, "padded", "right2");
  h["nu2_3"] = hom_ref(ex.d3.nu2, "padded", "left2");
  h["id_i3"] = hom_ref(ex.witness3.lambda1, "i3", "i3");
  h["pad"] = hom_ref(ex.witness3.lambda2, "i3", "padded");
  auto& t = doc.transformations;
  t["alpha_1"] = {{"nu_1", "ups_r"}, {"nu2_1", "ups_l"}, ex.d1.alpha.alpha};
  t["beta_1"] = {{"nu_1", "phi_r"}, {"nu2_1", "phi_l"}, ex.d1.beta.alpha};
  t["alpha_2"] = {{"nu_2", "ups_r"}, {"nu2_2", "ups_l"}, ex.d2.alpha.alpha};
  t["beta_2"] = {{"nu_2", "phi_r"}, {"nu2_2", "phi_l"}, ex.d2.beta.alpha};
  t["gamma"] = {{"lambda1", "nu_1"}, {"lambda2", "nu_2"}, ex.witness.gamma.alpha};
  t["gamma2"] = {{"lambda1", "nu2_1"}, {"lambda2", "nu2_2"}, ex.witness.gamma2.alpha};
  t["alpha_3"] = {{"nu_3", "ups_r"}, {"nu2_3", "ups_l"}, ex.d3.alpha.alpha};
  t["beta_3"] = {{"nu_3", "phi_r"}, {"nu2_3", "phi_l"}, ex.d3.beta.alpha};
  t["gamma_3"] = {{"id_i3", "nu_1"}, {"pad", "nu_3"}, ex.witness3.gamma.alpha};
  t["gamma2_3"] = {{"id_i3", "nu2_1"}, {"pad", "nu2_3"}, ex.witness3.gamma2.alpha};
  doc.spans = {{"top", {"ups_r", "phi_r"}}, {"bottom", {"ups_l", "phi_l"}}};
  doc.diagrams = {{"d1", {"top", "bottom", "nu_1", "nu2_1", "alpha_1", "beta_1"}},
                  {"d2", {"top", "bottom", "nu_2", "nu2_2", "alpha_2", "beta_2"}},
                  {"d3", {"top", "bottom", "nu_3", "nu2_3", "alpha_3", "beta_3"}}};
  doc.witnesses = {{"w", {"lambda1", "lambda2", "gamma", "gamma2"}},
                   {"w3", {"id_i3", "pad", "gamma_3", "gamma2_3"}}};
  return serialize_diagram_document(doc);
}

// I <- I2 -> teardrop, with the path running from one cone point to the
// other, and the identity span on the teardrop.
std::string teardrop_document() {
  GroupoidPtr t = make_fixture("teardrop");
  IntervalCover i2 = interval_fixture(2);
  IntervalCover i1 = interval_fixture(1);
  HomConstraints pins;
  pins.objects = {{i2.object(0, 0), teardrop_center(*t, 1)},
                  {i2.object(1, i2.length - 1), teardrop_center(*t, 2)}};
  auto paths = enumerate_homomorphisms(i2.groupoid, t, pins);
  if (paths.empty()) throw Error(ErrorCode::kInvalidArgument, "no path between the cone points");
  DiagramDocument doc;
  doc.groupoids = {{"i1", "i1.grpd"}, {"i2", "i2.grpd"}, {"teardrop", "teardrop.grpd"}};
  doc.homomorphisms["refine"] = hom_ref(refine(i2, i1), "i2", "i1");
  doc.homomorphisms["path"] = hom_ref(paths.front(), "i2", "teardrop");
  doc.homomorphisms["id_t"] = hom_ref(identity_homomorphism(t), "teardrop", "teardrop");
  doc.spans = {{"cone_path", {"refine", "path"}}, {"identity", {"id_t", "id_t"}}};
  return serialize_diagram_document(doc);
}


}  // namespace

std::vector<std::pair<std::string, std::string>> fixture_corpus() {
  std::vector<std::pair<std::string, std::string>> files;
  for (const std::string& name : fixture_names()) {
    files.push_back({name + ".grpd", serialize_groupoid(*make_fixture(name))});
  }
  TwoCellExample ex = two_cell_example();
  files.push_back({"ri2.grpd", serialize_groupoid(*ex.right2.groupoid)});
  files.push_back({"li2.grpd", serialize_groupoid(*ex.left2.groupoid)});
  files.push_back({"i4.grpd", serialize_groupoid(*ex.i4.groupoid)});
  files.push_back({"i3p.grpd", serialize_groupoid(*ex.padded.groupoid)});
  files.push_back({"two_cell.odg", two_cell_document()});
  files.push_back({"teardrop_span.odg", teardrop_document()});
  std::sort(files.begin(), files.end());
  return files;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite orbigroupoid toolkit", "orbi"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false;
  unsigned threads = 1;
  std::size_t bound = 12;
  app.add_flag("--json", json, "Machine-readable report");
  app.add_option("--threads", threads, "Worker threads for searches")->check(CLI::Range(1u, 256u));
  app.add_option("--bound", bound, "Object bound for witness searches");

  std::string file, file2, doc_path, name1, name2, witness, out_path, object_label, dir;
  std::vector<std::string> pins;
  std::size_t n = 0, limit = static_cast<std::size_t>(-1);
  bool iso = false, as_quotient = false;

  auto* validate = app.add_subcommand("validate", "Check the groupoid axioms");
  validate->add_option("file", file, "Groupoid file or fixture:<name>")->required();
  auto* quotient_cmd = app.add_subcommand("quotient", "Orbit graph with isotropy labels");
  quotient_cmd->add_option("file", file)->required();
  auto* isotropy = app.add_subcommand("isotropy", "Isotropy groups per orbit or at one object");
  isotropy->add_option("file", file)->required();
  isotropy->add_option("--object", object_label, "Object label");
  auto* etale = app.add_subcommand("etale", "Check that source and target are local isomorphisms");
  etale->add_option("file", file)->required();
  auto* hom_enum = app.add_subcommand("hom-enum", "Enumerate homomorphisms");
  hom_enum->add_option("source", file)->required();
  hom_enum->add_option("target", file2)->required();
  hom_enum->add_option("--pin", pins, "Object constraint source=target (labels)");
  hom_enum->add_option("--limit", limit, "List at most this many");
  auto* gmap = app.add_subcommand("gmap", "Build the mapping groupoid");
  gmap->add_option("source", file)->required();
  gmap->add_option("target", file2)->required();
  gmap->add_option("--out", out_path, "Write the mapping groupoid here");
  auto* inertia = app.add_subcommand("inertia", "Build the inertia groupoid");
  inertia->add_option("file", file)->required();
  inertia->add_option("--out", out_path, "Write the inertia groupoid here");
  auto* phi = app.add_subcommand("phi", "Compare GMap(*_{Z/n}, G) with the inertia groupoid");
  phi->add_option("file", file)->required();
  phi->add_option("--n", n, "Cyclic order (default: minimal exponent)");
  phi->add_flag("--iso", iso, "Also search for an isomorphism");
  auto* morita = app.add_subcommand("morita", "Look for a span of essential equivalences");
  morita->add_option("first", file)->required();
  morita->add_option("second", file2)->required();
  auto* span_compose = app.add_subcommand("span-compose", "Compose two spans of a diagram document");
  span_compose->add_option("document", doc_path)->required();
  span_compose->add_option("first", name1)->required();
  span_compose->add_option("second", name2)->required();
  auto* two_cell = app.add_subcommand("two-cell-verify", "Compare two 2-cell diagrams");
  two_cell->add_option("document", doc_path)->required();
  two_cell->add_option("--first", name1, "First diagram")->default_val("d1");
  two_cell->add_option("--second", name2, "Second diagram")->default_val("d2");
  two_cell->add_option("--witness", witness, "Named witness (default: search)");
  auto* export_dot_cmd = app.add_subcommand("export-dot", "Graph description of a groupoid");
  export_dot_cmd->add_option("file", file)->required();
  export_dot_cmd->add_flag("--quotient", as_quotient, "Export the orbit graph instead");
  auto* fixtures = app.add_subcommand("fixtures", "Write the fixture corpus");
  fixtures->add_option("dir", dir)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  Loader load;
  Outcome o;
  try {
    if (app.got_subcommand(validate)) {
      o = cmd_validate(load(file));
    } else if (app.got_subcommand(quotient_cmd)) {
      o = cmd_quotient(load(file));
    } else if (app.got_subcommand(isotropy)) {
      o = cmd_isotropy(load(file), object_label);
    } else if (app.got_subcommand(etale)) {
      o = cmd_etale(load(file));
    } else if (app.got_subcommand(hom_enum)) {
      o = cmd_hom_enum(load(file), load(file2), pins, limit, threads);
    } else if (app.got_subcommand(gmap)) {
      o = cmd_gmap(load(file), load(file2), out_path, threads);
    } else if (app.got_subcommand(inertia)) {
      o = cmd_inertia(load(file), out_path);
    } else if (app.got_subcommand(phi)) {
      o = cmd_phi(load(file), n, iso, threads);
    } else if (app.got_subcommand(morita)) {
      o = cmd_morita(load(file), load(file2), bound);
    } else if (app.got_subcommand(span_compose)) {
      o = cmd_span_compose(load_document(doc_path, load), name1, name2);
    } else if (app.got_subcommand(two_cell)) {
      o = cmd_two_cell(load_document(doc_path, load), name1, name2, witness, bound);
    } else if (app.got_subcommand(export_dot_cmd)) {
      GroupoidPtr g = load(file);
      DotOptions opts;
      opts.name = fs::path(file).stem().string();
      std::string dot = as_quotient ? export_dot(quotient(*g), opts) : export_dot(*g, opts);
      if (!json) {
        out << dot;
        return kExitOk;
      }
      o.report = {{"dot", dot}};
    } else if (app.got_subcommand(fixtures)) {
      fs::create_directories(dir);
      Json written = Json::array();
      for (const auto& [name, text] : fixture_corpus()) {
        write_file(fs::path(dir) / name, text);
        written.push_back(name);
      }
      o.report = {{"written", written}};
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kDanglingId:
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kInvalidSpace:
        return kExitUsage;
      default:
        return kExitCheckFailed;
    }
  }

  if (json) {
    out << o.report.dump(2) << '\n';
  } else {
    render(o.report, out, 0);
  }
  return o.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace orbi::cli
