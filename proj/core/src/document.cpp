#include "nhtop/document.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include <json.hpp>

namespace nhtop {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw DocumentError("complex document: " + what); }

Vertex parse_vertex(const json& j) {
  if (!j.is_string()) fail("vertex labels must be strings");
  const std::string label = j.get<std::string>();
  if (label.empty()) fail("vertex labels must be nonempty");
  return Vertex{label};
}

}  // namespace

ComplexDocument parse_complex_document(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) fail("not valid JSON");
  if (!root.is_object()) fail("top level must be an object");
  if (root.contains("format") && root["format"] != "nhtop-complex")
    fail("unrecognized format marker");
  if (!root.contains("facets")) fail("missing \"facets\"");
  if (!root["facets"].is_array()) fail("\"facets\" must be an array");

  std::vector<Simplex> facets;
  std::set<Simplex> seen;
  for (const json& jf : root["facets"]) {
    if (!jf.is_array()) fail("each facet must be an array of vertex labels");
    if (jf.empty()) fail("facets must be nonempty; {∅} is encoded via includes_empty");
    std::vector<Vertex> verts;
    for (const json& jv : jf) verts.push_back(parse_vertex(jv));
    Simplex s(verts);
    if (s.size() != verts.size()) fail("facet " + s.to_string() + " repeats a vertex");
    if (!seen.insert(s).second) fail("duplicate facet " + s.to_string());
    facets.push_back(std::move(s));
  }

  bool includes_empty = !facets.empty();
  if (root.contains("includes_empty")) {
    if (!root["includes_empty"].is_boolean()) fail("\"includes_empty\" must be a boolean");
    includes_empty = root["includes_empty"].get<bool>();
  }
  if (!facets.empty() && !includes_empty)
    fail("a complex with facets contains the empty simplex; includes_empty:false is contradictory");

  SimplicialComplex k = includes_empty && facets.empty()
                            ? SimplicialComplex::empty_complex()
                            : SimplicialComplex(facets);

  if (root.contains("vertices")) {
    if (!root["vertices"].is_array()) fail("\"vertices\" must be an array");
    std::set<Vertex> listed;
    for (const json& jv : root["vertices"]) listed.insert(parse_vertex(jv));
    for (const Vertex& v : k.vertex_set())
      if (!listed.count(v)) fail("facet vertex \"" + v.label() + "\" missing from vertex list");
    for (const Vertex& v : listed)
      if (!k.has_face(Simplex({v})))
        fail("listed vertex \"" + v.label() +
             "\" lies in no facet; isolated vertices must appear as singleton facets");
  }

  ComplexDocument doc;
  doc.complex = std::move(k);
  if (root.contains("name")) {
    if (!root["name"].is_string()) fail("\"name\" must be a string");
    doc.name = root["name"].get<std::string>();
  }
  if (root.contains("description")) {
    if (!root["description"].is_string()) fail("\"description\" must be a string");
    doc.description = root["description"].get<std::string>();
  }
  if (root.contains("ground")) {
    if (!root["ground"].is_array()) fail("\"ground\" must be an array");
    std::set<Vertex> listed;
    for (const json& jv : root["ground"]) {
      Vertex v = parse_vertex(jv);
      if (!listed.insert(v).second) fail("ground repeats vertex \"" + v.label() + "\"");
    }
    for (const Vertex& v : doc.complex.vertex_set())
      if (!listed.count(v)) fail("ground must contain every vertex; missing \"" + v.label() + "\"");
    doc.ground = std::vector<Vertex>(listed.begin(), listed.end());
  }
  return doc;
}

std::string serialize_complex_document(const ComplexDocument& doc, bool pretty) {
  json root;
  root["format"] = "nhtop-complex";
  if (doc.name) root["name"] = *doc.name;
  if (doc.description) root["description"] = *doc.description;
  json verts = json::array();
  for (const Vertex& v : doc.complex.vertex_set()) verts.push_back(v.label());
  root["vertices"] = verts;
  json facets = json::array();
  for (const Simplex& f : doc.complex.facets()) {
    if (f.empty()) continue;  // {∅} is carried by includes_empty
    json jf = json::array();
    for (const Vertex& v : f.vertices()) jf.push_back(v.label());
    facets.push_back(jf);
  }
  root["facets"] = facets;
  root["includes_empty"] = !doc.complex.is_void();
  if (doc.ground) {
    json ground = json::array();
    for (const Vertex& v : *doc.ground) ground.push_back(v.label());
    root["ground"] = ground;
  }
  return pretty ? root.dump(2) : root.dump();
}

std::string serialize_complex(const SimplicialComplex& k, bool pretty) {
  ComplexDocument doc;
  doc.complex = k;
  return serialize_complex_document(doc, pretty);
}

}  // namespace nhtop
