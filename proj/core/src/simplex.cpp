#include "nhtop/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace nhtop {

Vertex::Vertex(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw std::invalid_argument("vertex label must be nonempty");
}

namespace {

std::vector<Vertex> normalize(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(normalize(std::move(vertices))) {}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

Simplex Simplex::from_chars(std::string_view chars) {
  std::vector<Vertex> vs;
  vs.reserve(chars.size());
  for (char c : chars) vs.emplace_back(std::string(1, c));
  return Simplex(std::move(vs));
}

bool Simplex::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(vertices_.begin(), vertices_.end(),
                       other.vertices_.begin(), other.vertices_.end());
}

Simplex Simplex::union_with(const Simplex& other) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() + other.vertices_.size());
  std::set_union(vertices_.begin(), vertices_.end(),
                 other.vertices_.begin(), other.vertices_.end(),
                 std::back_inserter(out));
  Simplex s;
  s.vertices_ = std::move(out);
  return s;
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_intersection(vertices_.begin(), vertices_.end(),
                        other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out));
  Simplex s;
  s.vertices_ = std::move(out);
  return s;
}

Simplex Simplex::minus(const Vertex& v) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size());
  for (const auto& u : vertices_)
    if (!(u == v)) out.push_back(u);
  Simplex s;
  s.vertices_ = std::move(out);
  return s;
}

bool Simplex::disjoint(const Simplex& other) const {
  return intersect(other).empty();
}

std::vector<Simplex> Simplex::immediate_faces() const {
  std::vector<Simplex> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(minus(v));
  return out;
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += vertices_[i].label();
  }
  s += "}";
  return s;
}

bool operator<(const Simplex& a, const Simplex& b) {
  if (a.vertices_.size() != b.vertices_.size())
    return a.vertices_.size() < b.vertices_.size();
  return a.vertices_ < b.vertices_;
}

GroundSet::GroundSet(std::vector<Vertex> vertices) : vertices_(normalize(std::move(vertices))) {}

bool GroundSet::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool GroundSet::contains_all(const std::vector<Vertex>& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](const Vertex& v) { return contains(v); });
}

std::vector<Vertex> merge_vertex_sets(const std::vector<Vertex>& a,
                                      const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& v : s.vertices()) {
    h ^= std::hash<std::string>{}(v.label());
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace nhtop
