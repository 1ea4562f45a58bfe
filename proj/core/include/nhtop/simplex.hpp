#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nhtop {

// Vertices are opaque string labels ordered shortlex (length first, then
// lexicographic), so "v2" < "v10" and the order is stable across runs.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::string label);

  const std::string& label() const { return label_; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend bool operator<(const Vertex& a, const Vertex& b) {
    if (a.label_.size() != b.label_.size()) return a.label_.size() < b.label_.size();
    return a.label_ < b.label_;
  }

 private:
  std::string label_;
};

// A simplex is a finite vertex set; the empty simplex (dimension -1) is a
// valid value and is a face of every nonvoid complex.
class Simplex {
 public:
  Simplex() = default;                       // the empty simplex
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices);

  // Convenience: one vertex per character ("abc" -> {a,b,c}).
  static Simplex from_chars(std::string_view chars);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool contains(const Vertex& v) const;
  bool contains(const Simplex& other) const;        // other subset of this
  Simplex union_with(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;
  Simplex minus(const Vertex& v) const;
  bool disjoint(const Simplex& other) const;

  // Immediate faces: drop one vertex each. Empty simplex has none.
  std::vector<Simplex> immediate_faces() const;

  std::string to_string() const;  // "{a,b,c}", "{}" for the empty simplex

  friend bool operator==(const Simplex&, const Simplex&) = default;
  // Order: size first, then vertexwise; total and stable.
  friend bool operator<(const Simplex& a, const Simplex& b);

 private:
  std::vector<Vertex> vertices_;  // sorted, duplicate-free
};

// Explicit ground set for duality; always a superset of the vertex set of the
// complex it is paired with (checked at the use sites).
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(const Vertex& v) const;
  bool contains_all(const std::vector<Vertex>& vs) const;

  Simplex full_simplex() const { return Simplex(vertices_); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<Vertex> vertices_;  // sorted, duplicate-free
};

std::vector<Vertex> merge_vertex_sets(const std::vector<Vertex>& a,
                                      const std::vector<Vertex>& b);

struct VertexHash {
  std::size_t operator()(const Vertex& v) const {
    return std::hash<std::string>{}(v.label());
  }
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const;
};

}  // namespace nhtop
