#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nhtop/simplex.hpp"

namespace nhtop {

// A finite simplicial complex stored as its canonical facet antichain.
//
// Two distinct degenerate values matter everywhere downstream:
//   * the void complex (no faces at all), represented by an empty facet list;
//   * the complex {∅} whose only face is the empty simplex, represented by a
//     single empty facet. {∅} = ∂Δ⁰ plays the role of the (-1)-sphere.
// Every nonvoid complex contains ∅ as a face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void

  // Generated complex: downward closure of the given simplices; containments
  // and duplicates are normalized away. An empty list gives the void complex;
  // use empty_complex() for {∅}.
  explicit SimplicialComplex(std::vector<Simplex> generators);

  static SimplicialComplex void_complex() { return SimplicialComplex(); }
  static SimplicialComplex empty_complex();      // {∅}
  // One facet per whitespace-separated token, one vertex per character:
  // "ab bc" -> complex with facets {a,b} and {b,c}. "{}" denotes ∅ the facet.
  static SimplicialComplex from_chars(std::string_view facets);

  bool is_void() const { return facets_.empty(); }
  // dim(∅) has no value; dim({∅}) = -1.
  std::optional<int> dim_opt() const;
  int dim() const;  // throws on void

  const std::vector<Simplex>& facets() const { return facets_; }
  std::vector<Vertex> vertex_set() const;
  std::size_t vertex_count() const { return vertex_set().size(); }

  bool has_face(const Simplex& s) const;
  bool is_facet(const Simplex& s) const;

  // All faces of dimension q, sorted; q = -1 gives {∅} iff nonvoid. Values of
  // q outside [-1, dim] give an empty list (no error), including on void.
  std::vector<Simplex> faces(int q) const;
  std::vector<Simplex> all_faces() const;  // every face including ∅, sorted
  std::size_t face_count() const;          // includes ∅ when nonvoid

  bool is_simplex_complex() const;  // equals Δ(V_K) for its own vertex set
  bool homogeneous() const;         // all facets share one dimension (nonvoid)

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
  friend bool operator<(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ < b.facets_;
  }

  std::string to_string() const;  // "{a,b},{b,c}" / "{∅}" / "∅"

 private:
  std::vector<Simplex> facets_;  // sorted antichain; empty <=> void
};

// Full simplex Δ(V) as a complex; Δ(∅) = {∅}.
SimplicialComplex full_simplex(const Simplex& v);
SimplicialComplex full_simplex(const GroundSet& v);

// Boundary complex ∂σ of a simplex: all proper faces. ∂∅ = void complex,
// ∂{v} = {∅}.
SimplicialComplex boundary_complex(const Simplex& s);

// Join K * L. Conventions: K * {∅} = K and K * ∅ = ∅ (void absorbs).
// Vertex sets must be disjoint.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
SimplicialComplex join(const Simplex& s, const SimplicialComplex& k);  // Δ(s) * K

// Union of complexes (faces of either).
SimplicialComplex union_complex(const SimplicialComplex& a, const SimplicialComplex& b);
// Intersection of complexes (faces of both); void if disjoint as face sets.
SimplicialComplex intersect_complex(const SimplicialComplex& a, const SimplicialComplex& b);

// lk(σ, K) = { τ ∈ K : τ ∩ σ = ∅, τ ∪ σ ∈ K }. Requires σ ∈ K.
// lk(∅, K) = K.
SimplicialComplex link(const Simplex& s, const SimplicialComplex& k);
// st(σ, K) = σ * lk(σ, K) (closed star). Requires σ ∈ K.
SimplicialComplex star(const Simplex& s, const SimplicialComplex& k);
// K - v = { σ ∈ K : v ∉ σ }. Requires v ∈ V_K.
SimplicialComplex deletion(const SimplicialComplex& k, const Vertex& v);

// t-fold suspension Σ^t K = ∂Δ^t * K with t+1 fresh vertices (a single join
// with the boundary sphere S^{t-1}); Σ^0 K = K, Σ^t ∅ = ∅.
SimplicialComplex suspension(const SimplicialComplex& k, int t);

// Is every facet of L also a facet of K? Requires L ⊆ K (subcomplex).
bool top_generated(const SimplicialComplex& l, const SimplicialComplex& k);

// Is every face of L a face of K?
bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k);

struct StructureReport {
  int dim = -1;
  std::vector<Simplex> principal;            // the facets
  std::vector<Simplex> ridges;               // immediate faces of facets
  bool homogeneous = false;
  // Adjacency of principal simplices: σ ~ τ when σ∩τ is an immediate face of
  // σ or of τ. Indices into `principal`.
  std::vector<std::pair<int, int>> adjacency;
  bool strongly_connected = false;           // adjacency graph connected
};

// Requires K nonvoid.
StructureReport structure_report(const SimplicialComplex& k);

// Deterministic fresh labels ("~0", "~1", ...) disjoint from `used`.
std::vector<Vertex> fresh_vertices(const std::vector<Vertex>& used, std::size_t count);

struct ComplexHash {
  std::size_t operator()(const SimplicialComplex& k) const;
};

}  // namespace nhtop
