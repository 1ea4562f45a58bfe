#pragma once

#include <cstdint>
#include <vector>

#include "nhtop/complex.hpp"
#include "nhtop/simplex.hpp"

namespace nhtop {

// Index-compressed view of a complex over an explicit ground set of at most
// 64 vertices: bit i of a mask is ground vertex i (sorted order). The heavy
// algorithms (duals, homology, collapse search, recognition, enumeration) all
// run on this representation.
struct MaskComplex {
  std::vector<Vertex> ground;        // sorted; defines the bit layout
  std::vector<std::uint64_t> facets; // canonical antichain, sorted by mask_less
  // facets empty <=> void complex; facets == {0} <=> {∅}

  bool is_void() const { return facets.empty(); }
  int dim() const;  // max popcount - 1; throws on void
  bool has_face(std::uint64_t s) const;
  std::uint64_t vertex_mask() const;  // union of facets

  // All faces grouped by dimension: byDim[q+1] holds the q-faces sorted by
  // mask_less (so byDim[0] = {∅} when nonvoid).
  std::vector<std::vector<std::uint64_t>> faces_by_dim() const;

  std::vector<std::uint64_t> all_faces_sorted() const;
};

// Order on same-cardinality masks matching Simplex order: smaller popcount
// first; among equal popcount, the lowest differing bit belongs to the
// smaller mask (vertexwise lexicographic on sorted vertex lists).
bool mask_less(std::uint64_t a, std::uint64_t b);

// Antichain normalization in mask space (drops dominated masks, sorts).
std::vector<std::uint64_t> mask_antichain(std::vector<std::uint64_t> gens);

MaskComplex to_mask(const SimplicialComplex& k);
MaskComplex to_mask(const SimplicialComplex& k, const GroundSet& ground);
SimplicialComplex from_mask(const MaskComplex& m);
Simplex unmask_simplex(std::uint64_t s, const std::vector<Vertex>& ground);
std::uint64_t mask_of(const Simplex& s, const std::vector<Vertex>& ground);

}  // namespace nhtop
