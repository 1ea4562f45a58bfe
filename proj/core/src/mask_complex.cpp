#include "nhtop/mask_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nhtop {

bool mask_less(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Lowest differing bit: whoever owns it has the smaller leading vertex.
  const std::uint64_t diff = a ^ b;
  return (a >> std::countr_zero(diff)) & 1u;
}

int MaskComplex::dim() const {
  if (is_void()) throw std::invalid_argument("dim: void complex");
  int d = -1;
  for (auto f : facets) d = std::max(d, std::popcount(f) - 1);
  return d;
}

bool MaskComplex::has_face(std::uint64_t s) const {
  for (auto f : facets)
    if ((s & ~f) == 0) return true;
  return false;
}

std::uint64_t MaskComplex::vertex_mask() const {
  std::uint64_t v = 0;
  for (auto f : facets) v |= f;
  return v;
}

std::vector<std::vector<std::uint64_t>> MaskComplex::faces_by_dim() const {
  std::vector<std::vector<std::uint64_t>> byDim;
  if (is_void()) return byDim;
  byDim.resize(static_cast<std::size_t>(dim()) + 2);
  auto all = all_faces_sorted();
  for (auto s : all) byDim[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  for (auto& level : byDim)
    std::sort(level.begin(), level.end(), mask_less);
  return byDim;
}

std::vector<std::uint64_t> MaskComplex::all_faces_sorted() const {
  std::vector<std::uint64_t> out;
  if (is_void()) return out;
  for (auto f : facets) {
    // Enumerate submasks of f, including 0.
    std::uint64_t s = f;
    while (true) {
      out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::vector<std::uint64_t> mask_antichain(std::vector<std::uint64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && (gens[i] & ~gens[j]) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

MaskComplex to_mask(const SimplicialComplex& k) {
  return to_mask(k, GroundSet(k.vertex_set()));
}

MaskComplex to_mask(const SimplicialComplex& k, const GroundSet& ground) {
  if (ground.size() > 64)
    throw std::invalid_argument("to_mask: ground set exceeds 64 vertices");
  if (!ground.contains_all(k.vertex_set()))
    throw std::invalid_argument("to_mask: ground set does not cover the complex");
  MaskComplex m;
  m.ground = ground.vertices();
  m.facets.reserve(k.facets().size());
  for (const auto& f : k.facets()) m.facets.push_back(mask_of(f, m.ground));
  std::sort(m.facets.begin(), m.facets.end(), mask_less);
  return m;
}

SimplicialComplex from_mask(const MaskComplex& m) {
  std::vector<Simplex> gens;
  gens.reserve(m.facets.size());
  for (auto f : m.facets) gens.push_back(unmask_simplex(f, m.ground));
  return SimplicialComplex(std::move(gens));
}

Simplex unmask_simplex(std::uint64_t s, const std::vector<Vertex>& ground) {
  std::vector<Vertex> vs;
  while (s) {
    const int i = std::countr_zero(s);
    vs.push_back(ground[static_cast<std::size_t>(i)]);
    s &= s - 1;
  }
  return Simplex(std::move(vs));
}

std::uint64_t mask_of(const Simplex& s, const std::vector<Vertex>& ground) {
  std::uint64_t m = 0;
  for (const auto& v : s.vertices()) {
    const auto it = std::lower_bound(ground.begin(), ground.end(), v);
    if (it == ground.end() || !(*it == v))
      throw std::invalid_argument("mask_of: vertex " + v.label() + " outside ground set");
    m |= 1ull << (it - ground.begin());
  }
  return m;
}

}  // namespace nhtop
