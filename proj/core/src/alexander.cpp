#include "nhtop/alexander.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "nhtop/mask_complex.hpp"

namespace nhtop {

Simplex complement(const Simplex& s, const GroundSet& ground) {
  if (!ground.contains_all(s.vertices()))
    throw std::invalid_argument("complement: simplex not inside ground set");
  std::vector<Vertex> out;
  std::set_difference(ground.vertices().begin(), ground.vertices().end(),
                      s.vertices().begin(), s.vertices().end(),
                      std::back_inserter(out));
  return Simplex(std::move(out));
}

namespace {

// Minimal non-faces of K inside Δ(V), as masks over V. For void K the unique
// minimal non-face is ∅ itself.
std::vector<std::uint64_t> minimal_nonfaces(const MaskComplex& m) {
  const std::size_t n = m.ground.size();
  if (n > 24)
    throw std::invalid_argument("dual: ground sets beyond 24 vertices are unsupported");
  std::vector<std::uint64_t> out;
  if (m.is_void()) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = 1ull << n;
  // A subset is a minimal non-face when it is not a face but all immediate
  // subsets are. Grouping by popcount is unnecessary at this scale.
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (m.has_face(s)) continue;
    bool minimal = true;
    for (std::uint64_t bits = s; bits;) {
      const std::uint64_t low = bits & (~bits + 1);
      if (!m.has_face(s ^ low)) {
        minimal = false;
        break;
      }
      bits ^= low;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace

SimplicialComplex dual_over(const SimplicialComplex& k, const GroundSet& ground) {
  if (!ground.contains_all(k.vertex_set()))
    throw std::invalid_argument("dual_over: ground set does not cover the complex");
  const MaskComplex m = to_mask(k, ground);
  const std::uint64_t full = ground.size() == 64
                                 ? ~0ull
                                 : (1ull << ground.size()) - 1;
  std::vector<std::uint64_t> gens;
  for (auto nf : minimal_nonfaces(m)) gens.push_back(full & ~nf);
  MaskComplex d;
  d.ground = ground.vertices();
  d.facets = mask_antichain(std::move(gens));
  return from_mask(d);
}

SimplicialComplex dual(const SimplicialComplex& k) {
  if (k.is_void())
    throw std::invalid_argument("dual: void complex has no implicit ground set");
  return dual_over(k, GroundSet(k.vertex_set()));
}

SimplicialComplex relative_dual(const SimplicialComplex& k, const Simplex& tau) {
  if (k.is_void())
    throw std::invalid_argument("relative_dual: void complex");
  const auto vk = k.vertex_set();
  for (const auto& v : tau.vertices())
    if (std::binary_search(vk.begin(), vk.end(), v))
      throw std::invalid_argument("relative_dual: τ meets the complex at " + v.label());
  return dual_over(k, GroundSet(merge_vertex_sets(vk, tau.vertices())));
}

SimplicialComplex relative_dual_direct(const SimplicialComplex& k, const Simplex& tau) {
  if (k.is_void())
    throw std::invalid_argument("relative_dual_direct: void complex");
  if (tau.empty())
    throw std::invalid_argument("relative_dual_direct: τ must be nonempty");
  const auto vk = k.vertex_set();
  for (const auto& v : tau.vertices())
    if (std::binary_search(vk.begin(), vk.end(), v))
      throw std::invalid_argument("relative_dual_direct: τ meets the complex");
  const SimplicialComplex left = join(boundary_complex(tau), full_simplex(Simplex(vk)));
  const SimplicialComplex right = join(full_simplex(tau), dual(k));
  return union_complex(left, right);
}

SimplicialComplex double_dual(const SimplicialComplex& k, const Simplex& tau,
                              const Simplex& sigma) {
  const SimplicialComplex kt = relative_dual(k, tau);
  if (!sigma.empty()) {
    const auto vkt = kt.vertex_set();
    for (const auto& v : sigma.vertices())
      if (std::binary_search(vkt.begin(), vkt.end(), v))
        throw std::invalid_argument("double_dual: σ meets K^τ at " + v.label());
  }
  if (kt.is_void()) {
    // Only K = Δ(V_K) with τ = ∅ lands here; the second dual is then taken
    // over the first ground set extended by σ.
    const GroundSet g(merge_vertex_sets(k.vertex_set(), sigma.vertices()));
    return dual_over(kt, g);
  }
  return relative_dual(kt, sigma);
}

}  // namespace nhtop
