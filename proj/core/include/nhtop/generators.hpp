#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nhtop/complex.hpp"
#include "nhtop/document.hpp"
#include "nhtop/simplex.hpp"

namespace nhtop {

using Seed = std::uint64_t;

enum class StandardKind {
  Simplex,          // full d-simplex on d+1 vertices; d = -1 gives {∅}
  BoundarySphere,   // d-sphere ∂Δ^{d+1} on d+2 vertices; d = -1 gives {∅}
};

// Vertices are labeled v0, v1, ... The parameter is the dimension of the
// produced complex in both cases (so BoundarySphere takes the sphere's
// dimension, not the dimension of the simplex whose boundary it is).
SimplicialComplex standard(StandardKind kind, int d);

struct ShelledBall {
  SimplicialComplex complex;
  std::vector<Simplex> shelling;  // facets in attachment order
};

// Random shellable d-ball with exactly n_facets facets, built facet by facet:
// each new facet meets the part already built in a nonempty proper union of
// its own ridges, every one of which was on the boundary. That invariant makes
// the attachment order a shelling certificate and keeps every intermediate
// complex a ball, so the result is collapsible by construction.
ShelledBall shelled_ball(int d, int n_facets, Seed seed);

// Stellar subdivision at σ ∈ K, σ ≠ ∅: replace st(σ, K) by w * ∂σ * lk(σ, K)
// for a fresh vertex w. Preserves the PL homeomorphism type.
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma);

// ∂η * Δ(V)  ∪  η * K for a nonempty simplex η disjoint from the ground set
// V ⊇ V_K. Gluing a sphere or ball K into the boundary of the simplex on
// V ∪ η this way turns sphere-like inputs into sphere-like outputs one
// dimension up, with the non-manifold locus of K carried along.
SimplicialComplex simplex_glue(const SimplicialComplex& k, const Simplex& eta,
                               const GroundSet& ground);

enum class SampleKind { Ball, Sphere };

struct DoubleDualSample {
  SimplicialComplex complex;  // (base^tau)^sigma
  SimplicialComplex base;
  Simplex tau;
  Simplex sigma;
};

// Random double relative dual of a ball (shelled, d >= 1) or sphere
// (∂Δ^{d+1} with a few stellar subdivisions, d >= 0) base. tau_dim and
// sigma_dim must be >= 0 so each dual's support covers its full ground set
// and the second dual extends the right ground.
DoubleDualSample nh_double_dual(SampleKind kind, int d, int tau_dim, int sigma_dim,
                                Seed seed);

// Named reference triangulations: rp2_6 (projective plane), moebius_5
// (Moebius band), dunce_hat_8 (acyclic, no free edges). Names of the form
// boundary_sphere_<k> resolve dynamically to ∂Δ^{k+1}.
std::vector<std::string> reference_names();
ComplexDocument reference(const std::string& name);

}  // namespace nhtop
