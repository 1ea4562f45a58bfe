#pragma once

#include "nhtop/complex.hpp"
#include "nhtop/simplex.hpp"

namespace nhtop {

// Complement simplex Δ(V - σ) of σ inside the ground set V. Requires σ ⊆ V.
Simplex complement(const Simplex& s, const GroundSet& ground);

// Alexander dual over an explicit ground set V ⊇ V_K:
//   K^*V = { σ ⊆ V : V - σ ∉ K }.
// Facets are complements of the minimal non-faces of K in Δ(V). Degenerate
// values follow from the same rule: Δ(V)^*V = ∅ (void), (∂Δ(V))^*V = {∅},
// and the dual of the void complex is Δ(V) (every subset qualifies), which
// makes dualization over a fixed ground set a strict involution.
SimplicialComplex dual_over(const SimplicialComplex& k, const GroundSet& ground);

// Dual over the complex's own vertex set. Requires K nonvoid.
SimplicialComplex dual(const SimplicialComplex& k);

// Relative dual K^τ: the dual over V_K ∪ τ, for a simplex τ disjoint from
// V_K (τ may be empty, giving the plain dual). Requires K nonvoid.
SimplicialComplex relative_dual(const SimplicialComplex& k, const Simplex& tau);

// Direct construction K^τ = ∂τ * Δ(V_K)  ∪  τ * K^* for nonempty τ; an
// independent code path from relative_dual used to cross-check it.
SimplicialComplex relative_dual_direct(const SimplicialComplex& k, const Simplex& tau);

// (K^τ)^σ for disjoint fresh simplices: dualize twice, extending the ground
// set by τ and then by σ.
SimplicialComplex double_dual(const SimplicialComplex& k, const Simplex& tau,
                              const Simplex& sigma);

}  // namespace nhtop
