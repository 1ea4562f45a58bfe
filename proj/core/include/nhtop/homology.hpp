#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nhtop/complex.hpp"
#include "nhtop/simplex.hpp"
#include "nhtop/smith.hpp"

namespace nhtop {

// Boundary map ∂_q : C_q -> C_{q-1} of the augmented chain complex; the
// augmentation ∂_0 maps vertices to the (-1)-chain group generated by ∅.
struct BoundaryMatrix {
  int q = 0;
  std::vector<Simplex> rows;  // (q-1)-faces; just {∅} for q = 0
  std::vector<Simplex> cols;  // q-faces
  IntMatrix matrix;           // entries in {-1, 0, 1}
};

// ∂_q for q = 0..dim(K). The void complex and {∅} both give an empty list
// ({∅} has only the trivial (-1)-chain group, so there are no maps).
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k);

struct IntegralGroup {
  long rank = 0;
  std::vector<std::uint64_t> torsion;  // invariant factors > 1, divisibility order

  bool trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const IntegralGroup&, const IntegralGroup&) = default;
  std::string to_string() const;  // "Z^2 + Z/2", "0", ...
};

// Reduced Betti data; index i holds dimension i-1, so profile[0] is the
// (-1)-dimensional group (nonzero only for {∅}). Trailing trivial groups are
// trimmed, and the void complex has an empty (all-zero) profile.
struct BettiProfile {
  std::vector<long> mod2;               // reduced GF(2) Betti numbers
  std::vector<IntegralGroup> integral;  // reduced integral homology

  long mod2_at(int dim) const;
  IntegralGroup integral_at(int dim) const;
  bool all_zero() const;
  friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
  std::string to_string() const;
};

BettiProfile betti(const SimplicialComplex& k);

// Reduced integral cohomology, computed from the transposed boundary maps (an
// independent route; by universal coefficients the torsion shifts up by one
// dimension relative to homology). Index i holds dimension i-1.
std::vector<IntegralGroup> cohomology(const SimplicialComplex& k);
IntegralGroup cohomology_at(const std::vector<IntegralGroup>& profile, int dim);

// All reduced homology trivial (void complex counts as acyclic; {∅} does not).
bool is_acyclic(const SimplicialComplex& k);

// The m with reduced homology of S^m (free rank 1 in dimension m, nothing
// else); m = -1 detects {∅}. nullopt when the profile is not a sphere's.
std::optional<int> sphere_profile(const SimplicialComplex& k);

// Does K contain every subset of V of size <= 3? (Certifies simple
// connectivity of K when combined with connectivity.)
bool contains_full_2_skeleton(const SimplicialComplex& k, const GroundSet& ground);

// Reduced Euler characteristic Σ (-1)^q n_q including the empty face; equals
// the alternating sum of reduced Betti numbers.
long long reduced_euler_characteristic(const SimplicialComplex& k);

// Is the relative homology H_*(K, L) trivial in every dimension? Requires
// L a nonvoid subcomplex of K.
bool relative_acyclic(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace nhtop
