#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhtop/collapse.hpp"
#include "nhtop/complex.hpp"
#include "nhtop/simplex.hpp"

namespace nhtop {

struct TriState {
  Verdict verdict = Verdict::Unknown;
  std::string witness;
};

// Every (d-1)-simplex lies in exactly two facets (boundaryless) or at most
// two (with_boundary). Requires K homogeneous.
bool is_weak_pseudomanifold(const SimplicialComplex& k, bool with_boundary);

// Weak pseudomanifold (boundary allowed) + strongly connected: any two
// facets joined by a chain of facets meeting in ridges.
bool is_pseudomanifold(const SimplicialComplex& k);

// Non-homogeneous pseudomanifold: principal simplices of dimension >= 1,
// every ridge link a point or an NH-sphere of homotopy dimension 0, and the
// principal simplices connected through adjacency. Requires M connected.
TriState is_nh_pseudomanifold(const SimplicialComplex& m);

// Links of vertices are combinatorial (d-1)-balls or (d-1)-spheres,
// recursively. Dimensions <= 2 are decided exactly; in higher dimension a
// Yes carries certificates and a failed certificate search is Unknown.
TriState is_combinatorial_manifold(const SimplicialComplex& k,
                                   const SearchBudget& budget = {});

struct BallSphereVerdict {
  TriState ball;
  TriState sphere;
  std::optional<CollapseSequence> collapse;  // ball certificate when found
};

// Is K a combinatorial d-ball / d-sphere? Exact through dimension 2 via the
// classification of surfaces; for d >= 3, ball = manifold + collapsible and
// sphere = link/deletion certificate, with Unknown when no certificate is
// found. No is exact (homology or manifold obstruction).
BallSphereVerdict classify_ball_sphere(const SimplicialComplex& k,
                                       const SearchBudget& budget = {});

// Every vertex link is an NH-ball or NH-sphere of the appropriate dimension,
// recursively ({∅} counts as the (-1)-sphere, so isolated vertices are fine).
TriState is_nh_manifold(const SimplicialComplex& m, const SearchBudget& budget = {});

enum class NhKind {
  CombinatorialBall,
  CombinatorialSphere,
  NhBall,
  NhSphere,
  NhManifoldOnly,
  NotNhManifold,
  Unknown,
};
std::string to_string(NhKind k);

// S = B + L with B an NH-ball of the full dimension, L a top-generated
// combinatorial k-ball, and B ∩ L = ∂L. k is the homotopy dimension.
struct Decomposition {
  SimplicialComplex nh_ball;  // B
  SimplicialComplex k_ball;   // L
  int k = -1;
};

struct Classification {
  NhKind kind = NhKind::Unknown;
  // Present iff kind == NhSphere (combinatorial spheres have homotopy
  // dimension equal to dim, carried by the decomposition instead).
  std::optional<int> homotopy_dim;
  std::optional<Decomposition> decomposition;  // sphere kinds
  std::optional<CollapseSequence> collapse;    // ball kinds
  std::string witness;
};

// Most specific certified class of M. Requires M nonvoid. The kinds
// CombinatorialBall/CombinatorialSphere imply the corresponding NH kind;
// is_nh_ball_kind/is_nh_sphere_kind fold that implication.
Classification classify_nh(const SimplicialComplex& m, const SearchBudget& budget = {});

bool is_nh_ball_kind(const Classification& c);
bool is_nh_sphere_kind(const Classification& c);

struct BoundaryData {
  SimplicialComplex boundary;          // complex generated by the pseudoboundary
  std::vector<Simplex> pseudoboundary; // nonempty simplices with NH-ball links
  std::vector<Simplex> interior;       // nonempty simplices with NH-sphere links
};

// Splits the nonempty simplices of an NH-manifold by link type. Throws if
// some link cannot be classified within budget (carrying the offender).
BoundaryData boundary_data(const SimplicialComplex& m, const SearchBudget& budget = {});

// Mod-2 boundary of a homogeneous complex: the complex generated by the
// ridges lying in an odd number of facets. ∂{v} = {∅}; closed complexes give
// the void complex.
SimplicialComplex mod2_boundary(const SimplicialComplex& k);

}  // namespace nhtop
