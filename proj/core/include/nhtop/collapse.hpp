#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nhtop/complex.hpp"
#include "nhtop/simplex.hpp"

namespace nhtop {

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

// One elementary collapse: σ is a free face (contained in exactly one facet
// τ, of dimension dim σ + 1); the step removes σ and τ. The empty simplex is
// never free (removing a lone vertex would change the homotopy type).
struct CollapseStep {
  Simplex free_face;
  Simplex cofacet;
};

struct CollapseSequence {
  SimplicialComplex start;
  SimplicialComplex end;
  std::vector<CollapseStep> steps;
};

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000;
  // Retry the search once on the barycentric subdivision after exhaustion
  // (collapsibility of a subdivision also certifies the property).
  bool subdivision_retry = false;
};

struct CollapseOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<CollapseSequence> sequence;  // present iff verdict == Yes
  std::string note;
  std::uint64_t nodes_used = 0;
};

// All free pairs of K, sorted by (cofacet dimension desc, cofacet, face).
std::vector<CollapseStep> free_pairs(const SimplicialComplex& k);

// Apply one elementary collapse; throws if the pair is not free in K.
SimplicialComplex collapse_step(const SimplicialComplex& k, const CollapseStep& step);

// Does K collapse to a single vertex? No is exact (non-acyclic complexes
// cannot collapse); an exhausted or budget-capped search returns Unknown,
// since collapsibility in the wider sense admits subdivision.
CollapseOutcome is_collapsible(const SimplicialComplex& k, const SearchBudget& budget = {});

// Does K collapse onto the subcomplex L? No is exact (L ⊄ K, face-count
// parity, or nontrivial relative homology); Unknown on search exhaustion.
CollapseOutcome collapses_to(const SimplicialComplex& k, const SimplicialComplex& l,
                             const SearchBudget& budget = {});

struct SpineResult {
  Verdict verdict = Verdict::Unknown;  // Yes: reached target dimension
  SimplicialComplex result;            // final complex (partial on Unknown)
  CollapseSequence sequence;
  std::string note;
};

// Collapse away whole dimension levels, top-down, until dim(result) <=
// target_dim (default: one below dim(M)). Depletion of the top level is a
// complete search, so a No from the first level is exact.
SpineResult spine(const SimplicialComplex& m, const SearchBudget& budget = {},
                  std::optional<int> target_dim = std::nullopt);

// Witness for "Kdual expands to Ltau": searches for a collapse of Ltau onto
// Kdual; the expansion is the reverse reading of the returned sequence.
// Requires Kdual to be a subcomplex of Ltau.
CollapseOutcome expansion_check(const SimplicialComplex& kdual,
                                const SimplicialComplex& ltau,
                                const SearchBudget& budget = {});

// Replay a certificate: every step free in sequence order, landing on `end`.
bool replay(const CollapseSequence& seq);

// Barycentric subdivision; vertices of the result are the nonempty faces of
// K, labelled by joining vertex labels with '.'.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

}  // namespace nhtop
