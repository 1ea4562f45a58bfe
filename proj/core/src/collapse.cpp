#include "nhtop/collapse.hpp"

#include <algorithm>
#include <bit>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "nhtop/homology.hpp"
#include "nhtop/mask_complex.hpp"

#include "collapse_core.hpp"

namespace nhtop {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

namespace {

using Masks = std::vector<std::uint64_t>;  // facet antichain, sorted by mask_less

using detail::BudgetExhausted;
using detail::FaceLattice;
using detail::GreedyRun;
using detail::MaskStep;
using detail::greedy_collapse;

// Free pairs over a facet antichain: σ lies in exactly one facet τ and
// dim τ = dim σ + 1. Only faces one level below some facet can qualify, so it
// suffices to scan immediate subfaces of facets. σ = 0 is excluded.
std::vector<MaskStep> mask_free_pairs(const Masks& facets) {
  std::vector<MaskStep> out;
  std::unordered_set<std::uint64_t> seen;
  for (auto f : facets) {
    for (std::uint64_t bits = f; bits;) {
      const std::uint64_t low = bits & (~bits + 1);
      bits ^= low;
      const std::uint64_t s = f ^ low;
      if (s == 0) continue;
      if (!seen.insert(s).second) continue;
      int count = 0;
      for (auto g : facets)
        if ((s & ~g) == 0 && ++count > 1) break;
      if (count == 1) out.push_back({s, f});
    }
  }
  std::sort(out.begin(), out.end(), [](const MaskStep& a, const MaskStep& b) {
    const int pa = std::popcount(a.cofacet), pb = std::popcount(b.cofacet);
    if (pa != pb) return pa > pb;
    if (a.cofacet != b.cofacet) return mask_less(a.cofacet, b.cofacet);
    return mask_less(a.face, b.face);
  });
  return out;
}

Masks apply_mask_step(const Masks& facets, const MaskStep& step) {
  Masks gens;
  gens.reserve(facets.size() + std::popcount(step.cofacet));
  for (auto f : facets)
    if (f != step.cofacet) gens.push_back(f);
  for (std::uint64_t bits = step.cofacet; bits;) {
    const std::uint64_t low = bits & (~bits + 1);
    bits ^= low;
    const std::uint64_t s = step.cofacet ^ low;
    if (s != step.face) gens.push_back(s);
  }
  return mask_antichain(std::move(gens));
}

// 128-bit state fingerprint; the memo never produces exact No, so a
// vanishing collision risk only costs completeness, not soundness.
std::pair<std::uint64_t, std::uint64_t> state_key(const Masks& facets) {
  std::uint64_t h1 = 0x9e3779b97f4a7c15ull, h2 = 0xc2b2ae3d27d4eb4full;
  for (auto f : facets) {
    std::uint64_t x = f + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    h1 = (h1 ^ (x ^ (x >> 31))) * 1099511628211ull;
    x = f * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull;
    x ^= x >> 33;
    h2 = (h2 ^ x) * 0x100000001b3ull;
  }
  h1 ^= facets.size();
  return {h1, h2};
}

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return k.first ^ (k.second * 0x9e3779b97f4a7c15ull);
  }
};

class CollapseSearch {
 public:
  CollapseSearch(std::uint64_t max_nodes) : max_nodes_(max_nodes) {}

  std::uint64_t nodes_used() const { return nodes_; }

  // Generic DFS to a goal state; `allowed` filters moves.
  std::optional<std::vector<MaskStep>> run(
      const Masks& start, const std::function<bool(const Masks&)>& goal,
      const std::function<bool(const MaskStep&)>& allowed) {
    std::vector<MaskStep> steps;
    if (dfs(start, goal, allowed, steps)) return steps;
    return std::nullopt;
  }

 private:
  bool dfs(const Masks& state, const std::function<bool(const Masks&)>& goal,
           const std::function<bool(const MaskStep&)>& allowed,
           std::vector<MaskStep>& steps) {
    if (goal(state)) return true;
    if (++nodes_ > max_nodes_) throw BudgetExhausted{};
    const auto key = state_key(state);
    if (failed_.count(key)) return false;
    for (const auto& mv : mask_free_pairs(state)) {
      if (!allowed(mv)) continue;
      steps.push_back(mv);
      if (dfs(apply_mask_step(state, mv), goal, allowed, steps)) return true;
      steps.pop_back();
    }
    failed_.insert(key);
    return false;
  }

  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, KeyHash> failed_;
};

// Assembles a sequence when the final antichain is already known (the greedy
// engine tracks it), avoiding a quadratic re-application of every step.
CollapseSequence sequence_from(const MaskComplex& start_mask, const SimplicialComplex& start,
                               const std::vector<MaskStep>& steps, const Masks& end_facets) {
  CollapseSequence seq;
  seq.start = start;
  seq.steps.reserve(steps.size());
  for (const auto& mv : steps)
    seq.steps.push_back({unmask_simplex(mv.face, start_mask.ground),
                         unmask_simplex(mv.cofacet, start_mask.ground)});
  MaskComplex endm;
  endm.ground = start_mask.ground;
  endm.facets = end_facets;
  seq.end = from_mask(endm);
  return seq;
}

CollapseSequence to_sequence(const MaskComplex& start_mask, const SimplicialComplex& start,
                             const std::vector<MaskStep>& steps) {
  CollapseSequence seq;
  seq.start = start;
  Masks cur = start_mask.facets;
  for (const auto& mv : steps) {
    seq.steps.push_back({unmask_simplex(mv.face, start_mask.ground),
                         unmask_simplex(mv.cofacet, start_mask.ground)});
    cur = apply_mask_step(cur, mv);
  }
  MaskComplex endm;
  endm.ground = start_mask.ground;
  endm.facets = cur;
  seq.end = from_mask(endm);
  return seq;
}

bool is_single_vertex(const Masks& facets) {
  return facets.size() == 1 && std::popcount(facets[0]) == 1;
}

}  // namespace

std::vector<CollapseStep> free_pairs(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  const MaskComplex m = to_mask(k);
  std::vector<CollapseStep> out;
  for (const auto& mv : mask_free_pairs(m.facets))
    out.push_back({unmask_simplex(mv.face, m.ground), unmask_simplex(mv.cofacet, m.ground)});
  return out;
}

SimplicialComplex collapse_step(const SimplicialComplex& k, const CollapseStep& step) {
  const auto pairs = free_pairs(k);
  const bool ok = std::any_of(pairs.begin(), pairs.end(), [&](const CollapseStep& p) {
    return p.free_face == step.free_face && p.cofacet == step.cofacet;
  });
  if (!ok)
    throw std::invalid_argument("collapse_step: " + step.free_face.to_string() +
                                " is not a free face with cofacet " +
                                step.cofacet.to_string());
  const MaskComplex m = to_mask(k);
  MaskStep mv{mask_of(step.free_face, m.ground), mask_of(step.cofacet, m.ground)};
  MaskComplex next;
  next.ground = m.ground;
  next.facets = apply_mask_step(m.facets, mv);
  return from_mask(next);
}

CollapseOutcome is_collapsible(const SimplicialComplex& k, const SearchBudget& budget) {
  CollapseOutcome out;
  if (k.is_void()) throw std::invalid_argument("is_collapsible: void complex");

  const MaskComplex m = to_mask(k);
  auto goal = [](const Masks& st) { return is_single_vertex(st); };
  auto goal_fl = [](const FaceLattice& fl) { return fl.single_vertex(); };
  auto any = [](const MaskStep&) { return true; };
  try {
    // A greedy win certifies Yes without touching homology at all; only a
    // strand needs the acyclicity test (for the exact No) and the real search.
    const GreedyRun g = greedy_collapse(m.facets, static_cast<int>(m.ground.size()), any,
                                        goal_fl, budget.max_nodes);
    out.nodes_used = g.nodes;
    if (g.reached) {
      out.verdict = Verdict::Yes;
      out.sequence = sequence_from(m, k, g.steps, g.end);
      out.note = "collapses to a vertex";
      return out;
    }
    if (!is_acyclic(k)) {
      out.verdict = Verdict::No;
      out.note = "not integrally acyclic: " + betti(k).to_string();
      return out;
    }
    CollapseSearch search(budget.max_nodes - g.nodes);
    auto steps = search.run(m.facets, goal, any);
    out.nodes_used += search.nodes_used();
    if (steps) {
      out.verdict = Verdict::Yes;
      out.sequence = to_sequence(m, k, *steps);
      out.note = "collapses to a vertex";
      return out;
    }
    out.verdict = Verdict::Unknown;
    out.note = "search space exhausted without certificate; a subdivision may still collapse";
  } catch (const BudgetExhausted&) {
    out.nodes_used = budget.max_nodes;
    out.verdict = Verdict::Unknown;
    out.note = "node budget exhausted";
  }

  if (budget.subdivision_retry) {
    const SimplicialComplex sd = barycentric_subdivision(k);
    const MaskComplex msd = to_mask(sd);
    try {
      const GreedyRun g = greedy_collapse(msd.facets, static_cast<int>(msd.ground.size()),
                                          any, goal_fl, budget.max_nodes);
      out.nodes_used += g.nodes;
      if (g.reached) {
        out.verdict = Verdict::Yes;
        out.sequence = sequence_from(msd, sd, g.steps, g.end);
        out.note = "barycentric subdivision collapses to a vertex";
        return out;
      }
      CollapseSearch retry(budget.max_nodes - g.nodes);
      auto steps = retry.run(msd.facets, goal, any);
      out.nodes_used += retry.nodes_used();
      if (steps) {
        out.verdict = Verdict::Yes;
        out.sequence = to_sequence(msd, sd, *steps);
        out.note = "barycentric subdivision collapses to a vertex";
      }
    } catch (const BudgetExhausted&) {
      out.nodes_used += budget.max_nodes;
    }
  }
  return out;
}

CollapseOutcome collapses_to(const SimplicialComplex& k, const SimplicialComplex& l,
                             const SearchBudget& budget) {
  CollapseOutcome out;
  if (k.is_void() || l.is_void())
    throw std::invalid_argument("collapses_to: void operand");
  if (!is_subcomplex(l, k)) {
    out.verdict = Verdict::No;
    out.note = "target is not a subcomplex";
    return out;
  }
  if (l == k) {
    out.verdict = Verdict::Yes;
    out.sequence = CollapseSequence{k, l, {}};
    out.note = "trivial (K = L)";
    return out;
  }
  if (l == SimplicialComplex::empty_complex()) {
    out.verdict = Verdict::No;
    out.note = "elementary collapses never reach {∅}: every end state keeps a vertex";
    return out;
  }
  if ((k.face_count() - l.face_count()) % 2 != 0) {
    out.verdict = Verdict::No;
    out.note = "face-count parity obstruction";
    return out;
  }
  if (!relative_acyclic(k, l)) {
    out.verdict = Verdict::No;
    out.note = "relative homology of the pair is nontrivial";
    return out;
  }

  const MaskComplex m = to_mask(k);
  const int gb = static_cast<int>(m.ground.size());
  const MaskComplex ml = to_mask(l, GroundSet(m.ground));
  const Masks target = ml.facets;
  auto goal = [&](const Masks& st) { return st == target; };
  // Never remove a face of L; σ ∉ L suffices (τ ⊃ σ is then also outside L).
  auto allowed = [&](const MaskStep& mv) { return !ml.has_face(mv.face); };
  // No move ever removes a face of L, so the states stay supersets of L and
  // reaching L's face count means reaching L itself.
  const std::size_t target_count = FaceLattice(target, gb).face_count();
  auto goal_fl = [&](const FaceLattice& fl) { return fl.face_count() == target_count; };

  try {
    const GreedyRun g = greedy_collapse(m.facets, gb, allowed, goal_fl, budget.max_nodes);
    out.nodes_used = g.nodes;
    if (g.reached) {
      out.verdict = Verdict::Yes;
      out.sequence = sequence_from(m, k, g.steps, g.end);
      return out;
    }
    CollapseSearch search(budget.max_nodes - g.nodes);
    auto steps = search.run(m.facets, goal, allowed);
    out.nodes_used += search.nodes_used();
    if (steps) {
      out.verdict = Verdict::Yes;
      out.sequence = to_sequence(m, k, *steps);
      return out;
    }
    out.verdict = Verdict::Unknown;
    out.note = "search space exhausted without certificate";
  } catch (const BudgetExhausted&) {
    out.nodes_used = budget.max_nodes;
    out.verdict = Verdict::Unknown;
    out.note = "node budget exhausted";
  }
  return out;
}

SpineResult spine(const SimplicialComplex& m, const SearchBudget& budget,
                  std::optional<int> target_dim) {
  if (m.is_void()) throw std::invalid_argument("spine: void complex");
  SpineResult res;
  const int d = m.dim();
  const int target = target_dim.value_or(d - 1);
  res.sequence.start = m;

  MaskComplex cur = to_mask(m);
  const int gb = static_cast<int>(cur.ground.size());
  std::uint64_t nodes_left = budget.max_nodes;
  std::vector<MaskStep> all_steps;

  try {
    while (true) {
      int cd = -1;
      for (auto f : cur.facets) cd = std::max(cd, std::popcount(f) - 1);
      if (cd <= target) {
        res.verdict = Verdict::Yes;
        break;
      }
      const int want = cd + 1;  // popcount of cofacets at this level
      auto goal = [&](const Masks& st) {
        return std::none_of(st.begin(), st.end(), [&](std::uint64_t f) {
          return std::popcount(f) >= want;
        });
      };
      auto goal_fl = [&](const FaceLattice& fl) { return fl.count_at_least(want) == 0; };
      auto allowed = [&](const MaskStep& mv) {
        return std::popcount(mv.cofacet) == want;
      };
      const GreedyRun g = greedy_collapse(cur.facets, gb, allowed, goal_fl, nodes_left);
      nodes_left -= std::min(nodes_left, g.nodes);
      if (g.reached) {
        all_steps.insert(all_steps.end(), g.steps.begin(), g.steps.end());
        cur.facets = g.end;
        continue;
      }
      // The memo is per level: a state that failed against one level's goal
      // may still succeed against the next one's.
      CollapseSearch search(nodes_left);
      try {
        auto steps = search.run(cur.facets, goal, allowed);
        nodes_left -= std::min(nodes_left, search.nodes_used());
        if (!steps) {
          res.verdict = (cd == d) ? Verdict::No : Verdict::Unknown;
          res.note = "dimension " + std::to_string(cd) + " cannot be depleted";
          break;
        }
        for (const auto& mv : *steps) {
          all_steps.push_back(mv);
          cur.facets = apply_mask_step(cur.facets, mv);
        }
      } catch (const BudgetExhausted&) {
        nodes_left = 0;
        throw;
      }
    }
  } catch (const BudgetExhausted&) {
    res.verdict = Verdict::Unknown;
    res.note = "node budget exhausted";
  }

  res.sequence = sequence_from(to_mask(m), m, all_steps, cur.facets);
  res.result = res.sequence.end;
  return res;
}

CollapseOutcome expansion_check(const SimplicialComplex& kdual,
                                const SimplicialComplex& ltau,
                                const SearchBudget& budget) {
  if (!is_subcomplex(kdual, ltau))
    throw std::invalid_argument("expansion_check: first argument must be a subcomplex");
  CollapseOutcome out = collapses_to(ltau, kdual, budget);
  if (out.verdict == Verdict::Yes)
    out.note = "expansion witnessed by the reverse of the returned collapse";
  return out;
}

bool replay(const CollapseSequence& seq) {
  if (seq.start.is_void()) return seq.steps.empty() && seq.end.is_void();
  const MaskComplex m = to_mask(seq.start);
  FaceLattice fl(m.facets, static_cast<int>(m.ground.size()));
  for (const auto& step : seq.steps) {
    std::uint64_t s = 0, t = 0;
    try {
      s = mask_of(step.free_face, m.ground);
      t = mask_of(step.cofacet, m.ground);
    } catch (const std::exception&) {
      return false;  // step mentions a vertex outside the start complex
    }
    // Freeness of (σ, τ) in the current state: σ ⊂ τ one level down, τ is a
    // facet, and τ is the only cofacet of σ.
    if (s == 0 || (s & ~t) != 0 || std::popcount(t) != std::popcount(s) + 1) return false;
    if (!fl.has(s) || !fl.has(t)) return false;
    if (fl.cofacets(s) != 1 || fl.cofacets(t) != 0) return false;
    fl.remove_pair(s, t, [](const MaskStep&) {});
  }
  try {
    return fl.facet_antichain() == to_mask(seq.end, GroundSet(m.ground)).facets;
  } catch (const std::exception&) {
    return false;  // end complex strays outside the start's vertex set
  }
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  if (k.is_void() || k.dim() <= 0) return k;
  auto face_vertex = [](const Simplex& s) {
    std::string label;
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
      if (i) label += ".";
      label += s.vertices()[i].label();
    }
    return Vertex(label);
  };
  std::vector<Simplex> gens;
  // Full flags inside each facet: one maximal chain per vertex ordering.
  for (const auto& f : k.facets()) {
    std::vector<Vertex> perm = f.vertices();
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<Vertex> chain;
      Simplex prefix;
      for (const auto& v : perm) {
        prefix = prefix.union_with(Simplex{v});
        chain.push_back(face_vertex(prefix));
      }
      gens.push_back(Simplex(std::move(chain)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex(std::move(gens));
}

}  // namespace nhtop
