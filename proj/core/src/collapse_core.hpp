#pragma once

// Internal to the library: incremental free-pair machinery shared by the
// collapse searches and the homology preprocessor. Not installed.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nhtop/mask_complex.hpp"

namespace nhtop::detail {

struct MaskStep {
  std::uint64_t face;
  std::uint64_t cofacet;
};

struct BudgetExhausted {};

// Full face lattice of a facet antichain with incremental collapse support:
// removing a free pair only touches the immediate subfaces of the two gone
// faces, so maintaining exact cofacet counts costs O(width) per step instead
// of a quadratic rescan. ∅ is never stored (it is not a legal free face).
class FaceLattice {
 public:
  FaceLattice(const std::vector<std::uint64_t>& facets, int ground_bits)
      : ground_bits_(ground_bits) {
    std::vector<std::uint64_t> stack;
    for (const auto f : facets)
      if (faces_.insert(f).second) stack.push_back(f);
    while (!stack.empty()) {
      const std::uint64_t f = stack.back();
      stack.pop_back();
      for (std::uint64_t bits = f; bits;) {
        const std::uint64_t low = bits & (~bits + 1);
        bits ^= low;
        const std::uint64_t s = f ^ low;
        if (s && faces_.insert(s).second) stack.push_back(s);
      }
    }
    for (const auto f : faces_) ++level_[std::popcount(f)];
    for (const auto f : faces_) cof_[f] = count_cofacets(f);
  }

  std::size_t face_count() const { return faces_.size(); }
  bool has(std::uint64_t f) const { return faces_.count(f) != 0; }
  int cofacets(std::uint64_t f) const { return cof_.at(f); }

  bool single_vertex() const {
    return faces_.size() == 1 && std::popcount(*faces_.begin()) == 1;
  }

  std::size_t count_at_least(int size) const {
    std::size_t n = 0;
    for (int s = std::max(size, 0); s <= 64; ++s) n += level_[s];
    return n;
  }

  std::uint64_t unique_cofacet(std::uint64_t f) const {
    for (int v = 0; v < ground_bits_; ++v) {
      const std::uint64_t up = f | (1ull << v);
      if (up != f && faces_.count(up)) return up;
    }
    return 0;
  }

  template <typename Sink>
  void remove_pair(std::uint64_t s, std::uint64_t t, Sink&& emit) {
    faces_.erase(s);
    faces_.erase(t);
    --level_[std::popcount(s)];
    --level_[std::popcount(t)];
    cof_.erase(s);
    cof_.erase(t);
    drop_from_subfaces(s, emit);
    drop_from_subfaces(t, emit);
  }

  std::vector<MaskStep> initial_free_pairs() const {
    std::vector<MaskStep> out;
    for (const auto f : faces_)
      if (cof_.at(f) == 1) {
        const std::uint64_t t = unique_cofacet(f);
        if (cof_.at(t) == 0) out.push_back({f, t});
      }
    return out;
  }

  std::vector<std::uint64_t> facet_antichain() const {
    std::vector<std::uint64_t> out;
    for (const auto f : faces_)
      if (cof_.at(f) == 0) out.push_back(f);
    std::sort(out.begin(), out.end(), mask_less);
    return out;
  }

 private:
  int count_cofacets(std::uint64_t f) const {
    int c = 0;
    for (int v = 0; v < ground_bits_; ++v) {
      const std::uint64_t up = f | (1ull << v);
      if (up != f && faces_.count(up)) ++c;
    }
    return c;
  }

  // One cofacet of each immediate subface of `gone` has disappeared; newly
  // freed pairs surface either when a count hits 1 under a maximal face or
  // when a face becomes maximal above a count-1 subface.
  template <typename Sink>
  void drop_from_subfaces(std::uint64_t gone, Sink&& emit) {
    for (std::uint64_t bits = gone; bits;) {
      const std::uint64_t low = bits & (~bits + 1);
      bits ^= low;
      const std::uint64_t sub = gone ^ low;
      if (sub == 0) continue;
      const auto it = cof_.find(sub);
      if (it == cof_.end()) continue;
      const int c = --it->second;
      if (c == 1) {
        const std::uint64_t up = unique_cofacet(sub);
        if (cof_.at(up) == 0) emit(MaskStep{sub, up});
      } else if (c == 0) {
        for (std::uint64_t b2 = sub; b2;) {
          const std::uint64_t l2 = b2 & (~b2 + 1);
          b2 ^= l2;
          const std::uint64_t w = sub ^ l2;
          if (w == 0) continue;
          const auto jt = cof_.find(w);
          if (jt != cof_.end() && jt->second == 1) emit(MaskStep{w, sub});
        }
      }
    }
  }

  int ground_bits_;
  std::unordered_set<std::uint64_t> faces_;
  std::unordered_map<std::uint64_t, int> cof_;
  std::array<std::size_t, 65> level_{};
};

// Top dimension first, then mask order: mirrors the exhaustive search's move
// ordering so greedy and DFS walk certificates in the same style.
struct CandLess {
  bool operator()(const MaskStep& a, const MaskStep& b) const {
    const int pa = std::popcount(a.cofacet), pb = std::popcount(b.cofacet);
    if (pa != pb) return pa > pb;
    if (a.cofacet != b.cofacet) return mask_less(a.cofacet, b.cofacet);
    if (a.face != b.face) return mask_less(a.face, b.face);
    return false;
  }
};

struct GreedyRun {
  bool reached = false;
  std::vector<MaskStep> steps;
  std::vector<std::uint64_t> end;
  std::uint64_t nodes = 0;
};

// Deterministic non-backtracking collapse; cheap enough to always try before
// the exhaustive search. Collapsible complexes met in practice almost always
// fall to it, so the DFS only pays for the genuinely stubborn ones.
inline GreedyRun greedy_collapse(const std::vector<std::uint64_t>& start, int ground_bits,
                                 const std::function<bool(const MaskStep&)>& allowed,
                                 const std::function<bool(const FaceLattice&)>& goal,
                                 std::uint64_t max_nodes) {
  FaceLattice fl(start, ground_bits);
  GreedyRun out;
  std::set<MaskStep, CandLess> cands;
  for (const auto& mv : fl.initial_free_pairs()) cands.insert(mv);
  const auto emit = [&](const MaskStep& mv) { cands.insert(mv); };
  while (!goal(fl)) {
    if (cands.empty()) {
      out.end = fl.facet_antichain();
      return out;
    }
    const MaskStep mv = *cands.begin();
    cands.erase(cands.begin());
    if (!fl.has(mv.face) || !fl.has(mv.cofacet)) continue;
    if (fl.cofacets(mv.face) != 1 || fl.cofacets(mv.cofacet) != 0) continue;
    if (!allowed(mv)) continue;
    if (++out.nodes > max_nodes) throw BudgetExhausted{};
    fl.remove_pair(mv.face, mv.cofacet, emit);
    out.steps.push_back(mv);
  }
  out.reached = true;
  out.end = fl.facet_antichain();
  return out;
}

// Collapse until stuck. The result has the same simple homotopy type — in
// particular identical homology and cohomology — which makes it a sound
// preprocessor in front of the Smith computations.
inline std::vector<std::uint64_t> greedy_core(const std::vector<std::uint64_t>& facets,
                                              int ground_bits) {
  // Steps are bounded by half the face count, so the budget cannot fire.
  const auto run = greedy_collapse(
      facets, ground_bits, [](const MaskStep&) { return true; },
      [](const FaceLattice&) { return false; }, ~std::uint64_t{0});
  return run.end;
}

}  // namespace nhtop::detail
