#include "nhtop/recognition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "nhtop/homology.hpp"

namespace nhtop {

std::string to_string(NhKind k) {
  switch (k) {
    case NhKind::CombinatorialBall: return "combinatorial-ball";
    case NhKind::CombinatorialSphere: return "combinatorial-sphere";
    case NhKind::NhBall: return "nh-ball";
    case NhKind::NhSphere: return "nh-sphere";
    case NhKind::NhManifoldOnly: return "nh-manifold";
    case NhKind::NotNhManifold: return "not-nh-manifold";
    default: return "unknown";
  }
}

bool is_nh_ball_kind(const Classification& c) {
  return c.kind == NhKind::CombinatorialBall || c.kind == NhKind::NhBall;
}

bool is_nh_sphere_kind(const Classification& c) {
  return c.kind == NhKind::CombinatorialSphere || c.kind == NhKind::NhSphere;
}

namespace {

bool connected(const SimplicialComplex& k) {
  const auto& fs = k.facets();
  const int n = static_cast<int>(fs.size());
  if (n <= 1) return true;
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  auto root = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!fs[i].intersect(fs[j]).empty()) comp[root(i)] = root(j);
  for (int i = 1; i < n; ++i)
    if (root(i) != root(0)) return false;
  return true;
}

}  // namespace

SimplicialComplex mod2_boundary(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("mod2_boundary: void complex");
  if (!k.homogeneous())
    throw std::invalid_argument("mod2_boundary: complex is not homogeneous");
  const int d = k.dim();
  std::vector<Simplex> odd;
  for (const auto& r : k.faces(d - 1)) {
    int count = 0;
    for (const auto& f : k.facets())
      if (f.contains(r)) ++count;
    if (count % 2 == 1) odd.push_back(r);
  }
  return SimplicialComplex(std::move(odd));
}

bool is_weak_pseudomanifold(const SimplicialComplex& k, bool with_boundary) {
  if (k.is_void()) throw std::invalid_argument("is_weak_pseudomanifold: void complex");
  if (!k.homogeneous())
    throw std::invalid_argument("is_weak_pseudomanifold: complex is not homogeneous");
  const int d = k.dim();
  for (const auto& r : k.faces(d - 1)) {
    int count = 0;
    for (const auto& f : k.facets())
      if (f.contains(r)) ++count;
    if (count > 2) return false;
    if (count != 2 && !with_boundary) return false;
  }
  return true;
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("is_pseudomanifold: void complex");
  if (!k.homogeneous()) return false;
  if (!is_weak_pseudomanifold(k, /*with_boundary=*/true)) return false;
  return structure_report(k).strongly_connected;
}

// ---------------------------------------------------------------------------
// Recognition context: memoized classification within one call tree.

namespace {

struct Ctx {
  SearchBudget budget;
  std::map<SimplicialComplex, Classification> classify_memo;
  std::map<SimplicialComplex, TriState> manifold_memo;
  std::map<SimplicialComplex, BallSphereVerdict> bs_memo;
};

Classification classify_nh_impl(const SimplicialComplex& m, Ctx& ctx);

BallSphereVerdict classify_ball_sphere_impl(const SimplicialComplex& k, Ctx& ctx);

TriState is_combinatorial_manifold_impl(const SimplicialComplex& k, Ctx& ctx) {
  if (k.is_void()) throw std::invalid_argument("is_combinatorial_manifold: void complex");
  const auto it = ctx.manifold_memo.find(k);
  if (it != ctx.manifold_memo.end()) return it->second;

  TriState out;
  const int d = k.dim();
  if (d <= 0) {
    out = {Verdict::Yes, d == 0 ? "discrete set of points" : "the (-1)-sphere"};
  } else if (!k.homogeneous()) {
    out = {Verdict::No, "principal simplices of mixed dimension"};
  } else {
    out = {Verdict::Yes, "all vertex links are balls or spheres"};
    for (const auto& v : k.vertex_set()) {
      const auto bs = classify_ball_sphere_impl(link(Simplex{v}, k), ctx);
      if (bs.ball.verdict == Verdict::Yes || bs.sphere.verdict == Verdict::Yes) continue;
      if (bs.ball.verdict == Verdict::No && bs.sphere.verdict == Verdict::No) {
        out = {Verdict::No, "link of " + v.label() + " is neither a ball nor a sphere"};
        break;
      }
      out = {Verdict::Unknown, "link of " + v.label() + " undecided"};
    }
  }
  ctx.manifold_memo[k] = out;
  return out;
}

BallSphereVerdict classify_ball_sphere_impl(const SimplicialComplex& k, Ctx& ctx) {
  if (k.is_void()) throw std::invalid_argument("classify_ball_sphere: void complex");
  const auto it = ctx.bs_memo.find(k);
  if (it != ctx.bs_memo.end()) return it->second;

  BallSphereVerdict out;
  const int d = k.dim();

  if (d == -1) {
    out.ball = {Verdict::No, "{∅} is the (-1)-sphere, not a ball"};
    out.sphere = {Verdict::Yes, "{∅} = ∂Δ⁰"};
    ctx.bs_memo[k] = out;
    return out;
  }
  if (d == 0) {
    const auto n = k.vertex_count();
    out.ball = n == 1 ? TriState{Verdict::Yes, "a single point"}
                      : TriState{Verdict::No, "0-balls have one vertex"};
    out.sphere = n == 2 ? TriState{Verdict::Yes, "two points"}
                        : TriState{Verdict::No, "0-spheres have two vertices"};
    ctx.bs_memo[k] = out;
    return out;
  }

  if (!k.homogeneous()) {
    out.ball = {Verdict::No, "not homogeneous"};
    out.sphere = {Verdict::No, "not homogeneous"};
    ctx.bs_memo[k] = out;
    return out;
  }
  if (!connected(k)) {
    out.ball = {Verdict::No, "not connected"};
    out.sphere = {Verdict::No, "not connected"};
    ctx.bs_memo[k] = out;
    return out;
  }

  const BettiProfile prof = betti(k);
  const bool acyclic = prof.all_zero();
  const auto sp = sphere_profile(k);
  if (!acyclic)
    out.ball = {Verdict::No, "not acyclic: " + prof.to_string()};
  if (!(sp && *sp == d))
    out.sphere = {Verdict::No, "homology is not that of S^" + std::to_string(d)};

  const TriState mf = is_combinatorial_manifold_impl(k, ctx);
  if (mf.verdict == Verdict::No) {
    if (out.ball.verdict != Verdict::No) out.ball = {Verdict::No, mf.witness};
    if (out.sphere.verdict != Verdict::No) out.sphere = {Verdict::No, mf.witness};
    ctx.bs_memo[k] = out;
    return out;
  }
  if (mf.verdict == Verdict::Unknown) {
    if (out.ball.verdict != Verdict::No) out.ball = {Verdict::Unknown, mf.witness};
    if (out.sphere.verdict != Verdict::No) out.sphere = {Verdict::Unknown, mf.witness};
    ctx.bs_memo[k] = out;
    return out;
  }

  const SimplicialComplex bd = mod2_boundary(k);

  if (d <= 2) {
    // Classification of compact 1-manifolds and surfaces: with connectivity
    // and the homology profile already pinned, boundary presence decides
    // exactly (a connected acyclic surface with boundary is a disk; a closed
    // connected surface with the homology of S² is S², and likewise for d=1).
    if (out.ball.verdict != Verdict::No) {
      out.ball = bd.is_void()
                     ? TriState{Verdict::No, "closed manifolds are not balls"}
                     : TriState{Verdict::Yes, "acyclic connected manifold with boundary"};
    }
    if (out.sphere.verdict != Verdict::No) {
      out.sphere = bd.is_void()
                       ? TriState{Verdict::Yes, "closed connected manifold with sphere homology"}
                       : TriState{Verdict::No, "nonempty boundary"};
    }
    ctx.bs_memo[k] = out;
    return out;
  }

  // d >= 3: ball via Whitehead (manifold + collapsible), sphere via a
  // link/deletion certificate at some vertex.
  if (out.ball.verdict != Verdict::No) {
    const CollapseOutcome col = is_collapsible(k, ctx.budget);
    if (col.verdict == Verdict::Yes) {
      out.ball = {Verdict::Yes, "collapsible manifold"};
      out.collapse = col.sequence;
    } else {
      out.ball = {Verdict::Unknown, "no collapse certificate: " + col.note};
    }
  }
  if (out.sphere.verdict != Verdict::No) {
    if (!bd.is_void()) {
      out.sphere = {Verdict::No, "nonempty boundary"};
    } else {
      out.sphere = {Verdict::Unknown, "no vertex certificate found"};
      for (const auto& v : k.vertex_set()) {
        const SimplicialComplex lk = link(Simplex{v}, k);
        const auto lk_bs = classify_ball_sphere_impl(lk, ctx);
        if (lk_bs.sphere.verdict != Verdict::Yes) continue;
        const SimplicialComplex del = deletion(k, v);
        const auto del_bs = classify_ball_sphere_impl(del, ctx);
        if (del_bs.ball.verdict != Verdict::Yes) continue;
        if (!(mod2_boundary(del) == lk)) continue;
        out.sphere = {Verdict::Yes,
                      "link of " + v.label() + " is a sphere and its deletion a ball"};
        break;
      }
    }
  }
  ctx.bs_memo[k] = out;
  return out;
}

TriState is_nh_manifold_impl(const SimplicialComplex& m, Ctx& ctx) {
  if (m.is_void()) throw std::invalid_argument("is_nh_manifold: void complex");
  const int d = m.dim();
  if (d <= 0) return {Verdict::Yes, d == 0 ? "0-manifold" : "the (-1)-sphere"};
  TriState out{Verdict::Yes, "all vertex links are NH-balls or NH-spheres"};
  for (const auto& v : m.vertex_set()) {
    const Classification c = classify_nh_impl(link(Simplex{v}, m), ctx);
    if (is_nh_ball_kind(c) || is_nh_sphere_kind(c)) continue;
    if (c.kind == NhKind::Unknown) {
      out = {Verdict::Unknown, "link of " + v.label() + " undecided"};
      continue;
    }
    return {Verdict::No,
            "link of " + v.label() + " is " + to_string(c.kind) + ": " + c.witness};
  }
  return out;
}

struct DecompositionSearch {
  std::optional<Decomposition> found;
  bool exhausted_exactly = true;
};

DecompositionSearch search_decomposition(const SimplicialComplex& m, int k, Ctx& ctx) {
  DecompositionSearch res;
  const int d = m.dim();
  std::vector<Simplex> kfacets;
  for (const auto& f : m.facets())
    if (f.dim() == k) kfacets.push_back(f);
  if (kfacets.empty()) return res;  // exact: no candidate L exists
  if (kfacets.size() > 16) {
    res.exhausted_exactly = false;  // combinatorial guard, treated as Unknown
    return res;
  }

  const std::size_t n = kfacets.size();
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < (1u << n); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });

  for (const auto s : subsets) {
    std::vector<Simplex> lgens, bgens;
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) lgens.push_back(kfacets[i]);
    for (const auto& f : m.facets()) {
      const bool in_l = std::find(lgens.begin(), lgens.end(), f) != lgens.end();
      if (!in_l) bgens.push_back(f);
    }
    if (bgens.empty()) continue;
    const SimplicialComplex l(std::move(lgens));
    const SimplicialComplex b(std::move(bgens));
    if (b.dim() != d) continue;  // B must carry the full dimension
    if (!connected(l)) continue;

    if (!(intersect_complex(b, l) == mod2_boundary(l))) continue;

    const auto lbs = classify_ball_sphere_impl(l, ctx);
    if (lbs.ball.verdict == Verdict::No) continue;
    if (lbs.ball.verdict == Verdict::Unknown) {
      res.exhausted_exactly = false;
      continue;
    }

    const TriState bnh = is_nh_manifold_impl(b, ctx);
    if (bnh.verdict == Verdict::No) continue;
    const CollapseOutcome bcol = is_collapsible(b, ctx.budget);
    if (bnh.verdict == Verdict::Yes && bcol.verdict == Verdict::Yes) {
      res.found = Decomposition{b, l, k};
      return res;
    }
    if (bcol.verdict == Verdict::No) continue;  // B not acyclic: exact refusal
    res.exhausted_exactly = false;
  }
  return res;
}

Classification classify_nh_impl(const SimplicialComplex& m, Ctx& ctx) {
  if (m.is_void()) throw std::invalid_argument("classify_nh: void complex");
  const auto it = ctx.classify_memo.find(m);
  if (it != ctx.classify_memo.end()) return it->second;

  Classification out;
  const int d = m.dim();

  if (d == -1) {
    out.kind = NhKind::CombinatorialSphere;
    out.witness = "{∅} = ∂Δ⁰, the (-1)-sphere";
  } else if (d == 0) {
    const auto n = m.vertex_count();
    if (n == 1) {
      out.kind = NhKind::CombinatorialBall;
      out.collapse = CollapseSequence{m, m, {}};
      out.witness = "a point";
    } else if (n == 2) {
      out.kind = NhKind::CombinatorialSphere;
      const auto& fs = m.facets();
      out.decomposition = Decomposition{SimplicialComplex({fs[0]}),
                                        SimplicialComplex({fs[1]}), 0};
      out.witness = "two points";
    } else {
      out.kind = NhKind::NhManifoldOnly;
      out.witness = std::to_string(n) + " points: 0-manifold, neither ball nor sphere";
    }
    ctx.classify_memo[m] = out;
    return out;
  } else {
    const TriState nh = is_nh_manifold_impl(m, ctx);
    if (nh.verdict == Verdict::No) {
      out.kind = NhKind::NotNhManifold;
      out.witness = nh.witness;
      ctx.classify_memo[m] = out;
      return out;
    }
    if (nh.verdict == Verdict::Unknown) {
      out.kind = NhKind::Unknown;
      out.witness = nh.witness;
      ctx.classify_memo[m] = out;
      return out;
    }

    const auto bs = classify_ball_sphere_impl(m, ctx);
    if (bs.sphere.verdict == Verdict::Yes) {
      out.kind = NhKind::CombinatorialSphere;
      out.witness = bs.sphere.witness;
      const auto dec = search_decomposition(m, d, ctx);
      if (dec.found) out.decomposition = dec.found;
      ctx.classify_memo[m] = out;
      return out;
    }
    if (bs.ball.verdict == Verdict::Yes) {
      out.kind = NhKind::CombinatorialBall;
      out.witness = bs.ball.witness;
      if (bs.collapse) {
        out.collapse = bs.collapse;
      } else {
        const auto col = is_collapsible(m, ctx.budget);
        if (col.verdict == Verdict::Yes) out.collapse = col.sequence;
      }
      ctx.classify_memo[m] = out;
      return out;
    }

    const BettiProfile prof = betti(m);
    if (prof.all_zero()) {
      const CollapseOutcome col = is_collapsible(m, ctx.budget);
      if (col.verdict == Verdict::Yes) {
        out.kind = NhKind::NhBall;
        out.collapse = col.sequence;
        out.witness = "collapsible NH-manifold";
      } else {
        out.kind = NhKind::Unknown;
        out.witness = "acyclic NH-manifold without a collapse certificate (" +
                      col.note + ")";
      }
      ctx.classify_memo[m] = out;
      return out;
    }

    const auto sp = sphere_profile(m);
    if (!sp) {
      out.kind = NhKind::NhManifoldOnly;
      out.witness = "homology " + prof.to_string() +
                    " is neither acyclic nor that of a sphere";
      ctx.classify_memo[m] = out;
      return out;
    }

    const auto dec = search_decomposition(m, *sp, ctx);
    if (dec.found) {
      out.kind = NhKind::NhSphere;
      out.homotopy_dim = *sp;
      out.decomposition = dec.found;
      out.witness = "decomposes as NH-ball + top-generated " +
                    std::to_string(*sp) + "-ball glued along its boundary";
    } else if (dec.exhausted_exactly) {
      out.kind = NhKind::NhManifoldOnly;
      out.witness = "no ball decomposition exists for homotopy dimension " +
                    std::to_string(*sp);
    } else {
      out.kind = NhKind::Unknown;
      out.witness = "decomposition search not exhausted within budget";
    }
  }
  ctx.classify_memo[m] = out;
  return out;
}

}  // namespace

TriState is_nh_pseudomanifold(const SimplicialComplex& m) {
  if (m.is_void()) throw std::invalid_argument("is_nh_pseudomanifold: void complex");
  if (!connected(m))
    throw std::invalid_argument("is_nh_pseudomanifold: complex is not connected");
  const auto report = structure_report(m);
  for (const auto& f : report.principal)
    if (f.dim() < 1)
      return {Verdict::No, "principal simplex " + f.to_string() + " has dimension < 1"};
  if (!report.strongly_connected)
    return {Verdict::No, "principal simplices are not adjacency-connected"};

  Ctx ctx;
  for (const auto& r : report.ridges) {
    if (r.empty()) continue;
    const SimplicialComplex lk = link(r, m);
    if (lk.is_void()) continue;
    if (lk.dim() == 0 && lk.vertex_count() == 1) continue;  // a point
    const Classification c = classify_nh_impl(lk, ctx);
    const bool sphere0 =
        (c.kind == NhKind::CombinatorialSphere && lk.dim() == 0) ||
        (c.kind == NhKind::NhSphere && c.homotopy_dim == 0);
    if (sphere0) continue;
    if (c.kind == NhKind::Unknown)
      return {Verdict::Unknown, "ridge " + r.to_string() + " link undecided"};
    return {Verdict::No, "link of ridge " + r.to_string() +
                             " is neither a point nor an NH-sphere of homotopy dimension 0"};
  }
  return {Verdict::Yes, "ridge links and adjacency conditions hold"};
}

TriState is_combinatorial_manifold(const SimplicialComplex& k, const SearchBudget& budget) {
  Ctx ctx;
  ctx.budget = budget;
  return is_combinatorial_manifold_impl(k, ctx);
}

BallSphereVerdict classify_ball_sphere(const SimplicialComplex& k, const SearchBudget& budget) {
  Ctx ctx;
  ctx.budget = budget;
  return classify_ball_sphere_impl(k, ctx);
}

TriState is_nh_manifold(const SimplicialComplex& m, const SearchBudget& budget) {
  Ctx ctx;
  ctx.budget = budget;
  return is_nh_manifold_impl(m, ctx);
}

Classification classify_nh(const SimplicialComplex& m, const SearchBudget& budget) {
  Ctx ctx;
  ctx.budget = budget;
  return classify_nh_impl(m, ctx);
}

BoundaryData boundary_data(const SimplicialComplex& m, const SearchBudget& budget) {
  if (m.is_void()) throw std::invalid_argument("boundary_data: void complex");
  Ctx ctx;
  ctx.budget = budget;
  BoundaryData out;
  for (const auto& s : m.all_faces()) {
    if (s.empty()) continue;
    const SimplicialComplex lk = link(s, m);
    const Classification c = classify_nh_impl(lk, ctx);
    if (is_nh_ball_kind(c)) {
      out.pseudoboundary.push_back(s);
    } else if (is_nh_sphere_kind(c)) {
      out.interior.push_back(s);
    } else if (c.kind == NhKind::Unknown) {
      throw std::runtime_error("boundary_data: link of " + s.to_string() +
                               " could not be classified within budget");
    } else {
      throw std::invalid_argument("boundary_data: link of " + s.to_string() +
                                  " is " + to_string(c.kind) +
                                  "; the complex is not an NH-manifold");
    }
  }
  out.boundary = SimplicialComplex(out.pseudoboundary);
  return out;
}

}  // namespace nhtop
