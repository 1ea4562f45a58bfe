#include "nhtop/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "nhtop/alexander.hpp"
#include "nhtop/collapse.hpp"
#include "nhtop/homology.hpp"
#include "nhtop/recognition.hpp"

namespace nhtop {

namespace {

// ---------------------------------------------------------------------------
// Deterministic per-case seeding: cases depend only on (suite seed, index).

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix(a ^ splitmix(b)); }

int uid(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Sampling helpers. Sampled complexes use single-letter labels, so the fresh
// labels ("~0", ...) used for tau/sigma never collide with them.

Vertex letter(int i) { return Vertex{std::string(1, static_cast<char>('a' + i))}; }

std::vector<Vertex> letters(int n) {
  std::vector<Vertex> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(letter(i));
  return out;
}

Simplex random_subset(std::mt19937_64& rng, std::vector<Vertex> pool, int size) {
  for (int i = 0; i < size; ++i) {
    const int j = uid(rng, i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return Simplex(pool);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_verts, int max_dim) {
  const int n = uid(rng, 1, max_verts);
  const auto vs = letters(n);
  const int nf = uid(rng, 1, 2 * n);
  std::vector<Simplex> facets;
  facets.reserve(nf);
  for (int j = 0; j < nf; ++j)
    facets.push_back(random_subset(rng, vs, uid(rng, 1, std::min(n, max_dim + 1))));
  return SimplicialComplex(std::move(facets));
}

SimplicialComplex random_nonsimplex(std::mt19937_64& rng, int max_verts, int max_dim) {
  for (;;) {
    SimplicialComplex k = random_complex(rng, max_verts, max_dim);
    if (!k.is_simplex_complex() && k.vertex_count() >= 2) return k;
  }
}

Simplex fresh_simplex(const SimplicialComplex& k, int dim) {
  if (dim < 0) return Simplex{};
  return Simplex(fresh_vertices(k.vertex_set(), static_cast<std::size_t>(dim) + 1));
}

Vertex random_vertex(std::mt19937_64& rng, const SimplicialComplex& k) {
  const auto vs = k.vertex_set();
  return vs[uid(rng, 0, static_cast<int>(vs.size()) - 1)];
}

std::vector<Vertex> vertex_difference(const std::vector<Vertex>& a,
                                      const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Double-dual samples small enough that their full-dimensional classification
// stays tractable: |V| <= 6, so dim <= 4.
DoubleDualSample small_double_dual(SampleKind kind, std::mt19937_64& rng) {
  if (kind == SampleKind::Ball) {
    static constexpr std::array<std::array<int, 3>, 4> table = {
        {{1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}}};
    const auto& p = table[uid(rng, 0, static_cast<int>(table.size()) - 1)];
    return nh_double_dual(SampleKind::Ball, p[0], p[1], p[2], rng());
  }
  static constexpr std::array<std::array<int, 3>, 5> table = {
      {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}}};
  const auto& p = table[uid(rng, 0, static_cast<int>(table.size()) - 1)];
  return nh_double_dual(SampleKind::Sphere, p[0], p[1], p[2], rng());
}

// NH-ball or NH-sphere via the gluing construction, according to the kind of
// the seed complex (shelled ball / boundary sphere).
SimplicialComplex small_glue(SampleKind kind, std::mt19937_64& rng) {
  SimplicialComplex k0;
  int eta_dim = 0;
  if (kind == SampleKind::Ball) {
    const int d0 = uid(rng, 1, 2);
    k0 = shelled_ball(d0, d0 == 1 ? uid(rng, 2, 3) : 2, rng()).complex;
    eta_dim = k0.vertex_count() <= 4 ? uid(rng, 0, 1) : 0;
  } else {
    const int d0 = uid(rng, 0, 2);
    k0 = standard(StandardKind::BoundarySphere, d0);
    eta_dim = d0 <= 1 ? uid(rng, 0, 1) : 0;
  }
  const Simplex eta(fresh_vertices(k0.vertex_set(), eta_dim + 1));
  return simplex_glue(k0, eta, GroundSet(k0.vertex_set()));
}

// ---------------------------------------------------------------------------
// Case plumbing.

struct Outcome {
  bool pass = true;
  bool unknown = false;
  std::string tag;
  std::string fingerprint;
  std::string expected;
  std::string observed;
  std::string note;
};

Outcome& fail(Outcome& o, std::string expected, std::string observed) {
  o.pass = false;
  o.unknown = false;
  o.expected = std::move(expected);
  o.observed = std::move(observed);
  return o;
}

Outcome& mark_unknown(Outcome& o, std::string note) {
  o.pass = false;
  o.unknown = true;
  o.note = std::move(note);
  return o;
}

using SampledCase = std::function<Outcome(std::size_t, std::mt19937_64&)>;

// ---------------------------------------------------------------------------
// Suite case functions.

Outcome formula_a_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  o.tag = "formula-A";
  const SimplicialComplex k = (i % 29 == 28) ? SimplicialComplex::empty_complex()
                                             : random_complex(rng, 8, 4);
  const Simplex tau = fresh_simplex(k, uid(rng, 0, 2));
  o.fingerprint = "K=" + k.to_string() + " tau=" + tau.to_string();
  const SimplicialComplex lhs = relative_dual(k, tau);
  const SimplicialComplex rhs = relative_dual_direct(k, tau);
  if (lhs != rhs)
    fail(o, "complement dual equals boundary/join formula",
         "complement=" + lhs.to_string() + " formula=" + rhs.to_string());
  return o;
}

Outcome involution_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  o.tag = "involution";
  SimplicialComplex k;
  int extra = 0;
  if (i == 0) {
    k = SimplicialComplex::void_complex();
    extra = 3;
  } else if (i == 1) {
    k = SimplicialComplex::empty_complex();
    extra = 2;
  } else if (i == 2) {
    k = full_simplex(Simplex(letters(3)));
  } else {
    k = random_complex(rng, 7, 3);
    extra = uid(rng, 0, 2);
  }
  std::vector<Vertex> ground = k.vertex_set();
  for (int j = 0; extra > 0 && j < 26; ++j) {
    const Vertex v = letter(j);
    if (std::find(ground.begin(), ground.end(), v) == ground.end()) {
      ground.push_back(v);
      --extra;
    }
  }
  const GroundSet g{ground};
  o.fingerprint = "K=" + k.to_string() + " |V|=" + std::to_string(g.size());
  const SimplicialComplex dd = dual_over(dual_over(k, g), g);
  if (dd != k)
    fail(o, "dualizing twice over a fixed ground set is the identity",
         "got " + dd.to_string());
  return o;
}

std::vector<Outcome> vertex_count_cases(std::size_t cap) {
  std::vector<Outcome> outs;
  for (const SimplicialComplex& m : enumerate_small(static_cast<int>(cap))) {
    if (m.is_simplex_complex()) continue;  // the equivalence excludes simplices
    Outcome o;
    o.tag = "three-way";
    o.fingerprint = "K=" + m.to_string();
    const int d = m.dim();
    const bool c1 = m.vertex_count() == static_cast<std::size_t>(d) + 2;
    const SimplicialComplex dualm = dual(m);
    const bool c2 = dualm.vertex_set() != m.vertex_set();
    const bool c3 = dual(dualm) != m;
    if (c1 != c2 || c2 != c3)
      fail(o, "|V|=d+2, V(K*)!=V(K) and K**!=K agree",
           "conditions read " + std::to_string(c1) + std::to_string(c2) + std::to_string(c3));
    outs.push_back(std::move(o));
  }
  return outs;
}

Outcome link_deletion_case(std::size_t, std::mt19937_64& rng) {
  Outcome o;
  o.tag = "link-deletion";
  const SimplicialComplex k = random_nonsimplex(rng, 7, 3);
  const Vertex v = random_vertex(rng, k);
  o.fingerprint = "K=" + k.to_string() + " v=" + v.label();
  const Simplex sv({v});
  const SimplicialComplex kstar = dual(k);

  const SimplicialComplex lhs1 = kstar.has_face(sv)
                                     ? link(sv, kstar)
                                     : SimplicialComplex::void_complex();
  const SimplicialComplex del = deletion(k, v);
  const SimplicialComplex rhs1 = dual(del);
  if (lhs1 != rhs1)
    return fail(o, "lk(v, K*) = (K - v)*",
                "link=" + lhs1.to_string() + " dual=" + rhs1.to_string());

  const SimplicialComplex kdel = kstar.has_face(sv) ? deletion(kstar, v) : kstar;
  const Simplex tau{vertex_difference(del.vertex_set(), kdel.vertex_set())};
  const SimplicialComplex lhs2 = link(sv, k);
  const SimplicialComplex rhs2 = relative_dual(kdel, tau);
  if (lhs2 != rhs2)
    fail(o, "lk(v, K) = (K* - v) dualized back over V(K - v)",
         "link=" + lhs2.to_string() + " dual=" + rhs2.to_string() +
             " tau=" + tau.to_string());
  return o;
}

Outcome link_trick_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  o.tag = "link-trick";
  const int d = uid(rng, 1, 4);
  const auto base = letters(d + 1);
  const Vertex u = letter(d + 1);
  SimplicialComplex ell;
  if (i % 13 == 0) {
    ell = SimplicialComplex::empty_complex();
  } else {
    const int nf = uid(rng, 1, d + 2);
    std::vector<Simplex> facets;
    for (int j = 0; j < nf; ++j) facets.push_back(random_subset(rng, base, uid(rng, 1, d)));
    ell = SimplicialComplex(std::move(facets));
  }
  const SimplicialComplex k =
      union_complex(full_simplex(Simplex(base)), join(Simplex({u}), ell));
  o.fingerprint = "K=" + k.to_string() + " u=" + u.label();
  const Simplex su({u});
  const SimplicialComplex lk = link(su, k);
  const SimplicialComplex st = star(su, k);
  const Simplex tau{vertex_difference(k.vertex_set(), st.vertex_set())};
  const SimplicialComplex lhs = dual(k);
  const SimplicialComplex rhs = relative_dual(lk, tau);
  if (lhs != rhs)
    fail(o, "K* equals the link of the off-dual vertex dualized over V(K) - u",
         "K*=" + lhs.to_string() + " link-dual=" + rhs.to_string());
  return o;
}

Outcome ball_dual_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  SimplicialComplex b;
  if (i % 2 == 0) {
    o.tag = "shelled";
    const int d = uid(rng, 1, 3);
    b = shelled_ball(d, uid(rng, 2, d == 1 ? 6 : 5), rng()).complex;
  } else if (i % 4 == 1) {
    o.tag = "nh-double-dual";
    b = small_double_dual(SampleKind::Ball, rng).complex;
  } else {
    o.tag = "glue";
    b = small_glue(SampleKind::Ball, rng);
  }
  const Simplex tau = fresh_simplex(b, uid(rng, -1, 2));
  o.fingerprint = "B=" + b.to_string() + " tau=" + tau.to_string();
  const SimplicialComplex dualb = relative_dual(b, tau);
  if (!is_acyclic(dualb))
    return fail(o, "dual of a ball is integrally acyclic",
                "profile " + betti(dualb).to_string());
  const CollapseOutcome co = is_collapsible(dualb);
  if (co.verdict == Verdict::Yes) {
    if (!replay(*co.sequence))
      return fail(o, "collapse certificate replays", "replay rejected the sequence");
    o.note = "collapse certificate found";
    return o;
  }
  if (co.verdict == Verdict::No)
    return fail(o, "acyclic dual cannot be refused by the collapse search", co.note);
  return mark_unknown(o, "acyclic; no collapse certificate within budget");
}

Outcome sphere_dual_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  SimplicialComplex s;
  if (i < 6) {
    o.tag = "boundary-sphere";
    s = standard(StandardKind::BoundarySphere, static_cast<int>(i));
  } else if (i < 56) {
    o.tag = "stellar";
    s = standard(StandardKind::BoundarySphere, uid(rng, 1, 3));
    const int rounds = uid(rng, 1, 2);
    for (int r = 0; r < rounds; ++r) {
      std::vector<Simplex> candidates;
      for (int q = 1; q <= s.dim(); ++q)
        for (const Simplex& f : s.faces(q)) candidates.push_back(f);
      s = stellar_subdivide(s, candidates[uid(rng, 0, static_cast<int>(candidates.size()) - 1)]);
    }
  } else if (i % 2 == 0) {
    o.tag = "nh-double-dual";
    s = small_double_dual(SampleKind::Sphere, rng).complex;
  } else {
    o.tag = "glue";
    s = small_glue(SampleKind::Sphere, rng);
  }
  const int tau_dim = i < 6 ? static_cast<int>(i % 4) - 1 : uid(rng, -1, 2);
  const Simplex tau = fresh_simplex(s, tau_dim);
  o.fingerprint = "S=" + s.to_string() + " tau=" + tau.to_string();
  const std::optional<int> m = sphere_profile(s);
  if (!m)
    return fail(o, "sphere generator yields a sphere homology profile",
                "profile " + betti(s).to_string());
  const SimplicialComplex duals = relative_dual(s, tau);
  const int n = static_cast<int>(s.vertex_count() + tau.size());
  const std::optional<int> md = sphere_profile(duals);
  if (!md || *md != n - *m - 3)
    fail(o, "dual has the sphere profile in dimension n-m-3 = " + std::to_string(n - *m - 3),
         md ? "sphere profile in dimension " + std::to_string(*md)
            : "profile " + betti(duals).to_string());
  return o;
}

// Re-checks a decomposition witness S = B + L independently of recognition.
bool decomposition_checks(const SimplicialComplex& s, const Decomposition& dec) {
  if (!is_subcomplex(dec.nh_ball, s) || !is_subcomplex(dec.k_ball, s)) return false;
  if (union_complex(dec.nh_ball, dec.k_ball) != s) return false;
  if (dec.k_ball.dim() != dec.k || dec.nh_ball.dim() != s.dim()) return false;
  return intersect_complex(dec.nh_ball, dec.k_ball) == mod2_boundary(dec.k_ball);
}

Outcome double_dual_class_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  const SampleKind kind = (i % 2 == 0) ? SampleKind::Ball : SampleKind::Sphere;
  const DoubleDualSample sample = small_double_dual(kind, rng);
  o.tag = kind == SampleKind::Ball ? "ball" : "sphere";
  o.fingerprint = "base=" + sample.base.to_string() + " tau=" + sample.tau.to_string() +
                  " sigma=" + sample.sigma.to_string() +
                  " dd=" + sample.complex.to_string();
  const Classification c = classify_nh(sample.complex);
  if (c.kind == NhKind::Unknown)
    return mark_unknown(o, "classification not certified within budget: " + c.witness);
  if (kind == SampleKind::Ball) {
    if (!is_nh_ball_kind(c))
      return fail(o, "double dual of a shelled ball classifies as an NH-ball",
                  to_string(c.kind) + ": " + c.witness);
    return o;
  }
  if (!is_nh_sphere_kind(c))
    return fail(o, "double dual of a sphere classifies as an NH-sphere",
                to_string(c.kind) + ": " + c.witness);
  if (!c.decomposition)
    return mark_unknown(o, "sphere kind certified but no decomposition witness in budget");
  if (!decomposition_checks(sample.complex, *c.decomposition))
    return fail(o, "decomposition witness validates independently",
                "B=" + c.decomposition->nh_ball.to_string() +
                    " L=" + c.decomposition->k_ball.to_string());
  const std::optional<int> m = sphere_profile(sample.complex);
  const int expected_h = c.kind == NhKind::CombinatorialSphere
                             ? sample.complex.dim()
                             : c.homotopy_dim.value_or(-2);
  if (!m || *m != expected_h)
    return fail(o, "homotopy dimension matches the homology profile",
                "profile " + betti(sample.complex).to_string() + " vs homotopy dim " +
                    std::to_string(expected_h));
  return o;
}

std::vector<Outcome> d_plus_2_cases(std::size_t cap) {
  std::vector<Outcome> outs;
  for (const SimplicialComplex& m : enumerate_small(static_cast<int>(cap))) {
    const auto d = m.dim_opt();
    if (!d || *d < 0 || m.vertex_count() != static_cast<std::size_t>(*d) + 2) continue;
    const TriState nh = is_nh_manifold(m);
    if (nh.verdict == Verdict::No) continue;
    Outcome o;
    o.tag = "d-plus-2";
    o.fingerprint = "M=" + m.to_string();
    if (nh.verdict == Verdict::Unknown) {
      outs.push_back(mark_unknown(o, "NH-manifold check not certified: " + nh.witness));
      continue;
    }
    const Classification c = classify_nh(m);
    if (is_nh_ball_kind(c) || is_nh_sphere_kind(c)) {
      outs.push_back(std::move(o));
    } else if (c.kind == NhKind::Unknown) {
      outs.push_back(mark_unknown(o, "classification not certified: " + c.witness));
    } else {
      outs.push_back(fail(o, "NH-manifold on dim+2 vertices is an NH-ball or NH-sphere",
                          to_string(c.kind) + ": " + c.witness));
    }
  }
  return outs;
}

Outcome collapse_duality_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  o.tag = "collapse-duality";
  const SimplicialComplex k = random_nonsimplex(rng, 6, 3);
  SimplicialComplex l = k;
  const int steps = (i % 10 == 0) ? 0 : uid(rng, 1, 4);
  for (int j = 0; j < steps; ++j) {
    const auto pairs = free_pairs(l);
    if (pairs.empty()) break;
    l = collapse_step(l, pairs[uid(rng, 0, static_cast<int>(pairs.size()) - 1)]);
  }
  o.fingerprint = "K=" + k.to_string() + " L=" + l.to_string();
  const GroundSet g{k.vertex_set()};
  const SimplicialComplex kdual = dual_over(k, g);
  const SimplicialComplex ltau = dual_over(l, g);
  const CollapseOutcome co = expansion_check(kdual, ltau);
  if (co.verdict == Verdict::Yes) {
    if (!replay(*co.sequence))
      return fail(o, "expansion certificate replays", "replay rejected the sequence");
    return o;
  }
  if (co.verdict == Verdict::No)
    return fail(o, "K collapses to L forces the dual expansion to exist", co.note);
  return mark_unknown(o, "expansion search exhausted its budget");
}

Outcome alexander_homology_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  SimplicialComplex k;
  GroundSet g;
  if (i < 3) {
    o.tag = "rp2-torsion";
    k = reference("rp2_6").complex;
    std::vector<Vertex> ground = k.vertex_set();
    for (std::size_t j = 0; j < i + 1; ++j)
      ground.push_back(Vertex{std::to_string(7 + j)});
    g = GroundSet{ground};
  } else {
    o.tag = "random";
    k = random_complex(rng, 6, 3);
    std::vector<Vertex> ground = k.vertex_set();
    for (int extra = uid(rng, 0, 2), j = 0; extra > 0 && j < 26; ++j) {
      const Vertex v = letter(j);
      if (std::find(ground.begin(), ground.end(), v) == ground.end()) {
        ground.push_back(v);
        --extra;
      }
    }
    g = GroundSet{ground};
  }
  const int n = static_cast<int>(g.size());
  o.fingerprint = "K=" + k.to_string() + " n=" + std::to_string(n);
  const SimplicialComplex dualk = dual_over(k, g);
  const BettiProfile hk = betti(k);
  const std::vector<IntegralGroup> ch = cohomology(dualk);
  for (int q = -1; q <= n; ++q) {
    const IntegralGroup lhs = hk.integral_at(q);
    const IntegralGroup rhs = cohomology_at(ch, n - q - 3);
    if (!(lhs == rhs))
      return fail(o,
                  "H_" + std::to_string(q) + "(K) = H^" + std::to_string(n - q - 3) +
                      "(K^*) over " + std::to_string(n) + " vertices",
                  lhs.to_string() + " vs " + rhs.to_string());
  }
  return o;
}

Outcome suspension_lemma_case(std::size_t, std::mt19937_64& rng) {
  Outcome o;
  o.tag = "union-of-collapsibles";
  const int n = uid(rng, 4, 6);
  auto sample_collapsible = [&](int salt) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      SimplicialComplex x = random_complex(rng, n, 2);
      if (is_collapsible(x).verdict == Verdict::Yes) return x;
    }
    (void)salt;
    return full_simplex(random_subset(rng, letters(n), uid(rng, 1, n)));
  };
  const SimplicialComplex a = sample_collapsible(0);
  const SimplicialComplex b = sample_collapsible(1);
  const SimplicialComplex k = union_complex(a, b);
  const SimplicialComplex meet = intersect_complex(a, b);
  o.fingerprint = "A=" + a.to_string() + " B=" + b.to_string();
  const BettiProfile lhs = betti(k);
  const BettiProfile rhs = betti(suspension(meet, 1));
  if (!(lhs == rhs))
    fail(o, "union of two collapsible complexes has the homology of the suspended overlap",
         "union " + lhs.to_string() + " vs suspension " + rhs.to_string());
  return o;
}

Outcome spine_dims_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  DoubleDualSample sample = small_double_dual(SampleKind::Ball, rng);
  SimplicialComplex b = sample.complex;
  int slack = 3;  // NH-balls on dim+2 vertices reach dimension d-3
  if (i % 2 == 1) {
    // One stellar subdivision: dim+3 vertices, spine bound weakens to d-2.
    std::vector<Simplex> candidates;
    for (int q = 1; q <= b.dim(); ++q)
      for (const Simplex& f : b.faces(q)) candidates.push_back(f);
    b = stellar_subdivide(b, candidates[uid(rng, 0, static_cast<int>(candidates.size()) - 1)]);
    slack = 2;
    o.tag = "d-plus-3";
  } else {
    o.tag = "d-plus-2";
  }
  const int d = b.dim();
  const int target = d - slack;
  o.fingerprint = "B=" + b.to_string() + " target=" + std::to_string(target);
  const SpineResult sr = spine(b, SearchBudget{}, target);
  if (sr.verdict == Verdict::Yes) {
    if (sr.result.dim() > target)
      return fail(o, "spine reaches dimension " + std::to_string(target),
                  "landed on dimension " + std::to_string(sr.result.dim()));
    if (!replay(sr.sequence))
      return fail(o, "spine certificate replays", "replay rejected the sequence");
    return o;
  }
  if (sr.verdict == Verdict::No)
    return fail(o, "an NH-ball this small always thins down to dimension " +
                       std::to_string(target),
                sr.note);
  return mark_unknown(o, "spine search exhausted its budget: " + sr.note);
}

Outcome sphere_deletion_case(std::size_t i, std::mt19937_64& rng) {
  Outcome o;
  SimplicialComplex s;
  SimplicialComplex l;
  if (i % 2 == 0) {
    o.tag = "facet-decomposition";
    s = standard(StandardKind::BoundarySphere, uid(rng, 1, 3));
    if (uid(rng, 0, 1) == 1) {
      std::vector<Simplex> candidates;
      for (int q = 1; q <= s.dim(); ++q)
        for (const Simplex& f : s.faces(q)) candidates.push_back(f);
      s = stellar_subdivide(s, candidates[uid(rng, 0, static_cast<int>(candidates.size()) - 1)]);
    }
    const auto& facets = s.facets();
    l = SimplicialComplex({facets[uid(rng, 0, static_cast<int>(facets.size()) - 1)]});
  } else {
    o.tag = "nh-decomposition";
    const SimplicialComplex sample = small_double_dual(SampleKind::Sphere, rng).complex;
    const Classification c = classify_nh(sample);
    if (!c.decomposition) {
      o.fingerprint = "S=" + sample.to_string();
      return mark_unknown(o, "no decomposition witness within budget: " + c.witness);
    }
    s = sample;
    l = c.decomposition->k_ball;
  }
  const Vertex v = random_vertex(rng, l);
  o.fingerprint = "S=" + s.to_string() + " L=" + l.to_string() + " v=" + v.label();
  const SimplicialComplex del = deletion(s, v);
  if (!is_acyclic(del))
    fail(o, "removing a vertex of the attached ball leaves an acyclic complex",
         "profile " + betti(del).to_string());
  return o;
}

std::vector<Outcome> homogeneous_top_cases(std::size_t cap) {
  std::vector<Outcome> outs;
  std::vector<std::pair<std::string, SimplicialComplex>> inputs;
  inputs.emplace_back("rp2_6", reference("rp2_6").complex);
  inputs.emplace_back("boundary-sphere-3", standard(StandardKind::BoundarySphere, 3));
  for (const SimplicialComplex& m : enumerate_small(static_cast<int>(cap)))
    inputs.emplace_back("enumerated", m);
  for (auto& [tag, m] : inputs) {
    const auto d = m.dim_opt();
    if (!d || *d < 1) continue;
    const BettiProfile profile = betti(m);
    if (profile.mod2_at(0) != 0 || profile.mod2_at(*d) == 0) continue;
    const TriState nh = is_nh_manifold(m);
    if (nh.verdict == Verdict::No) continue;
    Outcome o;
    o.tag = tag;
    o.fingerprint = "M=" + m.to_string();
    if (nh.verdict == Verdict::Unknown) {
      outs.push_back(mark_unknown(o, "NH-manifold check not certified: " + nh.witness));
      continue;
    }
    const TriState cm = is_combinatorial_manifold(m);
    if (cm.verdict == Verdict::No) {
      outs.push_back(fail(o, "top mod-2 homology forces a combinatorial manifold",
                          cm.witness));
      continue;
    }
    if (cm.verdict == Verdict::Unknown) {
      outs.push_back(mark_unknown(o, "manifold check not certified: " + cm.witness));
      continue;
    }
    if (!mod2_boundary(m).is_void()) {
      outs.push_back(fail(o, "the forced manifold is boundaryless",
                          "mod-2 boundary " + mod2_boundary(m).to_string()));
      continue;
    }
    if (sphere_profile(m) == *d) {
      const Classification c = classify_nh(m);
      if (c.kind == NhKind::CombinatorialSphere) {
        outs.push_back(std::move(o));
      } else if (c.kind == NhKind::Unknown ||
                 (c.kind == NhKind::NhSphere && !c.decomposition)) {
        outs.push_back(mark_unknown(o, "sphere kind not certified: " + c.witness));
      } else {
        outs.push_back(fail(o,
                            "full homotopy dimension certifies a combinatorial sphere",
                            to_string(c.kind) + ": " + c.witness));
      }
      continue;
    }
    outs.push_back(std::move(o));
  }
  return outs;
}

// ---------------------------------------------------------------------------
// Report assembly.

SuiteReport finish(SuiteReport report, std::vector<Outcome> outs,
                   std::chrono::steady_clock::time_point start) {
  report.cases_run = outs.size();
  for (std::size_t i = 0; i < outs.size(); ++i) {
    Outcome& o = outs[i];
    CaseRecord rec{i, o.tag, o.pass, o.unknown, o.note};
    if (o.pass) {
      ++report.passes;
    } else if (o.unknown) {
      ++report.unknowns;
      rec.note = o.note;
    } else {
      report.failures.push_back(CaseFailure{i, o.fingerprint, o.expected, o.observed});
    }
    report.cases.push_back(std::move(rec));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Outcome guarded(const SampledCase& fn, std::size_t i, std::mt19937_64& rng) {
  try {
    return fn(i, rng);
  } catch (const std::exception& e) {
    Outcome o;
    o.tag = "exception";
    o.fingerprint = "case " + std::to_string(i);
    fail(o, "case runs without raising", e.what());
    return o;
  }
}

SuiteReport run_sampled(const std::string& id, Seed seed, std::size_t count,
                        const SampledCase& fn) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite_id = id;
  report.seed = seed;
  std::vector<Outcome> outs;
  outs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix(seed, i));
    outs.push_back(guarded(fn, i, rng));
  }
  return finish(std::move(report), std::move(outs), start);
}

SuiteReport run_exhaustive(const std::string& id, Seed seed, std::size_t cap,
                           const std::function<std::vector<Outcome>(std::size_t)>& fn) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite_id = id;
  report.seed = seed;
  return finish(std::move(report), fn(cap), start);
}

}  // namespace

std::string SuiteReport::summary() const {
  std::string s = suite_id + ": " + std::to_string(cases_run) + " cases, " +
                  std::to_string(passes) + " passed, " + std::to_string(failures.size()) +
                  " failed, " + std::to_string(unknowns) + " unknown";
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2fs, seed %llu)", elapsed_seconds,
                static_cast<unsigned long long>(seed));
  return s + buf;
}

std::vector<std::string> suite_names() {
  return {"formula_a",         "involution",     "vertex_count",   "link_deletion",
          "link_trick",        "ball_dual",      "sphere_dual",    "double_dual_class",
          "d_plus_2",          "collapse_duality", "alexander_homology",
          "suspension_lemma",  "spine_dims",     "sphere_deletion", "homogeneous_top"};
}

SuiteReport run_suite(const std::string& suite_id, Seed seed, std::size_t count) {
  if (suite_id == "formula_a") return run_sampled(suite_id, seed, count, formula_a_case);
  if (suite_id == "involution") return run_sampled(suite_id, seed, count, involution_case);
  if (suite_id == "vertex_count")
    return run_exhaustive(suite_id, seed, count, vertex_count_cases);
  if (suite_id == "link_deletion")
    return run_sampled(suite_id, seed, count, link_deletion_case);
  if (suite_id == "link_trick") return run_sampled(suite_id, seed, count, link_trick_case);
  if (suite_id == "ball_dual") return run_sampled(suite_id, seed, count, ball_dual_case);
  if (suite_id == "sphere_dual") return run_sampled(suite_id, seed, count, sphere_dual_case);
  if (suite_id == "double_dual_class")
    return run_sampled(suite_id, seed, count, double_dual_class_case);
  if (suite_id == "d_plus_2") return run_exhaustive(suite_id, seed, count, d_plus_2_cases);
  if (suite_id == "collapse_duality")
    return run_sampled(suite_id, seed, count, collapse_duality_case);
  if (suite_id == "alexander_homology")
    return run_sampled(suite_id, seed, count, alexander_homology_case);
  if (suite_id == "suspension_lemma")
    return run_sampled(suite_id, seed, count, suspension_lemma_case);
  if (suite_id == "spine_dims") return run_sampled(suite_id, seed, count, spine_dims_case);
  if (suite_id == "sphere_deletion")
    return run_sampled(suite_id, seed, count, sphere_deletion_case);
  if (suite_id == "homogeneous_top")
    return run_exhaustive(suite_id, seed, count, homogeneous_top_cases);
  throw std::invalid_argument("run_suite: unknown suite \"" + suite_id + "\"");
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small complexes up to relabeling.
//
// Complexes on exactly k labeled vertices are walked as downward-closed
// families of nonempty subsets of [k] (all singletons forced), level by
// level; each family is reduced to the minimum of its face bitmap over the
// relabelings that sort a per-vertex invariant, which is a sound canonical
// form because the invariant is equivariant under relabeling.

namespace {

std::uint64_t apply_perm(std::uint64_t fam, const std::array<int, 6>& p) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = fam; rest;) {
    const int m = std::countr_zero(rest);
    rest &= rest - 1;
    int mm = 0;
    for (int b = m; b;) {
      const int v = std::countr_zero(static_cast<unsigned>(b));
      b &= b - 1;
      mm |= 1 << p[v];
    }
    out |= 1ull << mm;
  }
  return out;
}

std::uint64_t canonical_family(int k, std::uint64_t fam) {
  std::array<std::uint64_t, 6> inv{};
  for (std::uint64_t rest = fam; rest;) {
    const int m = std::countr_zero(rest);
    rest &= rest - 1;
    const int s = std::popcount(static_cast<unsigned>(m));
    for (int b = m; b;) {
      inv[std::countr_zero(static_cast<unsigned>(b))] += 1ull << (8 * (s - 1));
      b &= b - 1;
    }
  }
  std::array<int, 6> arrangement{};
  std::iota(arrangement.begin(), arrangement.begin() + k, 0);
  std::sort(arrangement.begin(), arrangement.begin() + k, [&](int a, int b) {
    return inv[a] != inv[b] ? inv[a] > inv[b] : a < b;
  });
  // Runs of equal invariant; only permutations within runs can matter.
  std::vector<std::pair<int, int>> runs;
  for (int b = 0; b < k;) {
    int e = b + 1;
    while (e < k && inv[arrangement[e]] == inv[arrangement[b]]) ++e;
    if (e - b > 1) runs.emplace_back(b, e);
    b = e;
  }
  std::uint64_t best = ~0ull;
  for (;;) {
    std::array<int, 6> p{};
    for (int j = 0; j < k; ++j) p[arrangement[j]] = j;
    best = std::min(best, apply_perm(fam, p));
    int r = static_cast<int>(runs.size()) - 1;
    while (r >= 0 && !std::next_permutation(arrangement.begin() + runs[r].first,
                                            arrangement.begin() + runs[r].second))
      --r;
    if (r < 0) break;
  }
  return best;
}

SimplicialComplex family_complex(int k, std::uint64_t fam) {
  std::vector<int> faces;
  for (std::uint64_t rest = fam; rest;) {
    faces.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  std::vector<Simplex> facets;
  for (const int m : faces) {
    bool maximal = true;
    for (const int m2 : faces)
      if (m2 != m && (m & ~m2) == 0) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<Vertex> vs;
    for (int b = m; b;) {
      vs.push_back(letter(std::countr_zero(static_cast<unsigned>(b))));
      b &= b - 1;
    }
    facets.push_back(Simplex(vs));
  }
  return SimplicialComplex(facets);
}

void enumerate_exact(int k, std::vector<SimplicialComplex>& out) {
  std::uint64_t singles = 0;
  for (int v = 0; v < k; ++v) singles |= 1ull << (1 << v);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> canon;
  std::vector<std::vector<int>> by_size(k + 1);
  for (int m = 1; m < (1 << k); ++m)
    by_size[std::popcount(static_cast<unsigned>(m))].push_back(m);

  auto emit = [&](std::uint64_t fam) {
    const std::uint64_t c = canonical_family(k, fam);
    if (seen.insert(c).second) canon.push_back(c);
  };
  std::function<void(int, std::uint64_t)> rec = [&](int s, std::uint64_t fam) {
    std::vector<int> allowed;
    for (const int m : by_size[s]) {
      bool ok = true;
      for (int b = m; b;) {
        const int v = b & -b;
        b ^= v;
        if (!((fam >> (m ^ v)) & 1)) {
          ok = false;
          break;
        }
      }
      if (ok) allowed.push_back(m);
    }
    const int a = static_cast<int>(allowed.size());
    for (std::uint64_t choice = 0; choice < (1ull << a); ++choice) {
      if (choice == 0) {
        emit(fam);
        continue;
      }
      std::uint64_t nf = fam;
      for (std::uint64_t c = choice; c;) {
        nf |= 1ull << allowed[std::countr_zero(c)];
        c &= c - 1;
      }
      if (s == k)
        emit(nf);
      else
        rec(s + 1, nf);
    }
  };
  if (k == 1)
    emit(singles);
  else
    rec(2, singles);
  std::sort(canon.begin(), canon.end());
  for (const std::uint64_t fam : canon) out.push_back(family_complex(k, fam));
}

}  // namespace

std::vector<SimplicialComplex> enumerate_small(int max_vertices) {
  if (max_vertices < 0)
    throw std::invalid_argument("enumerate_small: vertex bound must be nonnegative");
  if (max_vertices > 6)
    throw std::invalid_argument(
        "enumerate_small: bounds above 6 exceed the enumeration guard "
        "(the class count passes sixteen thousand already at 6)");
  std::vector<SimplicialComplex> out;
  out.push_back(SimplicialComplex::empty_complex());
  for (int k = 1; k <= max_vertices; ++k) enumerate_exact(k, out);
  return out;
}

}  // namespace nhtop
