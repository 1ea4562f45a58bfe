#include "nhtop/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "nhtop/alexander.hpp"
#include "reference_data.hpp"

namespace nhtop {

namespace {

Vertex numbered(int i) { return Vertex{"v" + std::to_string(i)}; }

std::vector<Vertex> numbered_run(int count) {
  std::vector<Vertex> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(numbered(i));
  return out;
}

}  // namespace

SimplicialComplex standard(StandardKind kind, int d) {
  if (d < -1) throw std::invalid_argument("standard: dimension must be >= -1");
  switch (kind) {
    case StandardKind::Simplex:
      return full_simplex(Simplex(numbered_run(d + 1)));
    case StandardKind::BoundarySphere:
      return boundary_complex(Simplex(numbered_run(d + 2)));
  }
  throw std::invalid_argument("standard: unknown kind");
}

ShelledBall shelled_ball(int d, int n_facets, Seed seed) {
  if (d < 0) throw std::invalid_argument("shelled_ball: dimension must be >= 0");
  if (n_facets < 1) throw std::invalid_argument("shelled_ball: need at least one facet");
  if (d == 0 && n_facets != 1)
    throw std::invalid_argument("shelled_ball: a 0-ball has exactly one facet");

  std::mt19937_64 rng(seed);
  int next_label = d + 1;
  std::vector<Simplex> facets = {Simplex(numbered_run(d + 1))};
  std::vector<Simplex> order = facets;

  while (static_cast<int>(facets.size()) < n_facets) {
    // Ridge -> number of facets containing it; count 1 marks the boundary.
    std::map<Simplex, int> counts;
    for (const Simplex& f : facets)
      for (const Simplex& r : f.immediate_faces()) counts[r] += 1;
    std::vector<Simplex> boundary;
    for (const auto& [r, c] : counts)
      if (c == 1) boundary.push_back(r);

    const Simplex sigma = boundary[std::uniform_int_distribution<std::size_t>(
        0, boundary.size() - 1)(rng)];

    SimplicialComplex current(facets);
    Simplex attached;
    if (std::bernoulli_distribution(0.6)(rng)) {
      // Try to close onto an existing vertex: the candidate facet must meet
      // the current complex in a pure union of its own ridges, all of them on
      // the current boundary, and not in its whole boundary sphere.
      std::vector<Vertex> pool;
      for (const Vertex& v : current.vertex_set())
        if (!sigma.contains(v)) pool.push_back(v);
      std::shuffle(pool.begin(), pool.end(), rng);
      for (const Vertex& x : pool) {
        const Simplex f = sigma.union_with(Simplex({x}));
        if (current.has_face(f)) continue;
        const SimplicialComplex meet = intersect_complex(full_simplex(f), current);
        bool ok = true;
        for (const Simplex& m : meet.facets()) {
          auto it = counts.find(m);
          if (m.dim() != d - 1 || it == counts.end() || it->second != 1) {
            ok = false;
            break;
          }
        }
        if (ok && static_cast<int>(meet.facets().size()) == d + 1) ok = false;
        if (ok) {
          attached = f;
          break;
        }
      }
    }
    if (attached.empty()) attached = sigma.union_with(Simplex({numbered(next_label++)}));
    facets.push_back(attached);
    order.push_back(attached);
  }
  return {SimplicialComplex(facets), order};
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma) {
  if (sigma.empty()) throw std::invalid_argument("stellar_subdivide: σ must be nonempty");
  if (!k.has_face(sigma))
    throw std::invalid_argument("stellar_subdivide: " + sigma.to_string() +
                                " is not a face of the complex");
  const Vertex w = fresh_vertices(k.vertex_set(), 1).front();
  std::vector<Simplex> generators;
  for (const Simplex& f : k.facets())
    if (!f.contains(sigma)) generators.push_back(f);
  const SimplicialComplex replacement =
      join(Simplex({w}), join(boundary_complex(sigma), link(sigma, k)));
  for (const Simplex& f : replacement.facets()) generators.push_back(f);
  return SimplicialComplex(generators);
}

SimplicialComplex simplex_glue(const SimplicialComplex& k, const Simplex& eta,
                               const GroundSet& ground) {
  if (eta.empty()) throw std::invalid_argument("simplex_glue: η must be nonempty");
  if (!ground.contains_all(k.vertex_set()))
    throw std::invalid_argument("simplex_glue: ground set must contain V_K");
  for (const Vertex& v : eta.vertices())
    if (ground.contains(v))
      throw std::invalid_argument("simplex_glue: η must be disjoint from the ground set");
  const SimplicialComplex shell = join(boundary_complex(eta), full_simplex(ground));
  const SimplicialComplex core = join(eta, k);
  return union_complex(shell, core);
}

DoubleDualSample nh_double_dual(SampleKind kind, int d, int tau_dim, int sigma_dim,
                                Seed seed) {
  if (tau_dim < 0 || sigma_dim < 0)
    throw std::invalid_argument("nh_double_dual: tau_dim and sigma_dim must be >= 0");
  if (kind == SampleKind::Ball && d < 1)
    throw std::invalid_argument("nh_double_dual: ball bases need d >= 1");
  if (kind == SampleKind::Sphere && d < 0)
    throw std::invalid_argument("nh_double_dual: sphere bases need d >= 0");

  std::mt19937_64 rng(seed);
  SimplicialComplex base;
  if (kind == SampleKind::Ball) {
    base = shelled_ball(d, std::uniform_int_distribution<int>(2, 6)(rng), rng()).complex;
  } else {
    base = standard(StandardKind::BoundarySphere, d);
    const int rounds = d >= 1 ? std::uniform_int_distribution<int>(0, 2)(rng) : 0;
    for (int i = 0; i < rounds; ++i) {
      std::vector<Simplex> candidates;
      for (int q = 1; q <= base.dim(); ++q)
        for (const Simplex& s : base.faces(q)) candidates.push_back(s);
      base = stellar_subdivide(
          base, candidates[std::uniform_int_distribution<std::size_t>(
                    0, candidates.size() - 1)(rng)]);
    }
  }

  const Simplex tau(fresh_vertices(base.vertex_set(), tau_dim + 1));
  const SimplicialComplex first = relative_dual(base, tau);
  // With τ nonempty and the base neither void nor a full simplex, the support
  // of base^τ is exactly V_base ∪ τ, so fresh σ extends the right ground.
  const Simplex sigma(fresh_vertices(first.vertex_set(), sigma_dim + 1));
  const SimplicialComplex second = relative_dual(first, sigma);
  return {second, base, tau, sigma};
}

std::vector<std::string> reference_names() {
  return {"dunce_hat_8", "moebius_5", "rp2_6"};
}

ComplexDocument reference(const std::string& name) {
  if (name == "rp2_6") return parse_complex_document(embedded::rp2_6);
  if (name == "moebius_5") return parse_complex_document(embedded::moebius_5);
  if (name == "dunce_hat_8") return parse_complex_document(embedded::dunce_hat_8);
  constexpr std::string_view prefix = "boundary_sphere_";
  if (name.starts_with(prefix)) {
    const std::string tail = name.substr(prefix.size());
    try {
      std::size_t used = 0;
      const int k = std::stoi(tail, &used);
      if (used == tail.size() && k >= -1) {
        ComplexDocument doc;
        doc.complex = standard(StandardKind::BoundarySphere, k);
        doc.name = name;
        doc.description = "Boundary of the " + std::to_string(k + 1) +
                          "-simplex: the combinatorial " + std::to_string(k) +
                          "-sphere on " + std::to_string(k + 2) + " vertices.";
        return doc;
      }
    } catch (const std::exception&) {
      // fall through to the unknown-name error
    }
  }
  std::string known;
  for (const std::string& n : reference_names()) known += " " + n;
  throw std::invalid_argument("reference: unknown name \"" + name +
                              "\"; available:" + known + " boundary_sphere_<k>");
}

}  // namespace nhtop
