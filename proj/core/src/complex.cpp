#include "nhtop/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace nhtop {

namespace {

// Keep only maximal simplices, sorted and deduplicated.
std::vector<Simplex> to_antichain(std::vector<Simplex> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && gens[j].contains(gens[i]) && !(gens[i] == gens[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> generators)
    : facets_(to_antichain(std::move(generators))) {}

SimplicialComplex SimplicialComplex::empty_complex() {
  return SimplicialComplex({Simplex{}});
}

SimplicialComplex SimplicialComplex::from_chars(std::string_view facets) {
  std::vector<Simplex> gens;
  std::string token;
  std::istringstream in{std::string(facets)};
  while (in >> token) {
    if (token == "{}") {
      gens.push_back(Simplex{});
    } else {
      gens.push_back(Simplex::from_chars(token));
    }
  }
  return SimplicialComplex(std::move(gens));
}

std::optional<int> SimplicialComplex::dim_opt() const {
  if (is_void()) return std::nullopt;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

int SimplicialComplex::dim() const {
  auto d = dim_opt();
  if (!d) throw std::invalid_argument("dim: void complex has no dimension");
  return *d;
}

std::vector<Vertex> SimplicialComplex::vertex_set() const {
  std::vector<Vertex> out;
  for (const auto& f : facets_)
    out = merge_vertex_sets(out, f.vertices());
  return out;
}

bool SimplicialComplex::has_face(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.contains(s); });
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<Simplex> SimplicialComplex::faces(int q) const {
  std::vector<Simplex> out;
  if (is_void() || q < -1) return out;
  if (q == -1) {
    out.push_back(Simplex{});
    return out;
  }
  std::set<Simplex> seen;
  const std::size_t want = static_cast<std::size_t>(q) + 1;
  for (const auto& f : facets_) {
    const auto& vs = f.vertices();
    if (vs.size() < want) continue;
    // Enumerate q-subsets of the facet via combination walking.
    std::vector<std::size_t> idx(want);
    for (std::size_t i = 0; i < want; ++i) idx[i] = i;
    while (true) {
      std::vector<Vertex> pick;
      pick.reserve(want);
      for (auto i : idx) pick.push_back(vs[i]);
      seen.insert(Simplex(std::move(pick)));
      // next combination
      std::size_t i = want;
      while (i > 0 && idx[i - 1] == vs.size() - (want - (i - 1))) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < want; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  if (is_void()) return out;
  std::set<Simplex> seen;
  for (const auto& f : facets_) {
    const auto& vs = f.vertices();
    const std::size_t n = vs.size();
    if (n > 31) throw std::invalid_argument("all_faces: facet too large");
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      std::vector<Vertex> pick;
      for (std::size_t i = 0; i < n; ++i)
        if (m & (1u << i)) pick.push_back(vs[i]);
      seen.insert(Simplex(std::move(pick)));
    }
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

std::size_t SimplicialComplex::face_count() const { return all_faces().size(); }

bool SimplicialComplex::is_simplex_complex() const {
  return facets_.size() == 1;
}

bool SimplicialComplex::homogeneous() const {
  if (is_void()) throw std::invalid_argument("homogeneous: void complex");
  for (const auto& f : facets_)
    if (f.dim() != facets_.back().dim()) return false;
  return true;
}

std::string SimplicialComplex::to_string() const {
  if (is_void()) return "∅";
  if (facets_.size() == 1 && facets_[0].empty()) return "{∅}";
  std::string s;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) s += ",";
    s += facets_[i].to_string();
  }
  return s;
}

SimplicialComplex full_simplex(const Simplex& v) {
  return SimplicialComplex({v});
}

SimplicialComplex full_simplex(const GroundSet& v) {
  return SimplicialComplex({v.full_simplex()});
}

SimplicialComplex boundary_complex(const Simplex& s) {
  if (s.empty()) return SimplicialComplex::void_complex();
  return SimplicialComplex(s.immediate_faces());
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.is_void() || l.is_void()) return SimplicialComplex::void_complex();
  const auto vk = k.vertex_set();
  const auto vl = l.vertex_set();
  std::vector<Vertex> common;
  std::set_intersection(vk.begin(), vk.end(), vl.begin(), vl.end(),
                        std::back_inserter(common));
  if (!common.empty())
    throw std::invalid_argument("join: operands share vertex " + common[0].label());
  std::vector<Simplex> gens;
  gens.reserve(k.facets().size() * l.facets().size());
  for (const auto& f : k.facets())
    for (const auto& g : l.facets())
      gens.push_back(f.union_with(g));
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex join(const Simplex& s, const SimplicialComplex& k) {
  return join(full_simplex(s), k);
}

SimplicialComplex union_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex intersect_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex();
  // Facets of the intersection are maximal among pairwise facet intersections.
  std::vector<Simplex> gens;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets())
      gens.push_back(f.intersect(g));
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex link(const Simplex& s, const SimplicialComplex& k) {
  if (!k.has_face(s))
    throw std::invalid_argument("link: " + s.to_string() + " is not a face");
  std::vector<Simplex> gens;
  for (const auto& f : k.facets()) {
    if (!f.contains(s)) continue;
    // f - s is a face of the link; maximal ones arise this way.
    Simplex rest = f;
    for (const auto& v : s.vertices()) rest = rest.minus(v);
    gens.push_back(rest);
  }
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex star(const Simplex& s, const SimplicialComplex& k) {
  if (!k.has_face(s))
    throw std::invalid_argument("star: " + s.to_string() + " is not a face");
  std::vector<Simplex> gens;
  for (const auto& f : k.facets())
    if (f.contains(s)) gens.push_back(f);
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex deletion(const SimplicialComplex& k, const Vertex& v) {
  const auto vs = k.vertex_set();
  if (!std::binary_search(vs.begin(), vs.end(), v))
    throw std::invalid_argument("deletion: vertex " + v.label() + " not in complex");
  std::vector<Simplex> gens;
  for (const auto& f : k.facets()) gens.push_back(f.minus(v));
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex suspension(const SimplicialComplex& k, int t) {
  if (t < 0) throw std::invalid_argument("suspension: negative fold count");
  if (t == 0) return k;
  if (k.is_void()) return k;
  const auto fresh = fresh_vertices(k.vertex_set(), static_cast<std::size_t>(t) + 1);
  const SimplicialComplex sphere = boundary_complex(Simplex(fresh));
  return join(sphere, k);
}

bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k) {
  if (l.is_void()) return true;
  if (k.is_void()) return false;
  return std::all_of(l.facets().begin(), l.facets().end(),
                     [&](const Simplex& f) { return k.has_face(f); });
}

bool top_generated(const SimplicialComplex& l, const SimplicialComplex& k) {
  if (!is_subcomplex(l, k))
    throw std::invalid_argument("top_generated: first argument is not a subcomplex");
  if (l.is_void()) return true;
  return std::all_of(l.facets().begin(), l.facets().end(),
                     [&](const Simplex& f) { return k.is_facet(f); });
}

StructureReport structure_report(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("structure_report: void complex");
  StructureReport r;
  r.dim = k.dim();
  r.principal = k.facets();
  r.homogeneous = k.homogeneous();
  std::set<Simplex> ridge_set;
  for (const auto& f : r.principal)
    for (const auto& g : f.immediate_faces()) ridge_set.insert(g);
  r.ridges.assign(ridge_set.begin(), ridge_set.end());

  const int n = static_cast<int>(r.principal.size());
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  auto root = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Simplex meet = r.principal[i].intersect(r.principal[j]);
      const bool adj = (meet.dim() == r.principal[i].dim() - 1) ||
                       (meet.dim() == r.principal[j].dim() - 1);
      if (adj) {
        r.adjacency.emplace_back(i, j);
        comp[root(i)] = root(j);
      }
    }
  }
  r.strongly_connected = true;
  for (int i = 0; i < n; ++i)
    if (root(i) != root(0)) r.strongly_connected = false;
  return r;
}

std::vector<Vertex> fresh_vertices(const std::vector<Vertex>& used, std::size_t count) {
  std::unordered_set<std::string> taken;
  for (const auto& v : used) taken.insert(v.label());
  std::vector<Vertex> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    std::string label = "~" + std::to_string(i);
    if (!taken.count(label)) out.emplace_back(std::move(label));
  }
  return out;
}

std::size_t ComplexHash::operator()(const SimplicialComplex& k) const {
  std::size_t h = 14695981039346656037ull;
  SimplexHash sh;
  for (const auto& f : k.facets()) {
    h ^= sh(f);
    h *= 1099511628211ull;
  }
  h ^= k.facets().size() + 0x9e3779b97f4a7c15ull;
  return h;
}

}  // namespace nhtop
