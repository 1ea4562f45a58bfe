#include "nhtop/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "nhtop/mask_complex.hpp"

#include "collapse_core.hpp"

namespace nhtop {

namespace {

// Elementary collapses preserve homology and cohomology exactly, so Smith
// computations only ever need to see the greedily collapsed core. Trailing
// trivial groups are trimmed from every profile, which keeps the result
// independent of the dimension drop.
MaskComplex homology_core(const SimplicialComplex& k) {
  MaskComplex m = to_mask(k);
  m.facets = detail::greedy_core(m.facets, static_cast<int>(m.ground.size()));
  return m;
}

// Boundary matrices in mask space: level q maps q-faces to (q-1)-faces with
// the usual alternating signs taken in sorted vertex order.
std::vector<IntMatrix> mask_boundaries(const MaskComplex& m,
                                       std::vector<std::vector<std::uint64_t>>* levels_out) {
  std::vector<IntMatrix> out;
  auto levels = m.faces_by_dim();  // levels[q+1] = q-faces
  if (levels_out) *levels_out = levels;
  if (levels.size() <= 1) return out;  // void or {∅}

  std::vector<std::map<std::uint64_t, std::size_t>> index(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (std::size_t j = 0; j < levels[i].size(); ++j) index[i][levels[i][j]] = j;

  for (std::size_t lev = 1; lev < levels.size(); ++lev) {
    IntMatrix mat = IntMatrix::zero(levels[lev - 1].size(), levels[lev].size());
    for (std::size_t c = 0; c < levels[lev].size(); ++c) {
      const std::uint64_t s = levels[lev][c];
      int sign = 1;
      for (std::uint64_t bits = s; bits;) {
        const std::uint64_t low = bits & (~bits + 1);
        mat.at(index[lev - 1].at(s ^ low), c) = sign;
        sign = -sign;
        bits ^= low;
      }
    }
    out.push_back(std::move(mat));
  }
  return out;
}

IntegralGroup homology_group(std::size_t n_q, std::size_t rank_in, const SmithForm& out_form) {
  // rank_in = rank ∂_q (maps out of C_q), out_form = SNF of ∂_{q+1}.
  IntegralGroup g;
  g.rank = static_cast<long>(n_q) - static_cast<long>(rank_in) -
           static_cast<long>(out_form.rank());
  g.torsion = out_form.nontrivial();
  return g;
}

void trim_mod2(std::vector<long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void trim_integral(std::vector<IntegralGroup>& v) {
  while (!v.empty() && v.back().trivial()) v.pop_back();
}

}  // namespace

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k) {
  std::vector<BoundaryMatrix> out;
  if (k.is_void()) return out;
  const MaskComplex m = to_mask(k);
  std::vector<std::vector<std::uint64_t>> levels;
  auto mats = mask_boundaries(m, &levels);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    BoundaryMatrix b;
    b.q = static_cast<int>(i);
    for (auto s : levels[i]) b.rows.push_back(unmask_simplex(s, m.ground));
    for (auto s : levels[i + 1]) b.cols.push_back(unmask_simplex(s, m.ground));
    b.matrix = std::move(mats[i]);
    out.push_back(std::move(b));
  }
  return out;
}

std::string IntegralGroup::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (rank == 1) s = "Z";
  else if (rank > 1) s = "Z^" + std::to_string(rank);
  for (auto t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s;
}

long BettiProfile::mod2_at(int dim) const {
  const int i = dim + 1;
  if (i < 0 || static_cast<std::size_t>(i) >= mod2.size()) return 0;
  return mod2[static_cast<std::size_t>(i)];
}

IntegralGroup BettiProfile::integral_at(int dim) const {
  const int i = dim + 1;
  if (i < 0 || static_cast<std::size_t>(i) >= integral.size()) return {};
  return integral[static_cast<std::size_t>(i)];
}

bool BettiProfile::all_zero() const {
  for (auto b : mod2)
    if (b != 0) return false;
  for (const auto& g : integral)
    if (!g.trivial()) return false;
  return true;
}

std::string BettiProfile::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < integral.size(); ++i) {
    if (i) s += ", ";
    s += "H~" + std::to_string(static_cast<int>(i) - 1) + "=" + integral[i].to_string();
  }
  s += "]";
  return s;
}

BettiProfile betti(const SimplicialComplex& k) {
  BettiProfile p;
  if (k.is_void()) return p;

  const MaskComplex m = homology_core(k);
  auto levels = m.faces_by_dim();
  auto mats = mask_boundaries(m, nullptr);
  const std::size_t depth = levels.size();  // dim + 2 entries, starting at ∅

  std::vector<std::size_t> rank_z(depth + 1, 0), rank_2(depth + 1, 0);
  std::vector<SmithForm> snf(depth + 1);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    snf[i + 1] = smith_normal_form(mats[i]);
    rank_z[i + 1] = snf[i + 1].rank();
    rank_2[i + 1] = rank_gf2(mats[i]);
  }

  p.mod2.resize(depth, 0);
  p.integral.resize(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t n_q = levels[i].size();
    p.mod2[i] = static_cast<long>(n_q) - static_cast<long>(rank_2[i]) -
                static_cast<long>(rank_2[i + 1]);
    p.integral[i] = homology_group(n_q, rank_z[i], snf[i + 1]);
  }
  trim_mod2(p.mod2);
  trim_integral(p.integral);
  return p;
}

std::vector<IntegralGroup> cohomology(const SimplicialComplex& k) {
  std::vector<IntegralGroup> out;
  if (k.is_void()) return out;
  const MaskComplex m = homology_core(k);
  auto levels = m.faces_by_dim();
  auto mats = mask_boundaries(m, nullptr);
  const std::size_t depth = levels.size();

  // Coboundary δ^q = ∂_{q+1}^T; H^q = ker δ^q / im δ^{q-1}.
  std::vector<SmithForm> snf(depth + 1);
  for (std::size_t i = 0; i < mats.size(); ++i)
    snf[i + 1] = smith_normal_form(mats[i].transposed());

  out.resize(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t n_q = levels[i].size();
    IntegralGroup g;
    // rank δ^q = rank ∂_{q+1} = snf[i+1].rank(); rank δ^{q-1} = snf[i].rank()
    g.rank = static_cast<long>(n_q) - static_cast<long>(snf[i + 1].rank()) -
             static_cast<long>(snf[i].rank());
    g.torsion = snf[i].nontrivial();
    out[i] = std::move(g);
  }
  trim_integral(out);
  return out;
}

IntegralGroup cohomology_at(const std::vector<IntegralGroup>& profile, int dim) {
  const int i = dim + 1;
  if (i < 0 || static_cast<std::size_t>(i) >= profile.size()) return {};
  return profile[static_cast<std::size_t>(i)];
}

bool is_acyclic(const SimplicialComplex& k) {
  return betti(k).all_zero();
}

std::optional<int> sphere_profile(const SimplicialComplex& k) {
  const BettiProfile p = betti(k);
  std::optional<int> m;
  for (std::size_t i = 0; i < p.integral.size(); ++i) {
    const auto& g = p.integral[i];
    if (!g.torsion.empty()) return std::nullopt;
    if (g.rank == 0) continue;
    if (g.rank != 1 || m.has_value()) return std::nullopt;
    m = static_cast<int>(i) - 1;
  }
  if (!m) return std::nullopt;  // acyclic or void is not a sphere profile
  for (std::size_t i = 0; i < p.mod2.size(); ++i) {
    const long want = (static_cast<int>(i) - 1 == *m) ? 1 : 0;
    if (p.mod2[i] != want) return std::nullopt;
  }
  return m;
}

bool contains_full_2_skeleton(const SimplicialComplex& k, const GroundSet& ground) {
  if (k.is_void()) return false;
  if (!ground.contains_all(k.vertex_set()))
    throw std::invalid_argument("contains_full_2_skeleton: ground set too small");
  const auto& vs = ground.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!k.has_face(Simplex{vs[i]})) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!k.has_face(Simplex{vs[i], vs[j]})) return false;
      for (std::size_t l = j + 1; l < n; ++l)
        if (!k.has_face(Simplex{vs[i], vs[j], vs[l]})) return false;
    }
  }
  return true;
}

long long reduced_euler_characteristic(const SimplicialComplex& k) {
  if (k.is_void()) return 0;
  const MaskComplex m = to_mask(k);
  long long chi = 0;
  for (auto s : m.all_faces_sorted())
    chi += (std::popcount(s) % 2 == 0) ? -1 : 1;  // (-1)^(popcount-1)
  return chi;
}

bool relative_acyclic(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (l.is_void() || !is_subcomplex(l, k))
    throw std::invalid_argument("relative_acyclic: L must be a nonvoid subcomplex of K");
  const MaskComplex m = to_mask(k);
  const MaskComplex ml = to_mask(l, GroundSet(m.ground));

  auto levels = m.faces_by_dim();
  // Relative chain groups: faces of K not in L, per dimension. ∅ ∈ L always.
  std::vector<std::vector<std::uint64_t>> rel(levels.size());
  std::vector<std::map<std::uint64_t, std::size_t>> index(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (auto s : levels[i])
      if (!ml.has_face(s)) {
        index[i][s] = rel[i].size();
        rel[i].push_back(s);
      }

  std::vector<SmithForm> snf(levels.size() + 1);
  for (std::size_t lev = 1; lev < levels.size(); ++lev) {
    IntMatrix mat = IntMatrix::zero(rel[lev - 1].size(), rel[lev].size());
    for (std::size_t c = 0; c < rel[lev].size(); ++c) {
      const std::uint64_t s = rel[lev][c];
      int sign = 1;
      for (std::uint64_t bits = s; bits;) {
        const std::uint64_t low = bits & (~bits + 1);
        const auto it = index[lev - 1].find(s ^ low);
        if (it != index[lev - 1].end()) mat.at(it->second, c) = sign;
        sign = -sign;
        bits ^= low;
      }
    }
    snf[lev] = smith_normal_form(mat);
  }

  for (std::size_t i = 0; i < levels.size(); ++i) {
    const long rank = static_cast<long>(rel[i].size()) -
                      static_cast<long>(snf[i].rank()) -
                      static_cast<long>(snf[i + 1].rank());
    if (rank != 0 || !snf[i + 1].nontrivial().empty()) return false;
  }
  return true;
}

}  // namespace nhtop
