#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nhtop/complex.hpp"

using namespace nhtop;

namespace {
SimplicialComplex C(std::string_view facets) { return SimplicialComplex::from_chars(facets); }
Simplex S(std::string_view chars) {
  std::vector<Vertex> vs;
  for (char c : chars) vs.emplace_back(std::string(1, c));
  return Simplex(vs);
}
}  // namespace

TEST_CASE("void complex and {∅} are distinct degenerate values") {
  SimplicialComplex v = SimplicialComplex::void_complex();
  SimplicialComplex e = SimplicialComplex::empty_complex();
  CHECK(v.is_void());
  CHECK(!e.is_void());
  CHECK(v != e);
  CHECK(!v.dim_opt().has_value());
  CHECK(e.dim() == -1);
  CHECK(e.has_face(Simplex{}));
  CHECK(!v.has_face(Simplex{}));
  CHECK(v.face_count() == 0);
  CHECK(e.face_count() == 1);
  CHECK(C("{}") == e);
}

TEST_CASE("construction normalizes containments and duplicates") {
  SimplicialComplex k({S("ab"), S("a"), S("b"), S("ab")});
  CHECK(k == C("ab"));
  CHECK(k.facets().size() == 1);
  CHECK(SimplicialComplex(std::vector<Simplex>{}).is_void());
  CHECK(SimplicialComplex({Simplex{}}) == SimplicialComplex::empty_complex());
}

TEST_CASE("faces by dimension") {
  SimplicialComplex k = C("abc cd");
  CHECK(k.dim() == 2);
  CHECK(k.faces(-1) == std::vector<Simplex>{Simplex{}});
  CHECK(k.faces(0).size() == 4);
  CHECK(k.faces(1).size() == 4);  // ab ac bc cd
  CHECK(k.faces(2).size() == 1);
  CHECK(k.faces(3).empty());
  CHECK(k.faces(-2).empty());
  CHECK(k.face_count() == 10);
  CHECK(k.all_faces().size() == 10);
  CHECK(!k.homogeneous());
  CHECK(C("ab cd").homogeneous());
}

TEST_CASE("full simplex and boundary complex") {
  CHECK(full_simplex(S("abc")) == C("abc"));
  CHECK(full_simplex(Simplex{}) == SimplicialComplex::empty_complex());
  CHECK(boundary_complex(S("abc")) == C("ab ac bc"));
  CHECK(boundary_complex(S("a")) == SimplicialComplex::empty_complex());
  CHECK(boundary_complex(Simplex{}).is_void());
  CHECK(C("abc").is_simplex_complex());
  CHECK(!C("ab ac bc").is_simplex_complex());
}

TEST_CASE("join conventions") {
  SimplicialComplex k = C("ab bc");
  CHECK(join(k, SimplicialComplex::empty_complex()) == k);
  CHECK(join(k, SimplicialComplex::void_complex()).is_void());
  CHECK(join(SimplicialComplex::void_complex(), k).is_void());
  CHECK(join(C("d"), C("ab")) == C("abd"));
  CHECK(join(S("d"), C("ab ac")) == C("abd acd"));
  // Cone over the empty complex is the cone point's simplex.
  CHECK(join(S("d"), SimplicialComplex::empty_complex()) == C("d"));
  SimplicialComplex square = C("ac ad bc bd");  // S^0 * S^0 = S^1 (4-cycle)
  CHECK(join(C("a b"), C("c d")) == square);
}

TEST_CASE("union and intersection") {
  CHECK(union_complex(C("ab"), C("bc")) == C("ab bc"));
  CHECK(intersect_complex(C("ab"), C("bc")) == C("b"));
  // Nonvoid complexes always share the empty face.
  CHECK(intersect_complex(C("ab"), C("cd")) == SimplicialComplex::empty_complex());
  CHECK(intersect_complex(C("ab"), SimplicialComplex::void_complex()).is_void());
  CHECK(intersect_complex(C("abc"), C("abd")) == C("ab"));
  CHECK(union_complex(SimplicialComplex::void_complex(), C("a")) == C("a"));
}

TEST_CASE("star, link, deletion and their gluing identities") {
  SimplicialComplex k = C("abc bcd de");
  Vertex d{"d"};
  CHECK(link(Simplex{}, k) == k);
  CHECK(link(S("d"), k) == C("bc e"));
  CHECK(star(S("d"), k) == C("bcd de"));
  CHECK(deletion(k, d) == C("abc bc e"));
  // st(v) = v * lk(v); K = st(v) ∪ (K - v); lk(v) = st(v) ∩ (K - v).
  for (const Vertex& v : k.vertex_set()) {
    SimplicialComplex st = star(Simplex({v}), k);
    SimplicialComplex del = deletion(k, v);
    SimplicialComplex lk = link(Simplex({v}), k);
    CHECK(st == join(S(v.label()), lk));
    CHECK(union_complex(st, del) == k);
    CHECK(intersect_complex(st, del) == lk);
  }
}

TEST_CASE("suspension") {
  SimplicialComplex s0 = C("a b");
  CHECK(suspension(s0, 0) == s0);
  CHECK(suspension(SimplicialComplex::void_complex(), 2).is_void());
  SimplicialComplex s1 = suspension(s0, 1);
  CHECK(s1.vertex_count() == 4);
  CHECK(s1.facets().size() == 4);  // a 4-cycle
  // Σ^t {∅} = ∂Δ^t * {∅} = the (t-1)-sphere.
  CHECK(suspension(SimplicialComplex::empty_complex(), 1).vertex_count() == 2);
}

TEST_CASE("subcomplex and top-generated predicates") {
  SimplicialComplex k = C("abc cd");
  CHECK(is_subcomplex(C("ab cd"), k));
  CHECK(!is_subcomplex(C("ad"), k));
  CHECK(is_subcomplex(SimplicialComplex::void_complex(), k));
  CHECK(top_generated(C("abc"), k));
  CHECK(top_generated(C("cd"), k));
  CHECK(!top_generated(C("ab"), k));
}

TEST_CASE("structure report adjacency and strong connectivity") {
  StructureReport r = structure_report(C("ab ac bc"));
  CHECK(r.dim == 1);
  CHECK(r.homogeneous);
  CHECK(r.strongly_connected);
  CHECK(r.principal.size() == 3);

  // Two triangles glued at a single vertex: homogeneous but not strongly
  // connected (no chain of ridge-adjacent facets).
  StructureReport pinch = structure_report(C("abc cde"));
  CHECK(pinch.homogeneous);
  CHECK(!pinch.strongly_connected);
}

TEST_CASE("fresh vertices avoid the used set") {
  std::vector<Vertex> used = C("ab").vertex_set();
  std::vector<Vertex> fresh = fresh_vertices(used, 3);
  CHECK(fresh.size() == 3);
  std::set<Vertex> all(used.begin(), used.end());
  for (const Vertex& v : fresh) CHECK(all.insert(v).second);
}

TEST_CASE("ordering is total and stable under relabel-free comparison") {
  std::set<SimplicialComplex> seen;
  CHECK(seen.insert(C("ab")).second);
  CHECK(seen.insert(C("ab bc")).second);
  CHECK(!seen.insert(C("ab")).second);
}
