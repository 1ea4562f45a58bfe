#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhtop/alexander.hpp"
#include "nhtop/collapse.hpp"
#include "nhtop/complex.hpp"
#include "nhtop/generators.hpp"
#include "nhtop/homology.hpp"

using namespace nhtop;

namespace {
SimplicialComplex C(std::string_view facets) { return SimplicialComplex::from_chars(facets); }
Simplex S(std::string_view chars) {
  std::vector<Vertex> vs;
  for (char c : chars) vs.emplace_back(std::string(1, c));
  return Simplex(vs);
}
}  // namespace

TEST_CASE("free pairs are faces with a unique proper coface") {
  SimplicialComplex k = C("ab");
  std::vector<CollapseStep> pairs = free_pairs(k);
  REQUIRE(pairs.size() == 2);  // (a, ab) and (b, ab)
  for (const CollapseStep& p : pairs) {
    CHECK(p.cofacet == S("ab"));
    CHECK(p.free_face.size() == 1);
  }
  CHECK(free_pairs(C("ab ac bc")).empty());        // every edge closes the cycle
  CHECK(free_pairs(SimplicialComplex::void_complex()).empty());
  CHECK(free_pairs(C("a")).empty());               // a point has no proper pair
}

TEST_CASE("a single elementary collapse removes exactly the pair") {
  SimplicialComplex k = C("abc");
  std::vector<CollapseStep> pairs = free_pairs(k);
  REQUIRE(!pairs.empty());
  SimplicialComplex next = collapse_step(k, pairs.front());
  CHECK(next.face_count() == k.face_count() - 2);
  CHECK(!next.has_face(pairs.front().free_face));
  CHECK(!next.has_face(pairs.front().cofacet));
}

TEST_CASE("simplices collapse to a point with a replayable certificate") {
  CollapseOutcome out = is_collapsible(C("abc"));
  REQUIRE(out.verdict == Verdict::Yes);
  REQUIRE(out.sequence.has_value());
  CHECK(out.sequence->start == C("abc"));
  CHECK(out.sequence->end.face_count() == 2);  // one vertex plus ∅
  CHECK(out.sequence->steps.size() == 3);
  CHECK(replay(*out.sequence));
}

TEST_CASE("non-acyclic complexes are rejected exactly") {
  CollapseOutcome out = is_collapsible(C("ab ac bc"));
  CHECK(out.verdict == Verdict::No);
  CHECK(out.note.find("acyclic") != std::string::npos);
}

TEST_CASE("the dunce hat is acyclic with no free pair, hence Unknown") {
  SimplicialComplex dunce = reference("dunce_hat_8").complex;
  CHECK(is_acyclic(dunce));
  CHECK(free_pairs(dunce).empty());
  CollapseOutcome out = is_collapsible(dunce);
  CHECK(out.verdict == Verdict::Unknown);
}

TEST_CASE("a starved budget reports Unknown, never a bogus No") {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  CollapseOutcome out = is_collapsible(shelled_ball(3, 6, 5).complex, tiny);
  CHECK(out.verdict == Verdict::Unknown);
  CHECK(out.nodes_used <= 1);
}

TEST_CASE("collapses_to distinguishes reachable and obstructed targets") {
  // Δ(abc) onto one of its edges: two elementary collapses.
  CollapseOutcome yes = collapses_to(C("abc"), C("ab"));
  REQUIRE(yes.verdict == Verdict::Yes);
  REQUIRE(yes.sequence.has_value());
  CHECK(yes.sequence->end == C("ab"));
  CHECK(replay(*yes.sequence));

  // A cone cannot collapse onto its base circle: the relative pair carries
  // homology, an exact obstruction.
  CHECK(collapses_to(C("tab tac tbc"), C("ab ac bc")).verdict == Verdict::No);
  // Non-subcomplex targets and {∅} are exact Nos as well.
  CHECK(collapses_to(C("abc"), C("ad")).verdict == Verdict::No);
  CHECK(collapses_to(C("abc"), SimplicialComplex::empty_complex()).verdict == Verdict::No);
  CHECK(collapses_to(C("abc"), C("abc")).verdict == Verdict::Yes);
}

TEST_CASE("spine search peels whole dimension levels") {
  SimplicialComplex moebius = reference("moebius_5").complex;
  SpineResult r = spine(moebius);
  REQUIRE(r.verdict == Verdict::Yes);
  CHECK(r.result.dim() == 1);
  CHECK(betti(r.result) == betti(moebius));
  CHECK(replay(r.sequence));

  // A closed surface has no free pair at all; depleting the top level is
  // impossible and the first level is searched completely, so No is exact.
  CHECK(spine(standard(StandardKind::BoundarySphere, 2)).verdict == Verdict::No);

  SpineResult to_point = spine(C("abc"), {}, 0);
  REQUIRE(to_point.verdict == Verdict::Yes);
  CHECK(to_point.result.dim() == 0);
}

TEST_CASE("collapses lift to expansions of the duals") {
  SimplicialComplex k = C("ab bc");
  std::vector<CollapseStep> pairs = free_pairs(k);
  REQUIRE(!pairs.empty());
  SimplicialComplex l = collapse_step(k, pairs.front());
  GroundSet ground(k.vertex_set());
  CollapseOutcome out = expansion_check(dual_over(k, ground), dual_over(l, ground));
  REQUIRE(out.verdict == Verdict::Yes);
  REQUIRE(out.sequence.has_value());
  CHECK(replay(*out.sequence));
}

TEST_CASE("replay rejects corrupted certificates") {
  CollapseOutcome out = is_collapsible(C("abc"));
  REQUIRE(out.verdict == Verdict::Yes);
  CollapseSequence seq = *out.sequence;

  CollapseSequence wrong_end = seq;
  wrong_end.end = C("ab");
  CHECK(!replay(wrong_end));

  CollapseSequence wrong_step = seq;
  wrong_step.steps[0].free_face = wrong_step.steps[0].cofacet;
  CHECK(!replay(wrong_step));

  CollapseSequence reordered = seq;
  std::swap(reordered.steps.front(), reordered.steps.back());
  CHECK(!replay(reordered));
}

TEST_CASE("barycentric subdivision preserves the homotopy-invariant data") {
  SimplicialComplex sd = barycentric_subdivision(C("ab"));
  CHECK(sd.vertex_count() == 3);
  CHECK(sd.facets().size() == 2);

  SimplicialComplex rp2 = reference("rp2_6").complex;
  CHECK(betti(barycentric_subdivision(rp2)) == betti(rp2));

  SearchBudget retry;
  retry.subdivision_retry = true;
  // The subdivided dunce hat gains free pairs; whatever the verdict, the
  // retry path must never report a false No for an acyclic complex.
  CHECK(is_collapsible(reference("dunce_hat_8").complex, retry).verdict != Verdict::No);
}

TEST_CASE("shelled balls collapse within generous budgets") {
  for (Seed seed : {Seed{1}, Seed{2}, Seed{3}}) {
    ShelledBall b = shelled_ball(2, 5, seed);
    CollapseOutcome out = is_collapsible(b.complex);
    REQUIRE(out.verdict == Verdict::Yes);
    CHECK(replay(*out.sequence));
  }
}
