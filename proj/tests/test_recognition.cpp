#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhtop/complex.hpp"
#include "nhtop/generators.hpp"
#include "nhtop/homology.hpp"
#include "nhtop/recognition.hpp"

using namespace nhtop;

namespace {
SimplicialComplex C(std::string_view facets) { return SimplicialComplex::from_chars(facets); }
}  // namespace

TEST_CASE("weak pseudomanifold: ridge degree conditions") {
  CHECK(is_weak_pseudomanifold(C("abd abc acd bcd"), false));  // ∂Δ(abcd)
  CHECK(is_weak_pseudomanifold(C("abc"), true));
  CHECK(!is_weak_pseudomanifold(C("abc"), false));
  CHECK(!is_weak_pseudomanifold(C("abc abd abe"), false));  // edge ab in three
  CHECK_THROWS_AS(is_weak_pseudomanifold(C("abc cd"), true), std::invalid_argument);
}

TEST_CASE("pseudomanifold adds strong connectivity") {
  CHECK(is_pseudomanifold(C("ab ac bc")));
  CHECK(!is_pseudomanifold(C("abc def")));  // two disjoint triangles
  CHECK(!is_pseudomanifold(C("abc cde")));  // glued at one vertex only
}

TEST_CASE("non-homogeneous pseudomanifold predicate") {
  CHECK(is_nh_pseudomanifold(C("abc cd")).verdict == Verdict::Yes);
  CHECK(is_nh_pseudomanifold(standard(StandardKind::BoundarySphere, 2)).verdict ==
        Verdict::Yes);
  CHECK_THROWS_AS(is_nh_pseudomanifold(C("ab cd")), std::invalid_argument);  // disconnected
}

TEST_CASE("combinatorial manifold recognition") {
  CHECK(is_combinatorial_manifold(standard(StandardKind::BoundarySphere, 2)).verdict ==
        Verdict::Yes);
  CHECK(is_combinatorial_manifold(C("abc cd")).verdict == Verdict::No);
  CHECK(is_combinatorial_manifold(C("abcde")).verdict == Verdict::Yes);
  // Closed surfaces are manifolds even when they are not spheres.
  CHECK(is_combinatorial_manifold(reference("rp2_6").complex).verdict == Verdict::Yes);
}

TEST_CASE("ball and sphere certification") {
  BallSphereVerdict disk = classify_ball_sphere(C("abc"));
  CHECK(disk.ball.verdict == Verdict::Yes);
  CHECK(disk.sphere.verdict == Verdict::No);
  CHECK(!disk.ball.witness.empty());  // dim <= 2 is decided exactly, no search

  // In dimension >= 3 a ball verdict rides on a collapse certificate.
  BallSphereVerdict ball3 = classify_ball_sphere(shelled_ball(3, 5, 2).complex);
  CHECK(ball3.ball.verdict == Verdict::Yes);
  REQUIRE(ball3.collapse.has_value());
  CHECK(!ball3.collapse->steps.empty());

  BallSphereVerdict s3 = classify_ball_sphere(standard(StandardKind::BoundarySphere, 3));
  CHECK(s3.sphere.verdict == Verdict::Yes);
  CHECK(s3.ball.verdict == Verdict::No);

  BallSphereVerdict rp2 = classify_ball_sphere(reference("rp2_6").complex);
  CHECK(rp2.ball.verdict == Verdict::No);
  CHECK(rp2.sphere.verdict == Verdict::No);
}

TEST_CASE("NH-manifold recognition on the canonical small examples") {
  CHECK(is_nh_manifold(C("abc cd")).verdict == Verdict::Yes);
  CHECK(is_nh_manifold(C("ab ac ad")).verdict == Verdict::No);  // 3-point vertex link
  CHECK(is_nh_manifold(C("ab ac bc")).verdict == Verdict::Yes);
  CHECK(is_nh_manifold(C("a")).verdict == Verdict::Yes);
}

TEST_CASE("classification hits the most specific kind") {
  CHECK(classify_nh(C("abc")).kind == NhKind::CombinatorialBall);
  CHECK(classify_nh(standard(StandardKind::BoundarySphere, 2)).kind ==
        NhKind::CombinatorialSphere);
  CHECK(classify_nh(C("abc cd")).kind == NhKind::NhBall);
  CHECK(classify_nh(reference("rp2_6").complex).kind == NhKind::NhManifoldOnly);
  CHECK(classify_nh(C("ab ac ad")).kind == NhKind::NotNhManifold);
}

TEST_CASE("an edge with a stray point is an NH-sphere of homotopy dimension 0") {
  Classification c = classify_nh(C("ab t"));
  REQUIRE(c.kind == NhKind::NhSphere);
  REQUIRE(c.homotopy_dim.has_value());
  CHECK(*c.homotopy_dim == 0);
  REQUIRE(c.decomposition.has_value());
  CHECK(c.decomposition->k == 0);
}

TEST_CASE("the glued simplex sphere classifies with a verified decomposition") {
  // Δ(abct) ∪ s*∂Δ(abc): an NH-sphere of dimension 3 with homotopy dimension 2.
  SimplicialComplex s = C("abct sab sac sbc");
  Classification c = classify_nh(s);
  REQUIRE(c.kind == NhKind::NhSphere);
  CHECK(c.homotopy_dim == 2);
  REQUIRE(c.decomposition.has_value());

  const Decomposition& d = *c.decomposition;
  CHECK(union_complex(d.nh_ball, d.k_ball) == s);
  CHECK(top_generated(d.nh_ball, s));
  CHECK(top_generated(d.k_ball, s));
  CHECK(d.k_ball.dim() == d.k);
  CHECK(intersect_complex(d.nh_ball, d.k_ball) == mod2_boundary(d.k_ball));

  // Removing any vertex of L leaves an acyclic deletion.
  for (const Vertex& v : d.k_ball.vertex_set()) CHECK(is_acyclic(deletion(s, v)));
}

TEST_CASE("ball kinds carry replayable collapse certificates") {
  Classification c = classify_nh(C("abc cd"));
  REQUIRE(is_nh_ball_kind(c));
  REQUIRE(c.collapse.has_value());
  CHECK(!c.collapse->steps.empty());
}

TEST_CASE("kind helpers fold the combinatorial implications") {
  CHECK(is_nh_ball_kind(classify_nh(C("abc"))));
  CHECK(is_nh_sphere_kind(classify_nh(standard(StandardKind::BoundarySphere, 1))));
  CHECK(!is_nh_sphere_kind(classify_nh(C("abc"))));
}

TEST_CASE("boundary data splits simplices by link type") {
  BoundaryData edge = boundary_data(C("ab"));
  CHECK(edge.boundary == C("a b"));

  BoundaryData circle = boundary_data(C("ab ac bc"));
  CHECK(circle.boundary.is_void());
  CHECK(circle.pseudoboundary.empty());

  BoundaryData mixed = boundary_data(C("ab t"));
  // lk(t) = {∅} is the (-1)-sphere, so t is interior; a and b have point
  // links, landing in the pseudoboundary.
  CHECK(mixed.boundary == C("a b"));
  CHECK(mixed.pseudoboundary.size() == 2);
}

TEST_CASE("mod-2 boundary of homogeneous complexes") {
  CHECK(mod2_boundary(C("abc")) == C("ab ac bc"));
  CHECK(mod2_boundary(C("ab ac bc")).is_void());
  CHECK(mod2_boundary(C("a")) == SimplicialComplex::empty_complex());
  CHECK(mod2_boundary(C("abc abd")) == C("ac bc ad bd"));
  CHECK_THROWS_AS(mod2_boundary(C("abc cd")), std::invalid_argument);
}

TEST_CASE("homogeneous NH-manifolds are combinatorial manifolds") {
  for (const SimplicialComplex& k :
       {standard(StandardKind::BoundarySphere, 2), C("abc"), reference("rp2_6").complex}) {
    if (is_nh_manifold(k).verdict == Verdict::Yes && k.homogeneous())
      CHECK(is_combinatorial_manifold(k).verdict == Verdict::Yes);
  }
}
