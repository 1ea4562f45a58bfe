#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nhtop/collapse.hpp"
#include "nhtop/complex.hpp"
#include "nhtop/generators.hpp"
#include "nhtop/homology.hpp"
#include "nhtop/recognition.hpp"

using namespace nhtop;

namespace {
SimplicialComplex C(std::string_view facets) { return SimplicialComplex::from_chars(facets); }
Simplex S(std::string_view chars) {
  std::vector<Vertex> vs;
  for (char c : chars) vs.emplace_back(std::string(1, c));
  return Simplex(vs);
}
}  // namespace

TEST_CASE("standard families and their degenerate low dimensions") {
  CHECK(standard(StandardKind::Simplex, -1) == SimplicialComplex::empty_complex());
  CHECK(standard(StandardKind::Simplex, 0).vertex_count() == 1);
  CHECK(standard(StandardKind::Simplex, 3).is_simplex_complex());
  CHECK(standard(StandardKind::BoundarySphere, -1) == SimplicialComplex::empty_complex());
  CHECK(standard(StandardKind::BoundarySphere, 0).vertex_count() == 2);
  for (int d = 0; d <= 4; ++d) {
    SimplicialComplex s = standard(StandardKind::BoundarySphere, d);
    CHECK(s.vertex_count() == static_cast<std::size_t>(d + 2));
    CHECK(s.dim() == d);
    CHECK(sphere_profile(s) == d);
  }
  CHECK_THROWS_AS(standard(StandardKind::Simplex, -2), std::invalid_argument);
}

TEST_CASE("shelled balls are certified by their construction") {
  for (Seed seed : {Seed{1}, Seed{7}, Seed{42}}) {
    ShelledBall b = shelled_ball(2, 6, seed);
    CHECK(b.complex.dim() == 2);
    CHECK(b.complex.homogeneous());
    CHECK(b.shelling.size() == 6);
    CHECK(b.complex.facets().size() == 6);
    CHECK(is_acyclic(b.complex));
    CHECK(is_collapsible(b.complex).verdict == Verdict::Yes);
    CHECK(is_combinatorial_manifold(b.complex).verdict == Verdict::Yes);

    // The attachment order is a shelling: each facet meets the part already
    // built in a nonempty proper subcomplex generated by its own ridges.
    for (std::size_t i = 1; i < b.shelling.size(); ++i) {
      SimplicialComplex prior(
          std::vector<Simplex>(b.shelling.begin(), b.shelling.begin() + i));
      SimplicialComplex meet = intersect_complex(full_simplex(b.shelling[i]), prior);
      REQUIRE(!meet.is_void());
      REQUIRE(meet.dim() == b.complex.dim() - 1);
      for (const Simplex& f : meet.facets())
        REQUIRE(std::ranges::count(b.shelling[i].immediate_faces(), f) == 1);
      REQUIRE(meet.facets().size() < b.shelling[i].immediate_faces().size());
    }
  }
  CHECK(shelled_ball(0, 1, 3).complex.vertex_count() == 1);
  CHECK_THROWS_AS(shelled_ball(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(shelled_ball(2, 0, 3), std::invalid_argument);
}

TEST_CASE("generation is a pure function of the seed") {
  CHECK(shelled_ball(3, 8, 11).complex == shelled_ball(3, 8, 11).complex);
  CHECK(shelled_ball(2, 7, 1).complex != shelled_ball(2, 7, 4).complex);
  DoubleDualSample a = nh_double_dual(SampleKind::Sphere, 1, 0, 0, 9);
  DoubleDualSample b = nh_double_dual(SampleKind::Sphere, 1, 0, 0, 9);
  CHECK(a.complex == b.complex);
  CHECK(a.tau == b.tau);
}

TEST_CASE("stellar subdivision preserves the homeomorphism-grade invariants") {
  SimplicialComplex s2 = standard(StandardKind::BoundarySphere, 2);
  Simplex edge = s2.faces(1).front();
  SimplicialComplex sub = stellar_subdivide(s2, edge);
  CHECK(sub.vertex_count() == s2.vertex_count() + 1);
  CHECK(!sub.has_face(edge));
  CHECK(sphere_profile(sub) == 2);
  CHECK(is_combinatorial_manifold(sub).verdict == Verdict::Yes);
  CHECK_THROWS_AS(stellar_subdivide(s2, Simplex{}), std::invalid_argument);
  CHECK_THROWS_AS(stellar_subdivide(s2, S("xy")), std::invalid_argument);
}

TEST_CASE("gluing into a simplex boundary raises the dimension by one") {
  SimplicialComplex s1 = C("ab ac bc");
  SimplicialComplex glued = simplex_glue(s1, S("t"), GroundSet(s1.vertex_set()));
  CHECK(glued == C("abc tab tac tbc"));
  CHECK(sphere_profile(glued) == 2);

  // A 2-simplex η contributes ∂η * Δ(V) and η * K.
  SimplicialComplex glued2 = simplex_glue(s1, S("tu"), GroundSet(s1.vertex_set()));
  CHECK(glued2.dim() == 3);
  CHECK(sphere_profile(glued2) == 3);

  CHECK_THROWS_AS(simplex_glue(s1, Simplex{}, GroundSet(s1.vertex_set())),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplex_glue(s1, S("a"), GroundSet(s1.vertex_set())),
                  std::invalid_argument);
}

TEST_CASE("double-dual samples land in the advertised class") {
  DoubleDualSample ball = nh_double_dual(SampleKind::Ball, 2, 1, 0, 17);
  CHECK(is_acyclic(ball.complex));
  CHECK(ball.tau.size() == 2);
  CHECK(ball.sigma.size() == 1);

  DoubleDualSample sphere = nh_double_dual(SampleKind::Sphere, 1, 0, 1, 23);
  CHECK(sphere_profile(sphere.complex).has_value());

  CHECK_THROWS_AS(nh_double_dual(SampleKind::Ball, 0, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(nh_double_dual(SampleKind::Sphere, 1, -1, 0, 1), std::invalid_argument);
}

TEST_CASE("reference registry") {
  std::vector<std::string> names = reference_names();
  for (const char* expected : {"rp2_6", "moebius_5", "dunce_hat_8"})
    CHECK(std::ranges::find(names, expected) != names.end());

  ComplexDocument rp2 = reference("rp2_6");
  CHECK(rp2.complex.vertex_count() == 6);
  CHECK(rp2.complex.facets().size() == 10);
  CHECK(rp2.name == "rp2_6");

  CHECK(reference("dunce_hat_8").complex.vertex_count() == 8);
  CHECK(reference("moebius_5").complex.vertex_count() == 5);
  CHECK(reference("boundary_sphere_4").complex ==
        standard(StandardKind::BoundarySphere, 4));
  CHECK_THROWS_AS(reference("no_such_complex"), std::invalid_argument);
}
