#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nhtop/alexander.hpp"
#include "nhtop/complex.hpp"
#include "nhtop/generators.hpp"
#include "nhtop/homology.hpp"

using namespace nhtop;

namespace {

SimplicialComplex C(std::string_view facets) { return SimplicialComplex::from_chars(facets); }

SimplicialComplex random_complex(std::mt19937_64& rng, int max_verts) {
  int n = 1 + static_cast<int>(rng() % max_verts);
  std::vector<Vertex> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(std::string(1, static_cast<char>('a' + i)));
  int nf = 1 + static_cast<int>(rng() % (2 * n));
  std::vector<Simplex> gens;
  for (int f = 0; f < nf; ++f) {
    std::vector<Vertex> picked;
    for (const Vertex& v : pool)
      if (rng() % 2) picked.push_back(v);
    if (picked.empty()) picked.push_back(pool[rng() % pool.size()]);
    gens.emplace_back(picked);
  }
  return SimplicialComplex(gens);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  REQUIRE(a.cols == b.rows);
  IntMatrix out = IntMatrix::zero(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

}  // namespace

TEST_CASE("boundary spheres have exactly one free reduced class") {
  for (int d = -1; d <= 4; ++d) {
    SimplicialComplex s = standard(StandardKind::BoundarySphere, d);
    CAPTURE(d);
    REQUIRE(sphere_profile(s) == d);
    BettiProfile p = betti(s);
    CHECK(p.mod2_at(d) == 1);
    CHECK(p.integral_at(d) == IntegralGroup{1, {}});
  }
  CHECK(!sphere_profile(reference("rp2_6").complex).has_value());
  CHECK(sphere_profile(SimplicialComplex::void_complex()) == std::nullopt);
}

TEST_CASE("simplices are acyclic, the void complex vacuously so") {
  for (int d = 0; d <= 4; ++d) CHECK(is_acyclic(standard(StandardKind::Simplex, d)));
  CHECK(is_acyclic(SimplicialComplex::void_complex()));
  CHECK(!is_acyclic(SimplicialComplex::empty_complex()));  // the (-1)-sphere
  CHECK(betti(SimplicialComplex::empty_complex()).mod2_at(-1) == 1);
}

TEST_CASE("projective plane: 2-torsion in homology, shifted in cohomology") {
  SimplicialComplex rp2 = reference("rp2_6").complex;
  BettiProfile p = betti(rp2);
  CHECK(p.integral_at(0) == IntegralGroup{0, {}});
  CHECK(p.integral_at(1) == IntegralGroup{0, {2}});
  CHECK(p.integral_at(2) == IntegralGroup{0, {}});
  CHECK(p.mod2_at(1) == 1);
  CHECK(p.mod2_at(2) == 1);
  CHECK(reduced_euler_characteristic(rp2) == 0);

  std::vector<IntegralGroup> coh = cohomology(rp2);
  CHECK(cohomology_at(coh, 1) == IntegralGroup{0, {}});
  CHECK(cohomology_at(coh, 2) == IntegralGroup{0, {2}});
}

TEST_CASE("moebius band and dunce hat reference values") {
  BettiProfile m = betti(reference("moebius_5").complex);
  CHECK(m.integral_at(1) == IntegralGroup{1, {}});
  CHECK(m.integral_at(0).trivial());
  CHECK(is_acyclic(reference("dunce_hat_8").complex));
}

TEST_CASE("composing consecutive boundary maps gives zero") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    SimplicialComplex k = random_complex(rng, 5);
    std::vector<BoundaryMatrix> maps = boundary_matrices(k);
    for (std::size_t q = 1; q < maps.size(); ++q) {
      IntMatrix prod = multiply(maps[q - 1].matrix, maps[q].matrix);
      for (long long e : prod.entries) REQUIRE(e == 0);
    }
  }
}

TEST_CASE("Euler characteristic equals both alternating Betti sums") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    SimplicialComplex k = random_complex(rng, 6);
    BettiProfile p = betti(k);
    long long mod2_sum = 0, rank_sum = 0;
    int top = k.dim_opt().value_or(-1);
    for (int q = -1; q <= top; ++q) {
      long long sign = (q % 2 == 0) ? 1 : -1;  // (-1)^q; q = -1 contributes -1
      mod2_sum += sign * p.mod2_at(q);
      rank_sum += sign * p.integral_at(q).rank;
    }
    CAPTURE(k.to_string());
    REQUIRE(reduced_euler_characteristic(k) == rank_sum);
    REQUIRE(reduced_euler_characteristic(k) == mod2_sum);
  }
}

TEST_CASE("suspension shifts reduced homology up by one") {
  SimplicialComplex rp2 = reference("rp2_6").complex;
  BettiProfile s = betti(suspension(rp2, 1));
  CHECK(s.integral_at(2) == IntegralGroup{0, {2}});
  CHECK(s.integral_at(1).trivial());
  CHECK(s.mod2_at(2) == 1);
  CHECK(s.mod2_at(3) == 1);
}

TEST_CASE("homology/cohomology duality across the Alexander dual") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    SimplicialComplex k = random_complex(rng, 5);
    GroundSet ground(merge_vertex_sets(k.vertex_set(), {Vertex{"y"}, Vertex{"z"}}));
    SimplicialComplex d = dual_over(k, ground);
    int n = static_cast<int>(ground.size());
    BettiProfile pk = betti(k);
    std::vector<IntegralGroup> cd = cohomology(d);
    for (int q = -1; q <= n; ++q) {
      CAPTURE(k.to_string());
      CAPTURE(q);
      REQUIRE(pk.integral_at(q) == cohomology_at(cd, n - q - 3));
    }
  }
}

TEST_CASE("full 2-skeleton detection") {
  CHECK(contains_full_2_skeleton(C("abcd"), GroundSet(C("abcd").vertex_set())));
  CHECK(!contains_full_2_skeleton(C("ab ac bc"), GroundSet(C("abc").vertex_set())));
  SimplicialComplex s3 = standard(StandardKind::BoundarySphere, 3);
  CHECK(contains_full_2_skeleton(s3, GroundSet(s3.vertex_set())));
}

TEST_CASE("relative homology of a pair") {
  SimplicialComplex disk = C("abc");
  CHECK(relative_acyclic(disk, disk));
  CHECK(!relative_acyclic(disk, boundary_complex(Simplex(disk.vertex_set()))));
  // Cone modulo its apex point carries no reduced homology.
  SimplicialComplex cone = C("tab tac tbc");
  CHECK(relative_acyclic(cone, C("t")));
}

TEST_CASE("profiles trim trailing trivial groups") {
  BettiProfile p = betti(C("abc"));
  CHECK(p.mod2.empty());
  CHECK(p.integral.empty());
  CHECK(p.all_zero());
  CHECK(betti(SimplicialComplex::void_complex()).all_zero());
}
