#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "nhtop/alexander.hpp"
#include "nhtop/complex.hpp"

using namespace nhtop;

namespace {

SimplicialComplex C(std::string_view facets) { return SimplicialComplex::from_chars(facets); }
Simplex S(std::string_view chars) {
  std::vector<Vertex> vs;
  for (char c : chars) vs.emplace_back(std::string(1, c));
  return Simplex(vs);
}

// Definitional dual: every σ ⊆ V whose complement is not a face of K.
SimplicialComplex brute_dual(const SimplicialComplex& k, const GroundSet& ground) {
  const std::vector<Vertex>& v = ground.vertices();
  std::vector<Simplex> gens;
  for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
    std::vector<Vertex> in, out;
    for (std::size_t i = 0; i < v.size(); ++i) ((mask >> i) & 1u ? in : out).push_back(v[i]);
    if (!k.has_face(Simplex(out))) gens.emplace_back(in);
  }
  return SimplicialComplex(gens);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_verts) {
  int n = 1 + static_cast<int>(rng() % max_verts);
  std::vector<Vertex> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(std::string(1, static_cast<char>('a' + i)));
  int nf = 1 + static_cast<int>(rng() % (2 * n));
  std::vector<Simplex> gens;
  for (int f = 0; f < nf; ++f) {
    int size = 1 + static_cast<int>(rng() % n);
    std::vector<Vertex> picked;
    for (const Vertex& v : pool)
      if (static_cast<int>(rng() % n) < size) picked.push_back(v);
    if (picked.empty()) picked.push_back(pool[rng() % pool.size()]);
    gens.emplace_back(picked);
  }
  return SimplicialComplex(gens);
}

}  // namespace

TEST_CASE("degenerate duals follow the fixed conventions") {
  // Δ(V) dualized over V is void; ∂Δ(V) dualized over V is {∅}.
  CHECK(dual(C("abc")).is_void());
  CHECK(dual(C("ab ac bc")) == SimplicialComplex::empty_complex());
  CHECK(dual(SimplicialComplex::empty_complex()).is_void());
  GroundSet v(C("abc").vertex_set());
  CHECK(dual_over(SimplicialComplex::void_complex(), v) == C("abc"));
  CHECK(dual_over(SimplicialComplex::empty_complex(), v) == C("ab ac bc"));
}

TEST_CASE("complement within a ground set") {
  GroundSet v(C("abcd").vertex_set());
  CHECK(complement(S("ab"), v) == S("cd"));
  CHECK(complement(Simplex{}, v) == S("abcd"));
  CHECK(complement(S("abcd"), v) == Simplex{});
  CHECK_THROWS_AS(complement(S("x"), v), std::invalid_argument);
}

TEST_CASE("dual_over matches the subset-by-subset definition") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    SimplicialComplex k = random_complex(rng, 5);
    std::vector<Vertex> g = k.vertex_set();
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra)
      g = merge_vertex_sets(g, {Vertex{std::string(1, static_cast<char>('u' + extra))}});
    GroundSet ground(g);
    CAPTURE(k.to_string());
    REQUIRE(dual_over(k, ground) == brute_dual(k, ground));
  }
}

TEST_CASE("dualizing twice over a fixed ground set is the identity") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    SimplicialComplex k = random_complex(rng, 5);
    GroundSet ground(merge_vertex_sets(k.vertex_set(), {Vertex{"z"}}));
    REQUIRE(dual_over(dual_over(k, ground), ground) == k);
  }
  GroundSet v(C("ab").vertex_set());
  CHECK(dual_over(dual_over(SimplicialComplex::void_complex(), v), v).is_void());
  CHECK(dual_over(dual_over(SimplicialComplex::empty_complex(), v), v) ==
        SimplicialComplex::empty_complex());
}

TEST_CASE("relative dual agrees with the join/union construction") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    SimplicialComplex k = random_complex(rng, 5);
    int td = static_cast<int>(rng() % 3);
    std::vector<Vertex> tv = fresh_vertices(k.vertex_set(), td + 1);
    Simplex tau(tv);
    REQUIRE(relative_dual(k, tau) == relative_dual_direct(k, tau));
  }
}

TEST_CASE("relative dual with empty tau is the plain dual") {
  SimplicialComplex k = C("ab bc cd");
  CHECK(relative_dual(k, Simplex{}) == dual(k));
}

TEST_CASE("relative dual rejects tau meeting the complex") {
  CHECK_THROWS_AS(relative_dual(C("ab"), S("a")), std::invalid_argument);
  CHECK_THROWS_AS(relative_dual(SimplicialComplex::void_complex(), S("t")),
                  std::invalid_argument);
}

TEST_CASE("dual of the path on three vertices, then of the result") {
  // {ab, bc}: the sole minimal non-face is {a,c}, so the dual is the point b,
  // and the double dual over the shrunken ground set collapses to void.
  SimplicialComplex path = C("ab bc");
  CHECK(dual(path) == C("b"));
  CHECK(double_dual(path, Simplex{}, Simplex{}).is_void());
}

TEST_CASE("double dual over fresh tau and sigma") {
  SimplicialComplex s = C("ab ac bc");
  SimplicialComplex dd = double_dual(s, S("t"), S("s"));
  // ∂Δ(abc) with τ = {t}: K^τ = ∂t*Δ(abc) ∪ t*{∅} = Δ(abct)'s boundary piece;
  // the second dual glues the cone s*∂Δ(abc) alongside Δ(abct).
  CHECK(dd == C("abct sab sac sbc"));
  CHECK_THROWS_AS(double_dual(s, S("t"), S("t")), std::invalid_argument);
}

TEST_CASE("dual ground sets beyond the mask width are rejected") {
  std::vector<Vertex> big;
  for (int i = 0; i < 30; ++i) big.emplace_back("g" + std::to_string(i));
  CHECK_THROWS_AS(dual_over(SimplicialComplex::void_complex(), GroundSet(big)),
                  std::invalid_argument);
}
