#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nhtop/complex.hpp"
#include "nhtop/generators.hpp"

namespace nhtop {

struct CaseFailure {
  std::size_t index = 0;
  std::string fingerprint;  // replayable description of the sampled inputs
  std::string expected;
  std::string observed;
};

// One line per case; unknowns carry the budget note. Failures and unknowns
// are mutually exclusive, and passes + failures + unknowns = cases_run.
struct CaseRecord {
  std::size_t index = 0;
  std::string tag;  // sub-family of the case (e.g. "shelled", "glue")
  bool pass = false;
  bool unknown = false;
  std::string note;
};

struct SuiteReport {
  std::string suite_id;
  Seed seed = 0;
  std::size_t cases_run = 0;
  std::size_t passes = 0;
  std::vector<CaseFailure> failures;
  std::size_t unknowns = 0;
  double elapsed_seconds = 0.0;
  std::vector<CaseRecord> cases;

  bool all_passed() const { return failures.empty() && unknowns == 0; }
  std::string summary() const;
};

std::vector<std::string> suite_names();

// Runs a registered identity/theorem suite, deterministic under
// (suite_id, seed, count). For the sampled suites `count` is the number of
// cases; for the exhaustive ones (vertex_count, d_plus_2, homogeneous_top)
// it is the vertex cap fed to enumerate_small. Unknown ids throw.
SuiteReport run_suite(const std::string& suite_id, Seed seed, std::size_t count);

// All isomorphism classes of nonvoid complexes on at most max_vertices
// vertices, deduplicated by canonical relabeling; sizes 2, 4, 9, 29, 209,
// 16352 for caps 1..6. Caps above 6 throw (the next count is half a billion).
std::vector<SimplicialComplex> enumerate_small(int max_vertices);

}  // namespace nhtop
