#pragma once

#include <cstdint>
#include <vector>

namespace nhtop {

// Dense integer matrix in row-major order for exact linear algebra. Entries
// are arbitrary-precision internally; the public surface uses long long
// because chain boundary matrices only ever hold -1/0/1.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long long> entries;  // rows*cols, row-major

  long long& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  long long at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix{rows, cols, std::vector<long long>(rows * cols, 0)};
  }
  IntMatrix transposed() const;
};

struct SmithForm {
  // Nonzero diagonal invariant factors d1 | d2 | ... | dr, all positive.
  std::vector<std::uint64_t> divisors;
  std::size_t rank() const { return divisors.size(); }
  // Invariant factors > 1 (the torsion coefficients of the cokernel).
  std::vector<std::uint64_t> nontrivial() const;
};

// Exact Smith normal form (diagonal only; transforms are not tracked).
// Throws if an invariant factor exceeds 64 bits, which desk-scale boundary
// matrices never do.
SmithForm smith_normal_form(const IntMatrix& m);

// Rank over GF(2).
std::size_t rank_gf2(const IntMatrix& m);

}  // namespace nhtop
