#include "nhtop/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace nhtop {

using boost::multiprecision::cpp_int;

IntMatrix IntMatrix::transposed() const {
  IntMatrix t = IntMatrix::zero(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<std::uint64_t> SmithForm::nontrivial() const {
  std::vector<std::uint64_t> out;
  for (auto d : divisors)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

struct BigMatrix {
  std::size_t rows, cols;
  std::vector<cpp_int> e;
  cpp_int& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
};

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& in) {
  BigMatrix m{in.rows, in.cols, {}};
  m.e.reserve(in.entries.size());
  for (auto v : in.entries) m.e.emplace_back(v);

  SmithForm out;
  const std::size_t bound = std::min(m.rows, m.cols);
  std::size_t k = 0;
  while (k < bound) {
    // Pick the nonzero entry of least magnitude in the trailing block.
    std::size_t pr = k, pc = k;
    cpp_int best = 0;
    for (std::size_t r = k; r < m.rows; ++r)
      for (std::size_t c = k; c < m.cols; ++c) {
        const cpp_int a = abs(m.at(r, c));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    if (best == 0) break;
    swap_rows(m, k, pr);
    swap_cols(m, k, pc);

    bool clean = true;
    for (std::size_t r = k + 1; r < m.rows && clean; ++r)
      if (m.at(r, k) != 0) clean = false;
    for (std::size_t c = k + 1; c < m.cols && clean; ++c)
      if (m.at(k, c) != 0) clean = false;

    if (!clean) {
      // Reduce the pivot row and column; a nonzero remainder becomes the new
      // (smaller) pivot on the next sweep, so this terminates.
      for (std::size_t r = k + 1; r < m.rows; ++r) {
        if (m.at(r, k) == 0) continue;
        const cpp_int q = m.at(r, k) / m.at(k, k);
        if (q != 0)
          for (std::size_t c = k; c < m.cols; ++c) m.at(r, c) -= q * m.at(k, c);
      }
      for (std::size_t c = k + 1; c < m.cols; ++c) {
        if (m.at(k, c) == 0) continue;
        const cpp_int q = m.at(k, c) / m.at(k, k);
        if (q != 0)
          for (std::size_t r = k; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, k);
      }
      continue;  // re-pick the pivot; magnitudes shrink monotonically
    }

    // Enforce the divisibility chain: fold any entry the pivot misses.
    bool folded = false;
    for (std::size_t r = k + 1; r < m.rows && !folded; ++r)
      for (std::size_t c = k + 1; c < m.cols && !folded; ++c)
        if (m.at(r, c) % m.at(k, k) != 0) {
          for (std::size_t cc = k; cc < m.cols; ++cc) m.at(k, cc) += m.at(r, cc);
          folded = true;
        }
    if (folded) continue;

    cpp_int d = abs(m.at(k, k));
    if (d > cpp_int(UINT64_MAX))
      throw std::overflow_error("smith_normal_form: invariant factor exceeds 64 bits");
    out.divisors.push_back(static_cast<std::uint64_t>(d));
    ++k;
  }
  return out;
}

std::size_t rank_gf2(const IntMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows,
                                               std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) & 1) rows[r][c / 64] ^= 1ull << (c % 64);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = 1ull << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r != rank && (rows[r][w] & bit))
        for (std::size_t i = 0; i < words; ++i) rows[r][i] ^= rows[rank][i];
    }
    ++rank;
  }
  return rank;
}

}  // namespace nhtop
