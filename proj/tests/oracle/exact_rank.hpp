#pragma once

#include <gmpxx.h>

#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Fraction-free Gaussian elimination (Bareiss); every intermediate stays integral.
inline size_t exact_rank(IntMatrix a) {
  const size_t rows = a.size();
  if (rows == 0) return 0;
  const size_t cols = a[0].size();
  size_t rank = 0;
  mpz_class prev = 1;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace oracle
