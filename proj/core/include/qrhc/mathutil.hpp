#pragma once

#include <cstdint>
#include <vector>

namespace qrhc {

// x^k by binary exponentiation; the NICD paths on both the classical and the
// quantum side share this so their roundings agree
inline double pow_int(double x, std::uint64_t k) {
  double acc = 1.0, base = x;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// row m of Pascal's triangle as doubles (exact up to m = 15 and far beyond)
inline std::vector<double> binomial_row(int m) {
  std::vector<double> row(static_cast<std::size_t>(m) + 1, 1.0);
  for (int i = 1; i <= m; ++i) row[i] = row[i - 1] * (m - i + 1) / i;
  return row;
}

}  // namespace qrhc
