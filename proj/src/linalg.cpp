#include "superlab/linalg.hpp"

#include <utility>

namespace superlab {

std::size_t rank(const RationalField&, Matrix<RationalField> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (const auto& q : m[i]) den = lcm(den, mpz_class(q.get_den()));
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = mpz_class(m[i][j].get_num()) * (den / m[i][j].get_den());
  }
  // Bareiss: after step k every entry of the trailing block is an integer
  // minor, divisible by the previous pivot.
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const PrimeField& k, Matrix<PrimeField> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const auto inv = k.inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const auto factor = k.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = k.sub(a[i][j], k.mul(factor, a[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace superlab
