#include "chanent/rng.hpp"

#include <cmath>

#include "chanent/linalg.hpp"

namespace chanent {

double Rng::normal() {
  // Box-Muller; u clamped away from 0 so the log is finite.
  double u = uniform();
  if (u < 1e-300) u = 1e-300;
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
}

Rng Rng::derived(std::uint64_t seed, std::uint64_t stream) {
  Rng mix(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x3c6ef372fe94f82bULL));
  // Burn a few outputs so nearby streams decorrelate.
  mix.next_u64();
  mix.next_u64();
  return Rng(mix.next_u64());
}

ComplexMatrix random_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
  return m;
}

ComplexMatrix random_isometry(Rng& rng, std::size_t rows, std::size_t cols) {
  if (rows < cols) fail(ErrorCode::ShapeMismatch, "isometry needs rows >= cols");
  ComplexMatrix g = random_gaussian_matrix(rng, rows, cols);
  return gram_schmidt(g);
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) { return random_isometry(rng, n, n); }

Vector random_unit_vector(Rng& rng, std::size_t dim) {
  Vector v(dim);
  for (auto& z : v) z = rng.cnormal();
  return normalized(v);
}

}  // namespace chanent
