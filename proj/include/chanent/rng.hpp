#pragma once

#include <cstdint>

#include "chanent/complex_matrix.hpp"

namespace chanent {

// Deterministic generator (splitmix64 core). All randomized procedures in the
// library draw from this so that identical seeds reproduce results bit for
// bit, independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; one draw per call, partner discarded.
  double normal();

  complexd cnormal() { return complexd(normal(), normal()); }

  // Independent stream derived from a base seed and a counter.
  static Rng derived(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

ComplexMatrix random_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// Haar-distributed column-orthonormal matrix, rows >= cols.
ComplexMatrix random_isometry(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

Vector random_unit_vector(Rng& rng, std::size_t dim);

}  // namespace chanent
