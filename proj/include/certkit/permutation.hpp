#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "certkit/bigint.hpp"

namespace certkit {

// A bijection on {0, ..., degree-1}, stored in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  // Consecutive cycles (0 1 ... c1-1)(c1 ... c1+c2-1)..., padded with fixed points up to `degree`.
  static Permutation from_cycles(const std::vector<std::size_t>& lengths, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t v) const { return images_[v]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation inverse() const;
  Permutation pow(const BigInt& exponent) const;  // negative exponents allowed
  BigInt order() const;                            // lcm of cycle lengths
  std::vector<std::size_t> cycle_type() const;     // sorted ascending, fixed points included
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

// (a ∘ b)(v) = a(b(v)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

// Disjoint union: blocks[i] acts on its own consecutive range of points.
Permutation block_diagonal(const std::vector<Permutation>& blocks);

enum class LandauRecipe {
  MinimalDegree,    // smallest degree reaching order > n (exact search over prime powers)
  PrimesBelowSqrt,  // all primes below sqrt(r), growing r until the order exceeds n
};

struct LandauResult {
  Permutation perm;
  std::vector<std::size_t> cycle_lengths;
  BigInt order;
  std::size_t degree = 0;
};

// A permutation of order > n (n >= 1).
LandauResult landau_permutation(const BigInt& n, LandauRecipe recipe = LandauRecipe::MinimalDegree);

// Degree budget C * log2(n+2)^3 asserted for every construction.
constexpr double kLandauDegreeConstant = 1.0;
double landau_degree_bound(const BigInt& n);

}  // namespace certkit
