#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "certkit/permutation.hpp"

namespace certkit {

// ((x, y), z) in Z_q^2 ⋊ Z_2, where z = 1 swaps the coordinates of the right factor.
struct UqElement {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  std::uint64_t q = 2;

  bool operator==(const UqElement&) const = default;
};

UqElement uq_identity(std::uint64_t q);
// Throws std::invalid_argument on modulus mismatch.
UqElement uq_mul(const UqElement& a, const UqElement& b);
// Throws std::invalid_argument unless b in {-1,0,1} and q >= 2.
UqElement gamma(int b, std::uint64_t q);

struct RunCheck {
  UqElement product;
  bool is_run_form = false;        // product == ((0, n'), 0) with n' in [0, n]
  std::optional<std::uint64_t> n_prime;
};

// Product of gamma(b_1) ∘ ... ∘ gamma(b_n). Requires q > n.
RunCheck run_check_uq(const std::vector<int>& b, std::uint64_t q);

// Embedding of U_q into S_{2r} built from a carrier g ∈ S_r of order q.
// Point (i, j) of [r] × {0,1} is flattened to i + j·r.
class ChiEmbedding {
 public:
  explicit ChiEmbedding(Permutation carrier);

  std::uint64_t q() const { return q_; }
  std::size_t r() const { return carrier_.degree(); }
  std::size_t degree() const { return 2 * r(); }

  const Permutation& pi0() const { return pi0_; }  // g on [r]×{0}
  const Permutation& pi1() const { return pi1_; }  // g on [r]×{1}
  const Permutation& piz() const { return piz_; }  // (i, j) -> (i, 1-j)

  // chi((x,y),z) = pi1^x ∘ pi0^y ∘ piz^z, fixed by chi((0,1),0) = pi0, chi((1,0),0) = pi1,
  // chi((0,0),1) = piz. Throws on modulus mismatch.
  Permutation chi(const UqElement& e) const;
  Permutation gamma_hat(int b) const { return chi(gamma(b, q_)); }
  // The distinguished pi = chi((0,1),0) and its powers.
  const Permutation& distinguished() const { return pi0_; }
  Permutation power_of_distinguished(const BigInt& e) const { return pi0_.pow(e); }
  // The exponent n' in [0, max_exponent] with p == pi^{n'}, if any.
  std::optional<std::uint64_t> log_distinguished(const Permutation& p, std::uint64_t max_exponent) const;

 private:
  Permutation carrier_;
  std::uint64_t q_;
  Permutation pi0_, pi1_, piz_;
};

// Carrier of order > n from landau_permutation, wrapped as an embedding.
ChiEmbedding chi_context(std::uint64_t n);

}  // namespace certkit
