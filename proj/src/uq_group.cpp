#include "certkit/uq_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace certkit {

UqElement uq_identity(std::uint64_t q) { return {0, 0, 0, q}; }

UqElement uq_mul(const UqElement& a, const UqElement& b) {
  if (a.q != b.q) throw std::invalid_argument("uq_mul: modulus mismatch");
  const std::uint64_t q = a.q;
  if (a.z == 0) return {(a.x + b.x) % q, (a.y + b.y) % q, (a.z + b.z) % 2, q};
  return {(a.x + b.y) % q, (a.y + b.x) % q, (a.z + b.z) % 2, q};
}

UqElement gamma(int b, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("gamma: q must be at least 2");
  switch (b) {
    case -1: return {1, 0, 1, q};
    case 0: return {0, 0, 0, q};
    case 1: return {0, 1, 1, q};
    default: throw std::invalid_argument("gamma: argument outside {-1,0,1}");
  }
}

RunCheck run_check_uq(const std::vector<int>& b, std::uint64_t q) {
  if (q <= b.size()) throw std::invalid_argument("run_check_uq: requires q > n");
  RunCheck rc;
  rc.product = uq_identity(q);
  for (int v : b) rc.product = uq_mul(rc.product, gamma(v, q));
  if (rc.product.x == 0 && rc.product.z == 0 && rc.product.y <= b.size()) {
    rc.is_run_form = true;
    rc.n_prime = rc.product.y;
  }
  return rc;
}

ChiEmbedding::ChiEmbedding(Permutation carrier) : carrier_(std::move(carrier)) {
  const BigInt order = carrier_.order();
  auto q = to_u64(order);
  if (!q) throw std::invalid_argument("ChiEmbedding: carrier order too large");
  q_ = *q;
  const auto r = static_cast<std::uint32_t>(carrier_.degree());
  std::vector<std::uint32_t> p0(2 * r), p1(2 * r), pz(2 * r);
  for (std::uint32_t i = 0; i < r; ++i) {
    p0[i] = carrier_(i);
    p0[i + r] = i + r;
    p1[i] = i;
    p1[i + r] = carrier_(i) + r;
    pz[i] = i + r;
    pz[i + r] = i;
  }
  pi0_ = Permutation(std::move(p0));
  pi1_ = Permutation(std::move(p1));
  piz_ = Permutation(std::move(pz));
}

Permutation ChiEmbedding::chi(const UqElement& e) const {
  if (e.q != q_) throw std::invalid_argument("chi: element modulus differs from carrier order");
  Permutation p = compose(pi1_.pow(e.x), pi0_.pow(e.y));
  if (e.z % 2 == 1) p = compose(p, piz_);
  return p;
}

std::optional<std::uint64_t> ChiEmbedding::log_distinguished(const Permutation& p,
                                                             std::uint64_t max_exponent) const {
  Permutation acc = Permutation::identity(degree());
  for (std::uint64_t e = 0; e <= max_exponent; ++e) {
    if (acc == p) return e;
    acc = compose(acc, pi0_);
  }
  return std::nullopt;
}

ChiEmbedding chi_context(std::uint64_t n) {
  return ChiEmbedding(landau_permutation(BigInt(std::max<std::uint64_t>(n, 1))).perm);
}

}  // namespace certkit
