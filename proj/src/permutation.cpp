#include "certkit/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

namespace certkit {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0U);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::size_t>& lengths, std::size_t degree) {
  const std::size_t used = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (used > degree) throw std::invalid_argument("from_cycles: cycles exceed degree");
  Permutation p = identity(degree);
  std::size_t start = 0;
  for (std::size_t len : lengths) {
    for (std::size_t i = 0; i < len; ++i)
      p.images_[start + i] = static_cast<std::uint32_t>(start + (i + 1) % len);
    start += len;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::uint32_t v = 0; v < images_.size(); ++v) p.images_[images_[v]] = v;
  return p;
}

Permutation Permutation::pow(const BigInt& exponent) const {
  // Walk each cycle by (exponent mod cycle length).
  Permutation p = identity(degree());
  std::vector<bool> seen(degree(), false);
  std::vector<std::uint32_t> cycle;
  for (std::uint32_t s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    cycle.clear();
    for (std::uint32_t v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    const BigInt len = cycle.size();
    BigInt e = exponent % len;
    if (e < 0) e += len;
    const auto shift = static_cast<std::size_t>(e);
    for (std::size_t i = 0; i < cycle.size(); ++i) p.images_[cycle[i]] = cycle[(i + shift) % cycle.size()];
  }
  return p;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::uint32_t v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt Permutation::order() const {
  BigInt acc = 1;
  for (std::size_t len : cycle_type()) {
    const BigInt l = len;
    acc = acc / boost::integer::gcd(acc, l) * l;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::uint32_t v = 0; v < degree(); ++v)
    if (images_[v] != v) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint32_t> img(a.degree());
  for (std::uint32_t v = 0; v < img.size(); ++v) img[v] = a(b(v));
  return Permutation(std::move(img));
}

Permutation block_diagonal(const std::vector<Permutation>& blocks) {
  std::vector<std::uint32_t> img;
  std::uint32_t offset = 0;
  for (const auto& b : blocks) {
    for (std::uint32_t v = 0; v < b.degree(); ++v) img.push_back(offset + b(v));
    offset += static_cast<std::uint32_t>(b.degree());
  }
  return Permutation(std::move(img));
}

namespace {

std::vector<std::size_t> primes_upto(std::size_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::size_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return out;
}

// Distinct-prime powers of total size <= r maximizing the product; exact knapsack over primes.
std::vector<std::size_t> best_prime_powers(std::size_t r, BigInt& product) {
  const auto primes = primes_upto(r);
  std::vector<BigInt> best(r + 1, 1);
  // choice[i][s]: power of primes[i] used at budget s (0 = none)
  std::vector<std::vector<std::size_t>> choice(primes.size(), std::vector<std::size_t>(r + 1, 0));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::vector<BigInt> next = best;
    for (std::size_t s = 0; s <= r; ++s) {
      for (std::size_t pw = primes[i]; pw <= s; pw *= primes[i]) {
        const BigInt cand = best[s - pw] * pw;
        if (cand > next[s]) {
          next[s] = cand;
          choice[i][s] = pw;
        }
      }
    }
    best.swap(next);
  }
  product = best[r];
  std::vector<std::size_t> lengths;
  std::size_t s = r;
  for (std::size_t i = primes.size(); i-- > 0;) {
    if (choice[i][s] != 0) {
      lengths.push_back(choice[i][s]);
      s -= choice[i][s];
    }
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

LandauResult finish(std::vector<std::size_t> lengths, std::size_t degree) {
  LandauResult res;
  res.degree = degree;
  res.perm = Permutation::from_cycles(lengths, res.degree);
  res.cycle_lengths = std::move(lengths);
  res.order = res.perm.order();
  return res;
}

}  // namespace

LandauResult landau_permutation(const BigInt& n, LandauRecipe recipe) {
  if (n < 1) throw std::invalid_argument("landau_permutation: n must be at least 1");
  if (recipe == LandauRecipe::PrimesBelowSqrt) {
    // Cycles of every prime below sqrt(r); grow r until their product exceeds n.
    for (std::size_t r = 1;; ++r) {
      std::vector<std::size_t> lengths;
      BigInt prod = 1;
      for (std::size_t p : primes_upto(r)) {
        if (p * p >= r) break;
        lengths.push_back(p);
        prod *= p;
      }
      if (prod > n) return finish(std::move(lengths), r);
    }
  }
  for (std::size_t r = 2;; ++r) {
    BigInt product;
    auto lengths = best_prime_powers(r, product);
    if (product > n) return finish(std::move(lengths), r);
  }
}

double landau_degree_bound(const BigInt& n) {
  const double l = std::log2(static_cast<double>(n + 2));
  return kLandauDegreeConstant * l * l * l;
}

}  // namespace certkit
