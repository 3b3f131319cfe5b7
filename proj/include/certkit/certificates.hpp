#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "certkit/reduction.hpp"

namespace certkit {

// A polynomial certificate: verify must accept some certificate of cert_len bits iff yes.
struct CertificateScheme {
  std::string name;
  ProblemKind kind = ProblemKind::SubsetSum;
  std::function<std::size_t(const ProblemInstance&)> cert_len;
  std::function<bool(const ProblemInstance&, const Witness&)> verify;
  std::function<Witness(const ProblemInstance&, const Solution&)> synthesize;
};

// Unbounded Subset Sum. Certificate: a count c in [0, P], then P slots of
// (index into the distinct usable values, multiplicity in [1, t]), P = floor(log2(t+1)).
// Indices strictly increase; unused slots are zero.
CertificateScheme cert_unbounded_ss();
std::size_t unbounded_ss_pairs(const BigInt& t);
// 2L^2 + L with L = ceil(log2(t+1)); cert_len never exceeds it.
std::size_t unbounded_ss_bit_bound(const BigInt& t);

// Group-Z_k^k Subset Sum. A solution of length < s = ceil(k^2 log2 k) (s = 1 for k = 1) is
// encoded either as s-1 index slots (1-based, 0 terminates) or as one rank over all element
// multisets of size < s, whichever is shorter for the instance.
CertificateScheme cert_zkk();
std::size_t zkk_s(std::uint32_t k);
double zkk_bit_bound(std::uint32_t k);  // k^3 log2(k)^2
enum class ZkkEncoding { Indices, Elements };
ZkkEncoding zkk_encoding(const GroupSubsetSumInstance& inst);

// Plain or modular Subset Sum with the n-bit subset indicator as certificate.
CertificateScheme cert_subset_indicator();

std::optional<CertificateScheme> find_scheme(const std::string& name);
std::vector<std::string> scheme_names();

// Shortest solution length via DP over the group (Z_k^k only); nullopt if unsolvable.
std::optional<std::size_t> zkk_min_solution_length(const GroupSubsetSumInstance& inst);
// Some nonempty subsequence of `seq` sums to zero in Z_k^k.
bool has_zero_sum_subsequence(const std::vector<GroupElement>& seq, std::uint32_t k);

struct BoundCheckReport {
  std::uint32_t k = 0;
  std::size_t s = 0;
  std::size_t instances = 0, solvable = 0, max_min_length = 0;
  std::vector<std::size_t> violating_instances;  // min solution length >= s
  std::uint64_t sequences_checked = 0;
  bool zero_sum_exhaustive = false;
  std::optional<std::vector<GroupElement>> zero_sum_counterexample;

  bool passed() const { return violating_instances.empty() && !zero_sum_counterexample; }
};

// Min solution lengths over `family` against s, plus the zero-sum claim on length-s sequences:
// exhaustive when |G|^s <= exhaustive_limit, else `samples` random sequences. k <= 3.
BoundCheckReport minimal_solution_bound_check(std::uint32_t k, const std::vector<GroupSubsetSumInstance>& family,
                                              std::uint64_t exhaustive_limit = 1 << 20,
                                              std::uint64_t samples = 2000, std::uint64_t seed = 1);

struct CertifiedBudget {
  std::size_t max_total_bits = 24;
};

// Decides `inst` by enumerating chain witnesses y1 and certificates y2 of the transformed
// instance; yes iff some pair verifies. ResourceError when the bits exceed the budget.
Verdict certified_solve(const ProblemInstance& inst, const Reduction& chain, const CertificateScheme& scheme,
                        const CertifiedBudget& budget = {});

}  // namespace certkit
