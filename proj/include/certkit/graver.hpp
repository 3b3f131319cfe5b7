#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace certkit {

enum class ValidationLevel { Exhaustive, Sampled };

// Vectors in {-1,0,1}^k summing to zero with no proper nonempty zero-sum subsequence.
struct GraverSequence {
  std::size_t k = 0;
  std::vector<std::vector<int>> vectors;
  ValidationLevel level = ValidationLevel::Exhaustive;
  bool from_fallback = false;
};

// Binary-counter increments bin(i+1) - bin(i) for i < 2^k - 1, then the all -1 vector.
// Validated before being returned; falls back to a bounded search, else ConstructionError.
GraverSequence graver_sequence(std::size_t k);

std::vector<std::vector<int>> binary_counter_candidate(std::size_t k);

// Entries in {-1,0,1}, uniform dimension k, total sum zero.
bool graver_basic_properties(const std::vector<std::vector<int>>& seq, std::size_t k);
// Exhaustive over all 2^n subsets (n <= 24): no proper nonempty subset sums to zero.
bool graver_minimal_exhaustive(const std::vector<std::vector<int>>& seq);
// Random subsets plus distinctness of prefix sums (which rules out zero-sum windows).
bool graver_minimal_sampled(const std::vector<std::vector<int>>& seq, std::size_t samples, std::uint64_t seed);

namespace detail {
// Validation-then-fallback pipeline on an arbitrary candidate; exposed to test the fallback.
GraverSequence validate_or_search(std::size_t k, std::vector<std::vector<int>> candidate,
                                  std::uint64_t node_budget);
}  // namespace detail

}  // namespace certkit
