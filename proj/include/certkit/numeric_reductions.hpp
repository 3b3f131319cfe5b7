#pragma once

#include <cstddef>
#include <vector>

#include "certkit/reduction.hpp"

namespace certkit {

// Sum of digits[i] * W^i; throws std::out_of_range unless every digit lies in [0, W).
BigInt encode_base_w(const std::vector<BigInt>& digits, const BigInt& W);
// Inverse of encode_base_w; throws std::out_of_range unless 0 <= value < W^n.
std::vector<BigInt> decode_base_w(const BigInt& value, const BigInt& W, std::size_t n);

// Instances with more than 2^((k+1)^2) items are decided outright by the oracle
// (log n is then no longer polynomially bounded by the parameter k).
bool size_guard_fires(std::size_t n, const BigInt& k);

Reduction ss_to_knapsack();       // PPT: items (p,p), capacity = demand = t
Reduction knapsack_to_ss();       // NPPT: guess (t', w'), items p*W + w with W = w*n + 1
Reduction ss_to_monotone();       // NPPT: guess column sums b, columns bin(p)
Reduction monotone_to_ss();       // PPT: base-(n+1) encoding
Reduction monotone_to_zerosum();  // PPT: append (-b_i, v_i) with v a Graver sequence
Reduction zerosum_to_ilp();       // NPPT: guess i with x_i = 1, output A^{-i} y = -A^i
Reduction ilp_to_monotone();      // NPPT: guess b+ and b-, stack A+ over A-
Reduction ss_to_zq();             // PPT: q = max(n,2) * t
Reduction zq_to_ss();             // NPPT: guess the integer sum t' in [0, n*q]

// Witness builders for explicit guesses (throw std::out_of_range on an out-of-range guess,
// std::logic_error when normalization already decided the instance).
Witness knapsack_to_ss_witness(const KnapsackInstance& inst, const BigInt& t1, const BigInt& w1);
Witness ss_to_monotone_witness(const SubsetSumInstance& inst, const std::vector<BigInt>& b);
Witness zerosum_to_ilp_witness(const IlpInstance& inst, std::size_t i);  // 1-based
Witness ilp_to_monotone_witness(const IlpInstance& inst, const std::vector<std::int64_t>& b_plus,
                                const std::vector<std::int64_t>& b_minus);
Witness zq_to_ss_witness(const SubsetSumInstance& inst, const BigInt& t1);

}  // namespace certkit
