#include "certkit/numeric_reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "certkit/graver.hpp"

namespace certkit {

BigInt encode_base_w(const std::vector<BigInt>& digits, const BigInt& W) {
  if (W < 1) throw std::out_of_range("encode_base_w: base must be positive");
  BigInt value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= W) throw std::out_of_range("encode_base_w: digit outside [0, W)");
    value = value * W + *it;
  }
  return value;
}

std::vector<BigInt> decode_base_w(const BigInt& value, const BigInt& W, std::size_t n) {
  if (W < 1) throw std::out_of_range("decode_base_w: base must be positive");
  if (value < 0) throw std::out_of_range("decode_base_w: negative value");
  std::vector<BigInt> digits(n);
  BigInt rest = value;
  if (W == 1) {
    if (rest != 0) throw std::out_of_range("decode_base_w: value too large");
    return digits;
  }
  for (std::size_t i = 0; i < n; ++i) {
    digits[i] = rest % W;
    rest /= W;
  }
  if (rest != 0) throw std::out_of_range("decode_base_w: value too large");
  return digits;
}

bool size_guard_fires(std::size_t n, const BigInt& k) {
  const BigInt e = (k + 1) * (k + 1);
  if (e >= 64) return false;
  return BigInt(n) > (BigInt(1) << static_cast<unsigned>(e));
}

namespace {

BigInt at_least_3(const BigInt& x) { return std::max(x, BigInt(3)); }

Reduction make(std::string name, ProblemKind src, ProblemKind tgt) {
  Reduction r;
  r.name = std::move(name);
  r.source = src;
  r.target = tgt;
  return r;
}

void make_ppt(Reduction& r) {
  r.ppt = true;
  r.witness_length = [](const ProblemInstance&) { return std::size_t{0}; };
  r.synthesize = [](const ProblemInstance&, const Solution&) { return Witness{}; };
}

const std::vector<std::size_t>& indices_of(const Solution& sol) { return std::get<Subsequence>(sol).indices; }

// ---- knapsack -> subset sum ----

struct KnapsackPlan {
  std::optional<bool> decided;
  BigInt W;
};

KnapsackPlan plan_knapsack(const KnapsackInstance& in) {
  if (in.demand == 0) return {true, 0};
  std::size_t kept = 0;
  BigInt sum_p = 0, sum_w = 0;
  bool heavy = false;
  for (const auto& it : in.items) {
    if (it.size > in.capacity) continue;
    ++kept;
    sum_p += it.size;
    sum_w += it.weight;
    heavy |= it.weight >= in.demand;
  }
  if (sum_w < in.demand) return {false, 0};
  if (sum_p <= in.capacity || heavy) return {true, 0};
  if (size_guard_fires(kept, parameter(in))) return {solve_knapsack(in).yes, 0};
  return {std::nullopt, in.demand * kept + 1};
}

// ---- subset sum -> monotone ILP ----

struct MonotonePlan {
  std::optional<bool> decided;
  std::vector<std::size_t> kept;
  std::size_t k = 0;
  std::vector<BigInt> range;  // b_j in [0, range[j]]
};

MonotonePlan plan_monotone(const SubsetSumInstance& in) {
  MonotonePlan p;
  if (in.target == 0) {
    p.decided = true;
    return p;
  }
  for (std::size_t i = 0; i < in.items.size(); ++i)
    if (in.items[i] <= in.target) p.kept.push_back(i);
  p.k = bit_length(in.target);
  for (std::size_t j = 0; j < p.k; ++j) {
    BigInt c = 0;
    for (std::size_t i : p.kept)
      if (bit_test(in.items[i], static_cast<unsigned>(j))) ++c;
    p.range.push_back(std::min(c, BigInt(in.target >> j)));
  }
  return p;
}

// ---- zero-sum -> ILP ----

std::optional<bool> plan_zerosum(const IlpInstance& in) {
  if (in.columns.empty()) return false;
  if (size_guard_fires(in.columns.size(), in.rows())) return solve_ilp(in).yes;
  return std::nullopt;
}

// ---- ILP -> monotone ----

struct SplitPlan {
  std::optional<bool> decided;
  std::vector<std::int64_t> pos, neg;  // per row: number of +1 / -1 entries
};

SplitPlan plan_split(const IlpInstance& in) {
  SplitPlan p;
  if (size_guard_fires(in.columns.size(), in.rows())) {
    p.decided = solve_ilp(in).yes;
    return p;
  }
  p.pos.assign(in.rows(), 0);
  p.neg.assign(in.rows(), 0);
  for (const auto& col : in.columns)
    for (std::size_t j = 0; j < col.size(); ++j) {
      if (col[j] > 0) ++p.pos[j];
      if (col[j] < 0) ++p.neg[j];
    }
  return p;
}

// ---- Z_q -> subset sum ----

std::optional<bool> plan_zq(const SubsetSumInstance& in) {
  if (size_guard_fires(in.items.size(), bit_length(*in.modulus))) return solve_subset_sum(in).yes;
  return std::nullopt;
}

}  // namespace

Reduction ss_to_knapsack() {
  Reduction r = make("ss-to-knapsack", ProblemKind::SubsetSum, ProblemKind::Knapsack);
  make_ppt(r);
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    const auto& in = std::get<SubsetSumInstance>(src);
    KnapsackInstance out;
    out.capacity = out.demand = in.target;
    // Zero items would violate positivity and never matter.
    for (const auto& p : in.items)
      if (p > 0) out.items.push_back({p, p});
    return out;
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    return at_least_3(bit_length(std::get<SubsetSumInstance>(src).target) + 1);
  };
  return r;
}

Reduction knapsack_to_ss() {
  Reduction r = make("knapsack-to-ss", ProblemKind::Knapsack, ProblemKind::SubsetSum);
  r.witness_length = [](const ProblemInstance& src) -> std::size_t {
    const auto& in = std::get<KnapsackInstance>(src);
    const auto plan = plan_knapsack(in);
    if (plan.decided) return 0;
    return field_width(in.capacity + 1) + field_width(plan.W - in.demand);
  };
  r.transform = [](const ProblemInstance& src, const Witness& w) -> ProblemInstance {
    const auto& in = std::get<KnapsackInstance>(src);
    const auto plan = plan_knapsack(in);
    if (plan.decided) return decided(ProblemKind::SubsetSum, *plan.decided);
    WitnessReader rd(w);
    const auto t1 = rd.take(in.capacity + 1);
    const auto w1 = rd.take(plan.W - in.demand, in.demand);
    if (!t1 || !w1) return decided(ProblemKind::SubsetSum, false);
    SubsetSumInstance out;
    for (const auto& it : in.items)
      if (it.size <= in.capacity) out.items.push_back(it.size * plan.W + it.weight);
    out.target = *t1 * plan.W + *w1;
    return out;
  };
  r.synthesize = [](const ProblemInstance& src, const Solution& sol) {
    const auto& in = std::get<KnapsackInstance>(src);
    if (plan_knapsack(in).decided) return Witness{};
    BigInt sp = 0, sw = 0;
    for (std::size_t i : indices_of(sol)) {
      sp += in.items[i].size;
      sw += in.items[i].weight;
    }
    return knapsack_to_ss_witness(in, sp, sw);
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& in = std::get<KnapsackInstance>(src);
    const BigInt k = parameter(src);
    return at_least_3(3 * k + ceil_log2(BigInt(in.items.size()) + 1) + 2);
  };
  return r;
}

Witness knapsack_to_ss_witness(const KnapsackInstance& inst, const BigInt& t1, const BigInt& w1) {
  const auto plan = plan_knapsack(inst);
  if (plan.decided) throw std::logic_error("knapsack_to_ss_witness: instance decided during normalization");
  if (t1 < 0 || t1 > inst.capacity || w1 < inst.demand || w1 >= plan.W)
    throw std::out_of_range("knapsack_to_ss_witness: guess out of range");
  WitnessWriter ww;
  ww.put(t1, inst.capacity + 1);
  ww.put(w1, plan.W - inst.demand, inst.demand);
  return ww.finish();
}

Reduction ss_to_monotone() {
  Reduction r = make("ss-to-monotone", ProblemKind::SubsetSum, ProblemKind::MonotoneIlp);
  r.witness_length = [](const ProblemInstance& src) -> std::size_t {
    const auto plan = plan_monotone(std::get<SubsetSumInstance>(src));
    std::size_t len = 0;
    for (const auto& c : plan.range) len += field_width(c + 1);
    return len;
  };
  r.transform = [](const ProblemInstance& src, const Witness& w) -> ProblemInstance {
    const auto& in = std::get<SubsetSumInstance>(src);
    const auto plan = plan_monotone(in);
    if (plan.decided) return decided(ProblemKind::MonotoneIlp, *plan.decided);
    WitnessReader rd(w);
    IlpInstance out{{}, {}, IlpVariant::Monotone};
    BigInt check = 0;
    for (std::size_t j = 0; j < plan.k; ++j) {
      const auto b = rd.take(plan.range[j] + 1);
      if (!b) return decided(ProblemKind::MonotoneIlp, false);
      check += *b << static_cast<unsigned>(j);
      out.rhs.push_back(static_cast<std::int64_t>(*b));
    }
    if (check != in.target) return decided(ProblemKind::MonotoneIlp, false);
    for (std::size_t i : plan.kept) {
      std::vector<int> col(plan.k);
      for (std::size_t j = 0; j < plan.k; ++j) col[j] = bit_test(in.items[i], static_cast<unsigned>(j)) ? 1 : 0;
      out.columns.push_back(std::move(col));
    }
    return out;
  };
  r.synthesize = [](const ProblemInstance& src, const Solution& sol) {
    const auto& in = std::get<SubsetSumInstance>(src);
    const auto plan = plan_monotone(in);
    if (plan.decided) return Witness{};
    std::vector<BigInt> b(plan.k, 0);
    for (std::size_t i : indices_of(sol))
      for (std::size_t j = 0; j < plan.k; ++j)
        if (bit_test(in.items[i], static_cast<unsigned>(j))) ++b[j];
    return ss_to_monotone_witness(in, b);
  };
  r.parameter_bound = [](const ProblemInstance& src) { return at_least_3(parameter(src)); };
  return r;
}

Witness ss_to_monotone_witness(const SubsetSumInstance& inst, const std::vector<BigInt>& b) {
  const auto plan = plan_monotone(inst);
  if (plan.decided) throw std::logic_error("ss_to_monotone_witness: instance decided during normalization");
  if (b.size() != plan.k) throw std::out_of_range("ss_to_monotone_witness: wrong number of column sums");
  WitnessWriter ww;
  for (std::size_t j = 0; j < plan.k; ++j) {
    if (b[j] < 0 || b[j] > plan.range[j]) throw std::out_of_range("ss_to_monotone_witness: column sum out of range");
    ww.put(b[j], plan.range[j] + 1);
  }
  return ww.finish();
}

Reduction monotone_to_ss() {
  Reduction r = make("monotone-to-ss", ProblemKind::MonotoneIlp, ProblemKind::SubsetSum);
  make_ppt(r);
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    const auto& in = std::get<IlpInstance>(src);
    const std::size_t n = in.columns.size();
    for (auto b : in.rhs)
      if (b < 0 || static_cast<std::uint64_t>(b) > n) return decided(ProblemKind::SubsetSum, false);
    if (size_guard_fires(n, in.rows())) return decided(ProblemKind::SubsetSum, solve_ilp(in).yes);
    // Base n+1: no column of sums can carry into the next row.
    const BigInt W = BigInt(n) + 1;
    SubsetSumInstance out;
    for (const auto& col : in.columns) out.items.push_back(encode_base_w({col.begin(), col.end()}, W));
    out.target = encode_base_w({in.rhs.begin(), in.rhs.end()}, W);
    return out;
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& in = std::get<IlpInstance>(src);
    const BigInt m = in.rows();
    return at_least_3((m + 1) * (ceil_log2(BigInt(in.columns.size()) + 1) + 1) + 1);
  };
  return r;
}

Reduction monotone_to_zerosum() {
  Reduction r = make("monotone-to-zerosum", ProblemKind::MonotoneIlp, ProblemKind::ZeroSumIlp);
  make_ppt(r);
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    const auto& in = std::get<IlpInstance>(src);
    const std::size_t m = in.rows();
    if (size_guard_fires(in.columns.size(), m)) return decided(ProblemKind::ZeroSumIlp, solve_ilp(in).yes);
    std::vector<std::vector<int>> cols;
    for (const auto& col : in.columns)
      if (std::any_of(col.begin(), col.end(), [](int a) { return a != 0; })) cols.push_back(col);
    const std::size_t n = cols.size();
    std::int64_t bmax = 0;
    for (auto b : in.rhs) {
      if (b < 0 || static_cast<std::uint64_t>(b) > n) return decided(ProblemKind::ZeroSumIlp, false);
      bmax = std::max(bmax, b);
    }
    const std::size_t k = ceil_log2(BigInt(std::max<std::uint64_t>({n, static_cast<std::uint64_t>(bmax), 2})));
    const auto g = graver_sequence(k);
    IlpInstance out{{}, std::vector<std::int64_t>(m + k, 0), IlpVariant::ZeroSumNontrivial};
    for (auto col : cols) {
      col.resize(m + k, 0);
      out.columns.push_back(std::move(col));
    }
    // b = sum of b_i over i = 1..2^k, with b_i[j] = [b_j >= i]; each -b_i is tagged by v_i.
    for (std::size_t i = 1; i <= g.vectors.size(); ++i) {
      std::vector<int> col(m + k);
      for (std::size_t j = 0; j < m; ++j) col[j] = in.rhs[j] >= static_cast<std::int64_t>(i) ? -1 : 0;
      for (std::size_t j = 0; j < k; ++j) col[m + j] = g.vectors[i - 1][j];
      out.columns.push_back(std::move(col));
    }
    return out;
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& in = std::get<IlpInstance>(src);
    return at_least_3(BigInt(in.rows()) + ceil_log2(BigInt(in.columns.size()) + 2) + 1);
  };
  return r;
}

Reduction zerosum_to_ilp() {
  Reduction r = make("zerosum-to-ilp", ProblemKind::ZeroSumIlp, ProblemKind::Ilp);
  r.witness_length = [](const ProblemInstance& src) -> std::size_t {
    const auto& in = std::get<IlpInstance>(src);
    if (plan_zerosum(in)) return 0;
    return field_width(in.columns.size());
  };
  r.transform = [](const ProblemInstance& src, const Witness& w) -> ProblemInstance {
    const auto& in = std::get<IlpInstance>(src);
    if (auto d = plan_zerosum(in)) return decided(ProblemKind::Ilp, *d);
    WitnessReader rd(w);
    const auto i = rd.take(in.columns.size(), 1);
    if (!i) return decided(ProblemKind::Ilp, false);
    const auto pick = static_cast<std::size_t>(*i) - 1;
    IlpInstance out{{}, {}, IlpVariant::Standard};
    for (std::size_t j = 0; j < in.columns.size(); ++j)
      if (j != pick) out.columns.push_back(in.columns[j]);
    for (int a : in.columns[pick]) out.rhs.push_back(-a);
    return out;
  };
  r.synthesize = [](const ProblemInstance& src, const Solution& sol) {
    const auto& in = std::get<IlpInstance>(src);
    if (plan_zerosum(in)) return Witness{};
    const auto& x = std::get<BinaryVector>(sol).x;
    const auto it = std::find(x.begin(), x.end(), 1);
    return zerosum_to_ilp_witness(in, static_cast<std::size_t>(it - x.begin()) + 1);
  };
  r.parameter_bound = [](const ProblemInstance& src) { return at_least_3(parameter(src)); };
  return r;
}

Witness zerosum_to_ilp_witness(const IlpInstance& inst, std::size_t i) {
  if (plan_zerosum(inst)) throw std::logic_error("zerosum_to_ilp_witness: instance decided during normalization");
  if (i < 1 || i > inst.columns.size()) throw std::out_of_range("zerosum_to_ilp_witness: index out of range");
  WitnessWriter ww;
  ww.put(i, inst.columns.size(), 1);
  return ww.finish();
}

Reduction ilp_to_monotone() {
  Reduction r = make("ilp-to-monotone", ProblemKind::Ilp, ProblemKind::MonotoneIlp);
  r.witness_length = [](const ProblemInstance& src) -> std::size_t {
    const auto plan = plan_split(std::get<IlpInstance>(src));
    if (plan.decided) return 0;
    std::size_t len = 0;
    for (auto c : plan.pos) len += field_width(c + 1);
    for (auto c : plan.neg) len += field_width(c + 1);
    return len;
  };
  r.transform = [](const ProblemInstance& src, const Witness& w) -> ProblemInstance {
    const auto& in = std::get<IlpInstance>(src);
    const auto plan = plan_split(in);
    if (plan.decided) return decided(ProblemKind::MonotoneIlp, *plan.decided);
    const std::size_t m = in.rows();
    WitnessReader rd(w);
    IlpInstance out{{}, std::vector<std::int64_t>(2 * m), IlpVariant::Monotone};
    for (std::size_t j = 0; j < m; ++j) {
      const auto b = rd.take(plan.pos[j] + 1);
      if (!b) return decided(ProblemKind::MonotoneIlp, false);
      out.rhs[j] = static_cast<std::int64_t>(*b);
    }
    for (std::size_t j = 0; j < m; ++j) {
      const auto b = rd.take(plan.neg[j] + 1);
      if (!b) return decided(ProblemKind::MonotoneIlp, false);
      out.rhs[m + j] = static_cast<std::int64_t>(*b);
    }
    for (std::size_t j = 0; j < m; ++j)
      if (out.rhs[j] - out.rhs[m + j] != in.rhs[j]) return decided(ProblemKind::MonotoneIlp, false);
    for (const auto& col : in.columns) {
      std::vector<int> c(2 * m);
      for (std::size_t j = 0; j < m; ++j) {
        c[j] = col[j] > 0 ? 1 : 0;
        c[m + j] = col[j] < 0 ? 1 : 0;
      }
      out.columns.push_back(std::move(c));
    }
    return out;
  };
  r.synthesize = [](const ProblemInstance& src, const Solution& sol) {
    const auto& in = std::get<IlpInstance>(src);
    if (plan_split(in).decided) return Witness{};
    const auto& x = std::get<BinaryVector>(sol).x;
    std::vector<std::int64_t> bp(in.rows(), 0), bm(in.rows(), 0);
    for (std::size_t i = 0; i < in.columns.size(); ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < in.rows(); ++j) {
        if (in.columns[i][j] > 0) ++bp[j];
        if (in.columns[i][j] < 0) ++bm[j];
      }
    }
    return ilp_to_monotone_witness(in, bp, bm);
  };
  r.parameter_bound = [](const ProblemInstance& src) { return at_least_3(2 * parameter(src)); };
  return r;
}

Witness ilp_to_monotone_witness(const IlpInstance& inst, const std::vector<std::int64_t>& b_plus,
                                const std::vector<std::int64_t>& b_minus) {
  const auto plan = plan_split(inst);
  if (plan.decided) throw std::logic_error("ilp_to_monotone_witness: instance decided during normalization");
  if (b_plus.size() != inst.rows() || b_minus.size() != inst.rows())
    throw std::out_of_range("ilp_to_monotone_witness: wrong number of row sums");
  WitnessWriter ww;
  for (std::size_t j = 0; j < inst.rows(); ++j) {
    if (b_plus[j] < 0 || b_plus[j] > plan.pos[j]) throw std::out_of_range("ilp_to_monotone_witness: b+ out of range");
    ww.put(b_plus[j], plan.pos[j] + 1);
  }
  for (std::size_t j = 0; j < inst.rows(); ++j) {
    if (b_minus[j] < 0 || b_minus[j] > plan.neg[j]) throw std::out_of_range("ilp_to_monotone_witness: b- out of range");
    ww.put(b_minus[j], plan.neg[j] + 1);
  }
  return ww.finish();
}

Reduction ss_to_zq() {
  Reduction r = make("ss-to-zq", ProblemKind::SubsetSum, ProblemKind::ModularSubsetSum);
  make_ppt(r);
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    const auto& in = std::get<SubsetSumInstance>(src);
    if (in.target == 0) return decided(ProblemKind::ModularSubsetSum, true);
    SubsetSumInstance out;
    for (const auto& p : in.items)
      if (p >= 1 && p <= in.target) out.items.push_back(p);
    if (out.items.empty()) return decided(ProblemKind::ModularSubsetSum, false);
    // Every subset sum lies in [0, n*t] with n*t <= q, so only t itself is congruent to t.
    out.modulus = BigInt(std::max<std::size_t>(out.items.size(), 2)) * in.target;
    out.target = in.target;
    return out;
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& in = std::get<SubsetSumInstance>(src);
    return at_least_3(parameter(src) + ceil_log2(BigInt(in.items.size()) + 2) + 1);
  };
  return r;
}

Reduction zq_to_ss() {
  Reduction r = make("zq-to-ss", ProblemKind::ModularSubsetSum, ProblemKind::SubsetSum);
  r.witness_length = [](const ProblemInstance& src) -> std::size_t {
    const auto& in = std::get<SubsetSumInstance>(src);
    if (plan_zq(in)) return 0;
    return field_width(BigInt(in.items.size()) * *in.modulus + 1);
  };
  r.transform = [](const ProblemInstance& src, const Witness& w) -> ProblemInstance {
    const auto& in = std::get<SubsetSumInstance>(src);
    if (auto d = plan_zq(in)) return decided(ProblemKind::SubsetSum, *d);
    WitnessReader rd(w);
    const auto t1 = rd.take(BigInt(in.items.size()) * *in.modulus + 1);
    if (!t1 || *t1 % *in.modulus != in.target) return decided(ProblemKind::SubsetSum, false);
    return SubsetSumInstance{in.items, *t1, std::nullopt};
  };
  r.synthesize = [](const ProblemInstance& src, const Solution& sol) {
    const auto& in = std::get<SubsetSumInstance>(src);
    if (plan_zq(in)) return Witness{};
    BigInt s = 0;
    for (std::size_t i : indices_of(sol)) s += in.items[i];
    return zq_to_ss_witness(in, s);
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& in = std::get<SubsetSumInstance>(src);
    return at_least_3(parameter(src) + ceil_log2(BigInt(in.items.size()) + 1) + 1);
  };
  return r;
}

Witness zq_to_ss_witness(const SubsetSumInstance& inst, const BigInt& t1) {
  if (!inst.modulus) throw std::logic_error("zq_to_ss_witness: instance has no modulus");
  if (plan_zq(inst)) throw std::logic_error("zq_to_ss_witness: instance decided by the size guard");
  const BigInt count = BigInt(inst.items.size()) * *inst.modulus + 1;
  if (t1 < 0 || t1 >= count) throw std::out_of_range("zq_to_ss_witness: t' out of range");
  WitnessWriter ww;
  ww.put(t1, count);
  return ww.finish();
}

}  // namespace certkit
