#include "certkit/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "certkit/errors.hpp"

namespace certkit {

// ---------------------------------------------------------------- unbounded subset sum

namespace {

// Distinct values in [1, t], in order of first occurrence.
std::vector<BigInt> usable_values(const UnboundedSubsetSumInstance& in) {
  std::vector<BigInt> vals;
  for (const auto& p : in.items)
    if (p >= 1 && p <= in.target && std::find(vals.begin(), vals.end(), p) == vals.end()) vals.push_back(p);
  return vals;
}

struct UssLayout {
  std::size_t pairs = 0;
  BigInt index_count, mult_count;
  std::size_t length() const {
    return field_width(BigInt(pairs) + 1) + pairs * (field_width(index_count) + field_width(mult_count));
  }
};

UssLayout uss_layout(const UnboundedSubsetSumInstance& in) {
  return {unbounded_ss_pairs(in.target), BigInt(usable_values(in).size()), in.target};
}

// Shrinks the support to at most P values: among P+1 support values, two distinct subsets
// have equal sums (all sums lie in [0, t] and 2^(P+1) > t+1); shifting multiplicity from one
// to the other keeps the total and empties some value.
void shrink_support(std::map<std::size_t, BigInt>& mult, const std::vector<BigInt>& vals, std::size_t P) {
  while (mult.size() > P) {
    std::vector<std::size_t> pick;
    for (auto it = mult.begin(); pick.size() < P + 1; ++it) pick.push_back(it->first);
    std::map<BigInt, std::uint64_t> seen;
    std::uint64_t a = 0, b = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pick.size()); ++mask) {
      BigInt s = 0;
      for (std::size_t i = 0; i < pick.size(); ++i)
        if (mask >> i & 1U) s += vals[pick[i]];
      auto [it, fresh] = seen.emplace(s, mask);
      if (!fresh) {
        a = it->second;
        b = mask;
        break;
      }
    }
    const std::uint64_t common = a & b;
    a ^= common;
    b ^= common;
    if (a == 0 || b == 0) throw std::logic_error("cert_unbounded_ss: exchange argument failed");
    BigInt delta = -1;
    for (std::size_t i = 0; i < pick.size(); ++i)
      if (a >> i & 1U) delta = delta < 0 ? mult[pick[i]] : std::min(delta, mult[pick[i]]);
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (a >> i & 1U) {
        mult[pick[i]] -= delta;
        if (mult[pick[i]] == 0) mult.erase(pick[i]);
      }
      if (b >> i & 1U) mult[pick[i]] += delta;
    }
  }
}

}  // namespace

std::size_t unbounded_ss_pairs(const BigInt& t) { return t <= 0 ? 0 : bit_length(t + 1) - 1; }

std::size_t unbounded_ss_bit_bound(const BigInt& t) {
  const std::size_t L = t <= 0 ? 0 : ceil_log2(t + 1);
  return 2 * L * L + L;
}

CertificateScheme cert_unbounded_ss() {
  CertificateScheme c;
  c.name = "unbounded-ss";
  c.kind = ProblemKind::UnboundedSubsetSum;
  c.cert_len = [](const ProblemInstance& inst) {
    return uss_layout(std::get<UnboundedSubsetSumInstance>(inst)).length();
  };
  c.verify = [](const ProblemInstance& inst, const Witness& w) {
    const auto& in = std::get<UnboundedSubsetSumInstance>(inst);
    const auto lay = uss_layout(in);
    if (w.size() != lay.length()) return false;
    const auto vals = usable_values(in);
    WitnessReader rd(w);
    const auto count = rd.take(BigInt(lay.pairs) + 1);
    if (!count) return false;
    BigInt sum = 0;
    BigInt last = -1;
    for (BigInt i = 0; i < *count; ++i) {
      const auto idx = rd.take(lay.index_count);
      const auto m = rd.take(lay.mult_count, 1);
      if (!idx || !m || *idx <= last) return false;
      last = *idx;
      sum += *m * vals[static_cast<std::size_t>(*idx)];
    }
    return rd.rest_is_zero() && sum == in.target;
  };
  c.synthesize = [](const ProblemInstance& inst, const Solution& sol) {
    const auto& in = std::get<UnboundedSubsetSumInstance>(inst);
    const auto lay = uss_layout(in);
    const auto vals = usable_values(in);
    const auto& counts = std::get<Multiplicities>(sol).counts;
    std::map<std::size_t, BigInt> mult;
    for (std::size_t i = 0; i < in.items.size(); ++i) {
      if (counts[i] == 0 || in.items[i] == 0) continue;
      const auto pos = static_cast<std::size_t>(std::find(vals.begin(), vals.end(), in.items[i]) - vals.begin());
      mult[pos] += counts[i];
    }
    shrink_support(mult, vals, lay.pairs);
    WitnessWriter ww;
    ww.put(mult.size(), BigInt(lay.pairs) + 1);
    for (const auto& [idx, m] : mult) {
      ww.put(idx, lay.index_count);
      ww.put(m, lay.mult_count, 1);
    }
    ww.pad_to(lay.length());
    return ww.finish();
  };
  return c;
}

// ---------------------------------------------------------------- Z_k^k

namespace {

std::uint32_t product_k(const GroupSubsetSumInstance& in) {
  const auto* g = std::get_if<ProductGroup>(&in.group);
  if (!g) throw UnsupportedKindError("cert_zkk: needs a Z_k^k instance");
  return g->k;
}

BigInt group_size(std::uint32_t k) { return pow_big(k, k); }

BigInt binom(const BigInt& n, std::size_t m) {
  if (n < m) return 0;
  BigInt r = 1;
  for (std::size_t i = 0; i < m; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Multisets of size c over G symbols.
BigInt multiset_count(const BigInt& G, std::size_t c) { return c == 0 ? BigInt(1) : binom(G + c - 1, c); }

// Number of element multisets of size < s; the group is abelian, so order is irrelevant.
BigInt tuple_count(std::uint32_t k, std::size_t s) {
  const BigInt G = group_size(k);
  BigInt total = 0;
  for (std::size_t c = 0; c < s; ++c) total += multiset_count(G, c);
  return total;
}

// Sorted ranks e_0 <= ... <= e_{c-1} map to distinct e_i + i; rank those in the combinatorial number system.
BigInt multiset_rank(std::vector<BigInt> ranks, const BigInt& G) {
  std::sort(ranks.begin(), ranks.end());
  BigInt offset = 0;
  for (std::size_t c = 0; c < ranks.size(); ++c) offset += multiset_count(G, c);
  BigInt r = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) r += binom(ranks[i] + i, i + 1);
  return offset + r;
}

std::vector<BigInt> multiset_unrank(BigInt x, const BigInt& G) {
  std::size_t c = 0;
  while (x >= multiset_count(G, c)) x -= multiset_count(G, c++);
  std::vector<BigInt> out(c);
  BigInt hi = G + c;  // exclusive bound on d_i
  for (std::size_t i = c; i-- > 0;) {
    BigInt lo = i, top = hi - 1;  // largest d in [i, hi) with C(d, i+1) <= x
    while (lo < top) {
      const BigInt mid = (lo + top + 1) / 2;
      if (binom(mid, i + 1) <= x) lo = mid;
      else top = mid - 1;
    }
    x -= binom(lo, i + 1);
    out[i] = lo - i;
    hi = lo;
  }
  return out;
}

std::size_t index_length(const GroupSubsetSumInstance& in) {
  return (zkk_s(product_k(in)) - 1) * field_width(BigInt(in.elements.size()) + 1);
}

std::size_t element_length(const GroupSubsetSumInstance& in) {
  const auto k = product_k(in);
  return field_width(tuple_count(k, zkk_s(k)));
}

BigInt element_rank(const GroupElement& e, std::uint32_t k) {
  BigInt r = 0;
  for (auto it = e.rbegin(); it != e.rend(); ++it) r = r * k + *it;
  return r;
}

GroupElement element_unrank(BigInt r, std::uint32_t k) {
  GroupElement e(k);
  for (auto& x : e) {
    x = static_cast<std::uint64_t>(r % k);
    r /= k;
  }
  return e;
}

GroupElement sum_of(const GroupSubsetSumInstance& in, const std::vector<GroupElement>& elems) {
  GroupElement acc = group_identity(in.group);
  for (const auto& e : elems) acc = group_multiply(in.group, acc, e);
  return acc;
}

// Positions (into seq) of a nonempty zero-sum subsequence, if any.
std::optional<std::vector<std::size_t>> zero_sum_positions(const std::vector<GroupElement>& seq, const GroupKind& g) {
  struct From {
    std::optional<GroupElement> prev;  // nullopt = started from the empty subsequence
    std::size_t pos;
  };
  std::map<GroupElement, From> reach;
  const GroupElement zero = group_identity(g);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::vector<std::pair<GroupElement, From>> fresh;
    fresh.push_back({seq[i], {std::nullopt, i}});
    for (const auto& [s, _] : reach) fresh.push_back({group_multiply(g, s, seq[i]), {s, i}});
    for (auto& [s, f] : fresh) reach.emplace(s, f);
    auto it = reach.find(zero);
    if (it == reach.end()) continue;
    std::vector<std::size_t> pos;
    GroupElement cur = zero;
    while (true) {
      const From& f = reach.at(cur);
      pos.push_back(f.pos);
      if (!f.prev) break;
      cur = *f.prev;
    }
    std::reverse(pos.begin(), pos.end());
    return pos;
  }
  return std::nullopt;
}

}  // namespace

std::size_t zkk_s(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("zkk_s: k must be positive");
  if (k == 1) return 1;
  return ceil_log2(pow_big(k, static_cast<std::size_t>(k) * k));
}

double zkk_bit_bound(std::uint32_t k) {
  const double lg = std::log2(static_cast<double>(k));
  return static_cast<double>(k) * k * k * lg * lg;
}

ZkkEncoding zkk_encoding(const GroupSubsetSumInstance& inst) {
  return index_length(inst) <= element_length(inst) ? ZkkEncoding::Indices : ZkkEncoding::Elements;
}

bool has_zero_sum_subsequence(const std::vector<GroupElement>& seq, std::uint32_t k) {
  return zero_sum_positions(seq, ProductGroup{k}).has_value();
}

CertificateScheme cert_zkk() {
  CertificateScheme c;
  c.name = "zkk";
  c.kind = ProblemKind::GroupSubsetSum;
  c.cert_len = [](const ProblemInstance& inst) {
    const auto& in = std::get<GroupSubsetSumInstance>(inst);
    return std::min(index_length(in), element_length(in));
  };
  c.verify = [](const ProblemInstance& inst, const Witness& w) {
    const auto& in = std::get<GroupSubsetSumInstance>(inst);
    const auto k = product_k(in);
    const std::size_t s = zkk_s(k), n = in.elements.size();
    WitnessReader rd(w);
    std::vector<GroupElement> picked;
    if (zkk_encoding(in) == ZkkEncoding::Indices) {
      if (w.size() != index_length(in)) return false;
      BigInt last = 0;
      bool ended = false;
      for (std::size_t slot = 0; slot + 1 < s; ++slot) {
        const auto v = rd.take(BigInt(n) + 1);
        if (!v) return false;
        if (*v == 0) {
          ended = true;
          continue;
        }
        if (ended || *v <= last) return false;
        last = *v;
        picked.push_back(in.elements[static_cast<std::size_t>(*v) - 1]);
      }
    } else {
      if (w.size() != element_length(in)) return false;
      auto x = rd.take(tuple_count(k, s));
      if (!x) return false;
      for (const auto& r : multiset_unrank(*x, group_size(k))) picked.push_back(element_unrank(r, k));
      std::map<GroupElement, long> avail;
      for (const auto& e : in.elements) ++avail[e];
      for (const auto& e : picked)
        if (--avail[e] < 0) return false;
    }
    return sum_of(in, picked) == in.target;
  };
  c.synthesize = [](const ProblemInstance& inst, const Solution& sol) {
    const auto& in = std::get<GroupSubsetSumInstance>(inst);
    const auto k = product_k(in);
    const std::size_t s = zkk_s(k), n = in.elements.size();
    std::vector<std::size_t> idx = std::get<Subsequence>(sol).indices;
    // Drop zero-sum pieces until none is left; what remains is shorter than s.
    while (true) {
      std::vector<GroupElement> seq;
      for (auto i : idx) seq.push_back(in.elements[i]);
      const auto zero = zero_sum_positions(seq, in.group);
      if (!zero) break;
      std::vector<std::size_t> keep;
      std::size_t z = 0;
      for (std::size_t p = 0; p < idx.size(); ++p) {
        if (z < zero->size() && (*zero)[z] == p) {
          ++z;
          continue;
        }
        keep.push_back(idx[p]);
      }
      idx = std::move(keep);
    }
    if (idx.size() >= s) throw std::logic_error("cert_zkk: zero-sum-free solution not shorter than s");
    WitnessWriter ww;
    if (zkk_encoding(in) == ZkkEncoding::Indices) {
      for (std::size_t slot = 0; slot + 1 < s; ++slot)
        ww.put(slot < idx.size() ? idx[slot] + 1 : 0, BigInt(n) + 1);
    } else {
      std::vector<BigInt> ranks;
      for (auto i : idx) ranks.push_back(element_rank(in.elements[i], k));
      ww.put(multiset_rank(ranks, group_size(k)), tuple_count(k, s));
    }
    return ww.finish();
  };
  return c;
}

std::optional<std::size_t> zkk_min_solution_length(const GroupSubsetSumInstance& inst) {
  product_k(inst);
  std::map<GroupElement, std::size_t> best{{group_identity(inst.group), 0}};
  for (const auto& e : inst.elements) {
    auto next = best;
    for (const auto& [s, c] : best) {
      auto t = group_multiply(inst.group, s, e);
      auto it = next.find(t);
      if (it == next.end() || it->second > c + 1) next[t] = c + 1;
    }
    best = std::move(next);
  }
  auto it = best.find(inst.target);
  if (it == best.end()) return std::nullopt;
  return it->second;
}

BoundCheckReport minimal_solution_bound_check(std::uint32_t k, const std::vector<GroupSubsetSumInstance>& family,
                                              std::uint64_t exhaustive_limit, std::uint64_t samples,
                                              std::uint64_t seed) {
  if (k < 1 || k > 3) throw std::invalid_argument("minimal_solution_bound_check: k must lie in [1, 3]");
  BoundCheckReport rep;
  rep.k = k;
  rep.s = zkk_s(k);
  for (std::size_t i = 0; i < family.size(); ++i) {
    ++rep.instances;
    const auto len = zkk_min_solution_length(family[i]);
    if (!len) continue;
    ++rep.solvable;
    rep.max_min_length = std::max(rep.max_min_length, *len);
    if (*len >= rep.s) rep.violating_instances.push_back(i);
  }

  const BigInt G = group_size(k);
  const BigInt all = pow_big(G, rep.s);
  const auto g = static_cast<std::uint64_t>(G);
  auto check = [&](const std::vector<GroupElement>& seq) {
    ++rep.sequences_checked;
    if (!has_zero_sum_subsequence(seq, k) && !rep.zero_sum_counterexample) rep.zero_sum_counterexample = seq;
  };
  std::vector<GroupElement> seq(rep.s);
  if (all <= exhaustive_limit) {
    rep.zero_sum_exhaustive = true;
    const auto total = static_cast<std::uint64_t>(all);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (auto& e : seq) {
        e = element_unrank(c % g, k);
        c /= g;
      }
      check(seq);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, g - 1);
    for (std::uint64_t t = 0; t < samples; ++t) {
      for (auto& e : seq) e = element_unrank(pick(rng), k);
      check(seq);
    }
  }
  return rep;
}

// ---------------------------------------------------------------- subset indicator

CertificateScheme cert_subset_indicator() {
  CertificateScheme c;
  c.name = "subset-indicator";
  c.kind = ProblemKind::SubsetSum;
  c.cert_len = [](const ProblemInstance& inst) { return std::get<SubsetSumInstance>(inst).items.size(); };
  c.verify = [](const ProblemInstance& inst, const Witness& w) {
    const auto& in = std::get<SubsetSumInstance>(inst);
    if (w.size() != in.items.size()) return false;
    BigInt sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.bits[i]) sum += in.items[i];
    if (in.modulus) sum %= *in.modulus;
    return sum == in.target;
  };
  c.synthesize = [](const ProblemInstance& inst, const Solution& sol) {
    Witness w;
    w.bits.assign(std::get<SubsetSumInstance>(inst).items.size(), false);
    for (auto i : std::get<Subsequence>(sol).indices) w.bits[i] = true;
    return w;
  };
  return c;
}

std::optional<CertificateScheme> find_scheme(const std::string& name) {
  if (name == "unbounded-ss") return cert_unbounded_ss();
  if (name == "zkk") return cert_zkk();
  if (name == "subset-indicator") return cert_subset_indicator();
  return std::nullopt;
}

std::vector<std::string> scheme_names() { return {"unbounded-ss", "zkk", "subset-indicator"}; }

// ---------------------------------------------------------------- certified solve

Verdict certified_solve(const ProblemInstance& inst, const Reduction& chain, const CertificateScheme& scheme,
                        const CertifiedBudget& budget) {
  if (chain.target != scheme.kind) throw UnsupportedKindError("certified_solve: scheme does not read the chain's target");
  const std::size_t len1 = chain.witness_length(inst);
  if (len1 > budget.max_total_bits) throw ResourceError("certified_solve: chain witness exceeds the bit budget");
  Verdict v;
  v.telemetry.method = "certified-enumeration";
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << len1); ++i) {
    const ProblemInstance target = apply(chain, inst, Witness::from_index(i, len1));
    const std::size_t len2 = scheme.cert_len(target);
    if (len1 + len2 > budget.max_total_bits) throw ResourceError("certified_solve: guess strings exceed the bit budget");
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << len2); ++j) {
      ++v.telemetry.states;
      if (scheme.verify(target, Witness::from_index(j, len2))) {
        v.yes = true;
        return v;
      }
    }
  }
  return v;
}

}  // namespace certkit
