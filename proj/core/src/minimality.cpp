#include <zerosum/minimality.hpp>

#include <stdexcept>
#include <vector>

namespace zerosum {

bool is_zero_sum(const ZSeq& s) { return s.sum() == 0; }

namespace {

using Items = std::vector<std::pair<int, long long>>;

// stages[i][v]: v is a sub-multiset sum over the first i items
// (stage 0 holds only the empty sum).
std::vector<std::vector<char>> reach_stages(const Items& items,
                                            long long target) {
  std::vector<std::vector<char>> stages;
  stages.reserve(items.size() + 1);
  std::vector<char> cur(static_cast<size_t>(target) + 1, 0);
  cur[0] = 1;
  stages.push_back(cur);
  for (const auto& [value, mult] : items) {
    std::vector<char> next = cur;
    for (long long k = 1; k <= mult; ++k) {
      long long off = k * value;
      if (off > target) break;
      for (long long v = target; v >= off; --v)
        if (cur[static_cast<size_t>(v - off)]) next[static_cast<size_t>(v)] = 1;
    }
    cur = std::move(next);
    stages.push_back(cur);
  }
  return stages;
}

// Recovers a sub-multiset with sum v, smallest copy counts first.
ZSeq back_trace(const Items& items,
                const std::vector<std::vector<char>>& stages, long long v,
                bool negate_values) {
  ZSeq part;
  for (size_t i = items.size(); i >= 1; --i) {
    const auto& [value, mult] = items[i - 1];
    for (long long k = 0; k <= mult; ++k) {
      if (k * value > v) break;
      if (stages[i - 1][static_cast<size_t>(v - k * value)]) {
        if (k > 0) part.add(negate_values ? -value : value, k);
        v -= k * value;
        break;
      }
    }
  }
  if (v != 0)
    throw std::logic_error("is_minimal_fast: witness reconstruction failed");
  return part;
}

}  // namespace

MinimalityVerdict is_minimal_fast(const ZSeq& s) {
  if (s.trivial())
    throw std::invalid_argument("is_minimal_fast: trivial sequence");
  if (!is_zero_sum(s))
    throw std::invalid_argument("is_minimal_fast: sum is " +
                                std::to_string(s.sum()) + ", not zero");
  if (s.contains_zero()) {
    if (s.length() == 1) return {true, true, std::nullopt};
    return {true, false, ZSeq{{0, 1}}};
  }

  const SplitForm f = split_form(s);
  const long long target = f.sum_pos();
  const auto pos_stages = reach_stages(f.positives, target);
  const auto neg_stages = reach_stages(f.negatives, target);
  const auto& pos_reach = pos_stages.back();
  const auto& neg_reach = neg_stages.back();

  // The full sum is always attainable on both sides, and only by the whole
  // side; any smaller common value yields a proper zero-sum sub-multiset.
  for (long long v = 1; v < target; ++v) {
    if (pos_reach[static_cast<size_t>(v)] && neg_reach[static_cast<size_t>(v)]) {
      ZSeq witness = back_trace(f.positives, pos_stages, v, false);
      ZSeq neg_part = back_trace(f.negatives, neg_stages, v, true);
      for (const auto& [value, mult] : neg_part.terms())
        witness.add(value, mult);
      return {true, false, witness};
    }
  }
  return {true, true, std::nullopt};
}

MinimalityVerdict is_minimal_oracle(const ZSeq& s) {
  if (s.trivial())
    throw std::invalid_argument("is_minimal_oracle: trivial sequence");
  if (!is_zero_sum(s))
    throw std::invalid_argument("is_minimal_oracle: sum is " +
                                std::to_string(s.sum()) + ", not zero");
  if (s.length() > kOracleLengthCap)
    throw std::invalid_argument("is_minimal_oracle: length " +
                                std::to_string(s.length()) + " exceeds cap " +
                                std::to_string(kOracleLengthCap));

  std::vector<std::pair<int, long long>> entries(s.terms().begin(),
                                                 s.terms().end());
  std::vector<long long> counts(entries.size(), 0);
  while (true) {
    // Advance the odometer; the all-zero (empty) choice is never tested.
    size_t i = 0;
    while (i < entries.size() && counts[i] == entries[i].second)
      counts[i++] = 0;
    if (i == entries.size()) break;
    ++counts[i];

    bool full = true;
    long long sum = 0;
    for (size_t k = 0; k < entries.size(); ++k) {
      sum += static_cast<long long>(entries[k].first) * counts[k];
      if (counts[k] != entries[k].second) full = false;
    }
    if (full || sum != 0) continue;

    ZSeq witness;
    for (size_t k = 0; k < entries.size(); ++k)
      if (counts[k] > 0) witness.add(entries[k].first, counts[k]);
    return {true, false, witness};
  }
  return {true, true, std::nullopt};
}

}  // namespace zerosum
