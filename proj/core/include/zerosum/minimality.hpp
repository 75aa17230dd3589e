#pragma once

#include <optional>

#include <zerosum/sequence.hpp>

namespace zerosum {

// The exhaustive checker walks every sub-multiset, so it is capped.
inline constexpr long long kOracleLengthCap = 20;

struct MinimalityVerdict {
  bool zero_sum = false;
  bool minimal = false;
  // A proper nontrivial zero-sum sub-multiset; present iff not minimal.
  std::optional<ZSeq> witness;
};

bool is_zero_sum(const ZSeq& s);

/// Decides minimality of a nontrivial zero-sum sequence via subset-sum
/// reachability: with no zero term, s is minimal iff the only value
/// attainable as a sum by both a nonempty positive-part sub-multiset and
/// (in absolute value) a nonempty negative-part sub-multiset is the full
/// positive sum. A zero term makes s non-minimal unless s = {0:1}.
MinimalityVerdict is_minimal_fast(const ZSeq& s);

/// Same contract, by exhaustive enumeration of sub-multisets.
/// Requires length <= kOracleLengthCap.
MinimalityVerdict is_minimal_oracle(const ZSeq& s);

}  // namespace zerosum
