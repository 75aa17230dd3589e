#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <zerosum/enumeration.hpp>
#include <zerosum/sequence.hpp>

namespace zerosum {

/// Every length bound family evaluated on one sequence. "pos" bounds cap
/// the number of positive terms, "neg" bounds the number of negative
/// terms, both counted with multiplicity.
struct BoundReport {
  ZSeq seq;
  long long len_pos = 0;
  long long len_neg = 0;
  int lambert_pos = 0;  // largest negative magnitude
  int lambert_neg = 0;  // largest positive value
  std::vector<long long> hw_pos;  // one bound per distinct negative magnitude
  std::vector<long long> hw_neg;  // one bound per distinct positive value
  long long hw_pos_min = 0;
  long long hw_neg_min = 0;
  long long main_pos = 0;  // floor of the opposite side's average magnitude
  long long main_neg = 0;
  std::optional<long long> refined_pos;  // only when the refinement applies
  std::optional<long long> refined_neg;
  bool tight_pos = false;  // actual length meets the main bound
  bool tight_neg = false;
};

/// (largest negative magnitude, largest positive value).
std::pair<int, int> lambert_bounds(const SplitForm& f);

/// Floor/ceiling-corrected bounds: for each anchor value on one side, the
/// anchor plus corrections weighted by the opposite side's extreme values.
/// Exact integer arithmetic throughout.
std::pair<std::vector<long long>, std::vector<long long>> hw_bounds(
    const SplitForm& f);

/// (floor of the negative part's average magnitude, floor of the positive
/// part's average value), computed as exact rational floors.
std::pair<long long, long long> main_bounds(const SplitForm& f);

/// Average bound after one derivation step, minimized over the eligible
/// derivations; applies on the positive side when some negative magnitude
/// lies strictly between the negative-side average and the largest
/// positive value (symmetrically on the negative side). Valid only for
/// minimal sequences. Absent when no derivation is eligible.
std::pair<std::optional<long long>, std::optional<long long>> refined_bounds(
    const SplitForm& f);

/// Requires a zero-sum sequence with at least two terms and no zero term.
BoundReport bound_report(const ZSeq& s);

/// a^[b/g], (-b)^[a/g] with g = gcd(a, b): minimal by construction, and
/// all three bound families coincide at (b, a). The bounds are attained
/// exactly when gcd(a, b) = 1.
ZSeq tight_family(int a, int b);

struct DominanceSummary {
  int n = 0;
  long long scanned = 0;  // atoms with more than one term
  // The average-vs-hw comparison is provable only when the opposite side's
  // smallest value does not exceed the side length ("comparison class");
  // outside it the hw bound can win.
  long long in_class_pos = 0;
  long long out_class_pos = 0;
  long long in_class_neg = 0;
  long long out_class_neg = 0;
  long long strict_pos = 0;  // main bound strictly below the hw minimum
  long long tie_pos = 0;
  long long strict_neg = 0;
  long long tie_neg = 0;
  long long tight_pos = 0;
  long long tight_neg = 0;
  long long tight_both = 0;
};

/// Checks, for every atom with more than one term: actual lengths never
/// exceed any bound; the main bound never exceeds the lambert bound; and
/// within the comparison class the unfloored averages never exceed any hw
/// bound. Any violation raises std::logic_error naming the atom.
DominanceSummary dominance_scan(const AtomSet& atoms);

std::string to_text(const DominanceSummary& d);

/// One row per atom with more than one term, display order. Columns:
/// seq,len_pos,len_neg,lambert_pos,lambert_neg,hw_pos_min,hw_neg_min,
/// main_pos,main_neg,refined_pos,refined_neg,tight_pos,tight_neg.
std::string bounds_csv(const AtomSet& atoms);

}  // namespace zerosum
