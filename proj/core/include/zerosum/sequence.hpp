#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zerosum {

// Hard caps on sequence content. Term values live in [-kMaxTermValue,
// kMaxTermValue]; each side of a sequence (positive part, negative part) may
// sum to at most kMaxSideSum in absolute value. Construction fails loudly
// instead of wrapping, so every later computation fits comfortably in
// 64-bit arithmetic.
inline constexpr int kMaxTermValue = 64;
inline constexpr long long kMaxSideSum =
    static_cast<long long>(kMaxTermValue) * kMaxTermValue;
inline constexpr long long kMaxMultiplicity = kMaxSideSum;

/// Exact rational in lowest terms, denominator always positive.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);
  long long floor() const;
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);

/// An unordered multiset of integers, stored as value -> multiplicity.
/// The empty (trivial) sequence is representable; zero is a legal term.
class ZSeq {
 public:
  ZSeq() = default;
  ZSeq(std::initializer_list<std::pair<int, long long>> entries);

  /// Adds `count` copies of `value`. Throws std::invalid_argument when the
  /// count is not positive or any content cap would be exceeded.
  void add(int value, long long count = 1);

  /// Removes a single copy of `value`; throws when absent.
  void remove_one(int value);

  const std::map<int, long long>& terms() const { return terms_; }
  long long multiplicity(int value) const;
  bool trivial() const { return terms_.empty(); }
  bool contains_zero() const { return terms_.count(0) > 0; }

  long long length() const;
  long long sum() const;
  int inf_norm() const;

  /// True iff this is a sub-multiset of `other` and differs from it.
  bool proper_subseq_of(const ZSeq& other) const;

  friend bool operator==(const ZSeq&, const ZSeq&) = default;
  friend bool operator<(const ZSeq& a, const ZSeq& b) {
    return a.terms_ < b.terms_;
  }

 private:
  std::map<int, long long> terms_;
};

struct SeqStats {
  long long length = 0;
  long long sum = 0;
  std::optional<Rational> average;  // absent for the trivial sequence
  int inf_norm = 0;
};

/// Split form of a sequence with no zero term: the distinct positive values
/// and the distinct magnitudes of the negative values, each with their
/// multiplicities, ascending.
struct SplitForm {
  std::vector<std::pair<int, long long>> positives;  // (value, multiplicity)
  std::vector<std::pair<int, long long>> negatives;  // (magnitude, multiplicity)

  long long len_pos() const;      // number of positive terms, counted with multiplicity
  long long len_neg() const;
  long long sum_pos() const;
  long long sum_neg_abs() const;  // absolute value of the negative part's sum
  int min_pos() const { return positives.front().first; }
  int max_pos() const { return positives.back().first; }
  int min_neg() const { return negatives.front().first; }
  int max_neg() const { return negatives.back().first; }

  ZSeq reconstruct() const;
};

/// Parses "term(,term)*" where term is integer["^" positive-integer];
/// whitespace is ignored anywhere. Repeated values accumulate.
ZSeq parse_seq(const std::string& text);

/// Canonical text: terms in descending value order, "^k" omitted when k=1,
/// e.g. "2^3,-3^2". The trivial sequence renders as "".
std::string render(const ZSeq& s);

std::ostream& operator<<(std::ostream& out, const ZSeq& s);

SeqStats stats(const ZSeq& s);

/// Throws when s has a zero term, no positive term, or no negative term.
SplitForm split_form(const ZSeq& s);

ZSeq negate(const ZSeq& s);

/// Representative of {s, -s}: whichever has the lexicographically smaller
/// descending term list. This puts the largest magnitude on the negative
/// side whenever that value occurs with a single sign.
ZSeq canon(const ZSeq& s);

bool is_canonical(const ZSeq& s);

/// Display order used for listings, poset nodes and CSV rows:
/// length descending, then canonical text ascending.
bool display_less(const ZSeq& a, const ZSeq& b);

}  // namespace zerosum
