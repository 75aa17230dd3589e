#include <zerosum/sequence.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zerosum {

Rational Rational::of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

long long Rational::floor() const {
  if (num >= 0) return num / den;
  return -((-num + den - 1) / den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

bool operator<=(const Rational& a, const Rational& b) {
  return a.num * b.den <= b.num * a.den;
}

ZSeq::ZSeq(std::initializer_list<std::pair<int, long long>> entries) {
  for (const auto& [value, count] : entries) add(value, count);
}

void ZSeq::add(int value, long long count) {
  if (count < 1)
    throw std::invalid_argument("ZSeq: multiplicity must be positive");
  if (value < -kMaxTermValue || value > kMaxTermValue)
    throw std::invalid_argument("ZSeq: term value " + std::to_string(value) +
                                " out of range [-" +
                                std::to_string(kMaxTermValue) + ", " +
                                std::to_string(kMaxTermValue) + "]");
  long long& mult = terms_[value];
  if (count > kMaxMultiplicity - mult) {
    if (mult == 0) terms_.erase(value);
    throw std::invalid_argument("ZSeq: multiplicity cap exceeded for value " +
                                std::to_string(value));
  }
  mult += count;
  if (value != 0) {
    long long side = 0;
    for (const auto& [v, m] : terms_)
      if ((v > 0) == (value > 0)) side += static_cast<long long>(v < 0 ? -v : v) * m;
    if (side > kMaxSideSum) {
      mult -= count;
      if (mult == 0) terms_.erase(value);
      throw std::invalid_argument("ZSeq: side sum cap exceeded");
    }
  }
}

void ZSeq::remove_one(int value) {
  auto it = terms_.find(value);
  if (it == terms_.end())
    throw std::invalid_argument("ZSeq: value " + std::to_string(value) +
                                " not present");
  if (--it->second == 0) terms_.erase(it);
}

long long ZSeq::multiplicity(int value) const {
  auto it = terms_.find(value);
  return it == terms_.end() ? 0 : it->second;
}

long long ZSeq::length() const {
  long long len = 0;
  for (const auto& [v, m] : terms_) len += m;
  return len;
}

long long ZSeq::sum() const {
  long long total = 0;
  for (const auto& [v, m] : terms_) total += static_cast<long long>(v) * m;
  return total;
}

int ZSeq::inf_norm() const {
  if (terms_.empty()) return 0;
  int lo = terms_.begin()->first;
  int hi = terms_.rbegin()->first;
  return std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi);
}

bool ZSeq::proper_subseq_of(const ZSeq& other) const {
  if (*this == other) return false;
  for (const auto& [v, m] : terms_)
    if (m > other.multiplicity(v)) return false;
  return true;
}

namespace {

long long parse_integer(const std::string& tok, const std::string& text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("parse_seq: malformed term '" + tok + "'");
  return value;
}

std::vector<int> descending_terms(const ZSeq& s) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(s.length()));
  const auto& terms = s.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    out.insert(out.end(), static_cast<size_t>(it->second), it->first);
  return out;
}

}  // namespace

ZSeq parse_seq(const std::string& text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("parse_seq: empty input");

  ZSeq out;
  size_t pos = 0;
  while (true) {
    size_t comma = t.find(',', pos);
    std::string tok = comma == std::string::npos ? t.substr(pos)
                                                 : t.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument("parse_seq: empty term");

    size_t caret = tok.find('^');
    long long value = parse_integer(tok, tok.substr(0, caret));
    long long mult = 1;
    if (caret != std::string::npos) {
      std::string mult_text = tok.substr(caret + 1);
      if (mult_text.find('^') != std::string::npos)
        throw std::invalid_argument("parse_seq: malformed term '" + tok + "'");
      mult = parse_integer(tok, mult_text);
      if (mult < 1)
        throw std::invalid_argument(
            "parse_seq: multiplicity must be positive in '" + tok + "'");
    }
    if (value < -kMaxTermValue || value > kMaxTermValue)
      throw std::invalid_argument("parse_seq: term value out of range in '" +
                                  tok + "'");
    out.add(static_cast<int>(value), mult);

    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string render(const ZSeq& s) {
  std::string out;
  const auto& terms = s.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += std::to_string(it->first);
    if (it->second > 1) {
      out += '^';
      out += std::to_string(it->second);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const ZSeq& s) {
  return out << render(s);
}

SeqStats stats(const ZSeq& s) {
  SeqStats st;
  st.length = s.length();
  st.sum = s.sum();
  st.inf_norm = s.inf_norm();
  if (st.length > 0) st.average = Rational::of(st.sum, st.length);
  return st;
}

SplitForm split_form(const ZSeq& s) {
  if (s.contains_zero())
    throw std::invalid_argument("split_form: sequence contains a zero term");
  SplitForm f;
  for (const auto& [v, m] : s.terms()) {
    if (v > 0) f.positives.emplace_back(v, m);
  }
  // Negative values ascend, so their magnitudes descend; flip them.
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
    if (it->first < 0) f.negatives.emplace_back(-it->first, it->second);
  if (f.positives.empty())
    throw std::invalid_argument("split_form: no positive terms");
  if (f.negatives.empty())
    throw std::invalid_argument("split_form: no negative terms");
  return f;
}

long long SplitForm::len_pos() const {
  long long len = 0;
  for (const auto& [v, m] : positives) len += m;
  return len;
}

long long SplitForm::len_neg() const {
  long long len = 0;
  for (const auto& [v, m] : negatives) len += m;
  return len;
}

long long SplitForm::sum_pos() const {
  long long total = 0;
  for (const auto& [v, m] : positives) total += static_cast<long long>(v) * m;
  return total;
}

long long SplitForm::sum_neg_abs() const {
  long long total = 0;
  for (const auto& [v, m] : negatives) total += static_cast<long long>(v) * m;
  return total;
}

ZSeq SplitForm::reconstruct() const {
  ZSeq s;
  for (const auto& [v, m] : positives) s.add(v, m);
  for (const auto& [v, m] : negatives) s.add(-v, m);
  return s;
}

ZSeq negate(const ZSeq& s) {
  ZSeq out;
  for (const auto& [v, m] : s.terms()) out.add(-v, m);
  return out;
}

ZSeq canon(const ZSeq& s) {
  ZSeq neg = negate(s);
  std::vector<int> mine = descending_terms(s);
  std::vector<int> theirs = descending_terms(neg);
  if (std::lexicographical_compare(theirs.begin(), theirs.end(), mine.begin(),
                                   mine.end()))
    return neg;
  return s;
}

bool is_canonical(const ZSeq& s) { return canon(s) == s; }

bool display_less(const ZSeq& a, const ZSeq& b) {
  long long la = a.length();
  long long lb = b.length();
  if (la != lb) return la > lb;
  return render(a) < render(b);
}

}  // namespace zerosum
