#include <zerosum/bounds.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <zerosum/minimality.hpp>

namespace zerosum {

namespace {

long long ceil_div(long long x, long long y) { return (x + y - 1) / y; }

std::string csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::pair<int, int> lambert_bounds(const SplitForm& f) {
  return {f.max_neg(), f.max_pos()};
}

std::pair<std::vector<long long>, std::vector<long long>> hw_bounds(
    const SplitForm& f) {
  const auto& pos = f.positives;
  const auto& neg = f.negatives;

  std::vector<long long> pos_bounds;
  pos_bounds.reserve(neg.size());
  for (size_t l = 0; l < neg.size(); ++l) {
    long long u = neg[l].first;
    for (size_t j = 0; j < l; ++j)
      u -= ((neg[l].first - neg[j].first) / f.max_pos()) * neg[j].second;
    for (size_t j = l + 1; j < neg.size(); ++j)
      u += ceil_div(neg[j].first - neg[l].first, f.min_pos()) * neg[j].second;
    pos_bounds.push_back(u);
  }

  std::vector<long long> neg_bounds;
  neg_bounds.reserve(pos.size());
  for (size_t k = 0; k < pos.size(); ++k) {
    long long u = pos[k].first;
    for (size_t i = 0; i < k; ++i)
      u -= ((pos[k].first - pos[i].first) / f.max_neg()) * pos[i].second;
    for (size_t i = k + 1; i < pos.size(); ++i)
      u += ceil_div(pos[i].first - pos[k].first, f.min_neg()) * pos[i].second;
    neg_bounds.push_back(u);
  }

  return {pos_bounds, neg_bounds};
}

std::pair<long long, long long> main_bounds(const SplitForm& f) {
  return {f.sum_neg_abs() / f.len_neg(), f.sum_pos() / f.len_pos()};
}

std::pair<std::optional<long long>, std::optional<long long>> refined_bounds(
    const SplitForm& f) {
  std::optional<long long> pos_bound;
  if (f.len_neg() >= 2) {
    for (const auto& [b, y] : f.negatives) {
      if (b >= f.max_pos()) continue;
      if (b * f.len_neg() <= f.sum_neg_abs()) continue;
      long long candidate = (f.sum_neg_abs() - b) / (f.len_neg() - 1);
      if (!pos_bound || candidate < *pos_bound) pos_bound = candidate;
    }
  }
  std::optional<long long> neg_bound;
  if (f.len_pos() >= 2) {
    for (const auto& [a, x] : f.positives) {
      if (a >= f.max_neg()) continue;
      if (a * f.len_pos() <= f.sum_pos()) continue;
      long long candidate = (f.sum_pos() - a) / (f.len_pos() - 1);
      if (!neg_bound || candidate < *neg_bound) neg_bound = candidate;
    }
  }
  return {pos_bound, neg_bound};
}

BoundReport bound_report(const ZSeq& s) {
  if (s.sum() != 0)
    throw std::invalid_argument("bound_report: sum is " +
                                std::to_string(s.sum()) + ", not zero");
  SplitForm f = split_form(s);
  if (f.sum_pos() != f.sum_neg_abs())
    throw std::logic_error("bound_report: side sums disagree for " +
                           render(s));

  BoundReport r;
  r.seq = s;
  r.len_pos = f.len_pos();
  r.len_neg = f.len_neg();
  std::tie(r.lambert_pos, r.lambert_neg) = lambert_bounds(f);
  std::tie(r.hw_pos, r.hw_neg) = hw_bounds(f);
  r.hw_pos_min = *std::min_element(r.hw_pos.begin(), r.hw_pos.end());
  r.hw_neg_min = *std::min_element(r.hw_neg.begin(), r.hw_neg.end());
  std::tie(r.main_pos, r.main_neg) = main_bounds(f);
  std::tie(r.refined_pos, r.refined_neg) = refined_bounds(f);
  r.tight_pos = r.len_pos == r.main_pos;
  r.tight_neg = r.len_neg == r.main_neg;
  return r;
}

ZSeq tight_family(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("tight_family: values must be >= 1");
  int g = std::gcd(a, b);
  ZSeq s{{a, b / g}, {-b, a / g}};
  if (!is_minimal_fast(s).minimal)
    throw std::logic_error("tight_family: " + render(s) + " is not minimal");
  return canon(s);
}

DominanceSummary dominance_scan(const AtomSet& atoms) {
  DominanceSummary d;
  d.n = atoms.n;
  for (const ZSeq& s : atoms.atoms) {
    if (s.length() < 2) continue;
    ++d.scanned;
    BoundReport r = bound_report(s);
    SplitForm f = split_form(s);

    auto fail = [&](const std::string& what) {
      throw std::logic_error("dominance violated for " + render(s) + ": " +
                             what);
    };

    if (r.len_pos > r.main_pos || r.len_neg > r.main_neg)
      fail("length exceeds the average bound");
    if (r.main_pos > r.lambert_pos || r.main_neg > r.lambert_neg)
      fail("average bound exceeds the extreme-value bound");
    for (long long u : r.hw_pos)
      if (r.len_pos > u) fail("length exceeds a corrected bound");
    for (long long u : r.hw_neg)
      if (r.len_neg > u) fail("length exceeds a corrected bound");
    if (r.refined_pos && (r.len_pos > *r.refined_pos ||
                          *r.refined_pos > r.main_pos))
      fail("refined bound out of order");
    if (r.refined_neg && (r.len_neg > *r.refined_neg ||
                          *r.refined_neg > r.main_neg))
      fail("refined bound out of order");

    if (f.min_pos() <= r.len_neg) {
      ++d.in_class_pos;
      for (long long u : r.hw_pos)
        if (f.sum_neg_abs() > u * r.len_neg)
          fail("in-class average exceeds a corrected bound");
      if (r.main_pos < r.hw_pos_min)
        ++d.strict_pos;
      else
        ++d.tie_pos;
    } else {
      ++d.out_class_pos;
    }

    if (f.min_neg() <= r.len_pos) {
      ++d.in_class_neg;
      for (long long u : r.hw_neg)
        if (f.sum_pos() > u * r.len_pos)
          fail("in-class average exceeds a corrected bound");
      if (r.main_neg < r.hw_neg_min)
        ++d.strict_neg;
      else
        ++d.tie_neg;
    } else {
      ++d.out_class_neg;
    }

    if (r.tight_pos) ++d.tight_pos;
    if (r.tight_neg) ++d.tight_neg;
    if (r.tight_pos && r.tight_neg) ++d.tight_both;
  }
  return d;
}

std::string to_text(const DominanceSummary& d) {
  std::string out;
  out += "n=" + std::to_string(d.n) +
         " scanned=" + std::to_string(d.scanned) + "\n";
  out += "pos: in-class=" + std::to_string(d.in_class_pos) +
         " strict=" + std::to_string(d.strict_pos) +
         " tie=" + std::to_string(d.tie_pos) +
         " out-of-class=" + std::to_string(d.out_class_pos) + "\n";
  out += "neg: in-class=" + std::to_string(d.in_class_neg) +
         " strict=" + std::to_string(d.strict_neg) +
         " tie=" + std::to_string(d.tie_neg) +
         " out-of-class=" + std::to_string(d.out_class_neg) + "\n";
  out += "tight: pos=" + std::to_string(d.tight_pos) +
         " neg=" + std::to_string(d.tight_neg) +
         " both=" + std::to_string(d.tight_both) + "\n";
  return out;
}

std::string bounds_csv(const AtomSet& atoms) {
  std::vector<ZSeq> rows;
  for (const ZSeq& s : atoms.atoms)
    if (s.length() >= 2) rows.push_back(s);
  std::sort(rows.begin(), rows.end(), display_less);

  std::string out =
      "seq,len_pos,len_neg,lambert_pos,lambert_neg,hw_pos_min,hw_neg_min,"
      "main_pos,main_neg,refined_pos,refined_neg,tight_pos,tight_neg\n";
  for (const ZSeq& s : rows) {
    BoundReport r = bound_report(s);
    out += "\"" + render(s) + "\"";
    out += "," + std::to_string(r.len_pos);
    out += "," + std::to_string(r.len_neg);
    out += "," + std::to_string(r.lambert_pos);
    out += "," + std::to_string(r.lambert_neg);
    out += "," + std::to_string(r.hw_pos_min);
    out += "," + std::to_string(r.hw_neg_min);
    out += "," + std::to_string(r.main_pos);
    out += "," + std::to_string(r.main_neg);
    out += "," + (r.refined_pos ? std::to_string(*r.refined_pos) : "");
    out += "," + (r.refined_neg ? std::to_string(*r.refined_neg) : "");
    out += "," + csv_bool(r.tight_pos);
    out += "," + csv_bool(r.tight_neg);
    out += "\n";
  }
  return out;
}

}  // namespace zerosum
