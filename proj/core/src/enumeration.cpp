#include <zerosum/enumeration.hpp>

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include <zerosum/io.hpp>
#include <zerosum/minimality.hpp>
#include <zerosum/version.hpp>

#include "atom_json.hpp"

namespace zerosum {

bool AtomSet::contains(const ZSeq& canonical) const {
  return std::binary_search(atoms.begin(), atoms.end(), canonical);
}

namespace {

void partitions_rec(long long remaining, int max_part, int parts_left,
                    std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  int hi = static_cast<int>(std::min<long long>(max_part, remaining));
  for (int p = hi; p >= 1; --p) {
    if (static_cast<long long>(p) * parts_left < remaining) break;
    cur.push_back(p);
    partitions_rec(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

bool share_value(const std::vector<int>& a, const std::vector<int>& b) {
  // Both lists descend.
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] > b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> bounded_partitions(long long total, int max_part,
                                                 int max_parts) {
  if (total < 1 || max_part < 1 || max_parts < 1)
    throw std::invalid_argument("bounded_partitions: arguments must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(total, max_part, max_parts, cur, out);
  return out;
}

AtomSet enumerate_atoms(int n, const EnumerateOptions& opts) {
  if (n < 1 || n > kMaxEnumerationN)
    throw std::invalid_argument("enumerate_atoms: n must be in [1, " +
                                std::to_string(kMaxEnumerationN) + "]");

  // Any atom with more than one term and no zero term splits into a
  // positive and a negative part with a common absolute sum s <= n^2, each
  // part a partition of s with at most n parts (no side is longer than the
  // other side's largest magnitude) of size at most n.
  const long long max_sum = static_cast<long long>(n) * n;
  auto scan_sum = [&](long long s) {
    std::vector<ZSeq> found;
    const auto parts = bounded_partitions(s, n, n);
    for (size_t i = 0; i < parts.size(); ++i) {
      for (size_t j = i; j < parts.size(); ++j) {
        const auto& p = parts[i];
        const auto& q = parts[j];
        if (opts.prune &&
            static_cast<long long>(p.size()) * static_cast<long long>(q.size()) > s)
          continue;
        // A value on both sides collapses any longer minimal sequence.
        if (p.size() + q.size() > 2 && share_value(p, q)) continue;
        ZSeq cand;
        for (int v : p) cand.add(v);
        for (int v : q) cand.add(-v);
        if (is_minimal_fast(cand).minimal) found.push_back(canon(cand));
      }
    }
    return found;
  };

  std::vector<std::vector<ZSeq>> per_sum(static_cast<size_t>(max_sum) + 1);
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (long long s = 1; s <= max_sum; ++s)
      per_sum[static_cast<size_t>(s)] = scan_sum(s);
  } else {
    std::atomic<long long> next{1};
    auto worker = [&] {
      for (long long s = next.fetch_add(1); s <= max_sum;
           s = next.fetch_add(1))
        per_sum[static_cast<size_t>(s)] = scan_sum(s);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::set<ZSeq> all;
  all.insert(ZSeq{{0, 1}});
  for (int a = 1; a <= n; ++a) all.insert(ZSeq{{a, 1}, {-a, 1}});
  for (long long s = 1; s <= max_sum; ++s)
    for (const auto& atom : per_sum[static_cast<size_t>(s)]) all.insert(atom);

  AtomSet result;
  result.n = n;
  result.atoms.assign(all.begin(), all.end());
  result.provenance = {kEngineVersion, opts.prune};
  return result;
}

AtomSet brute_force_atoms(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("brute_force_atoms: n must be in [1, 4]");

  std::vector<int> values;
  for (int v = -n; v <= n; ++v)
    if (v != 0) values.push_back(v);

  std::set<ZSeq> all;
  all.insert(ZSeq{{0, 1}});

  const long long max_len = 2 * n;  // no atom is longer (see tests)
  std::vector<long long> counts(values.size(), 0);
  // Odometer over all multisets of length 1..2n.
  while (true) {
    size_t i = 0;
    long long used = 0;
    for (size_t k = 0; k < counts.size(); ++k) used += counts[k];
    while (i < counts.size() && (counts[i] == max_len || used == max_len)) {
      used -= counts[i];
      counts[i++] = 0;
    }
    if (i == counts.size()) break;
    ++counts[i];

    long long sum = 0;
    long long len = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
      sum += static_cast<long long>(values[k]) * counts[k];
      len += counts[k];
    }
    if (len == 0 || sum != 0) continue;
    ZSeq cand;
    for (size_t k = 0; k < counts.size(); ++k)
      if (counts[k] > 0) cand.add(values[k], counts[k]);
    if (is_minimal_oracle(cand).minimal) all.insert(canon(cand));
  }

  AtomSet result;
  result.n = n;
  result.atoms.assign(all.begin(), all.end());
  result.provenance = {kEngineVersion, false};
  return result;
}

void validate_atom_set(const AtomSet& a) {
  auto fail = [](const std::string& what) {
    throw std::runtime_error("atom set invariant violated: " + what);
  };
  if (a.n < 1 || a.n > kMaxEnumerationN) fail("n out of range");
  if (!std::is_sorted(a.atoms.begin(), a.atoms.end()) ||
      std::adjacent_find(a.atoms.begin(), a.atoms.end()) != a.atoms.end())
    fail("members not sorted and unique");
  for (const ZSeq& s : a.atoms) {
    if (s.trivial()) fail("trivial member");
    if (s.inf_norm() > a.n) fail("norm of " + render(s) + " exceeds n");
    if (!is_zero_sum(s)) fail(render(s) + " does not sum to zero");
    if (!is_canonical(s)) fail(render(s) + " is not canonical");
    if (!is_minimal_fast(s).minimal) fail(render(s) + " is not minimal");
  }
  if (!a.contains(ZSeq{{0, 1}})) fail("zero atom missing");
  for (int v = 1; v <= a.n; ++v)
    if (!a.contains(ZSeq{{v, 1}, {-v, 1}}))
      fail("pair atom " + std::to_string(v) + ",-" + std::to_string(v) +
           " missing");
}

std::string atom_set_json(const AtomSet& a) {
  nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
  for (const ZSeq& s : a.atoms) atoms.push_back(detail::atom_to_json(s));
  nlohmann::ordered_json doc = {{"schema", kSchemaVersion},
                                {"n", a.n},
                                {"count", a.atoms.size()},
                                {"atoms", atoms}};
  return doc.dump() + "\n";
}

void save_atoms(const AtomSet& a, const std::filesystem::path& path) {
  write_file_atomic(path, atom_set_json(a));
}

AtomSet load_atoms(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("load_atoms: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("schema") || !doc.contains("n") ||
      !doc.contains("count") || !doc.contains("atoms"))
    throw std::runtime_error("load_atoms: missing required fields");
  if (!doc["schema"].is_number_integer() ||
      doc["schema"].get<int>() != kSchemaVersion)
    throw std::runtime_error("load_atoms: unsupported schema");
  if (!doc["n"].is_number_integer() || !doc["count"].is_number_integer() ||
      !doc["atoms"].is_array())
    throw std::runtime_error("load_atoms: malformed fields");

  AtomSet result;
  result.n = doc["n"].get<int>();
  for (const auto& entry : doc["atoms"])
    result.atoms.push_back(detail::atom_from_json(entry));
  if (doc["count"].get<long long>() !=
      static_cast<long long>(result.atoms.size()))
    throw std::runtime_error("load_atoms: count does not match atom list");
  result.provenance = {kEngineVersion, true};
  validate_atom_set(result);
  return result;
}

}  // namespace zerosum
