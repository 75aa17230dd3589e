#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <zerosum/sequence.hpp>

namespace zerosum {

// Practical ceiling for full enumeration; partitions pairs grow quickly
// beyond this.
inline constexpr int kMaxEnumerationN = 12;

struct EnumerateOptions {
  int jobs = 1;
  // Drop partition pairs whose side lengths already violate the average
  // bound. Disabling this must not change the result (see tests).
  bool prune = true;
};

/// All minimal zero-sum sequences over [-n, n], one canonical
/// representative per negation class, sorted.
struct AtomSet {
  struct Provenance {
    int engine_version = 0;
    bool pruned = true;
  };

  int n = 0;
  std::vector<ZSeq> atoms;
  Provenance provenance;

  bool contains(const ZSeq& canonical) const;
};

/// Partitions of `total` into at most `max_parts` parts, each at most
/// `max_part`, as descending part lists; e.g. (3,3,3) -> {3},{2,1},{1,1,1}.
std::vector<std::vector<int>> bounded_partitions(long long total, int max_part,
                                                 int max_parts);

/// Enumerates atoms by pairing bounded partitions of each common side sum
/// s in [1, n^2] and keeping the pairs that form minimal sequences. The
/// search is complete: any atom has at most n terms per side, each of
/// magnitude at most n.
AtomSet enumerate_atoms(int n, const EnumerateOptions& opts = {});

/// Independent oracle: exhaustive scan over all multisets with terms in
/// [-n,n]\{0} of length at most 2n (plus {0:1}), filtered by the
/// exhaustive minimality checker. Only feasible for n <= 4.
AtomSet brute_force_atoms(int n);

/// Throws std::runtime_error when any AtomSet invariant fails: members
/// canonical, minimal, zero-sum, within norm, sorted and unique, and the
/// zero atom and all pairs a,(-a) present.
void validate_atom_set(const AtomSet& a);

/// Cache JSON: {"schema":1,"n":..,"count":..,"atoms":[{"pos":[[v,m],..],
/// "neg":[[v,m],..],"zero":0|1},..]}, newline-terminated.
std::string atom_set_json(const AtomSet& a);

void save_atoms(const AtomSet& a, const std::filesystem::path& path);

/// Reads and re-validates a cache file; never trusts stale content.
AtomSet load_atoms(const std::filesystem::path& path);

}  // namespace zerosum
