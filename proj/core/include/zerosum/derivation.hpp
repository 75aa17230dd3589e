#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <zerosum/enumeration.hpp>
#include <zerosum/sequence.hpp>

namespace zerosum {

/// Replaces one copy each of u and v by their sum (u == v needs
/// multiplicity >= 2). Derivations of minimal zero-sum sequences stay
/// minimal and zero-sum.
ZSeq derive(const ZSeq& s, int u, int v);

/// Canonical forms of every one-step derivation of the atom s that stays
/// within [-n, n].
std::set<ZSeq> derived_set(const ZSeq& s, int n);

/// Atoms ordered by derivability: edges point from an atom to each of its
/// one-step derivations. Edges always drop the length by exactly one, so
/// the graph is acyclic and the reflexive-transitive closure of the edge
/// relation is a partial order.
struct DerivationPoset {
  int n = 0;
  std::vector<ZSeq> nodes;                 // display order (see display_less)
  std::vector<std::pair<int, int>> edges;  // (parent, child) indices, sorted

  int node_index(const ZSeq& canonical) const;  // -1 when absent
  std::vector<int> in_degrees() const;
};

struct MaximalSet {
  int n = 0;
  std::vector<ZSeq> members;  // display order
};

/// Builds the poset over a complete atom set. Every derived atom must
/// already be a node; a miss means the atom set is incomplete and raises
/// std::logic_error.
DerivationPoset build_poset(const AtomSet& atoms);

/// Nodes with no incoming edge.
MaximalSet maximal_elements(const DerivationPoset& p);

/// Least superset of q closed under one-step derivation within [-n, n]
/// (iterated to a fixed point). Members of q must be canonical atoms.
std::set<ZSeq> close_under_derivation(const std::set<ZSeq>& q, int n);

/// q together with its one-step derivations only; no iteration.
std::set<ZSeq> one_step_closure(const std::set<ZSeq>& q, int n);

/// Deterministic DOT digraph: nodes labeled by canonical text, one
/// rank group per length, edges parent -> child.
std::string export_dot(const DerivationPoset& p);

/// {"schema":1,"n":..,"nodes":[..],"edges":[[parent,child],..]} with nodes
/// in display order, newline-terminated.
std::string poset_json(const DerivationPoset& p);

/// Canonical forms of a^[b/g], (-b)^[a/g] for 1 <= a, b <= n (g = gcd),
/// sorted and deduplicated.
std::vector<ZSeq> diagonal_family(int n);

}  // namespace zerosum
