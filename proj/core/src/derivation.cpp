#include <zerosum/derivation.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include <zerosum/minimality.hpp>
#include <zerosum/version.hpp>

#include "atom_json.hpp"

namespace zerosum {

ZSeq derive(const ZSeq& s, int u, int v) {
  if (u == v) {
    if (s.multiplicity(u) < 2)
      throw std::invalid_argument(
          "derive: need two copies of " + std::to_string(u));
  } else if (s.multiplicity(u) < 1 || s.multiplicity(v) < 1) {
    throw std::invalid_argument("derive: pair (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") not present in " +
                                render(s));
  }
  ZSeq out = s;
  out.remove_one(u);
  out.remove_one(v);
  out.add(u + v);
  return out;
}

std::set<ZSeq> derived_set(const ZSeq& s, int n) {
  if (n < 1) throw std::invalid_argument("derived_set: n must be >= 1");
  if (s.inf_norm() > n)
    throw std::invalid_argument("derived_set: " + render(s) +
                                " exceeds norm " + std::to_string(n));
  if (!is_minimal_fast(s).minimal)
    throw std::invalid_argument("derived_set: " + render(s) +
                                " is not minimal");

  std::set<ZSeq> out;
  const auto& terms = s.terms();
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    for (auto jt = it; jt != terms.end(); ++jt) {
      if (it == jt && it->second < 2) continue;
      int u = it->first;
      int v = jt->first;
      // A canceling pair inside a longer minimal sequence is impossible.
      if (u + v == 0 && s.length() > 2)
        throw std::logic_error("derived_set: canceling pair in " + render(s));
      ZSeq child = derive(s, u, v);
      if (child.inf_norm() > n) continue;
      if (!is_minimal_fast(child).minimal)
        throw std::logic_error("derived_set: derivation of " + render(s) +
                               " lost minimality at " + render(child));
      out.insert(canon(child));
    }
  }
  return out;
}

int DerivationPoset::node_index(const ZSeq& canonical) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == canonical) return static_cast<int>(i);
  return -1;
}

std::vector<int> DerivationPoset::in_degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (const auto& [parent, child] : edges) ++deg[static_cast<size_t>(child)];
  return deg;
}

DerivationPoset build_poset(const AtomSet& atoms) {
  DerivationPoset p;
  p.n = atoms.n;
  p.nodes = atoms.atoms;
  std::sort(p.nodes.begin(), p.nodes.end(), display_less);

  std::map<ZSeq, int> index;
  for (size_t i = 0; i < p.nodes.size(); ++i)
    index.emplace(p.nodes[i], static_cast<int>(i));

  for (size_t i = 0; i < p.nodes.size(); ++i) {
    for (const ZSeq& child : derived_set(p.nodes[i], atoms.n)) {
      auto it = index.find(child);
      if (it == index.end())
        throw std::logic_error("build_poset: derivation of " +
                               render(p.nodes[i]) + " produced " +
                               render(child) +
                               ", which is missing from the atom set");
      p.edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  std::sort(p.edges.begin(), p.edges.end());
  return p;
}

MaximalSet maximal_elements(const DerivationPoset& p) {
  MaximalSet m;
  m.n = p.n;
  const std::vector<int> deg = p.in_degrees();
  for (size_t i = 0; i < p.nodes.size(); ++i)
    if (deg[i] == 0) m.members.push_back(p.nodes[i]);
  return m;
}

std::set<ZSeq> close_under_derivation(const std::set<ZSeq>& q, int n) {
  std::set<ZSeq> closed;
  std::vector<ZSeq> work;
  for (const ZSeq& s : q) {
    ZSeq c = canon(s);
    if (closed.insert(c).second) work.push_back(c);
  }
  while (!work.empty()) {
    ZSeq s = work.back();
    work.pop_back();
    for (const ZSeq& child : derived_set(s, n))
      if (closed.insert(child).second) work.push_back(child);
  }
  return closed;
}

std::set<ZSeq> one_step_closure(const std::set<ZSeq>& q, int n) {
  std::set<ZSeq> out;
  for (const ZSeq& s : q) out.insert(canon(s));
  for (const ZSeq& s : q)
    for (const ZSeq& child : derived_set(s, n)) out.insert(child);
  return out;
}

std::string export_dot(const DerivationPoset& p) {
  std::string dot;
  dot += "digraph poset_n" + std::to_string(p.n) + " {\n";
  dot += "  rankdir=TB;\n";
  dot += "  node [shape=box];\n";
  size_t i = 0;
  while (i < p.nodes.size()) {
    long long len = p.nodes[i].length();
    dot += "  { rank=same;";
    while (i < p.nodes.size() && p.nodes[i].length() == len) {
      dot += " \"" + render(p.nodes[i]) + "\";";
      ++i;
    }
    dot += " }\n";
  }
  for (const auto& [parent, child] : p.edges)
    dot += "  \"" + render(p.nodes[static_cast<size_t>(parent)]) + "\" -> \"" +
           render(p.nodes[static_cast<size_t>(child)]) + "\";\n";
  dot += "}\n";
  return dot;
}

std::string poset_json(const DerivationPoset& p) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const ZSeq& s : p.nodes) nodes.push_back(detail::atom_to_json(s));
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [parent, child] : p.edges)
    edges.push_back({parent, child});
  nlohmann::ordered_json doc = {{"schema", kSchemaVersion},
                                {"n", p.n},
                                {"nodes", nodes},
                                {"edges", edges}};
  return doc.dump() + "\n";
}

std::vector<ZSeq> diagonal_family(int n) {
  if (n < 1) throw std::invalid_argument("diagonal_family: n must be >= 1");
  std::set<ZSeq> family;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      int g = std::gcd(a, b);
      family.insert(canon(ZSeq{{a, b / g}, {-b, a / g}}));
    }
  }
  return std::vector<ZSeq>(family.begin(), family.end());
}

}  // namespace zerosum
