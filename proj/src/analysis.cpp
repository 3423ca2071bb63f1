#include "rsdl/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace rsdl {

AtomDependencyGraph atom_dependency_graph(const Theory& t) {
  AtomDependencyGraph g;
  for (const auto& f : t.facts) g.nodes.insert(f.atom);
  for (const auto& r : t.rules) {
    for (const auto& l : r.body.items) g.nodes.insert(l.atom);
    for (const auto& l : r.head.items) g.nodes.insert(l.atom);
    for (const auto& b : r.body.items)
      for (const auto& h : r.head.items) g.edges.insert({b.atom, h.atom});
  }
  return g;
}

AcyclicityResult is_acyclic(const Theory& t) {
  const auto g = atom_dependency_graph(t);
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : g.edges) adj[a].push_back(b);

  // Shortest cycle through each node via BFS back to itself.
  std::vector<std::string> best;
  for (const auto& start : g.nodes) {
    std::map<std::string, std::string> parent;
    std::deque<std::string> queue;
    for (const auto& n : adj[start]) {
      if (n == start) {
        if (best.empty() || best.size() > 1) best = {start};
        break;
      }
      if (!parent.count(n)) {
        parent[n] = start;
        queue.push_back(n);
      }
    }
    while (!queue.empty()) {
      std::string u = queue.front();
      queue.pop_front();
      for (const auto& n : adj[u]) {
        if (n == start) {
          std::vector<std::string> cycle{u};
          while (cycle.back() != start) cycle.push_back(parent[cycle.back()]);
          std::reverse(cycle.begin(), cycle.end());
          if (best.empty() || cycle.size() < best.size()) best = cycle;
          queue.clear();
          break;
        }
        if (!parent.count(n)) {
          parent[n] = u;
          queue.push_back(n);
        }
      }
    }
  }
  if (best.empty()) return {true, {}};
  return {false, best};
}

long derivation_bound(const Theory& t) {
  if (!is_acyclic(t).acyclic)
    throw std::invalid_argument("derivation_bound requires an acyclic atom dependency graph");
  long bound = (long)t.facts.size();
  for (const auto& r : t.rules) bound += (long)r.head.items.size();
  return bound;
}

AuditReport audit(const Extension& e) {
  AuditReport rep;
  auto flag = [&](std::string m) { rep.violations.push_back(std::move(m)); };

  std::set<Literal> pos_delta, pos_partial_strength;
  for (const auto& [l, n] : e.pos_delta) {
    pos_delta.insert(l);
    pos_partial_strength.insert(l);  // strict conclusions count defeasibly too
  }
  for (const auto& [l, n] : e.pos_partial) pos_partial_strength.insert(l);

  std::set<std::string> seen;
  for (const auto& l : pos_partial_strength) {
    if (!seen.insert(l.atom).second) continue;
    Literal pos{l.atom, false}, neg{l.atom, true};
    bool strict_both = pos_delta.count(pos) && pos_delta.count(neg);
    bool partial_both = pos_partial_strength.count(pos) && pos_partial_strength.count(neg);
    if (strict_both) {
      rep.strict_conflict = true;
      rep.consistent = false;
      flag("strict conflict on " + l.atom);
    } else if (partial_both) {
      rep.consistent = false;
      flag("defeasible conflict on " + l.atom);
    }
  }

  for (const auto& l : e.neg_delta)
    if (pos_delta.count(l)) {
      rep.coherent = false;
      flag("incoherent strict conclusion " + to_string(l));
    }
  for (const auto& l : e.neg_partial)
    if (pos_partial_strength.count(l)) {
      rep.coherent = false;
      flag("incoherent defeasible conclusion " + to_string(l));
    }
  return rep;
}

}  // namespace rsdl
