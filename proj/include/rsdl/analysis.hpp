#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/enumerate.hpp"
#include "rsdl/theory.hpp"

namespace rsdl {

// Nodes are atoms; there is an edge a -> b when some rule has a or ~a in
// its body and b or ~b in its head.
struct AtomDependencyGraph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
};

AtomDependencyGraph atom_dependency_graph(const Theory& t);

struct AcyclicityResult {
  bool acyclic = true;
  std::vector<std::string> cycle;  // one shortest cycle when cyclic
};

AcyclicityResult is_acyclic(const Theory& t);

// |facts| + total head-literal occurrences over all rules: an upper bound
// on proof-matrix rows for acyclic theories without convergent production.
// Throws std::invalid_argument when the theory is cyclic.
long derivation_bound(const Theory& t);

struct AuditReport {
  bool consistent = true;
  bool coherent = true;
  bool strict_conflict = false;  // +Delta x and +Delta ~x both concluded
  std::vector<std::string> violations;
};

// Consistency: no literal and its complement both positively concluded at
// the same strength (strict conflicts reported separately). Coherence: no
// literal both positively and negatively concluded at the same strength.
AuditReport audit(const Extension& e);

}  // namespace rsdl
