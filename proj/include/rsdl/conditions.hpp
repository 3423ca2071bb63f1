#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rsdl/rule.hpp"
#include "rsdl/state.hpp"

namespace rsdl {

// Witness: one instance row per body position, jointly injective.
using Witness = std::vector<int>;

// Status of a rule against a derivation state at a given tag strength.
// consumable implies applicable; discarded implies non_consumable; the
// witness is present exactly when the rule is consumable.
struct RuleStatus {
  bool applicable = false;
  bool consumable = false;
  bool discarded = false;
  bool non_consumable = false;
  std::optional<Witness> witness;
};

// Multiset bodies: applicable when every distinct body literal has a
// positive proof (consumed instances count); consumable when an injective
// assignment of positions to unconsumed instances exists (k copies of a
// literal need k instances); discarded when some body literal carries a
// negative record. Sigma ignores consumption entirely.
RuleStatus ms_status(const Rule& r, const DerivationState& s, Strength strength);

// Sequence bodies: as above, but the assignment must be strictly increasing
// in birth column along the body. Discarded additionally covers conclusive
// order violations: instances for every position exist but no assignment
// respects the order.
RuleStatus seq_status(const Rule& r, const DerivationState& s, Strength strength);

// Dispatch on the rule's body structure.
RuleStatus rule_status(const Rule& r, const DerivationState& s, Strength strength);

// Advance one column, marking exactly the witnessed rows consumed.
// Throws std::invalid_argument on double consumption or unknown rows.
DerivationState consume(const DerivationState& s, const Witness& rows);

// All distinct consumable witnesses for r (consumed-row multisets are
// deduplicated for multiset bodies by construction: combinations, not
// permutations). Ordered lexicographically by rows.
std::vector<Witness> enumerate_witnesses(const Rule& r, const DerivationState& s,
                                         Strength strength);

}  // namespace rsdl
