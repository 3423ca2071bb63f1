#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/conditions.hpp"
#include "rsdl/state.hpp"
#include "rsdl/theory.hpp"

namespace rsdl {

struct EngineOptions {
  // Team-defeat consumption: false takes one witness per distinct defeating
  // rule, true takes one per defeated attacker.
  bool consume_per_attacker = false;

  bool operator==(const EngineOptions&) const = default;
};

// One derivation step: a rule firing (or a single sequence-head emission).
// defeat_choice maps every live attacker of the produced literal(s) to the
// superior consumable rule chosen against it; consume_witnesses lists the
// (rule, rows) pairs actually consumed by this move.
struct Move {
  std::string rule;
  Tag produced_tag = Tag::PlusPartial;  // PlusDelta or PlusPartial
  Witness witness;                      // witness of `rule` (consumability certificate)
  std::map<std::string, std::string> defeat_choice;
  std::vector<std::pair<std::string, Witness>> consume_witnesses;
  std::vector<Literal> produced;  // head literals emitted by this move
  bool starts_pending = false;    // sequence head: emits item 0, more to come
  bool emits_pending = false;     // sequence head: emits the pending item
  bool aborts_pending = false;    // the pending firing was blocked; cleared first

  bool operator==(const Move&) const = default;

  // Deterministic ordering used by the First strategy and golden tests.
  std::string sort_key() const;
};

// Column snapshots plus the moves that produced them; replaying moves from
// columns.front() reproduces every snapshot.
struct ProofMatrix {
  std::vector<DerivationState> columns;
  std::vector<Move> moves;

  const DerivationState& final_state() const { return columns.back(); }
};

// Column 0 holds one +Delta instance per fact occurrence, rows 1..|F|.
DerivationState init_state(const Theory& t);

// Every move whose application satisfies the variant's positive proof tag:
// all witnesses, all defeat choices. Strict moves need only
// Delta-consumability; defeasible moves additionally need -Delta of the
// complement and every live attacker discarded or defeated. Empty when the
// derivation is stuck.
std::vector<Move> enabled_moves(const DerivationState& s, const Theory& t,
                                const EngineOptions& opts = {});

// Apply one enabled move: consumption marks plus newly born rows, one column
// later. Throws std::invalid_argument on structurally invalid moves.
DerivationState apply_move(const DerivationState& s, const Move& m, const Theory& t,
                           const EngineOptions& opts = {});

// Negative tags evaluated as predicates against the current state.
bool refuted(const DerivationState& s, const Literal& x, Strength strength, const Theory& t);

// +sigma: x would be derivable if consumed resources were still available.
bool supported(const DerivationState& s, const Literal& x, const Theory& t);

// Finalized negative and sigma sets over the theory's alphabet, computed as
// the greatest sets satisfying the refutation predicates (sigma: least).
struct NegativeSets {
  std::set<Literal> neg_delta;
  std::set<Literal> neg_partial;
  std::set<Literal> sigma;
};
NegativeSets finalize_negatives(const DerivationState& s, const Theory& t);

// Forward closure of literals still derivable from unconsumed instances,
// ignoring conflicts and multiplicities. Over-approximates every future
// derivation; used for attacker liveness.
std::set<Literal> reachable_closure(const DerivationState& s, const Theory& t);

// An attacker blocks a conclusion while it is live: already applicable
// (consumed instances keep it so) or still completable from the closure.
bool live_attacker(const Rule& s_rule, const DerivationState& s, const Theory& t,
                   const std::set<Literal>& closure);

}  // namespace rsdl
