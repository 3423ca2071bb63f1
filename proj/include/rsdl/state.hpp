#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsdl/literal.hpp"

namespace rsdl {

// Proof tags. Positive instances carry PlusDelta/PlusPartial; the negative
// tags and sigma live in per-state sets filled in at finalization.
enum class Tag { PlusDelta, MinusDelta, PlusPartial, MinusPartial, PlusSigma };

// Tag strength used when querying rule conditions.
enum class Strength { Delta, Partial, Sigma };

// One row of the proof matrix: a positive literal occurrence. Once consumed
// it stays consumed in every later column.
struct Instance {
  Literal literal;
  Tag tag = Tag::PlusPartial;  // PlusDelta or PlusPartial
  int row = 1;                 // 1-based, unique per derivation
  int born_column = 0;
  std::optional<int> consumed_at;  // column where the mark first appears

  bool consumed() const { return consumed_at.has_value(); }
  bool operator==(const Instance&) const = default;
};

// Mid-firing marker for sequence heads: the named rule has emitted head
// items [0, next_index) and must emit item next_index in the next column.
struct PendingHead {
  std::string rule;
  int next_index = 0;
  Tag tag = Tag::PlusPartial;

  bool operator==(const PendingHead&) const = default;
};

// Snapshot of one column of the proof matrix. Immutable by convention:
// transitions return fresh states.
struct DerivationState {
  int column = 0;
  std::vector<Instance> instances;  // in birth (row) order
  std::set<Literal> neg_delta;      // finalized -Delta conclusions
  std::set<Literal> neg_partial;    // finalized -partial conclusions
  std::set<Literal> sigma;          // finalized +sigma support set
  std::optional<PendingHead> pending_head;

  bool operator==(const DerivationState&) const = default;
};

}  // namespace rsdl
