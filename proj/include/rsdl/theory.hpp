#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/rule.hpp"

namespace rsdl {

// The five structural variants of the logic. Bodies are either multisets or
// sequences; heads are single literals, sequences, or multisets. The two
// multiset-head variants differ in the scope of the team-defeat check:
// whole-head requires a winning team for every head literal, per-literal
// compares attackers literal by literal.
enum class Variant {
  MsSingle,
  SeqSingle,
  SeqSeqHead,
  SeqMsHeadWhole,
  SeqMsHeadPerLiteral,
};

inline BodyStructure body_structure_of(Variant v) {
  return v == Variant::MsSingle ? BodyStructure::Multiset : BodyStructure::Sequence;
}

inline HeadStructure head_structure_of(Variant v) {
  switch (v) {
    case Variant::MsSingle:
    case Variant::SeqSingle: return HeadStructure::Single;
    case Variant::SeqSeqHead: return HeadStructure::Sequence;
    default: return HeadStructure::Multiset;
  }
}

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::MsSingle: return "ms-single";
    case Variant::SeqSingle: return "seq-single";
    case Variant::SeqSeqHead: return "seq-seq";
    case Variant::SeqMsHeadWhole: return "seq-ms-whole";
    case Variant::SeqMsHeadPerLiteral: return "seq-ms-literal";
  }
  return "ms-single";
}

std::optional<Variant> variant_from_name(std::string_view name);

struct Theory {
  std::vector<Literal> facts;  // multiset: k occurrences mean k resource instances
  std::vector<Rule> rules;
  std::set<std::pair<std::string, std::string>> superiority;  // (stronger, weaker)
  Variant variant = Variant::MsSingle;

  bool operator==(const Theory&) const = default;

  const Rule* rule(std::string_view label) const;
  bool superior(const std::string& stronger, const std::string& weaker) const {
    return superiority.count({stronger, weaker}) != 0;
  }
  // R[l]: rules with l among the head items (defeaters included).
  std::vector<const Rule*> rules_with_head(const Literal& l) const;
  // R_sd[l]: strict and defeasible rules with l among the head items.
  std::vector<const Rule*> sd_rules_with_head(const Literal& l) const;
  bool is_fact(const Literal& l) const;
  // Every literal mentioned anywhere plus all complements, sorted, unique.
  std::vector<Literal> alphabet() const;
};

struct ValidationIssue {
  std::string message;
  bool warning = false;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const {
    for (const auto& i : issues)
      if (!i.warning) return false;
    return true;
  }
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    for (const auto& i : issues)
      if (!i.warning) out.push_back(i.message);
    return out;
  }
};

// Reports duplicate labels, dangling or reflexive superiority pairs, and
// body/head structures inconsistent with the variant. Cyclic superiority is
// a warning, not a violation.
ValidationReport validate_theory(const Theory& t);

}  // namespace rsdl
