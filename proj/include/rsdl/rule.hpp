#pragma once

#include <string>
#include <vector>

#include "rsdl/literal.hpp"

namespace rsdl {

// Strict rules always produce their head when consumable; defeasible rules
// can be defeated; defeaters only ever block opposite conclusions.
enum class Arrow { Strict, Defeasible, Defeater };

enum class BodyStructure { Multiset, Sequence };
enum class HeadStructure { Single, Multiset, Sequence };

// Order of items is meaningful only under Sequence; repetitions are always
// meaningful (a body a;b;a needs two separate instances of a).
struct Body {
  BodyStructure structure = BodyStructure::Multiset;
  std::vector<Literal> items;

  bool operator==(const Body&) const = default;
};

struct Head {
  HeadStructure structure = HeadStructure::Single;
  std::vector<Literal> items;

  bool operator==(const Head&) const = default;
};

struct Rule {
  std::string label;
  Arrow arrow = Arrow::Defeasible;
  Body body;
  Head head;

  bool operator==(const Rule&) const = default;

  bool strict() const { return arrow == Arrow::Strict; }
  bool defeater() const { return arrow == Arrow::Defeater; }
  // R_sd membership: rules that may produce conclusions.
  bool sd() const { return arrow != Arrow::Defeater; }
  bool head_contains(const Literal& l) const {
    for (const auto& h : head.items)
      if (h == l) return true;
    return false;
  }
};

inline const char* arrow_token(Arrow a) {
  switch (a) {
    case Arrow::Strict: return "->";
    case Arrow::Defeasible: return "=>";
    case Arrow::Defeater: return "~>";
  }
  return "=>";
}

}  // namespace rsdl
