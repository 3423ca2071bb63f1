#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsdl/theory.hpp"

namespace rsdl {

struct SourceSpan {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourceSpan span)
      : std::runtime_error(std::move(message)), span(span) {}
  SourceSpan span;
};

// Theory text format:
//   # comment to end of line
//   variant: ms-single.            (optional directive)
//   facts: alpha, beta, ~gamma.
//   r0: alpha, beta => phi.        (multiset body)
//   r1: alpha ; beta => phi.       (sequence body)
//   r2: alpha -> psi.              (strict)   r3: beta ~> ~psi.  (defeater)
//   sup: r0 > r3, r2 > r3.
// Statements end with "."; mixing "," and ";" inside one body or head is an
// error. Without a directive the variant is inferred from the separators
// and head arity; sequence bodies with multiset heads are ambiguous (whole
// vs per-literal) and require the directive. `force` overrides inference.
Theory parse_theory(std::string_view text, std::optional<Variant> force = std::nullopt);

// Inverse of parse_theory up to fact/rule ordering.
std::string render_theory(const Theory& t);

struct CnfFormula {
  std::set<std::string> variables;
  std::vector<std::array<Literal, 3>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// One clause per line, three whitespace-separated literals, "~" negation.
CnfFormula parse_cnf(std::string_view text);

}  // namespace rsdl
