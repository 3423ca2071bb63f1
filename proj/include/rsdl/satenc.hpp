#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rsdl/enumerate.hpp"
#include "rsdl/parser.hpp"

namespace rsdl {

// 3-SAT reduction: clause i gets a fact atom c{i}, three selector rules
// c{i} => c{i}_{x} and three emission rules c{i}_{x} => literal. A fresh-name
// suffix "_f" is appended while the formula already uses a generated atom.
struct SatEncoding {
  Theory theory;
  std::vector<std::string> clause_atoms;                  // clause -> fresh fact atom
  std::vector<std::array<std::string, 3>> selector_atoms; // (clause, pos) -> fresh atom
  std::vector<std::array<Literal, 3>> literal_map;        // (clause, pos) -> original literal
};

SatEncoding encode_3sat(const CnfFormula& f);

// True iff every clause has some original literal positively concluded in e.
bool coverage_satisfied(const Extension& e, const SatEncoding& enc);

enum class SatStatus { Sat, Unsat, Unknown };

struct SatResult {
  SatStatus status = SatStatus::Unknown;
  std::optional<Extension> witness;  // a covering extension when Sat
};

// Enumerate extensions of the encoding; Sat on the first covering one,
// Unsat when complete enumeration finds none, Unknown when bounds were hit.
SatResult decide_sat(const CnfFormula& f, SearchBounds bounds = {});

}  // namespace rsdl
