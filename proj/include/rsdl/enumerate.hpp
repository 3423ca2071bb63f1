#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsdl/engine.hpp"

namespace rsdl {

// Terminal-state summary of one maximal derivation. Positive conclusions
// are multisets (concurrent production counts); negatives and sigma are
// sets over the theory's alphabet. Trace and the partial flag are ignored
// by canonical equality.
struct Extension {
  std::map<Literal, int> pos_delta;
  std::map<Literal, int> pos_partial;
  std::map<Literal, int> consumed;
  std::set<Literal> neg_delta;
  std::set<Literal> neg_partial;
  std::set<Literal> sigma;
  std::vector<std::string> trace;
  bool partial = false;  // set when summarizing a non-terminal matrix

  bool same_conclusions(const Extension& o) const {
    return pos_delta == o.pos_delta && pos_partial == o.pos_partial && consumed == o.consumed &&
           neg_delta == o.neg_delta && neg_partial == o.neg_partial && sigma == o.sigma;
  }
  // Total order on conclusion fields, trace-blind; used to deduplicate.
  bool conclusions_less(const Extension& o) const;
};

struct SearchBounds {
  long max_columns = 10000;
  long max_branches = 1000000;
};

struct Strategy {
  enum Kind { First, Lexicographic, Random } kind = First;
  std::uint64_t seed = 0;

  static Strategy first() { return {First, 0}; }
  static Strategy lexicographic() { return {Lexicographic, 0}; }
  static Strategy random(std::uint64_t seed) { return {Random, seed}; }
};

struct DeriveResult {
  ProofMatrix matrix;
  bool bound_exhausted = false;
};

// Repeatedly apply the strategy-selected enabled move until terminal or
// max_columns is reached (bound_exhausted carries the partial matrix).
DeriveResult derive(const Theory& t, Strategy strategy, SearchBounds bounds = {},
                    const EngineOptions& opts = {});

struct EnumerateResult {
  std::vector<Extension> extensions;  // canonical order, deduplicated
  bool complete = true;               // false iff any branch hit a bound
};

// Depth-first exploration of all move choices. jobs > 1 explores the
// branches below the initial state in parallel (OpenMP); results are
// identical to the serial reference by construction and by test.
EnumerateResult enumerate_extensions(const Theory& t, SearchBounds bounds = {},
                                     const EngineOptions& opts = {}, int jobs = 1);

// Summarize a matrix: positives read off the final column, negatives and
// sigma finalized over the alphabet. Non-terminal matrices yield a partial
// extension with negatives omitted.
Extension extension_of(const ProofMatrix& m, const Theory& t, const EngineOptions& opts = {});

}  // namespace rsdl
