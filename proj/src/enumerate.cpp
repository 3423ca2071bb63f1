#include "rsdl/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <tuple>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsdl {

bool Extension::conclusions_less(const Extension& o) const {
  return std::tie(pos_delta, pos_partial, consumed, neg_delta, neg_partial, sigma) <
         std::tie(o.pos_delta, o.pos_partial, o.consumed, o.neg_delta, o.neg_partial, o.sigma);
}

namespace {

// Canonical state key for memoization. Multiset variants are coordinate
// blind: a sorted multiset of (literal, tag, consumed) suffices, because
// applicability looks only at which literals were ever proven and
// consumability at the unconsumed counts. Sequence variants additionally
// need the relative birth order and same-column grouping of all instances
// (ghosts included), which the sequence conditions observe.
std::string state_key(const DerivationState& s, const Theory& t) {
  const bool seq = body_structure_of(t.variant) == BodyStructure::Sequence;
  std::vector<std::string> parts;
  parts.reserve(s.instances.size());
  int last_col = -1, rank = -1;
  for (const auto& inst : s.instances) {
    std::string p = to_string(inst.literal);
    p += inst.tag == Tag::PlusDelta ? '!' : '?';
    p += inst.consumed() ? 'x' : 'o';
    if (seq) {
      if (inst.born_column != last_col) {
        ++rank;
        last_col = inst.born_column;
      }
      p += '@';
      p += std::to_string(rank);
    }
    parts.push_back(std::move(p));
  }
  if (!seq) std::sort(parts.begin(), parts.end());
  std::string key;
  for (auto& p : parts) {
    key += p;
    key += ';';
  }
  if (s.pending_head) {
    key += "|P:";
    key += s.pending_head->rule;
    key += ':';
    key += std::to_string(s.pending_head->next_index);
    key += s.pending_head->tag == Tag::PlusDelta ? '!' : '?';
  }
  return key;
}

Extension summarize(const DerivationState& s, const Theory& t, bool terminal) {
  Extension e;
  for (const auto& inst : s.instances) {
    auto& bucket = inst.tag == Tag::PlusDelta ? e.pos_delta : e.pos_partial;
    ++bucket[inst.literal];
    if (inst.consumed()) ++e.consumed[inst.literal];
  }
  if (terminal) {
    DerivationState settled = s;
    settled.pending_head.reset();
    NegativeSets n = finalize_negatives(settled, t);
    e.neg_delta = std::move(n.neg_delta);
    e.neg_partial = std::move(n.neg_partial);
    e.sigma = std::move(n.sigma);
  } else {
    e.partial = true;
  }
  return e;
}

void dedup_extensions(std::vector<Extension>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const Extension& a, const Extension& b) { return a.conclusions_less(b); });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Extension& a, const Extension& b) { return a.same_conclusions(b); }),
          v.end());
}

struct SearchCtx {
  const Theory& t;
  EngineOptions opts;
  SearchBounds bounds;
  long branches = 0;
  long bound_hits = 0;
  bool complete = true;
  std::unordered_map<std::string, std::vector<Extension>> memo;
};

struct Frame {
  DerivationState state;
  std::string key;
  std::string edge_label;  // move that led here; prepended to traces on delivery
  std::vector<Move> moves;
  size_t next_move = 0;
  long bound_hits_at_entry = 0;
  std::vector<Extension> acc;
};

// Depth-first enumeration with an explicit stack; memoized per canonical
// state. The extension set reachable from a state is path independent, so
// memo hits are exact; bound-hit frames are never cached because the bound
// depends on the path's column count, which the key deliberately drops.
// Returned traces are relative to `start`.
std::vector<Extension> dfs(const DerivationState& start, SearchCtx& ctx) {
  std::vector<Frame> stack;
  std::vector<Extension> result;

  auto hand_up = [&](std::vector<Extension> exts, const std::string& edge) {
    if (!edge.empty())
      for (auto& e : exts) e.trace.insert(e.trace.begin(), edge);
    if (stack.empty()) {
      result = std::move(exts);
    } else {
      auto& acc = stack.back().acc;
      acc.insert(acc.end(), std::make_move_iterator(exts.begin()),
                 std::make_move_iterator(exts.end()));
    }
  };

  auto push = [&](DerivationState s, std::string edge) {
    std::string key = state_key(s, ctx.t);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) {
      hand_up(it->second, edge);
      return;
    }
    Frame f;
    f.moves = enabled_moves(s, ctx.t, ctx.opts);
    f.key = std::move(key);
    f.edge_label = std::move(edge);
    if (f.moves.empty()) {
      std::vector<Extension> exts{summarize(s, ctx.t, true)};
      ctx.memo[f.key] = exts;
      hand_up(std::move(exts), f.edge_label);
      return;
    }
    if (s.column >= ctx.bounds.max_columns) {
      ctx.complete = false;  // possible cycle; this branch contributes nothing
      ++ctx.bound_hits;
      return;
    }
    f.state = std::move(s);
    f.bound_hits_at_entry = ctx.bound_hits;
    stack.push_back(std::move(f));
  };

  push(start, "");
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_move == top.moves.size()) {
      Frame done = std::move(top);
      stack.pop_back();
      dedup_extensions(done.acc);
      // Cache only subtrees explored without hitting a bound.
      if (ctx.bound_hits == done.bound_hits_at_entry) ctx.memo[done.key] = done.acc;
      hand_up(std::move(done.acc), done.edge_label);
      continue;
    }
    const Move m = top.moves[top.next_move++];
    if (++ctx.branches > ctx.bounds.max_branches) {
      ctx.complete = false;
      ++ctx.bound_hits;
      top.next_move = top.moves.size();
      continue;
    }
    push(apply_move(top.state, m, ctx.t, ctx.opts), m.rule);
  }
  return result;
}

}  // namespace

DeriveResult derive(const Theory& t, Strategy strategy, SearchBounds bounds,
                    const EngineOptions& opts) {
  DeriveResult res;
  std::mt19937_64 gen(strategy.seed);
  DerivationState s = init_state(t);
  res.matrix.columns.push_back(s);
  while (true) {
    auto moves = enabled_moves(s, t, opts);
    if (moves.empty()) return res;
    if (s.column >= bounds.max_columns) {
      res.bound_exhausted = true;
      return res;
    }
    size_t pick = 0;
    switch (strategy.kind) {
      case Strategy::First: pick = 0; break;  // moves come sorted
      case Strategy::Lexicographic: {
        auto produced_key = [](const Move& m) {
          std::string k;
          for (const auto& l : m.produced) k += to_string(l) + ",";
          return k + m.sort_key();
        };
        for (size_t i = 1; i < moves.size(); ++i)
          if (produced_key(moves[i]) < produced_key(moves[pick])) pick = i;
        break;
      }
      case Strategy::Random:
        pick = std::uniform_int_distribution<size_t>(0, moves.size() - 1)(gen);
        break;
    }
    s = apply_move(s, moves[pick], t, opts);
    res.matrix.moves.push_back(moves[pick]);
    res.matrix.columns.push_back(s);
  }
}

Extension extension_of(const ProofMatrix& m, const Theory& t, const EngineOptions& opts) {
  const DerivationState& final = m.final_state();
  bool terminal = enabled_moves(final, t, opts).empty();
  Extension e = summarize(final, t, terminal);
  for (const auto& mv : m.moves) e.trace.push_back(mv.rule);
  return e;
}

EnumerateResult enumerate_extensions(const Theory& t, SearchBounds bounds,
                                     const EngineOptions& opts, int jobs) {
  DerivationState init = init_state(t);
  EnumerateResult out;

  if (jobs <= 1) {
    SearchCtx ctx{t, opts, bounds};
    out.extensions = dfs(init, ctx);
    out.complete = ctx.complete;
    dedup_extensions(out.extensions);
    return out;
  }

  auto moves = enabled_moves(init, t, opts);
  if (moves.empty()) {
    out.extensions.push_back(summarize(init, t, true));
    return out;
  }
  if (init.column >= bounds.max_columns) {
    out.complete = false;
    return out;
  }

  std::vector<std::vector<Extension>> parts(moves.size());
  std::vector<char> flags(moves.size(), 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (long i = 0; i < (long)moves.size(); ++i) {
    SearchCtx ctx{t, opts, bounds};
    ctx.branches = 1;  // the edge from the initial state
    auto exts = dfs(apply_move(init, moves[i], t, opts), ctx);
    for (auto& e : exts) e.trace.insert(e.trace.begin(), moves[i].rule);
    parts[i] = std::move(exts);
    flags[i] = ctx.complete ? 1 : 0;
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    out.extensions.insert(out.extensions.end(), std::make_move_iterator(parts[i].begin()),
                          std::make_move_iterator(parts[i].end()));
    if (!flags[i]) out.complete = false;
  }
  dedup_extensions(out.extensions);
  return out;
}

}  // namespace rsdl
