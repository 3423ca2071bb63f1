#include "rsdl/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace rsdl {

namespace {

std::string pad_rows(const Witness& w) {
  std::string out;
  char buf[16];
  for (int r : w) {
    std::snprintf(buf, sizeof buf, "%06d,", r);
    out += buf;
  }
  return out;
}

bool has_instance(const DerivationState& s, const Literal& l, Strength strength) {
  for (const auto& inst : s.instances) {
    if (inst.literal != l) continue;
    if (strength == Strength::Delta && inst.tag != Tag::PlusDelta) continue;
    return true;
  }
  return false;
}

// -Delta as a predicate on the current state: no strict proof exists and no
// strict rule can currently fire. A consumed +Delta instance still blocks.
bool neg_delta_pred(const DerivationState& s, const Literal& x, const Theory& t) {
  if (has_instance(s, x, Strength::Delta)) return false;
  if (t.is_fact(x)) return false;
  for (const Rule* r : t.rules_with_head(x)) {
    if (!r->strict()) continue;
    RuleStatus st = rule_status(*r, s, Strength::Delta);
    if (!st.non_consumable) return false;
  }
  return true;
}

bool record_discarded_partial(const Rule& r, const DerivationState& s) {
  for (const auto& l : r.body.items)
    if (s.neg_partial.count(l)) return true;
  return false;
}

}  // namespace

std::string Move::sort_key() const {
  std::string key = rule;
  key += '|';
  key += produced_tag == Tag::PlusDelta ? 'D' : 'd';
  key += '|';
  key += pad_rows(witness);
  key += '|';
  for (const auto& [a, d] : defeat_choice) key += a + ">" + d + ",";
  key += '|';
  for (const auto& [r, w] : consume_witnesses) key += r + ":" + pad_rows(w) + ";";
  key += '|';
  for (const auto& l : produced) key += to_string(l) + ",";
  if (aborts_pending) key += "|abort";
  return key;
}

DerivationState init_state(const Theory& t) {
  DerivationState s;
  s.column = 0;
  int row = 1;
  for (const auto& f : t.facts)
    s.instances.push_back(Instance{f, Tag::PlusDelta, row++, 0, std::nullopt});
  return s;
}

std::set<Literal> reachable_closure(const DerivationState& s, const Theory& t) {
  std::set<Literal> closed;
  for (const auto& inst : s.instances)
    if (!inst.consumed()) closed.insert(inst.literal);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : t.rules) {
      if (!r.sd()) continue;
      bool body_ok = true;
      for (const auto& l : r.body.items)
        if (!closed.count(l)) body_ok = false;
      if (!body_ok) continue;
      for (const auto& h : r.head.items)
        if (closed.insert(h).second) changed = true;
    }
  }
  return closed;
}

bool live_attacker(const Rule& s_rule, const DerivationState& s, const Theory& t,
                   const std::set<Literal>& closure) {
  (void)t;
  if (s_rule.body.structure == BodyStructure::Multiset) {
    for (const auto& l : s_rule.body.items) {
      if (has_instance(s, l, Strength::Partial)) continue;
      if (!closure.count(l)) return false;
    }
    return true;
  }
  // Sequence: bind the longest possible prefix to existing instances in
  // strictly increasing birth-column order (consumed instances count); the
  // remaining suffix must still be derivable.
  size_t bound = 0;
  int last_col = -1;
  for (const auto& l : s_rule.body.items) {
    const Instance* best = nullptr;
    for (const auto& inst : s.instances) {
      if (inst.literal != l || inst.born_column <= last_col) continue;
      if (!best || inst.born_column < best->born_column) best = &inst;
    }
    if (!best) break;
    last_col = best->born_column;
    ++bound;
  }
  for (size_t i = bound; i < s_rule.body.items.size(); ++i)
    if (!closure.count(s_rule.body.items[i])) return false;
  return true;
}

namespace {

// A defeasible conclusion must get past every blocking attacker: one that is
// applicable (ghosts included) or still completable from unconsumed
// resources, and carries no negative record.
std::vector<const Rule*> blocking_attackers(const Literal& target, const DerivationState& s,
                                            const Theory& t, const std::set<Literal>& closure) {
  std::vector<const Rule*> out;
  for (const Rule* a : t.rules_with_head(complement(target))) {
    if (record_discarded_partial(*a, s)) continue;
    if (!live_attacker(*a, s, t, closure)) continue;
    out.push_back(a);
  }
  return out;
}

// Rules eligible to defeat attacker a while producing target: strict or
// defeasible, consumable, strictly superior.
std::vector<const Rule*> defeat_candidates(const Literal& target, const Rule& attacker,
                                           const DerivationState& s, const Theory& t) {
  std::vector<const Rule*> out;
  for (const Rule* d : t.sd_rules_with_head(target)) {
    if (!t.superior(d->label, attacker.label)) continue;
    if (!rule_status(*d, s, Strength::Partial).consumable) continue;
    out.push_back(d);
  }
  return out;
}

struct MoveBuilder {
  const DerivationState& s;
  const Theory& t;
  const EngineOptions& opts;
  std::set<Literal> closure;
  std::vector<Move> out;

  MoveBuilder(const DerivationState& s, const Theory& t, const EngineOptions& opts)
      : s(s), t(t), opts(opts), closure(reachable_closure(s, t)) {}

  // Enumerate joint witnesses for the consuming units, injectively over
  // rows, and emit one move per combination.
  void emit_with_consumption(Move base, const std::vector<const Rule*>& units, size_t idx,
                             std::set<int>& used) {
    if (idx == units.size()) {
      out.push_back(base);
      return;
    }
    const Rule& u = *units[idx];
    for (const auto& w : enumerate_witnesses(u, s, Strength::Partial)) {
      bool clash = false;
      for (int r : w)
        if (used.count(r)) clash = true;
      if (clash) continue;
      for (int r : w) used.insert(r);
      Move m = base;
      m.consume_witnesses.push_back({u.label, w});
      if (u.label == m.rule) m.witness = w;
      emit_with_consumption(std::move(m), units, idx + 1, used);
      for (int r : w) used.erase(r);
    }
  }

  // All defeat choices for the given blocking attackers, then consumption.
  void emit_defeasible(const Rule& r, const std::vector<Literal>& produced,
                       const std::vector<const Rule*>& attackers, bool starts_pending,
                       bool emits_pending, bool consume_body) {
    // Candidate defeaters per attacker must cover every produced literal the
    // attacker attacks.
    std::vector<std::vector<const Rule*>> candidates;
    for (const Rule* a : attackers) {
      std::vector<const Rule*> common;
      bool first = true;
      for (const auto& p : produced) {
        if (!a->head_contains(complement(p))) continue;
        auto cs = defeat_candidates(p, *a, s, t);
        if (first) {
          common = cs;
          first = false;
        } else {
          std::vector<const Rule*> inter;
          for (const Rule* c : common)
            if (std::find(cs.begin(), cs.end(), c) != cs.end()) inter.push_back(c);
          common = inter;
        }
      }
      if (common.empty()) return;  // an attacker nobody defeats: no move
      candidates.push_back(std::move(common));
    }

    std::vector<const Rule*> chosen(attackers.size());
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == attackers.size()) {
        Move base;
        base.rule = r.label;
        base.produced_tag = Tag::PlusPartial;
        base.produced = produced;
        base.starts_pending = starts_pending;
        base.emits_pending = emits_pending;
        for (size_t k = 0; k < attackers.size(); ++k)
          base.defeat_choice[attackers[k]->label] = chosen[k]->label;

        std::vector<const Rule*> units;
        if (attackers.empty()) {
          if (consume_body) units.push_back(&r);
        } else if (opts.consume_per_attacker) {
          for (const Rule* c : chosen) units.push_back(c);
        } else {
          for (const Rule* c : chosen)
            if (std::find(units.begin(), units.end(), c) == units.end()) units.push_back(c);
        }

        if (!consume_body) {
          // Emission step: the body was consumed at the first emission.
          std::erase(units, &r);
        }
        bool rule_consumes = std::find(units.begin(), units.end(), &r) != units.end();
        if (!rule_consumes) {
          if (consume_body) {
            auto st = rule_status(r, s, Strength::Partial);
            if (!st.consumable) return;
            base.witness = *st.witness;
          }
        }
        std::set<int> used;
        if (consume_body && !attackers.empty() && !rule_consumes) {
          // The producing rule keeps its resources; its witness is only a
          // consumability certificate, so one canonical witness suffices.
          emit_with_consumption(base, units, 0, used);
        } else if (consume_body && attackers.empty()) {
          for (const auto& w : enumerate_witnesses(r, s, Strength::Partial)) {
            Move m = base;
            m.witness = w;
            m.consume_witnesses.push_back({r.label, w});
            out.push_back(std::move(m));
          }
        } else {
          emit_with_consumption(base, units, 0, used);
        }
        return;
      }
      for (const Rule* c : candidates[i]) {
        chosen[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
  }

  // Defeasible firing of rule r: pick target literals per variant, check
  // -Delta of complements, resolve attackers, enumerate consumption.
  void defeasible_moves(const Rule& r) {
    if (!r.sd()) return;
    auto st = rule_status(r, s, Strength::Partial);
    if (!st.consumable) return;

    auto passes_neg_delta = [&](const Literal& p) { return neg_delta_pred(s, complement(p), t); };
    auto attackers_of = [&](const std::vector<Literal>& produced) {
      std::vector<const Rule*> all;
      for (const auto& p : produced)
        for (const Rule* a : blocking_attackers(p, s, t, closure))
          if (std::find(all.begin(), all.end(), a) == all.end()) all.push_back(a);
      std::sort(all.begin(), all.end(),
                [](const Rule* x, const Rule* y) { return x->label < y->label; });
      return all;
    };

    switch (t.variant) {
      case Variant::MsSingle:
      case Variant::SeqSingle: {
        Literal p = r.head.items.front();
        if (!passes_neg_delta(p)) return;
        emit_defeasible(r, {p}, attackers_of({p}), false, false, true);
        return;
      }
      case Variant::SeqSeqHead: {
        Literal p = r.head.items.front();
        if (!passes_neg_delta(p)) return;
        bool more = r.head.items.size() > 1;
        emit_defeasible(r, {p}, attackers_of({p}), more, false, true);
        return;
      }
      case Variant::SeqMsHeadWhole: {
        for (const auto& p : r.head.items)
          if (!passes_neg_delta(p)) return;
        emit_defeasible(r, r.head.items, attackers_of(r.head.items), false, false, true);
        return;
      }
      case Variant::SeqMsHeadPerLiteral: {
        std::vector<Literal> emitted;
        for (const auto& p : r.head.items) {
          if (!passes_neg_delta(p)) continue;
          bool ok = true;
          for (const Rule* a : blocking_attackers(p, s, t, closure))
            if (defeat_candidates(p, *a, s, t).empty()) ok = false;
          if (ok) emitted.push_back(p);
        }
        if (emitted.empty()) return;
        emit_defeasible(r, emitted, attackers_of(emitted), false, false, true);
        return;
      }
    }
  }

  void strict_moves(const Rule& r) {
    if (!r.strict()) return;
    auto st = rule_status(r, s, Strength::Delta);
    if (!st.consumable) return;
    for (const auto& w : enumerate_witnesses(r, s, Strength::Delta)) {
      Move m;
      m.rule = r.label;
      m.produced_tag = Tag::PlusDelta;
      m.witness = w;
      m.consume_witnesses.push_back({r.label, w});
      if (t.variant == Variant::SeqSeqHead) {
        m.produced = {r.head.items.front()};
        m.starts_pending = r.head.items.size() > 1;
      } else {
        m.produced = r.head.items;
      }
      out.push_back(std::move(m));
    }
  }

  // Emission of the next pending sequence-head item.
  void emission_moves(const PendingHead& pending) {
    const Rule* r = t.rule(pending.rule);
    if (!r || pending.next_index >= (int)r->head.items.size()) return;
    Literal p = r->head.items[pending.next_index];
    if (pending.tag == Tag::PlusDelta) {
      Move m;
      m.rule = r->label;
      m.produced_tag = Tag::PlusDelta;
      m.produced = {p};
      m.emits_pending = true;
      out.push_back(std::move(m));
      return;
    }
    if (!neg_delta_pred(s, complement(p), t)) return;
    auto attackers = blocking_attackers(p, s, t, closure);
    std::sort(attackers.begin(), attackers.end(),
              [](const Rule* x, const Rule* y) { return x->label < y->label; });
    emit_defeasible(*r, {p}, attackers, false, true, false);
  }
};

std::vector<Move> base_moves(const DerivationState& s, const Theory& t,
                             const EngineOptions& opts) {
  MoveBuilder b(s, t, opts);
  for (const auto& r : t.rules) {
    b.strict_moves(r);
    b.defeasible_moves(r);
  }
  std::sort(b.out.begin(), b.out.end(),
            [](const Move& x, const Move& y) { return x.sort_key() < y.sort_key(); });
  b.out.erase(std::unique(b.out.begin(), b.out.end()), b.out.end());
  return b.out;
}

}  // namespace

std::vector<Move> enabled_moves(const DerivationState& s, const Theory& t,
                                const EngineOptions& opts) {
  if (s.pending_head) {
    MoveBuilder b(s, t, opts);
    b.emission_moves(*s.pending_head);
    if (!b.out.empty()) {
      std::sort(b.out.begin(), b.out.end(),
                [](const Move& x, const Move& y) { return x.sort_key() < y.sort_key(); });
      return b.out;
    }
    // The pending emission is blocked: the firing aborts and the remaining
    // head items are never produced.
    DerivationState cleared = s;
    cleared.pending_head.reset();
    auto moves = base_moves(cleared, t, opts);
    for (auto& m : moves) m.aborts_pending = true;
    return moves;
  }
  return base_moves(s, t, opts);
}

DerivationState apply_move(const DerivationState& s, const Move& m, const Theory& t,
                           const EngineOptions& opts) {
  (void)opts;
  const Rule* r = t.rule(m.rule);
  if (!r) throw std::invalid_argument("move names unknown rule " + m.rule);
  if (m.produced.empty()) throw std::invalid_argument("move produces nothing");
  if (m.emits_pending &&
      (!s.pending_head || s.pending_head->rule != m.rule))
    throw std::invalid_argument("emission move without matching pending head");

  DerivationState pre = s;
  if (m.aborts_pending) {
    if (!s.pending_head) throw std::invalid_argument("abort flag without pending head");
    pre.pending_head.reset();
  }

  Witness all_rows;
  for (const auto& [label, w] : m.consume_witnesses) {
    if (!t.rule(label)) throw std::invalid_argument("consumption names unknown rule " + label);
    all_rows.insert(all_rows.end(), w.begin(), w.end());
  }
  DerivationState next = consume(pre, all_rows);

  int row = s.instances.empty() ? 1 : s.instances.back().row + 1;
  for (const auto& l : m.produced)
    next.instances.push_back(Instance{l, m.produced_tag, row++, next.column, std::nullopt});

  if (m.starts_pending) {
    next.pending_head = PendingHead{m.rule, 1, m.produced_tag};
  } else if (m.emits_pending) {
    PendingHead p = *next.pending_head;
    ++p.next_index;
    if (p.next_index >= (int)r->head.items.size())
      next.pending_head.reset();
    else
      next.pending_head = p;
  }
  return next;
}

namespace {

bool order_or_record_discarded(const Rule& r, const DerivationState& s,
                               const std::set<Literal>& np) {
  for (const auto& l : r.body.items)
    if (np.count(l)) return true;
  return rule_status(r, s, Strength::Partial).discarded;
}

std::set<Literal> sigma_closure(const DerivationState& s, const Theory& t,
                                const std::set<Literal>& np) {
  std::set<Literal> sig;
  for (const auto& inst : s.instances) sig.insert(inst.literal);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : t.rules) {
      if (!r.sd()) continue;
      bool body_ok = true;
      for (const auto& l : r.body.items)
        if (!sig.count(l)) body_ok = false;
      if (!body_ok) continue;
      for (const auto& x : r.head.items) {
        if (sig.count(x)) continue;
        bool blocked = false;
        for (const Rule* a : t.rules_with_head(complement(x))) {
          if (order_or_record_discarded(*a, s, np)) continue;
          if (t.superior(a->label, r.label)) blocked = true;
        }
        if (!blocked) {
          sig.insert(x);
          changed = true;
        }
      }
    }
  }
  return sig;
}

bool sigma_applicable(const Rule& r, const DerivationState& s, const std::set<Literal>& sig) {
  (void)s;
  for (const auto& l : r.body.items)
    if (!sig.count(l)) return false;
  return true;
}

}  // namespace

NegativeSets finalize_negatives(const DerivationState& s, const Theory& t) {
  NegativeSets out;
  const auto alphabet = t.alphabet();

  for (const auto& x : alphabet)
    if (neg_delta_pred(s, x, t)) out.neg_delta.insert(x);

  auto has_positive = [&](const Literal& x) {
    for (const auto& inst : s.instances)
      if (inst.literal == x) return true;
    return false;
  };

  // neg_partial is the greatest set satisfying the -partial clauses, with
  // sigma recomputed until the two are mutually stable.
  std::set<Literal> np;
  while (true) {
    std::set<Literal> sig = sigma_closure(s, t, np);
    // Greatest fixpoint: start from all candidates and shrink.
    std::set<Literal> c;
    for (const auto& x : alphabet)
      if (!has_positive(x) && out.neg_delta.count(x)) c.insert(x);
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      std::set<Literal> keep;
      for (const auto& x : c) {
        bool ok = false;
        if (has_instance(s, complement(x), Strength::Delta)) ok = true;
        if (!ok) {
          ok = true;
          for (const Rule* r : t.sd_rules_with_head(x)) {
            bool disc = order_or_record_discarded(*r, s, c) ||
                        [&] {
                          for (const auto& l : r->body.items)
                            if (c.count(l)) return true;
                          return false;
                        }();
            if (disc) continue;
            bool beaten = false;
            for (const Rule* a : t.rules_with_head(complement(x))) {
              if (!sigma_applicable(*a, s, sig)) continue;
              bool countered = false;
              for (const Rule* d : t.rules_with_head(x)) {
                bool d_disc = order_or_record_discarded(*d, s, c) ||
                              [&] {
                                for (const auto& l : d->body.items)
                                  if (c.count(l)) return true;
                                return false;
                              }();
                if (d_disc) continue;
                if (t.superior(d->label, a->label)) countered = true;
              }
              if (!countered) beaten = true;
            }
            if (!beaten) ok = false;
          }
        }
        if (ok)
          keep.insert(x);
        else
          shrunk = true;
      }
      c = std::move(keep);
    }
    if (c == np) {
      out.neg_partial = c;
      out.sigma = sig;
      break;
    }
    np = std::move(c);
  }
  return out;
}

bool refuted(const DerivationState& s, const Literal& x, Strength strength, const Theory& t) {
  if (strength == Strength::Delta) return neg_delta_pred(s, x, t);
  return finalize_negatives(s, t).neg_partial.count(x) != 0;
}

bool supported(const DerivationState& s, const Literal& x, const Theory& t) {
  return finalize_negatives(s, t).sigma.count(x) != 0;
}

}  // namespace rsdl
