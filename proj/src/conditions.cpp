#include "rsdl/conditions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rsdl {

namespace {

bool tag_allowed(Tag tag, Strength strength) {
  if (strength == Strength::Delta) return tag == Tag::PlusDelta;
  return tag == Tag::PlusDelta || tag == Tag::PlusPartial;  // Delta counts toward partial/sigma
}

// Rows of instances of l usable at this strength, in row order.
std::vector<int> instance_rows(const DerivationState& s, const Literal& l, Strength strength,
                               bool unconsumed_only) {
  std::vector<int> rows;
  for (const auto& inst : s.instances) {
    if (inst.literal != l || !tag_allowed(inst.tag, strength)) continue;
    if (unconsumed_only && inst.consumed()) continue;
    rows.push_back(inst.row);
  }
  return rows;
}

bool sigma_holds(const DerivationState& s, const Literal& l) {
  if (s.sigma.count(l)) return true;
  for (const auto& inst : s.instances)
    if (inst.literal == l) return true;
  return false;
}

const Instance& instance_by_row(const DerivationState& s, int row) {
  for (const auto& inst : s.instances)
    if (inst.row == row) return inst;
  throw std::invalid_argument("no instance with row " + std::to_string(row));
}

bool record_discarded(const Rule& r, const DerivationState& s, Strength strength) {
  const auto& records = strength == Strength::Delta ? s.neg_delta : s.neg_partial;
  for (const auto& l : r.body.items)
    if (records.count(l)) return true;
  return false;
}

std::map<Literal, int> body_multiplicities(const Rule& r) {
  std::map<Literal, int> m;
  for (const auto& l : r.body.items) ++m[l];
  return m;
}

// Greedy existence check and least witness for sequence bodies: assign each
// position an instance of its literal with strictly increasing birth column.
// Rows are born in column order, so strict (row, column) order degenerates
// to strict column order.
std::optional<Witness> seq_least_assignment(const Rule& r, const DerivationState& s,
                                            Strength strength, bool unconsumed_only) {
  Witness rows;
  int last_col = -1;
  for (const auto& l : r.body.items) {
    const Instance* best = nullptr;
    for (const auto& inst : s.instances) {
      if (inst.literal != l || !tag_allowed(inst.tag, strength)) continue;
      if (unconsumed_only && inst.consumed()) continue;
      if (inst.born_column <= last_col) continue;
      if (!best || inst.born_column < best->born_column) best = &inst;
    }
    if (!best) return std::nullopt;
    rows.push_back(best->row);
    last_col = best->born_column;
  }
  return rows;
}

void seq_enumerate(const Rule& r, const DerivationState& s, Strength strength, size_t pos,
                   int last_col, Witness& acc, std::vector<Witness>& out) {
  if (pos == r.body.items.size()) {
    out.push_back(acc);
    return;
  }
  const Literal& l = r.body.items[pos];
  for (const auto& inst : s.instances) {
    if (inst.literal != l || !tag_allowed(inst.tag, strength)) continue;
    if (inst.consumed() || inst.born_column <= last_col) continue;
    acc.push_back(inst.row);
    seq_enumerate(r, s, strength, pos + 1, inst.born_column, acc, out);
    acc.pop_back();
  }
}

}  // namespace

RuleStatus ms_status(const Rule& r, const DerivationState& s, Strength strength) {
  if (r.body.structure != BodyStructure::Multiset)
    throw std::invalid_argument("ms_status on sequence body of rule " + r.label);
  RuleStatus st;

  if (strength == Strength::Sigma) {
    st.applicable = true;
    for (const auto& l : r.body.items)
      if (!sigma_holds(s, l)) st.applicable = false;
    st.discarded = false;
    st.consumable = false;
    st.non_consumable = true;
    return st;
  }

  const auto mult = body_multiplicities(r);
  st.applicable = true;
  st.consumable = true;
  for (const auto& [l, k] : mult) {
    if (instance_rows(s, l, strength, false).empty()) st.applicable = false;
    if ((int)instance_rows(s, l, strength, true).size() < k) st.consumable = false;
  }
  st.consumable = st.consumable && st.applicable;
  if (st.consumable) {
    // Least witness: positions in body order, each literal's occurrences
    // take its unconsumed rows in ascending order.
    std::map<Literal, size_t> next;
    std::map<Literal, std::vector<int>> avail;
    for (const auto& [l, k] : mult) avail[l] = instance_rows(s, l, strength, true);
    Witness w;
    for (const auto& l : r.body.items) w.push_back(avail[l][next[l]++]);
    st.witness = std::move(w);
  }
  st.discarded = record_discarded(r, s, strength);
  st.non_consumable = st.discarded || !st.consumable;
  return st;
}

RuleStatus seq_status(const Rule& r, const DerivationState& s, Strength strength) {
  if (r.body.structure != BodyStructure::Sequence)
    throw std::invalid_argument("seq_status on multiset body of rule " + r.label);
  RuleStatus st;

  if (strength == Strength::Sigma) {
    st.applicable = true;
    for (const auto& l : r.body.items)
      if (!sigma_holds(s, l)) st.applicable = false;
    st.discarded = false;
    st.consumable = false;
    st.non_consumable = true;
    return st;
  }

  st.applicable = seq_least_assignment(r, s, strength, false).has_value();
  auto w = seq_least_assignment(r, s, strength, true);
  st.consumable = w.has_value();
  st.witness = std::move(w);

  // Order-discarded: instances for every occurrence exist, yet no complete
  // assignment respects the order.
  bool counts_ok = true;
  for (const auto& [l, k] : body_multiplicities(r))
    if ((int)instance_rows(s, l, strength, false).size() < k) counts_ok = false;
  st.discarded = record_discarded(r, s, strength) || (counts_ok && !st.applicable);
  st.non_consumable = st.discarded || !st.consumable;
  return st;
}

RuleStatus rule_status(const Rule& r, const DerivationState& s, Strength strength) {
  return r.body.structure == BodyStructure::Multiset ? ms_status(r, s, strength)
                                                     : seq_status(r, s, strength);
}

DerivationState consume(const DerivationState& s, const Witness& rows) {
  DerivationState next = s;
  next.column = s.column + 1;
  std::set<int> seen;
  for (int row : rows) {
    if (!seen.insert(row).second)
      throw std::invalid_argument("row " + std::to_string(row) + " consumed twice in one step");
    const Instance& check = instance_by_row(s, row);
    if (check.consumed())
      throw std::invalid_argument("row " + std::to_string(row) + " is already consumed");
    for (auto& inst : next.instances)
      if (inst.row == row) inst.consumed_at = next.column;
  }
  return next;
}

std::vector<Witness> enumerate_witnesses(const Rule& r, const DerivationState& s,
                                         Strength strength) {
  std::vector<Witness> out;
  if (r.body.structure == BodyStructure::Sequence) {
    Witness acc;
    seq_enumerate(r, s, strength, 0, -1, acc, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Multiset: per distinct literal choose a combination of unconsumed rows,
  // then take the cartesian product across literals. Positions of equal
  // literals receive ascending rows, so permutations are not duplicated.
  const auto mult = body_multiplicities(r);
  std::vector<std::pair<Literal, std::vector<std::vector<int>>>> options;
  for (const auto& [l, k] : mult) {
    auto rows = instance_rows(s, l, strength, true);
    if ((int)rows.size() < k) return {};
    std::vector<std::vector<int>> combos;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<int> combo;
      for (int i : idx) combo.push_back(rows[i]);
      combos.push_back(std::move(combo));
      int i = k - 1;
      while (i >= 0 && idx[i] == (int)rows.size() - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    options.push_back({l, std::move(combos)});
  }

  std::map<Literal, const std::vector<int>*> chosen;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == options.size()) {
      std::map<Literal, size_t> next;
      Witness w;
      for (const auto& l : r.body.items) w.push_back((*chosen[l])[next[l]++]);
      out.push_back(std::move(w));
      return;
    }
    for (const auto& combo : options[i].second) {
      chosen[options[i].first] = &combo;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rsdl
