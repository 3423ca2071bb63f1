#include "rsdl/theory.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rsdl {

std::optional<Variant> variant_from_name(std::string_view name) {
  for (Variant v : {Variant::MsSingle, Variant::SeqSingle, Variant::SeqSeqHead,
                    Variant::SeqMsHeadWhole, Variant::SeqMsHeadPerLiteral})
    if (name == variant_name(v)) return v;
  return std::nullopt;
}

const Rule* Theory::rule(std::string_view label) const {
  for (const auto& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

std::vector<const Rule*> Theory::rules_with_head(const Literal& l) const {
  std::vector<const Rule*> out;
  for (const auto& r : rules)
    if (r.head_contains(l)) out.push_back(&r);
  return out;
}

std::vector<const Rule*> Theory::sd_rules_with_head(const Literal& l) const {
  std::vector<const Rule*> out;
  for (const auto& r : rules)
    if (r.sd() && r.head_contains(l)) out.push_back(&r);
  return out;
}

bool Theory::is_fact(const Literal& l) const {
  return std::find(facts.begin(), facts.end(), l) != facts.end();
}

std::vector<Literal> Theory::alphabet() const {
  std::set<Literal> s;
  auto add = [&](const Literal& l) {
    s.insert(l);
    s.insert(complement(l));
  };
  for (const auto& f : facts) add(f);
  for (const auto& r : rules) {
    for (const auto& l : r.body.items) add(l);
    for (const auto& l : r.head.items) add(l);
  }
  return {s.begin(), s.end()};
}

namespace {

bool superiority_cyclic(const Theory& t) {
  // DFS over the superiority digraph on labels.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : t.superiority) adj[a].push_back(b);
  std::map<std::string, int> color;  // 0 white, 1 grey, 2 black
  std::vector<std::pair<std::string, size_t>> stack;
  for (const auto& [start, _] : adj) {
    if (color[start]) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty()) {
      auto& [node, idx] = stack.back();
      auto& next = adj[node];
      if (idx < next.size()) {
        const std::string& n = next[idx++];
        if (color[n] == 1) return true;
        if (color[n] == 0) {
          color[n] = 1;
          stack.push_back({n, 0});
        }
      } else {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport validate_theory(const Theory& t) {
  ValidationReport rep;
  auto violation = [&](std::string m) { rep.issues.push_back({std::move(m), false}); };
  auto warning = [&](std::string m) { rep.issues.push_back({std::move(m), true}); };

  std::set<std::string> seen;
  for (const auto& r : t.rules) {
    if (!seen.insert(r.label).second) violation("duplicate label " + r.label);
    if (r.body.structure != body_structure_of(t.variant))
      violation("rule " + r.label + ": body structure inconsistent with variant " +
                variant_name(t.variant));
    if (r.head.structure != head_structure_of(t.variant))
      violation("rule " + r.label + ": head structure inconsistent with variant " +
                variant_name(t.variant));
    if (r.head.structure == HeadStructure::Single && r.head.items.size() != 1)
      violation("rule " + r.label + ": single head must have exactly one literal");
    if (r.head.items.empty())
      violation("rule " + r.label + ": head must have at least one literal");
    for (const auto& l : r.body.items)
      if (!valid_identifier(l.atom)) violation("rule " + r.label + ": bad atom " + l.atom);
    for (const auto& l : r.head.items)
      if (!valid_identifier(l.atom)) violation("rule " + r.label + ": bad atom " + l.atom);
  }
  for (const auto& f : t.facts)
    if (!valid_identifier(f.atom)) violation("bad fact atom " + f.atom);

  for (const auto& [a, b] : t.superiority) {
    if (!t.rule(a)) violation("unknown label " + a);
    if (!t.rule(b)) violation("unknown label " + b);
    if (a == b) violation("reflexive superiority " + a + " > " + b);
  }
  if (superiority_cyclic(t)) warning("superiority relation contains a cycle");
  return rep;
}

}  // namespace rsdl
