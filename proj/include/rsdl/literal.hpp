#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsdl {

// A signed propositional atom. Literals are the unit of resource: every
// derived occurrence is a separate consumable instance.
struct Literal {
  std::string atom;
  bool negated = false;

  auto operator<=>(const Literal&) const = default;
};

inline Literal complement(const Literal& x) { return Literal{x.atom, !x.negated}; }

inline std::string to_string(const Literal& x) { return x.negated ? "~" + x.atom : x.atom; }

inline bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s[0])) return false;
  for (char c : s.substr(1))
    if (!tail(c)) return false;
  return true;
}

// Inverse of to_string; used by the JSON reader.
inline Literal literal_from_string(std::string_view s) {
  Literal l;
  if (!s.empty() && s[0] == '~') {
    l.negated = true;
    s.remove_prefix(1);
  }
  if (!valid_identifier(s)) throw std::invalid_argument("bad literal: " + std::string(s));
  l.atom = std::string(s);
  return l;
}

}  // namespace rsdl
