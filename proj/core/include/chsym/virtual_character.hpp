#pragma once

/*
  virtual_character.hpp

  Integer combinations of symbol-labelled irreducible characters.  Labels
  are normalized symbols (ordered for the B-side Weyl groups, unordered
  and possibly decorated for the D-side).  A separate bucket carries
  degenerate labels whose +/- split the combinatorics leaves unresolved;
  those store the total multiplicity of the pair.
*/

#include <map>
#include <string>

#include "chsym/symbol.hpp"

namespace chsym {

class VirtualCharacter {
public:
  void add(const Symbol& label, long long mult);
  void add_unresolved(const Symbol& undecorated_label, long long total);
  void add_all(const VirtualCharacter& other, long long scale = 1);

  long long operator[](const Symbol& label) const;
  long long unresolved(const Symbol& undecorated_label) const;

  const std::map<Symbol, long long>& terms() const { return terms_; }
  const std::map<Symbol, long long>& unresolved_terms() const {
    return unresolved_;
  }

  bool empty() const { return terms_.empty() && unresolved_.empty(); }

  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;

private:
  std::map<Symbol, long long> terms_;
  std::map<Symbol, long long> unresolved_;
};

std::string to_string(const VirtualCharacter& vc);

}  // namespace chsym
