#include "chsym/virtual_character.hpp"

namespace chsym {

void VirtualCharacter::add(const Symbol& label, long long mult) {
  if (mult == 0) return;
  Symbol key = symbol_normalize(label);
  auto [it, inserted] = terms_.emplace(key, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

void VirtualCharacter::add_unresolved(const Symbol& label, long long total) {
  if (total == 0) return;
  Symbol key = symbol_normalize(label.without_decoration());
  auto [it, inserted] = unresolved_.emplace(key, total);
  if (!inserted) {
    it->second += total;
    if (it->second == 0) unresolved_.erase(it);
  }
}

void VirtualCharacter::add_all(const VirtualCharacter& other, long long scale) {
  for (const auto& [label, mult] : other.terms_) add(label, mult * scale);
  for (const auto& [label, mult] : other.unresolved_)
    add_unresolved(label, mult * scale);
}

long long VirtualCharacter::operator[](const Symbol& label) const {
  auto it = terms_.find(symbol_normalize(label));
  return it == terms_.end() ? 0 : it->second;
}

long long VirtualCharacter::unresolved(const Symbol& label) const {
  auto it = unresolved_.find(symbol_normalize(label.without_decoration()));
  return it == unresolved_.end() ? 0 : it->second;
}

std::string to_string(const VirtualCharacter& vc) {
  std::string out;
  for (const auto& [label, mult] : vc.terms()) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += to_string(label);
  }
  for (const auto& [label, mult] : vc.unresolved_terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(mult) + "*split" + to_string(label);
  }
  return out.empty() ? "0" : out;
}

}  // namespace chsym
