#include "unc/term/signature.hpp"

namespace unc {

void Signature::declare(const std::string& symbol, std::size_t arity) {
  if (symbol == kHoleSymbol) throw SignatureError("the hole symbol is reserved");
  if (symbol == kTupleSymbol) throw SignatureError("empty symbol name");
  auto [it, inserted] = arities_.emplace(symbol, arity);
  if (!inserted && it->second != arity)
    throw SignatureError("symbol '" + symbol + "' used with arity " + std::to_string(arity) +
                         " but declared with arity " + std::to_string(it->second));
}

void Signature::absorb(const Term& t) {
  if (t.is_variable()) return;
  declare(t.name(), t.arity());
  for (const Term& a : t.args()) absorb(a);
}

std::optional<std::size_t> Signature::arity(const std::string& symbol) const {
  auto it = arities_.find(symbol);
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

bool Signature::admits(const Term& t) const {
  if (t.is_variable()) return !contains(t.name());
  auto a = arity(t.name());
  if (!a || *a != t.arity()) return false;
  for (const Term& arg : t.args())
    if (!admits(arg)) return false;
  return true;
}

}  // namespace unc
