#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "unc/term/term.hpp"

namespace unc {

/// Reserved for contexts; never accepted as a user symbol.
inline constexpr std::string_view kHoleSymbol = "□";

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Function symbols with fixed arities.
class Signature {
 public:
  /// Throws SignatureError on an arity conflict or a reserved name.
  void declare(const std::string& symbol, std::size_t arity);
  /// Declares every function symbol occurring in `t`.
  void absorb(const Term& t);

  std::optional<std::size_t> arity(const std::string& symbol) const;
  bool contains(const std::string& symbol) const { return arities_.count(symbol) > 0; }
  /// Whether every application in `t` uses a declared symbol at its arity.
  bool admits(const Term& t) const;

  const std::map<std::string, std::size_t>& symbols() const { return arities_; }
  std::size_t size() const { return arities_.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, std::size_t> arities_;
};

}  // namespace unc
