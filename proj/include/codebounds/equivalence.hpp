#pragma once

#include <random>
#include <vector>

#include "codebounds/code.hpp"

namespace codebounds {

/// Column permutation followed by a symbol renumbering of every column.
///
/// Applying the map to a word w gives v with
///   v[t] = symbol_perms[t][ w[column_perm[t]] ],
/// i.e. target column t is taken from source column column_perm[t] and then
/// renumbered by symbol_perms[t].
class EquivalenceMap {
 public:
  EquivalenceMap(std::vector<int> column_perm, std::vector<std::vector<Symbol>> symbol_perms);

  static EquivalenceMap identity(int q, int n);
  static EquivalenceMap random(int q, int n, std::mt19937_64& rng);

  [[nodiscard]] int n() const noexcept { return static_cast<int>(column_perm_.size()); }
  [[nodiscard]] int q() const noexcept { return q_; }
  [[nodiscard]] const std::vector<int>& column_perm() const noexcept { return column_perm_; }
  [[nodiscard]] const std::vector<std::vector<Symbol>>& symbol_perms() const noexcept {
    return symbol_perms_;
  }

  [[nodiscard]] Word apply(const Word& w) const;
  /// The map "this, then next".
  [[nodiscard]] EquivalenceMap then(const EquivalenceMap& next) const;
  [[nodiscard]] EquivalenceMap inverse() const;

  friend bool operator==(const EquivalenceMap&, const EquivalenceMap&) = default;

 private:
  int q_;
  std::vector<int> column_perm_;
  std::vector<std::vector<Symbol>> symbol_perms_;
};

/// Throws PreconditionError on dimension mismatch.
Code apply_equivalence(const Code& c, const EquivalenceMap& e);

}  // namespace codebounds
