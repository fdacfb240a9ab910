#include "codebounds/equivalence.hpp"

#include <algorithm>
#include <numeric>

#include "codebounds/errors.hpp"

namespace codebounds {

namespace {

template <typename T>
bool is_permutation_of_range(const std::vector<T>& p) {
  std::vector<char> seen(p.size(), 0);
  for (T x : p) {
    auto i = static_cast<std::size_t>(x);
    if (i >= p.size() || seen[i]) return false;
    seen[i] = 1;
  }
  return true;
}

}  // namespace

EquivalenceMap::EquivalenceMap(std::vector<int> column_perm,
                               std::vector<std::vector<Symbol>> symbol_perms)
    : q_(symbol_perms.empty() ? 0 : static_cast<int>(symbol_perms.front().size())),
      column_perm_(std::move(column_perm)),
      symbol_perms_(std::move(symbol_perms)) {
  if (column_perm_.size() != symbol_perms_.size()) {
    throw PreconditionError("column and symbol permutation counts differ");
  }
  if (!is_permutation_of_range(column_perm_)) {
    throw PreconditionError("column map is not a permutation");
  }
  for (const auto& sp : symbol_perms_) {
    if (static_cast<int>(sp.size()) != q_ || !is_permutation_of_range(sp)) {
      throw PreconditionError("symbol map is not a permutation");
    }
  }
}

EquivalenceMap EquivalenceMap::identity(int q, int n) {
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<Symbol> id(static_cast<std::size_t>(q));
  std::iota(id.begin(), id.end(), Symbol{0});
  return EquivalenceMap(std::move(cols), std::vector<std::vector<Symbol>>(n, id));
}

EquivalenceMap EquivalenceMap::random(int q, int n, std::mt19937_64& rng) {
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<std::vector<Symbol>> syms(static_cast<std::size_t>(n));
  for (auto& s : syms) {
    s.resize(static_cast<std::size_t>(q));
    std::iota(s.begin(), s.end(), Symbol{0});
    std::shuffle(s.begin(), s.end(), rng);
  }
  return EquivalenceMap(std::move(cols), std::move(syms));
}

Word EquivalenceMap::apply(const Word& w) const {
  if (w.size() != column_perm_.size()) throw PreconditionError("word length does not match map");
  std::vector<Symbol> out(w.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    Symbol s = w[static_cast<std::size_t>(column_perm_[t])];
    if (s >= q_) throw PreconditionError("symbol outside map alphabet");
    out[t] = symbol_perms_[t][s];
  }
  return Word(std::move(out));
}

EquivalenceMap EquivalenceMap::then(const EquivalenceMap& next) const {
  if (next.n() != n() || next.q() != q()) throw PreconditionError("composing maps of different shape");
  const auto n_ = static_cast<std::size_t>(n());
  std::vector<int> cols(n_);
  std::vector<std::vector<Symbol>> syms(n_, std::vector<Symbol>(static_cast<std::size_t>(q_)));
  for (std::size_t t = 0; t < n_; ++t) {
    auto mid = static_cast<std::size_t>(next.column_perm_[t]);
    cols[t] = column_perm_[mid];
    for (int x = 0; x < q_; ++x) syms[t][x] = next.symbol_perms_[t][symbol_perms_[mid][x]];
  }
  return EquivalenceMap(std::move(cols), std::move(syms));
}

EquivalenceMap EquivalenceMap::inverse() const {
  const auto n_ = static_cast<std::size_t>(n());
  std::vector<int> cols(n_);
  std::vector<std::vector<Symbol>> syms(n_, std::vector<Symbol>(static_cast<std::size_t>(q_)));
  for (std::size_t t = 0; t < n_; ++t) {
    auto s = static_cast<std::size_t>(column_perm_[t]);
    cols[s] = static_cast<int>(t);
    for (int x = 0; x < q_; ++x) syms[s][symbol_perms_[t][x]] = static_cast<Symbol>(x);
  }
  return EquivalenceMap(std::move(cols), std::move(syms));
}

Code apply_equivalence(const Code& c, const EquivalenceMap& e) {
  if (e.n() != c.n() || e.q() != c.q()) {
    throw PreconditionError("equivalence map shape does not match code");
  }
  std::vector<Word> out;
  out.reserve(c.size());
  for (const Word& w : c.words()) out.push_back(e.apply(w));
  return Code(c.q(), c.n(), std::move(out));
}

}  // namespace codebounds
