#include "codebounds/word.hpp"

#include <string>

#include "codebounds/errors.hpp"

namespace codebounds {

Word::Word(std::initializer_list<int> symbols) {
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || s > 255) throw PreconditionError("symbol out of range: " + std::to_string(s));
    symbols_.push_back(static_cast<Symbol>(s));
  }
}

int hamming_distance(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    throw LengthMismatch("words of length " + std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  }
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]);
  return d;
}

int agreement(const Word& u, const Word& v) {
  return static_cast<int>(u.size()) - hamming_distance(u, v);
}

PackedWord pack(const Word& w) {
  if (w.size() > static_cast<std::size_t>(kMaxPackedLength)) {
    throw PreconditionError("word too long to pack");
  }
  PackedWord p = 0;
  for (Symbol s : w.symbols()) {
    if (s >= kMaxPackedAlphabet) throw PreconditionError("symbol too large to pack");
    p = (p << 4) | s;
  }
  return p;
}

Word unpack(PackedWord p, int n) {
  std::vector<Symbol> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = packed_symbol(p, n, i);
  return Word(std::move(s));
}

}  // namespace codebounds
