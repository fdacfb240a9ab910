#include "codebounds/code.hpp"

#include <algorithm>
#include <string>

#include "codebounds/errors.hpp"

namespace codebounds {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed-header";
    case ParseErrorKind::MalformedRow: return "malformed-row";
    case ParseErrorKind::SymbolOutOfRange: return "symbol-out-of-range";
    case ParseErrorKind::DuplicateWord: return "duplicate-word";
    case ParseErrorKind::LengthMismatch: return "length-mismatch";
    case ParseErrorKind::RowCount: return "row-count";
  }
  return "unknown";
}

CodeParams::CodeParams(int q_, int n_, int d_) : q(q_), n(n_), d(d_) {
  if (q < 2) throw PreconditionError("q must be >= 2, got " + std::to_string(q));
  if (n < 1) throw PreconditionError("n must be >= 1, got " + std::to_string(n));
  if (d < 1 || d > n) {
    throw PreconditionError("d must satisfy 1 <= d <= n, got d=" + std::to_string(d));
  }
}

Code::Code(int q, int n, std::vector<Word> words) : q_(q), n_(n), words_(std::move(words)) {
  if (q < 2) throw PreconditionError("alphabet size must be >= 2");
  if (n < 1) throw PreconditionError("word length must be >= 1");
  for (const Word& w : words_) {
    if (w.size() != static_cast<std::size_t>(n)) {
      throw LengthMismatch("word of length " + std::to_string(w.size()) + " in code of length " +
                           std::to_string(n));
    }
    for (Symbol s : w.symbols()) {
      if (s >= q) throw PreconditionError("symbol " + std::to_string(s) + " outside alphabet");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw PreconditionError("code contains duplicate words");
  }
  if (n <= kMaxPackedLength && q <= kMaxPackedAlphabet) {
    packed_.reserve(words_.size());
    for (const Word& w : words_) packed_.push_back(pack(w));
  }
}

std::span<const PackedWord> Code::packed() const {
  if (!packable()) throw PreconditionError("code too large for packed representation");
  return packed_;
}

Code Code::without(std::size_t index) const {
  if (index >= words_.size()) throw PreconditionError("word index out of range");
  std::vector<Word> w = words_;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(index));
  return Code(q_, n_, std::move(w));
}

Code Code::with(const Word& word) const {
  std::vector<Word> w = words_;
  w.push_back(word);
  return Code(q_, n_, std::move(w));
}

bool operator<(const Code& a, const Code& b) {
  if (a.q_ != b.q_) return a.q_ < b.q_;
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.words_.size() != b.words_.size()) return a.words_.size() < b.words_.size();
  return a.words_ < b.words_;
}

Code code_from_packed(int q, int n, std::span<const PackedWord> rows) {
  std::vector<Word> words;
  words.reserve(rows.size());
  for (PackedWord p : rows) words.push_back(unpack(p, n));
  return Code(q, n, std::move(words));
}

int min_distance(const Code& c) {
  if (c.size() < 2) throw UndefinedDistance("minimum distance needs at least two words");
  int best = c.n();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      best = std::min(best, hamming_distance(c[i], c[j]));
    }
  }
  return best;
}

bool has_min_distance(const Code& c, int d) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (hamming_distance(c[i], c[j]) < d) return false;
    }
  }
  return true;
}

std::vector<int> distance_multiset(const Code& c) {
  std::vector<int> out;
  out.reserve(c.size() * (c.size() - (c.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) out.push_back(hamming_distance(c[i], c[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ColumnProfile column_profile(const Code& c) {
  ColumnProfile p{c.q(), c.n(), c.size(), {}, {}};
  p.counts.assign(static_cast<std::size_t>(c.q()), std::vector<int>(static_cast<std::size_t>(c.n()), 0));
  for (const Word& w : c.words()) {
    for (int j = 0; j < c.n(); ++j) ++p.counts[w[j]][j];
  }
  p.histogram.assign(static_cast<std::size_t>(c.n()), std::vector<int>(c.size() + 1, 0));
  for (int j = 0; j < c.n(); ++j) {
    for (int a = 0; a < c.q(); ++a) ++p.histogram[j][p.counts[a][j]];
  }
  return p;
}

Code Block::projected() const { return delete_column(rows, column); }

Block extract_block(const Code& c, int column, Symbol symbol) {
  if (column < 0 || column >= c.n()) throw PreconditionError("column out of range");
  if (symbol >= c.q()) throw PreconditionError("symbol out of range");
  std::vector<Word> rows;
  for (const Word& w : c.words()) {
    if (w[column] == symbol) rows.push_back(w);
  }
  return Block{column, symbol, Code(c.q(), c.n(), std::move(rows))};
}

Code delete_column(const Code& c, int column) {
  if (c.n() < 2) throw PreconditionError("cannot delete the only column");
  if (column < 0 || column >= c.n()) throw PreconditionError("column out of range");
  std::vector<Word> rows;
  rows.reserve(c.size());
  for (const Word& w : c.words()) {
    std::vector<Symbol> s(w.symbols().begin(), w.symbols().end());
    s.erase(s.begin() + column);
    rows.emplace_back(std::move(s));
  }
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) {
    throw StructureError("deleting column " + std::to_string(column) + " merges two words");
  }
  return Code(c.q(), c.n() - 1, std::move(rows));
}

}  // namespace codebounds
