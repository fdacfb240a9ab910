#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "codebounds/word.hpp"

namespace codebounds {

/// Alphabet size q, word length n and minimum distance d of an (n,d)_q-code.
struct CodeParams {
  int q;
  int n;
  int d;

  CodeParams(int q, int n, int d);

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// A set of distinct words of common length n over a q-letter alphabet.
///
/// Words are kept in lexicographic order; row order carries no meaning.
/// Instances are immutable.
class Code {
 public:
  Code(int q, int n, std::vector<Word> words);

  [[nodiscard]] int q() const noexcept { return q_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
  [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
  [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }
  [[nodiscard]] const Word& operator[](std::size_t i) const { return words_[i]; }

  /// Packed rows in the same order as words(). Only for n <= 16, q <= 16.
  [[nodiscard]] std::span<const PackedWord> packed() const;
  [[nodiscard]] bool packable() const noexcept { return !packed_.empty() || words_.empty(); }

  [[nodiscard]] Code without(std::size_t index) const;
  [[nodiscard]] Code with(const Word& w) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator<(const Code& a, const Code& b);

 private:
  int q_;
  int n_;
  std::vector<Word> words_;
  std::vector<PackedWord> packed_;
};

/// Builds a code from packed rows (n <= 16).
Code code_from_packed(int q, int n, std::span<const PackedWord> rows);

/// Minimum pairwise distance; throws UndefinedDistance when |C| < 2.
int min_distance(const Code& c);

/// True iff every pair of distinct words is at distance >= d.
bool has_min_distance(const Code& c, int d);

/// All pairwise distances, sorted ascending.
std::vector<int> distance_multiset(const Code& c);

struct ColumnProfile {
  int q;
  int n;
  std::size_t size;
  // counts[symbol][column]
  std::vector<std::vector<int>> counts;
  // histogram[column][k] = number of symbols occurring exactly k times, k = 0..size
  std::vector<std::vector<int>> histogram;

  [[nodiscard]] int count(Symbol symbol, int column) const { return counts[symbol][column]; }
};

ColumnProfile column_profile(const Code& c);

/// The words of a code carrying one symbol in one column.
struct Block {
  int column;
  Symbol symbol;
  Code rows;

  [[nodiscard]] std::size_t size() const noexcept { return rows.size(); }
  /// The rows with the block column removed; an (n-1, d)_q-code.
  [[nodiscard]] Code projected() const;
};

Block extract_block(const Code& c, int column, Symbol symbol);

/// Removes one column. Throws StructureError if two words collapse.
Code delete_column(const Code& c, int column);

}  // namespace codebounds
