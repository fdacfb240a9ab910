#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace codebounds {

using Symbol = std::uint8_t;

/// A length-n sequence over the alphabet {0, ..., q-1}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<int> symbols);

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
  [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Number of positions where u and v differ. Throws LengthMismatch.
int hamming_distance(const Word& u, const Word& v);

/// n - hamming_distance(u, v).
int agreement(const Word& u, const Word& v);

// Packed words hold 4 bits per symbol with position 0 in the most significant
// used nibble, so integer order equals lexicographic order.
using PackedWord = std::uint64_t;
inline constexpr int kMaxPackedLength = 16;
inline constexpr int kMaxPackedAlphabet = 16;

PackedWord pack(const Word& w);
Word unpack(PackedWord p, int n);

inline int packed_distance(PackedWord a, PackedWord b) noexcept {
  PackedWord x = a ^ b;
  x |= x >> 1;
  x |= x >> 2;
  return std::popcount(x & 0x1111111111111111ULL);
}

inline Symbol packed_symbol(PackedWord p, int n, int i) noexcept {
  return static_cast<Symbol>((p >> (4 * (n - 1 - i))) & 0xFU);
}

}  // namespace codebounds
