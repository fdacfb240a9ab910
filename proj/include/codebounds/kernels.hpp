#pragma once

#include <cstdint>
#include <vector>

#include "codebounds/code.hpp"

namespace codebounds::kernels {

/// Outcome of a full scan of [q]^n against a code D.
struct ScanResult {
  // |{u : d_H(u, w) >= threshold for all w in D}|
  std::uint64_t in_set = 0;
  // histogram[a] = number of u in that set with exactly a words of D at distance `match`
  std::vector<std::uint64_t> histogram;

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// q^n, or throws BudgetExceeded if it exceeds `limit`.
std::uint64_t word_space_size(int q, int n, std::uint64_t limit);

inline constexpr std::uint64_t kDefaultScanLimit = 1ULL << 26;

/// Reference implementation: plain symbol-by-symbol distances, one thread.
ScanResult scan_words_serial(const Code& d, int threshold, int match,
                             std::uint64_t limit = kDefaultScanLimit);

/// Packed popcount distances, OpenMP over disjoint index ranges of [q]^n.
ScanResult scan_words_parallel(const Code& d, int threshold, int match,
                               std::uint64_t limit = kDefaultScanLimit);

}  // namespace codebounds::kernels
