#include "codebounds/errors.hpp"
#include "codebounds/kernels.hpp"

namespace codebounds::kernels {

std::uint64_t word_space_size(int q, int n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > limit / static_cast<std::uint64_t>(q)) {
      throw BudgetExceeded("word space " + std::to_string(q) + "^" + std::to_string(n) + " exceeds scan limit " +
                               std::to_string(limit),
                           0);
    }
    total *= static_cast<std::uint64_t>(q);
  }
  if (total > limit) throw BudgetExceeded("word space exceeds scan limit", 0);
  return total;
}

ScanResult scan_words_serial(const Code& d, int threshold, int match, std::uint64_t limit) {
  const int q = d.q();
  const int n = d.n();
  word_space_size(q, n, limit);
  ScanResult out;
  out.histogram.assign(d.size() + 1, 0);
  std::vector<Symbol> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    const Word u(digits);
    bool in_set = true;
    std::size_t alpha = 0;
    for (const Word& w : d.words()) {
      const int dist = hamming_distance(u, w);
      if (dist < threshold) {
        in_set = false;
        break;
      }
      if (dist == match) ++alpha;
    }
    if (in_set) {
      ++out.in_set;
      ++out.histogram[alpha];
    }
    int i = n - 1;
    while (i >= 0 && digits[i] == q - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

}  // namespace codebounds::kernels
