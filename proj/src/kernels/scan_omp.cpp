#include <omp.h>

#include <algorithm>

#include "codebounds/errors.hpp"
#include "codebounds/kernels.hpp"

namespace codebounds::kernels {

namespace {

constexpr std::uint64_t kChunk = 4096;

}  // namespace

ScanResult scan_words_parallel(const Code& d, int threshold, int match, std::uint64_t limit) {
  const int q = d.q();
  const int n = d.n();
  if (!d.packable()) throw PreconditionError("parallel scan needs n <= 16 and q <= 16");
  const std::uint64_t total = word_space_size(q, n, limit);
  const auto rows = d.packed();
  const std::size_t m = rows.size();
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);

  ScanResult out;
  out.histogram.assign(m + 1, 0);

#pragma omp parallel
  {
    std::vector<std::uint64_t> hist(m + 1, 0);
    std::uint64_t in_set = 0;
    std::vector<int> digits(static_cast<std::size_t>(n));

#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      std::uint64_t idx = begin;
      PackedWord u = 0;
      for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(idx % static_cast<std::uint64_t>(q));
        idx /= static_cast<std::uint64_t>(q);
      }
      for (int i = 0; i < n; ++i) u = (u << 4) | static_cast<PackedWord>(digits[i]);

      for (std::uint64_t k = begin; k < end; ++k) {
        bool ok = true;
        std::size_t alpha = 0;
        for (std::size_t r = 0; r < m; ++r) {
          const int dist = packed_distance(u, rows[r]);
          if (dist < threshold) {
            ok = false;
            break;
          }
          alpha += (dist == match);
        }
        if (ok) {
          ++in_set;
          ++hist[alpha];
        }
        int i = n - 1;
        while (i >= 0 && digits[i] == q - 1) {
          digits[i] = 0;
          u -= static_cast<PackedWord>(q - 1) << (4 * (n - 1 - i));
          --i;
        }
        if (i >= 0) {
          ++digits[i];
          u += PackedWord{1} << (4 * (n - 1 - i));
        }
      }
    }

#pragma omp critical
    {
      out.in_set += in_set;
      for (std::size_t a = 0; a <= m; ++a) out.histogram[a] += hist[a];
    }
  }
  return out;
}

}  // namespace codebounds::kernels
