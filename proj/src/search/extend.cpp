#include "codebounds/bounds.hpp"
#include "codebounds/search.hpp"

namespace codebounds {

Code extend_deficient(const Code& c, int d) {
  const int q = c.q();
  const int n = c.n();
  if (d < 1 || d > n || c.size() < 2 || !has_min_distance(c, d)) {
    throw ExtensionError(ExtensionFailure::InvalidCode, "input is not an (n,d)_q-code with at least two words");
  }
  const long long size = static_cast<long long>(c.size());
  const long long target = size + 1;
  if (static_cast<long long>(q) * d == static_cast<long long>(q - 1) * n) {
    if (size != static_cast<long long>(q) * n - 1) {
      throw ExtensionError(ExtensionFailure::Size, "expected qn - 1 = " + std::to_string(q * n - 1) + " words");
    }
  } else {
    if (target % q != 0) {
      throw ExtensionError(ExtensionFailure::Size, "|C| + 1 is not a multiple of q");
    }
    if (!equidistance_forced(CodeParams(q, n, d), target)) {
      throw ExtensionError(ExtensionFailure::Parameters,
                           "pair counting does not force a balanced profile at size " + std::to_string(target));
    }
  }

  const int per_symbol = static_cast<int>(target / q);
  const ColumnProfile profile = column_profile(c);
  std::vector<Symbol> extra(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    int deficient = -1;
    for (int a = 0; a < q; ++a) {
      const int k = profile.count(static_cast<Symbol>(a), j);
      if (k == per_symbol) continue;
      if (k != per_symbol - 1 || deficient >= 0) {
        throw ExtensionError(ExtensionFailure::NoUniqueDeficientSymbol,
                             "column " + std::to_string(j) + " has no unique symbol one short of " +
                                 std::to_string(per_symbol));
      }
      deficient = a;
    }
    if (deficient < 0) {
      throw ExtensionError(ExtensionFailure::NoUniqueDeficientSymbol,
                           "column " + std::to_string(j) + " is already balanced");
    }
    extra[static_cast<std::size_t>(j)] = static_cast<Symbol>(deficient);
  }

  const Word w(extra);
  for (const Word& v : c.words()) {
    if (hamming_distance(v, w) < d) {
      throw ExtensionError(ExtensionFailure::ExtensionInvalid, "completed word is too close to an existing word");
    }
  }
  return c.with(w);
}

AlphaStats alpha_stats(const Code& d_code, int d, std::uint64_t scan_limit) {
  if (d < 1 || d > d_code.n()) throw PreconditionError("d must lie in 1..n");
  const auto scan = d_code.packable() ? kernels::scan_words_parallel(d_code, d - 1, d, scan_limit)
                                      : kernels::scan_words_serial(d_code, d - 1, d, scan_limit);
  return AlphaStats{d - 1, scan.in_set, scan.histogram};
}

std::uint64_t candidate_count(const Code& d_code, int threshold, std::uint64_t scan_limit) {
  const auto scan = d_code.packable() ? kernels::scan_words_parallel(d_code, threshold, threshold, scan_limit)
                                      : kernels::scan_words_serial(d_code, threshold, threshold, scan_limit);
  return scan.in_set;
}

}  // namespace codebounds
