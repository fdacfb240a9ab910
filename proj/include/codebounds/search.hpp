#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "codebounds/code.hpp"
#include "codebounds/errors.hpp"
#include "codebounds/kernels.hpp"

namespace codebounds {

inline constexpr const char* kGeneratorVersion = "codebounds-orderly-1";

enum class EnumerationMode { AllClasses, ExistenceOnly };

struct EnumerationLimits {
  std::uint64_t max_nodes = 1'000'000'000ULL;
  std::chrono::seconds max_time{600};
};

struct EnumerationTask {
  CodeParams params;
  int target_size;
  EnumerationMode mode = EnumerationMode::AllClasses;
  EnumerationLimits limits{};
  int threads = 0;  // 0: OpenMP default
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::size_t frontier = 0;
};

struct EnumerationResult {
  std::vector<Code> classes;
  EnumerationStats stats;
};

/// One canonical representative per equivalence class of (n,d)_q-codes of
/// the target size, sorted. Orderly generation: words are appended in
/// increasing order and a partial code is kept only if it is canonical.
/// The output does not depend on the thread count. Throws BudgetExceeded
/// when the node or time budget runs out.
EnumerationResult run_enumeration(const EnumerationTask& task);

std::vector<Code> enumerate_codes(const EnumerationTask& task);

/// Canonical forms of every code obtained by deleting one word from a
/// parent, deduplicated and sorted.
std::vector<Code> codes_by_deletion(const std::vector<Code>& parents);

enum class ExtensionFailure {
  InvalidCode,
  Size,
  Parameters,
  NoUniqueDeficientSymbol,
  ExtensionInvalid,
};

class ExtensionError : public PreconditionError {
 public:
  ExtensionError(ExtensionFailure kind, const std::string& what) : PreconditionError(what), kind_(kind) {}
  [[nodiscard]] ExtensionFailure kind() const noexcept { return kind_; }

 private:
  ExtensionFailure kind_;
};

/// Completes a code that is one word short of a balanced column profile by
/// appending, column by column, the unique symbol that occurs once too few.
///
/// Accepted when qd = (q-1)n and |C| = qn - 1, or when |C| + 1 is a multiple
/// of q at which pair counting forces equidistance. The result is checked
/// against the minimum distance before it is returned.
Code extend_deficient(const Code& c, int d);

struct AlphaStats {
  int threshold;
  std::uint64_t s_size;
  // histogram[a] = |{u in S : exactly a words of D at distance d}|
  std::vector<std::uint64_t> histogram;

  [[nodiscard]] std::uint64_t count(std::size_t alpha) const {
    return alpha < histogram.size() ? histogram[alpha] : 0;
  }
};

/// S = {u : d_H(u,w) >= d-1 for all w in D} and the histogram of
/// alpha(u) = |{w in D : d_H(u,w) = d}| by a full scan of [q]^n.
AlphaStats alpha_stats(const Code& d_code, int d, std::uint64_t scan_limit = kernels::kDefaultScanLimit);

/// |{u in [q]^n : d_H(u,w) >= threshold for all w in D}|.
std::uint64_t candidate_count(const Code& d_code, int threshold,
                              std::uint64_t scan_limit = kernels::kDefaultScanLimit);

}  // namespace codebounds
