#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "codebounds/search.hpp"

namespace codebounds {

using ordered_json = nlohmann::ordered_json;

enum class Verdict { Verified, Refuted, Inapplicable };

const char* to_string(Verdict v);

struct CertInput {
  std::string name;
  ordered_json value;
  std::string provenance;
};

struct CertStep {
  std::string id;
  std::string desc;
  std::string op;
  ordered_json data;
  bool ok = false;
};

struct Certificate {
  std::string theorem_id;
  std::vector<CertInput> inputs;
  std::vector<CertStep> steps;
  Verdict verdict = Verdict::Inapplicable;
  std::optional<long long> bound;
  ordered_json environment = ordered_json::object();

  /// {theorem_id, inputs, steps, verdict, environment}. The bound is part of
  /// the last step's data.
  [[nodiscard]] ordered_json to_json() const;
  [[nodiscard]] std::string to_text() const;
};

struct PipelineOptions {
  int threads = 0;
  EnumerationLimits limits{};
};

/// Lower bound on the irregular pairs of a size-65 (8,6)_5 code with x
/// symbols occurring 15 times and y symbols 14 times in one column.
long long f_eval(long long x, long long y);

/// a[k] = number of symbols occurring k times in a column (index 0 unused).
using Profile = std::array<int, 16>;

/// All column profiles of a size-65 quinary column: sum a_k k = 65 and
/// sum a_k = 5, in lexicographic order of (a_1, ..., a_15).
std::vector<Profile> profile_tuples();

struct ProfileInequalityReport {
  std::size_t tuples = 0;
  std::size_t pairs_examined = 0;
  std::size_t pairs_applicable = 0;
  std::optional<long long> min_slack;
  std::vector<std::pair<Profile, Profile>> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// For all ordered pairs (a,b) with f(a15,a14) <= f(b15,b14) != 0 checks
/// sum_k (7 a_k + b_k) h(k) < f(b15,b14), h from the (7,6)_5 pair counts.
ProfileInequalityReport check_profile_inequality();
CertStep profile_inequality_step();

Certificate verify_a5_8_6(const PipelineOptions& opt = {});
Certificate verify_a3_16_11(const PipelineOptions& opt = {});
Certificate verify_a4_9_6(const PipelineOptions& opt = {});
/// Composes the divisibility bounds, column recursion and the three
/// pipelines above into the full table of new bounds.
Certificate verify_divisibility_family(const PipelineOptions& opt = {});

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"a5_8_6", "a3_16_11", "a4_9_6", "divisibility_family"};
  return ids;
}

/// Throws PreconditionError for an unknown id.
Certificate run_pipeline(const std::string& theorem_id, const PipelineOptions& opt = {});

}  // namespace codebounds
