#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "codebounds/code.hpp"

namespace codebounds {

/// q-ary Plotkin bound floor(qd / (qd - n(q-1))); empty unless qd > (q-1)n.
std::optional<long long> plotkin_bound(const CodeParams& p);

/// A_q(n,d) <= q * A_q(n-1,d), given `inner` >= A_q(n-1,d).
long long column_recursion_bound(int q, long long inner);

/// Pair-counting bounds for a code of size M.
///
/// L = C(M,2)(n-d) bounds the total column agreement from above and
/// R = n((q-r)C(m,2) + r C(m-1,2)) from below, where m = ceil(M/q) and
/// r = qm - M. At most L - R pairs can be at distance other than d.
struct PairCountBounds {
  long long L;
  long long R;
  long long m;
  long long r;
  long long budget;
};

PairCountBounds pair_count_bounds(const CodeParams& p, long long M);

/// True iff every (n,d)_q-code of size M is forced to be equidistant with a
/// balanced column profile (L == R).
bool equidistance_forced(const CodeParams& p, long long M);

struct IrregularAudit {
  long long not_d_pairs;  // pairs at distance != d
  long long irregular;    // pairs at distance outside {d, n}
  long long budget;       // L - R for this size
};

IrregularAudit irregular_budget_audit(const Code& c, int d);

/// The quadratic in r that decides the divisibility bound:
/// n(n-1-d)(r-1)r - (q-r+1)(mq(q+r-2) - 2r).
long long phi_eval(long long q, long long n, long long d, long long m, long long r);

struct DivisibilityCertificate {
  int q;
  int n;
  int d;
  long long m;
  bool divisibility_ok;                // (n-d) does not divide m(n-1)
  std::map<long long, long long> phi;  // r -> phi(r), r = 1..q-1
  long long chosen_r;
  // Irregular-pair bounds at the chosen r for a hypothetical code of size mq^2 - r:
  // lower l(s) for s = 1..q, where s counts the mq-blocks of one column.
  std::map<long long, long long> l_values;
  long long lower_pairs;  // l(q - r + 1)
  long long upper_pairs;  // n(n-1-d) C(r,2), extremal block profile
  long long bound;        // mq^2 - r - 1
  std::string upper_form;
};

/// Largest-r divisibility bound; empty when m is not a positive integer,
/// when (n-d) divides m(n-1), or when phi(r) >= 0 for every r.
std::optional<DivisibilityCertificate> divisibility_bound(const CodeParams& p);

/// (q-1)q(q+2)/2 for q = 1 mod 4, q > 1; cross-checked against
/// divisibility_bound(q, q+3, q+1). Empty otherwise.
std::optional<long long> corollary_q_plus_3(int q);

/// max(0, L - R) for a code of size k: an upper bound on the pairs at
/// distance != d inside any (n,d)_q-code with k words.
long long h_table(const CodeParams& p, long long k);

long long binom2(long long x);

struct RegistryEntry {
  long long value;
  bool exact;  // false: only an upper bound
  std::string provenance;
};

/// Externally known values of A_q(n,d). Read-only; absent keys are misses.
class KnownValuesRegistry {
 public:
  static const KnownValuesRegistry& builtin();

  [[nodiscard]] std::optional<RegistryEntry> lookup(int q, int n, int d) const;
  [[nodiscard]] const std::map<std::tuple<int, int, int>, RegistryEntry>& entries() const { return entries_; }

 private:
  KnownValuesRegistry();
  std::map<std::tuple<int, int, int>, RegistryEntry> entries_;
};

std::optional<RegistryEntry> registry_lookup(int q, int n, int d);

/// Best of Plotkin, divisibility, registry and column recursion, applied
/// recursively down to n = d.
struct BestBound {
  long long value;
  std::string method;
};

BestBound best_bound(const CodeParams& p);

}  // namespace codebounds
