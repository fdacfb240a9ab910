#include "codebounds/bounds.hpp"

#include <stdexcept>
#include <tuple>

#include "codebounds/errors.hpp"

namespace codebounds {

long long binom2(long long x) { return x * (x - 1) / 2; }

std::optional<long long> plotkin_bound(const CodeParams& p) {
  const long long qd = static_cast<long long>(p.q) * p.d;
  const long long rhs = static_cast<long long>(p.q - 1) * p.n;
  if (qd <= rhs) return std::nullopt;
  return qd / (qd - rhs);
}

long long column_recursion_bound(int q, long long inner) { return q * inner; }

PairCountBounds pair_count_bounds(const CodeParams& p, long long M) {
  if (M < 1) throw PreconditionError("pair_count_bounds needs M >= 1");
  const long long q = p.q;
  const long long m = (M + q - 1) / q;
  const long long r = q * m - M;
  const long long L = binom2(M) * (p.n - p.d);
  const long long R = p.n * ((q - r) * binom2(m) + r * binom2(m - 1));
  return PairCountBounds{L, R, m, r, L - R};
}

bool equidistance_forced(const CodeParams& p, long long M) { return pair_count_bounds(p, M).budget == 0; }

IrregularAudit irregular_budget_audit(const Code& c, int d) {
  const CodeParams p(c.q(), c.n(), d);
  IrregularAudit audit{0, 0, 0};
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const int dist = hamming_distance(c[i], c[j]);
      if (dist < d) throw PreconditionError("code has a pair below the minimum distance");
      if (dist != d) {
        ++audit.not_d_pairs;
        if (dist != c.n()) ++audit.irregular;
      }
    }
  }
  audit.budget = c.empty() ? 0 : pair_count_bounds(p, static_cast<long long>(c.size())).budget;
  return audit;
}

long long phi_eval(long long q, long long n, long long d, long long m, long long r) {
  return n * (n - 1 - d) * (r - 1) * r - (q - r + 1) * (m * q * (q + r - 2) - 2 * r);
}

std::optional<DivisibilityCertificate> divisibility_bound(const CodeParams& p) {
  const long long q = p.q, n = p.n, d = p.d;
  const long long denom = q * d - (n - 1) * (q - 1);
  if (denom <= 0 || d % denom != 0) return std::nullopt;
  const long long m = d / denom;
  if (n == d) return std::nullopt;
  if ((m * (n - 1)) % (n - d) == 0) return std::nullopt;

  DivisibilityCertificate cert;
  cert.q = p.q;
  cert.n = p.n;
  cert.d = p.d;
  cert.m = m;
  cert.divisibility_ok = true;
  cert.chosen_r = 0;
  for (long long r = q - 1; r >= 1; --r) {
    cert.phi[r] = phi_eval(q, n, d, m, r);
    if (cert.chosen_r == 0 && cert.phi[r] < 0) cert.chosen_r = r;
  }
  if (cert.chosen_r == 0) return std::nullopt;

  const long long r = cert.chosen_r;
  for (long long s = 1; s <= q; ++s) cert.l_values[s] = s * (m * q * (2 * q - s - 1) - 2 * r) / 2;
  cert.lower_pairs = cert.l_values[q - r + 1];
  cert.upper_pairs = n * (n - 1 - d) * binom2(r);
  cert.bound = m * q * q - r - 1;
  cert.upper_form = "extremal block profile (one block short by r per column)";
  if (2 * (cert.upper_pairs - cert.lower_pairs) != cert.phi[r]) {
    throw std::logic_error("phi does not match the irregular-pair bounds");
  }
  return cert;
}

std::optional<long long> corollary_q_plus_3(int q) {
  if (q <= 1 || q % 4 != 1) return std::nullopt;
  const long long qq = q;
  const long long value = (qq - 1) * qq * (qq + 2) / 2;
  const auto cert = divisibility_bound(CodeParams(q, q + 3, q + 1));
  if (!cert || cert->bound != value) {
    throw std::logic_error("closed form disagrees with the divisibility bound for q=" + std::to_string(q));
  }
  return value;
}

long long h_table(const CodeParams& p, long long k) {
  const long long b = pair_count_bounds(p, k).budget;
  return b > 0 ? b : 0;
}

KnownValuesRegistry::KnownValuesRegistry() {
  entries_[{3, 15, 11}] = {10, true, "Brouwer table of ternary code bounds: A_3(15,11) = 10"};
  entries_[{4, 8, 6}] = {32, true, "uniqueness of the symmetric (2,4)-net (Al-Kenani): A_4(8,6) = 32"};
  entries_[{5, 7, 6}] = {15, true, "Plotkin bound, attained by Kirkman triple systems: A_5(7,6) = 15"};
  entries_[{3, 6, 4}] = {18, true, "Brouwer table of ternary code bounds: A_3(6,4) = 18"};
}

const KnownValuesRegistry& KnownValuesRegistry::builtin() {
  static const KnownValuesRegistry registry;
  return registry;
}

std::optional<RegistryEntry> KnownValuesRegistry::lookup(int q, int n, int d) const {
  auto it = entries_.find({q, n, d});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<RegistryEntry> registry_lookup(int q, int n, int d) {
  return KnownValuesRegistry::builtin().lookup(q, n, d);
}

namespace {

BestBound best_bound_rec(int q, int n, int d, std::map<int, BestBound>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const CodeParams p(q, n, d);
  BestBound best{-1, ""};
  auto offer = [&](long long v, const std::string& method) {
    if (best.value < 0 || v < best.value) best = {v, method};
  };
  if (auto v = plotkin_bound(p)) offer(*v, "plotkin");
  if (auto c = divisibility_bound(p)) offer(c->bound, "divisibility");
  if (auto e = registry_lookup(q, n, d)) offer(e->value, "registry");
  if (n - 1 >= d) {
    const BestBound inner = best_bound_rec(q, n - 1, d, memo);
    offer(column_recursion_bound(q, inner.value), "recursion(" + inner.method + ")");
  }
  memo[n] = best;
  return best;
}

}  // namespace

BestBound best_bound(const CodeParams& p) {
  std::map<int, BestBound> memo;
  return best_bound_rec(p.q, p.n, p.d, memo);
}

}  // namespace codebounds
