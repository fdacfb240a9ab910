#include <functional>

#include "codebounds/bounds.hpp"
#include "codebounds/pipelines.hpp"

namespace codebounds {

long long f_eval(long long x, long long y) {
  if (x < 0 || y < 0) throw PreconditionError("f is defined for x, y >= 0");
  const long long indicator = (y > 0 && x == 0) ? 65 - 14 - 39 : 0;
  return (3 * x + y) * (65 - 15 * x - 14 * y) + 3 * 15 * binom2(x) + 14 * binom2(y) + 3 * 14 * x * y - 2 * 21 * x -
         8 * y + indicator;
}

std::vector<Profile> profile_tuples() {
  std::vector<Profile> out;
  Profile a{};
  std::function<void(int, int, int)> rec = [&](int k, int count, int total) {
    if (k == 16) {
      if (count == 5 && total == 65) out.push_back(a);
      return;
    }
    for (int c = 0; count + c <= 5 && total + c * k <= 65; ++c) {
      a[k] = c;
      rec(k + 1, count + c, total + c * k);
    }
    a[k] = 0;
  };
  rec(1, 0, 0);
  for (const auto& p : out) {
    for (int k = 1; k < 5; ++k) {
      if (p[k] != 0) throw std::logic_error("profile with a symbol occurring fewer than 5 times");
    }
  }
  return out;
}

namespace {

long long h_value(int k) { return h_table(CodeParams(5, 7, 6), k); }

ordered_json profile_json(const Profile& p) {
  ordered_json j = ordered_json::object();
  for (int k = 5; k <= 15; ++k) {
    if (p[k]) j[std::to_string(k)] = p[k];
  }
  return j;
}

}  // namespace

ProfileInequalityReport check_profile_inequality() {
  const auto tuples = profile_tuples();
  ProfileInequalityReport r;
  r.tuples = tuples.size();
  for (const auto& a : tuples) {
    for (const auto& b : tuples) {
      ++r.pairs_examined;
      const long long fa = f_eval(a[15], a[14]);
      const long long fb = f_eval(b[15], b[14]);
      if (!(fa <= fb && fb != 0)) continue;
      ++r.pairs_applicable;
      long long lhs = 0;
      for (int k = 5; k <= 15; ++k) lhs += (7LL * a[k] + b[k]) * h_value(k);
      const long long slack = fb - lhs;
      if (!r.min_slack || slack < *r.min_slack) r.min_slack = slack;
      if (slack <= 0) r.violations.emplace_back(a, b);
    }
  }
  return r;
}

CertStep profile_inequality_step() {
  const auto r = check_profile_inequality();
  CertStep s;
  s.id = "profile_inequality";
  s.desc = "sum_k (7 a_k + b_k) h(k) < f(b15,b14) whenever f(a15,a14) <= f(b15,b14) != 0";
  s.op = "check_profile_inequality()";
  s.data["tuples"] = r.tuples;
  s.data["pairs_examined"] = r.pairs_examined;
  s.data["pairs_applicable"] = r.pairs_applicable;
  s.data["min_slack"] = r.min_slack ? ordered_json(*r.min_slack) : ordered_json(nullptr);
  s.data["violations"] = ordered_json::array();
  for (const auto& [a, b] : r.violations) s.data["violations"].push_back({profile_json(a), profile_json(b)});
  s.ok = r.ok() && r.tuples == 30 && r.pairs_examined == 900;
  return s;
}

}  // namespace codebounds
