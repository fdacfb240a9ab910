#pragma once

// Slow, independent reference computations used only by tests.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "codebounds/code.hpp"

namespace oracle {

using codebounds::Code;
using codebounds::Symbol;
using codebounds::Word;

inline int distance(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::vector<std::vector<int>> all_words(int q, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == q - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

inline std::vector<std::vector<int>> rows_of(const Code& c) {
  std::vector<std::vector<int>> rows;
  for (const Word& w : c.words()) rows.emplace_back(w.symbols().begin(), w.symbols().end());
  return rows;
}

inline Code code_of(int q, int n, const std::vector<std::vector<int>>& rows) {
  std::vector<Word> ws;
  for (const auto& r : rows) ws.emplace_back(std::vector<Symbol>(r.begin(), r.end()));
  return Code(q, n, std::move(ws));
}

/// Least sorted row list over every column permutation and every
/// per-column symbol permutation. Rows are compared as base-q integers,
/// which orders them the same way as the symbol vectors.
inline std::vector<std::vector<int>> brute_canonical(const Code& c) {
  const int q = c.q();
  const int n = c.n();
  const auto rows = rows_of(c);
  std::vector<int> perm(static_cast<std::size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> sym_perms;
  do {
    sym_perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<long long> best, img(rows.size());
  do {
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    while (true) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        long long v = 0;
        for (int t = 0; t < n; ++t) v = v * q + sym_perms[choice[t]][rows[r][cols[t]]];
        img[r] = v;
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
      int i = n - 1;
      while (i >= 0 && choice[i] + 1 == sym_perms.size()) choice[i--] = 0;
      if (i < 0) break;
      ++choice[i];
    }
  } while (std::next_permutation(cols.begin(), cols.end()));

  std::vector<std::vector<int>> out;
  for (long long v : best) {
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int t = n - 1; t >= 0; --t, v /= q) row[t] = static_cast<int>(v % q);
    out.push_back(row);
  }
  return out;
}

/// Every (n,d)_q code of size m (as sorted word-index sets), by plain
/// backtracking over increasing word indices.
inline void for_each_code(int q, int n, int d, int m, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  const auto words = all_words(q, n);
  std::vector<std::vector<int>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == m) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < words.size(); ++i) {
      if (words.size() - i < static_cast<std::size_t>(m) - cur.size()) return;
      bool ok = true;
      for (const auto& w : cur) ok = ok && distance(w, words[i]) >= d;
      if (!ok) continue;
      cur.push_back(words[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Canonical representatives (brute force) of all (n,d)_q codes of size m.
inline std::set<std::vector<std::vector<int>>> brute_classes(int q, int n, int d, int m) {
  std::set<std::vector<std::vector<int>>> out;
  for_each_code(q, n, d, m, [&](const auto& rows) { out.insert(brute_canonical(code_of(q, n, rows))); });
  return out;
}

/// min over compositions c_1 + ... + c_q = M of sum C(c_i, 2).
inline long long min_pair_sum(int q, long long M) {
  long long best = -1;
  std::function<void(int, long long, long long)> rec = [&](int k, long long left, long long acc) {
    if (k == q - 1) {
      const long long v = acc + left * (left - 1) / 2;
      if (best < 0 || v < best) best = v;
      return;
    }
    for (long long c = 0; c <= left; ++c) rec(k + 1, left - c, acc + c * (c - 1) / 2);
  };
  rec(0, M, 0);
  return best;
}

/// A random code with minimum distance >= d, grown greedily.
inline Code random_code(std::mt19937_64& rng, int q, int n, int d, int tries) {
  std::uniform_int_distribution<int> sym(0, q - 1);
  std::vector<std::vector<int>> rows;
  for (int t = 0; t < tries; ++t) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = sym(rng);
    bool ok = true;
    for (const auto& r : rows) ok = ok && distance(r, w) >= d;
    if (ok) rows.push_back(w);
  }
  return code_of(q, n, rows);
}

}  // namespace oracle
