#include <omp.h>

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <limits>
#include <mutex>
#include <array>

#include "codebounds/bounds.hpp"
#include "codebounds/canonical.hpp"
#include "codebounds/search.hpp"

namespace codebounds {

namespace {

constexpr std::uint64_t kMaxEnumerationSpace = 1ULL << 24;

struct Node {
  std::vector<PackedWord> rows;
  std::vector<PackedWord> cands;  // words above rows.back() at distance >= d from every row
  std::vector<int> counts;        // counts[j * q + a]
  long long deficiency = 0;       // sum over pairs of (dist - d)
};

class Enumerator {
 public:
  explicit Enumerator(const EnumerationTask& task)
      : q_(task.params.q),
        n_(task.params.n),
        d_(task.params.d),
        m_(task.target_size),
        existence_(task.mode == EnumerationMode::ExistenceOnly),
        max_nodes_(task.limits.max_nodes),
        deadline_(std::chrono::steady_clock::now() + task.limits.max_time) {
    if (m_ < 1) throw PreconditionError("target size must be >= 1");
    if (n_ > kMaxPackedLength || q_ > kMaxPackedAlphabet) {
      throw PreconditionError("enumeration supports n <= 16 and q <= 16");
    }
    kernels::word_space_size(q_, n_, kMaxEnumerationSpace);
    L_ = pair_count_bounds(task.params, m_).L;
    // Words sharing a symbol in one column form an (n-1, d)_q code after
    // that column is removed, so the Plotkin bound of the projection caps it.
    cap_ = m_;
    if (n_ > 1 && d_ <= n_ - 1) {
      if (auto pb = plotkin_bound(CodeParams(q_, n_ - 1, d_))) cap_ = static_cast<int>(std::min<long long>(*pb, m_));
    } else if (n_ > 1) {
      // d = n: two words sharing a symbol would be at distance < n.
      cap_ = 1;
    }
  }

  EnumerationResult run(int threads) {
    Node root;
    root.rows = {0};
    root.counts.assign(static_cast<std::size_t>(n_ * q_), 0);
    for (int j = 0; j < n_; ++j) root.counts[j * q_] = 1;
    std::vector<Symbol> digits(static_cast<std::size_t>(n_), 0);
    const std::uint64_t total = kernels::word_space_size(q_, n_, kMaxEnumerationSpace);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      int i = n_ - 1;
      while (digits[i] == q_ - 1) digits[i--] = 0;
      ++digits[i];
      PackedWord w = 0;
      for (int k = 0; k < n_; ++k) w = (w << 4) | digits[k];
      if (packed_distance(w, 0) >= d_) root.cands.push_back(w);
    }

    EnumerationResult result;
    std::vector<std::vector<PackedWord>> found;
    if (m_ == 1) {
      found.push_back(root.rows);
      return finish(found, result);
    }

    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
    const std::size_t want = static_cast<std::size_t>(std::max(1, nthreads)) * 16;
    std::vector<Node> frontier{root};
    while (frontier.size() < want && !frontier.empty() && frontier.front().rows.size() + 1 < static_cast<std::size_t>(m_)) {
      std::vector<Node> next;
      for (const Node& node : frontier) {
        expand(node, [&](Node&& child) {
          if (static_cast<int>(child.rows.size()) == m_) {
            found.push_back(std::move(child.rows));
          } else {
            next.push_back(std::move(child));
          }
          return false;
        });
        if (existence_ && !found.empty()) return finish(found, result);
      }
      frontier = std::move(next);
    }
    result.stats.frontier = frontier.size();

    std::vector<std::vector<std::vector<PackedWord>>> per_item(frontier.size());
    std::atomic<long long> first_hit{LLONG_MAX};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto items = static_cast<long long>(frontier.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, nthreads))
    for (long long i = 0; i < items; ++i) {
      if (stop_.load(std::memory_order_relaxed)) continue;
      if (existence_ && i > first_hit.load()) continue;
      try {
        auto& out = per_item[static_cast<std::size_t>(i)];
        dfs(frontier[static_cast<std::size_t>(i)], out, i, first_hit);
        if (existence_ && !out.empty()) {
          long long cur = first_hit.load();
          while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop_ = true;
      }
    }

    std::size_t partial = found.size();
    for (const auto& v : per_item) partial += v.size();
    if (error) {
      try {
        std::rethrow_exception(error);
      } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(e.what(), partial);
      }
    }
    if (existence_) {
      for (auto& v : per_item) {
        if (found.empty() && !v.empty()) found.push_back(std::move(v.front()));
      }
    } else {
      for (auto& v : per_item) {
        for (auto& rows : v) found.push_back(std::move(rows));
      }
    }
    return finish(found, result);
  }

 private:
  EnumerationResult& finish(std::vector<std::vector<PackedWord>>& found, EnumerationResult& result) {
    std::sort(found.begin(), found.end());
    if (existence_ && found.size() > 1) found.resize(1);
    for (const auto& rows : found) result.classes.push_back(code_from_packed(q_, n_, rows));
    result.stats.nodes = nodes_.load();
    return result;
  }

  void charge() {
    const std::uint64_t k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (k > max_nodes_) throw BudgetExceeded("enumeration node budget exhausted", 0);
    if ((k & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExceeded("enumeration time budget exhausted", 0);
    }
  }

  // Least possible sum of C(c,2) over one column once `extra` more words are
  // added, each symbol capped at cap_. Returns -1 when the cap cannot be met.
  long long waterfill(const int* counts, int extra) const {
    std::array<int, kMaxPackedAlphabet> c{};
    for (int a = 0; a < q_; ++a) c[a] = counts[a];
    for (int t = 0; t < extra; ++t) {
      int best = -1;
      for (int a = 0; a < q_; ++a) {
        if (c[a] < cap_ && (best < 0 || c[a] < c[best])) best = a;
      }
      if (best < 0) return -1;
      ++c[best];
    }
    long long s = 0;
    for (int a = 0; a < q_; ++a) s += binom2(c[a]);
    return s;
  }

  template <typename Emit>
  void expand(const Node& node, Emit&& emit) {
    const int k = static_cast<int>(node.rows.size());
    const int extra = m_ - (k + 1);
    std::vector<int> counts(node.counts);
    for (std::size_t ci = 0; ci < node.cands.size(); ++ci) {
      if (stop_.load(std::memory_order_relaxed)) return;
      charge();
      const PackedWord w = node.cands[ci];
      if (node.cands.size() - ci + static_cast<std::size_t>(k) < static_cast<std::size_t>(m_)) return;

      bool ok = true;
      for (int j = 0; j < n_ && ok; ++j) ok = node.counts[j * q_ + packed_symbol(w, n_, j)] + 1 <= cap_;
      if (!ok) continue;

      long long def = node.deficiency;
      for (PackedWord r : node.rows) def += packed_distance(w, r) - d_;
      if (def > L_) continue;

      for (int j = 0; j < n_; ++j) ++counts[j * q_ + packed_symbol(w, n_, j)];
      long long lb = 0;
      for (int j = 0; j < n_ && lb >= 0; ++j) {
        const long long col = waterfill(&counts[static_cast<std::size_t>(j * q_)], extra);
        lb = col < 0 ? -1 : lb + col;
      }
      const bool feasible = lb >= 0 && def <= L_ - lb;
      if (!feasible) {
        for (int j = 0; j < n_; ++j) --counts[j * q_ + packed_symbol(w, n_, j)];
        continue;
      }

      Node child;
      child.rows = node.rows;
      child.rows.push_back(w);
      if (extra > 0) {
        child.cands.reserve(node.cands.size() - ci);
        for (std::size_t cj = ci + 1; cj < node.cands.size(); ++cj) {
          if (packed_distance(w, node.cands[cj]) >= d_) child.cands.push_back(node.cands[cj]);
        }
      }
      const bool enough = child.cands.size() >= static_cast<std::size_t>(extra);
      child.counts = counts;
      child.deficiency = def;
      for (int j = 0; j < n_; ++j) --counts[j * q_ + packed_symbol(w, n_, j)];
      if (!enough) continue;
      if (!detail::is_canonical_packed(child.rows, q_, n_)) continue;
      if (emit(std::move(child))) return;
    }
  }

  bool dfs(const Node& node, std::vector<std::vector<PackedWord>>& out, long long item,
           const std::atomic<long long>& first_hit) {
    bool done = false;
    expand(node, [&](Node&& child) {
      if (existence_ && first_hit.load(std::memory_order_relaxed) < item) {
        done = true;
      } else if (static_cast<int>(child.rows.size()) == m_) {
        out.push_back(std::move(child.rows));
        done = existence_;
      } else {
        done = dfs(child, out, item, first_hit);
      }
      return done;
    });
    return done;
  }

  int q_, n_, d_, m_;
  bool existence_;
  std::uint64_t max_nodes_;
  std::chrono::steady_clock::time_point deadline_;
  long long L_ = 0;
  int cap_ = 0;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

}  // namespace

EnumerationResult run_enumeration(const EnumerationTask& task) {
  Enumerator e(task);
  return e.run(task.threads);
}

std::vector<Code> enumerate_codes(const EnumerationTask& task) { return run_enumeration(task).classes; }

std::vector<Code> codes_by_deletion(const std::vector<Code>& parents) {
  if (parents.empty()) throw PreconditionError("codes_by_deletion needs at least one parent");
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t p = 0; p < parents.size(); ++p) {
    if (parents[p].empty()) throw PreconditionError("cannot delete from an empty code");
    for (std::size_t i = 0; i < parents[p].size(); ++i) jobs.emplace_back(p, i);
  }
  std::vector<std::optional<Code>> out(jobs.size());
  const auto count = static_cast<long long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < count; ++k) {
    const auto [p, i] = jobs[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = canonical_form(parents[p].without(i));
  }
  std::vector<Code> classes;
  classes.reserve(out.size());
  for (auto& c : out) classes.push_back(std::move(*c));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

}  // namespace codebounds
