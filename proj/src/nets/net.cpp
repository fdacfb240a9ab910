#include <algorithm>
#include <numeric>

#include "codebounds/canonical.hpp"
#include "codebounds/errors.hpp"
#include "codebounds/nets.hpp"

namespace codebounds {

namespace {

constexpr std::uint64_t kCoverBudget = 50'000'000;

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

std::size_t first_clear(const Bits& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!test_bit(b, i)) return i;
  }
  return n;
}

// Splits `sets` into `want` groups, each an exact cover of the universe
// 0..universe-1. Exhaustive backtracking; the first unassigned set always
// opens the next group, so each partition is visited once.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Bits>& sets, std::size_t universe, int want)
      : sets_(sets), universe_(universe), want_(want), assigned_(sets.size(), 0) {}

  std::optional<Partition> run() {
    if (want_ < 1) return std::nullopt;
    for (const auto& s : sets_) {
      if (std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; })) return std::nullopt;
    }
    if (rec()) return classes_;
    return std::nullopt;
  }

 private:
  bool rec() {
    if (++nodes_ > kCoverBudget) throw BudgetExceeded("parallel class search exceeded its budget", 0);
    if (current_.empty()) {
      const auto it = std::find(assigned_.begin(), assigned_.end(), 0);
      if (it == assigned_.end()) return static_cast<int>(classes_.size()) == want_;
      if (static_cast<int>(classes_.size()) == want_) return false;
      const auto s = static_cast<std::size_t>(it - assigned_.begin());
      take(s);
      if (rec()) return true;
      drop(s);
      return false;
    }
    const std::size_t p = first_clear(covered_, universe_);
    if (p == universe_) {
      Partition::value_type group = current_;
      const Bits saved = covered_;
      classes_.push_back(group);
      current_.clear();
      covered_ = make_bits(universe_);
      if (rec()) return true;
      classes_.pop_back();
      current_ = group;
      covered_ = saved;
      return false;
    }
    for (std::size_t t = 0; t < sets_.size(); ++t) {
      if (assigned_[t] || !test_bit(sets_[t], p) || intersects(sets_[t], covered_)) continue;
      take(t);
      if (rec()) return true;
      drop(t);
    }
    return false;
  }

  void take(std::size_t s) {
    assigned_[s] = 1;
    current_.push_back(static_cast<int>(s));
    if (covered_.empty()) covered_ = make_bits(universe_);
    for (std::size_t i = 0; i < covered_.size(); ++i) covered_[i] |= sets_[s][i];
  }

  void drop(std::size_t s) {
    assigned_[s] = 0;
    current_.pop_back();
    for (std::size_t i = 0; i < covered_.size(); ++i) covered_[i] &= ~sets_[s][i];
  }

  const std::vector<Bits>& sets_;
  std::size_t universe_;
  int want_;
  std::vector<char> assigned_;
  Partition classes_;
  std::vector<int> current_;
  Bits covered_;
  std::uint64_t nodes_ = 0;
};

std::vector<Bits> column_sets(const Incidence& inc) {
  const std::size_t v = inc.size();
  std::vector<Bits> cols(v, make_bits(v));
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t b = 0; b < v; ++b) {
      if (inc[x][b]) set_bit(cols[b], x);
    }
  }
  return cols;
}

std::vector<Bits> row_sets(const Incidence& inc) {
  const std::size_t v = inc.size();
  std::vector<Bits> rows(v, make_bits(v));
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t b = 0; b < v; ++b) {
      if (inc[x][b]) set_bit(rows[x], b);
    }
  }
  return rows;
}

// (N N^T)_{xy}: number of blocks through both x and y.
std::vector<std::vector<int>> point_gram(const Incidence& inc) {
  const std::size_t v = inc.size();
  std::vector<std::vector<int>> g(v, std::vector<int>(v, 0));
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x; y < v; ++y) {
      int s = 0;
      for (std::size_t b = 0; b < v; ++b) s += inc[x][b] & inc[y][b];
      g[x][y] = g[y][x] = s;
    }
  }
  return g;
}

std::vector<std::vector<int>> block_gram(const Incidence& inc) {
  const std::size_t v = inc.size();
  std::vector<std::vector<int>> g(v, std::vector<int>(v, 0));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a; b < v; ++b) {
      int s = 0;
      for (std::size_t x = 0; x < v; ++x) s += inc[x][a] & inc[x][b];
      g[a][b] = g[b][a] = s;
    }
  }
  return g;
}

bool is_partition(const Partition& p, int v, int count, int group_size) {
  if (static_cast<int>(p.size()) != count) return false;
  std::vector<char> seen(static_cast<std::size_t>(v), 0);
  for (const auto& g : p) {
    if (group_size > 0 && static_cast<int>(g.size()) != group_size) return false;
    for (int i : g) {
      if (i < 0 || i >= v || seen[i]) return false;
      seen[i] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Every group of `p` is an exact cover of the universe by `sets`.
bool groups_cover(const Partition& p, const std::vector<Bits>& sets, std::size_t universe) {
  for (const auto& g : p) {
    Bits covered = make_bits(universe);
    for (int s : g) {
      if (intersects(covered, sets[s])) return false;
      for (std::size_t i = 0; i < covered.size(); ++i) covered[i] |= sets[s][i];
    }
    if (first_clear(covered, universe) != universe) return false;
  }
  return true;
}

std::vector<int> group_of(const Partition& p, int v) {
  std::vector<int> g(static_cast<std::size_t>(v), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int e : p[i]) g[e] = static_cast<int>(i);
  }
  return g;
}

// Gram matrix law: mu*q on the diagonal, 0 inside a group, mu across groups.
bool gram_law(const std::vector<std::vector<int>>& g, const Partition& groups, int mu, int q) {
  const int v = static_cast<int>(g.size());
  const auto gi = group_of(groups, v);
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      const int want = x == y ? mu * q : (gi[x] == gi[y] ? 0 : mu);
      if (g[x][y] != want) return false;
    }
  }
  return true;
}

}  // namespace

SymmetricNet::SymmetricNet(int mu, int q, Incidence incidence, std::optional<Partition> point_classes,
                           std::optional<Partition> block_classes)
    : mu_(mu),
      q_(q),
      incidence_(std::move(incidence)),
      point_classes_(std::move(point_classes)),
      block_classes_(std::move(block_classes)) {
  if (mu < 1 || q < 1) throw NetError("mu and q must be positive");
  const auto v = static_cast<std::size_t>(mu) * static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
  if (incidence_.size() != v) {
    throw NetError("incidence matrix has " + std::to_string(incidence_.size()) + " rows, expected mu*q^2 = " +
                   std::to_string(v));
  }
  for (const auto& row : incidence_) {
    if (row.size() != v) throw NetError("incidence matrix is not square");
    for (auto e : row) {
      if (e > 1) throw NetError("incidence matrix entry is not 0/1");
    }
  }
  const int vi = static_cast<int>(v);
  if (point_classes_ && !is_partition(*point_classes_, vi, mu * q, q)) {
    throw NetError("point classes are not a partition into mu*q sets of q points");
  }
  if (block_classes_ && !is_partition(*block_classes_, vi, mu * q, 0)) {
    throw NetError("block classes are not a partition into mu*q sets");
  }
}

NetAxiomReport verify_net_axioms(const SymmetricNet& net) {
  const int mu = net.mu();
  const int q = net.q();
  const int v = net.size();
  const auto& inc = net.incidence();
  NetAxiomReport r;

  r.block_sizes = true;
  for (int b = 0; b < v; ++b) {
    int s = 0;
    for (int x = 0; x < v; ++x) s += inc[x][b];
    if (s != mu * q) r.block_sizes = false;
  }

  const auto cols = column_sets(inc);
  if (net.block_classes()) {
    r.s1 = groups_cover(*net.block_classes(), cols, static_cast<std::size_t>(v));
    if (r.s1) r.block_classes = *net.block_classes();
  } else if (auto found = CoverSearch(cols, static_cast<std::size_t>(v), mu * q).run()) {
    r.s1 = true;
    r.block_classes = *found;
  }

  // Blocks of one class are disjoint and blocks of different classes meet in
  // mu >= 1 points, so when (s2) holds the classes are the disjointness
  // components and checking the first partition found is exhaustive.
  const auto bg = block_gram(inc);
  if (r.s1) {
    const auto gi = group_of(r.block_classes, v);
    r.s2 = true;
    for (int a = 0; a < v && r.s2; ++a) {
      for (int b = a + 1; b < v; ++b) {
        if (gi[a] != gi[b] && bg[a][b] != mu) {
          r.s2 = false;
          break;
        }
      }
    }
  }

  const auto pg = point_gram(inc);
  Partition pc;
  if (net.point_classes()) {
    pc = *net.point_classes();
  } else {
    // Points of one class never share a block, points of different classes
    // share mu >= 1 blocks: the classes are the components of "share none".
    std::vector<int> comp(static_cast<std::size_t>(v), -1);
    for (int x = 0; x < v; ++x) {
      if (comp[x] >= 0) continue;
      comp[x] = static_cast<int>(pc.size());
      pc.push_back({x});
      for (std::size_t k = 0; k < pc.back().size(); ++k) {
        const int y = pc.back()[k];
        for (int z = 0; z < v; ++z) {
          if (z != y && comp[z] < 0 && pg[y][z] == 0) {
            comp[z] = comp[x];
            pc.back().push_back(z);
          }
        }
      }
      std::sort(pc.back().begin(), pc.back().end());
    }
  }
  if (is_partition(pc, v, mu * q, q)) {
    const auto gi = group_of(pc, v);
    r.s3 = true;
    for (int x = 0; x < v && r.s3; ++x) {
      for (int y = x + 1; y < v; ++y) {
        if (pg[x][y] != (gi[x] == gi[y] ? 0 : mu)) {
          r.s3 = false;
          break;
        }
      }
    }
    if (r.s3) r.point_classes = pc;
  }

  r.s_prime = true;
  for (int x = 0; x < v && r.s_prime; ++x) {
    for (int y = x + 1; y < v; ++y) {
      if (pg[x][y] > mu) {
        r.s_prime = false;
        break;
      }
    }
  }
  r.s_prime_agrees = r.s_prime == (r.s2 && r.s3);
  return r;
}

Arrangement find_arrangement(const SymmetricNet& net) {
  const int mu = net.mu();
  const int q = net.q();
  const int v = net.size();
  const auto& inc = net.incidence();
  for (int i = 0; i < v; ++i) {
    int rs = 0, cs = 0;
    for (int j = 0; j < v; ++j) {
      rs += inc[i][j];
      cs += inc[j][i];
    }
    if (rs != mu * q || cs != mu * q) {
      throw NetError("no block arrangement: row or column " + std::to_string(i) + " does not have mu*q ones");
    }
  }
  const auto cols = column_sets(inc);
  const auto rows = row_sets(inc);
  Arrangement a;
  // Each row meets every column group once and each column meets every row
  // group once, so the groups are exact covers and each has q members.
  if (net.block_classes() && groups_cover(*net.block_classes(), cols, static_cast<std::size_t>(v))) {
    a.column_groups = *net.block_classes();
  } else if (auto c = CoverSearch(cols, static_cast<std::size_t>(v), mu * q).run()) {
    a.column_groups = *c;
  } else {
    throw NetError("no block arrangement: blocks do not split into parallel classes");
  }
  if (net.point_classes() && groups_cover(*net.point_classes(), rows, static_cast<std::size_t>(v))) {
    a.row_groups = *net.point_classes();
  } else if (auto r = CoverSearch(rows, static_cast<std::size_t>(v), mu * q).run()) {
    a.row_groups = *r;
  } else {
    throw NetError("no block arrangement: points do not split into classes of q");
  }
  for (auto* p : {&a.row_groups, &a.column_groups}) {
    for (const auto& g : *p) {
      if (static_cast<int>(g.size()) != q) throw NetError("no block arrangement: group size differs from q");
    }
  }
  return a;
}

bool gram_check(const SymmetricNet& net) {
  const Arrangement a = find_arrangement(net);
  return gram_law(point_gram(net.incidence()), a.row_groups, net.mu(), net.q()) &&
         gram_law(block_gram(net.incidence()), a.column_groups, net.mu(), net.q());
}

bool nets_isomorphic(const SymmetricNet& a, const SymmetricNet& b) {
  if (a.mu() != b.mu() || a.q() != b.q()) return false;
  const detail::MatrixShape shape{a.size(), 2, 1, false};
  return detail::minimal_image(a.incidence(), shape) == detail::minimal_image(b.incidence(), shape);
}

}  // namespace codebounds
