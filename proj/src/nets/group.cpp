#include <algorithm>

#include "codebounds/errors.hpp"
#include "codebounds/nets.hpp"

namespace codebounds {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string spec)
    : table_(std::move(table)), spec_(std::move(spec)) {
  const int k = static_cast<int>(table_.size());
  if (k < 1) throw PreconditionError("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != k) throw PreconditionError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= k) throw PreconditionError("group table entry out of range");
    }
  }
  for (int a = 0; a < k; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw PreconditionError("element 0 is not the identity");
  }
  inverse_.assign(static_cast<std::size_t>(k), -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw PreconditionError("left and right inverses differ");
        inverse_[a] = b;
      }
    }
    if (inverse_[a] < 0) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw PreconditionError("group table is not associative");
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int k) {
  if (k < 1) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  }
  return FiniteGroup(std::move(t), "cyclic:" + std::to_string(k));
}

FiniteGroup FiniteGroup::klein4() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return FiniteGroup(std::move(t), "klein4");
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  return FiniteGroup(std::move(table), "table");
}

GeneralizedHadamard::GeneralizedHadamard(FiniteGroup g, std::vector<std::vector<int>> m)
    : group(std::move(g)), entries(std::move(m)) {
  const int n = order();
  if (n < 1) throw PreconditionError("empty matrix");
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n) throw PreconditionError("matrix is not square");
    for (int v : row) {
      if (v < 0 || v >= group.order()) throw PreconditionError("matrix entry is not a group element");
    }
  }
  if (n % group.order() != 0) throw PreconditionError("|G| does not divide n");
}

bool verify_gh(const GeneralizedHadamard& m) {
  const int n = m.order();
  const int k = m.group.order();
  const int want = n / k;
  std::vector<int> hits(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    for (int r = i + 1; r < n; ++r) {
      std::fill(hits.begin(), hits.end(), 0);
      for (int j = 0; j < n; ++j) ++hits[m.group.mul(m.entries[i][j], m.group.inverse(m.entries[r][j]))];
      if (std::any_of(hits.begin(), hits.end(), [&](int h) { return h != want; })) return false;
    }
  }
  return true;
}

SymmetricNet gh_expand(const GeneralizedHadamard& m) {
  if (!verify_gh(m)) throw NetError("matrix is not a generalized Hadamard matrix");
  const int n = m.order();
  const int q = m.group.order();
  const int size = n * q;
  Incidence inc(static_cast<std::size_t>(size), std::vector<std::uint8_t>(static_cast<std::size_t>(size), 0));
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < q; ++x) {
      for (int j = 0; j < n; ++j) inc[i * q + x][j * q + m.group.mul(x, m.entries[i][j])] = 1;
    }
  }
  Partition groups(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < q; ++x) groups[i].push_back(i * q + x);
  }
  return SymmetricNet(n / q, q, std::move(inc), groups, groups);
}

}  // namespace codebounds
