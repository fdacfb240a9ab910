#include <algorithm>

#include "codebounds/errors.hpp"
#include "codebounds/nets.hpp"

namespace codebounds {

WordPartition partition_words(const Code& c) {
  const int q = c.q();
  const int n = c.n();
  if (n % q != 0) throw PreconditionError("qd = (q-1)n needs q to divide n");
  const int d = n - n / q;
  if (static_cast<int>(c.size()) != q * n) {
    throw PreconditionError("code has " + std::to_string(c.size()) + " words, expected qn = " + std::to_string(q * n));
  }
  if (!has_min_distance(c, d)) throw PreconditionError("minimum distance below " + std::to_string(d));

  const std::size_t m = c.size();
  std::vector<int> comp(m, -1);
  WordPartition p{q, {}};
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(p.classes.size());
    std::vector<std::size_t> members{s};
    comp[s] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t t = 0; t < m; ++t) {
        if (comp[t] < 0 && hamming_distance(c[members[k]], c[t]) == n) {
          comp[t] = id;
          members.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Word> cls;
    for (auto i : members) cls.push_back(c[i]);
    p.classes.push_back(std::move(cls));
  }
  validate_partition(p);
  return p;
}

void validate_partition(const WordPartition& p) {
  if (p.classes.empty() || p.classes.front().empty()) throw StructureError("empty word partition");
  const int q = p.q;
  const int n = static_cast<int>(p.classes.front().front().size());
  if (n % q != 0) throw StructureError("q does not divide n");
  const int d = n - n / q;
  if (static_cast<int>(p.classes.size()) != n) {
    throw StructureError("expected " + std::to_string(n) + " classes, found " + std::to_string(p.classes.size()));
  }
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    if (static_cast<int>(p.classes[i].size()) != q) {
      throw StructureError("class " + std::to_string(i) + " has " + std::to_string(p.classes[i].size()) + " words");
    }
    for (std::size_t j = i; j < p.classes.size(); ++j) {
      for (std::size_t a = 0; a < p.classes[i].size(); ++a) {
        for (std::size_t b = i == j ? a + 1 : 0; b < p.classes[j].size(); ++b) {
          const int dist = hamming_distance(p.classes[i][a], p.classes[j][b]);
          if (dist != (i == j ? n : d)) {
            throw StructureError("distance " + std::to_string(dist) + " between classes " + std::to_string(i) +
                                 " and " + std::to_string(j));
          }
        }
      }
    }
  }
  for (const auto& cls : p.classes) {
    for (const Word& w : cls) {
      for (auto s : w.symbols()) {
        if (s >= q) throw StructureError("symbol outside alphabet");
      }
    }
  }
}

SymmetricNet code_to_net(const Code& c) { return code_to_net(partition_words(c)); }

SymmetricNet code_to_net(const WordPartition& p) {
  validate_partition(p);
  const int q = p.q;
  const int n = static_cast<int>(p.classes.size());
  const int size = q * n;
  Incidence inc;
  Partition points;
  for (const auto& cls : p.classes) {
    points.emplace_back();
    for (const Word& w : cls) {
      std::vector<std::uint8_t> row(static_cast<std::size_t>(size), 0);
      for (int j = 0; j < n; ++j) row[j * q + w[j]] = 1;
      points.back().push_back(static_cast<int>(inc.size()));
      inc.push_back(std::move(row));
    }
  }
  Partition blocks(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int a = 0; a < q; ++a) blocks[j].push_back(j * q + a);
  }
  return SymmetricNet(n / q, q, std::move(inc), std::move(points), std::move(blocks));
}

Code net_to_code(const SymmetricNet& net) {
  Arrangement a = find_arrangement(net);
  const int q = net.q();
  const int n = net.mu() * q;
  std::vector<std::vector<Symbol>> words(static_cast<std::size_t>(net.size()),
                                         std::vector<Symbol>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < n; ++j) {
    auto group = a.column_groups[j];
    std::sort(group.begin(), group.end());
    for (int s = 0; s < q; ++s) {
      for (int x = 0; x < net.size(); ++x) {
        if (net.incidence()[x][group[s]]) words[x][j] = static_cast<Symbol>(s);
      }
    }
  }
  std::vector<Word> ws;
  for (auto& w : words) ws.emplace_back(std::move(w));
  std::sort(ws.begin(), ws.end());
  if (std::adjacent_find(ws.begin(), ws.end()) != ws.end()) throw NetError("two points give the same word");
  Code c(q, n, std::move(ws));
  if (c.size() > 1 && !has_min_distance(c, n - net.mu())) {
    throw NetError("code read off the net has minimum distance below mu*q - mu");
  }
  return c;
}

}  // namespace codebounds
