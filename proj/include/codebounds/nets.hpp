#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codebounds/code.hpp"

namespace codebounds {

/// A finite group given by its Cayley table; element 0 is the identity.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int k);
  static FiniteGroup klein4();
  /// Checks closure, identity 0, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(table_.size()); }
  [[nodiscard]] int mul(int a, int b) const { return table_[a][b]; }
  [[nodiscard]] int inverse(int a) const { return inverse_[a]; }
  [[nodiscard]] const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  /// "cyclic:k", "klein4" or "table".
  [[nodiscard]] const std::string& spec() const noexcept { return spec_; }

 private:
  FiniteGroup(std::vector<std::vector<int>> table, std::string spec);
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::string spec_;
};

/// n x n matrix of group element indices. Only well-formedness is checked
/// on construction; verify_gh decides the Hadamard property.
struct GeneralizedHadamard {
  GeneralizedHadamard(FiniteGroup group, std::vector<std::vector<int>> entries);

  FiniteGroup group;
  std::vector<std::vector<int>> entries;

  [[nodiscard]] int order() const noexcept { return static_cast<int>(entries.size()); }
};

/// For all rows i != k the tuple (M_ij * M_kj^-1)_j hits every element n/|G| times.
bool verify_gh(const GeneralizedHadamard& m);

using Incidence = std::vector<std::vector<std::uint8_t>>;
using Partition = std::vector<std::vector<int>>;

/// Incidence matrix of a symmetric (mu,q)-net: rows are points, columns
/// blocks. The constructor checks shape and entries only; the net axioms
/// are checked by verify_net_axioms.
class SymmetricNet {
 public:
  SymmetricNet(int mu, int q, Incidence incidence, std::optional<Partition> point_classes = std::nullopt,
               std::optional<Partition> block_classes = std::nullopt);

  [[nodiscard]] int mu() const noexcept { return mu_; }
  [[nodiscard]] int q() const noexcept { return q_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(incidence_.size()); }
  [[nodiscard]] const Incidence& incidence() const noexcept { return incidence_; }
  [[nodiscard]] const std::optional<Partition>& point_classes() const noexcept { return point_classes_; }
  [[nodiscard]] const std::optional<Partition>& block_classes() const noexcept { return block_classes_; }

 private:
  int mu_;
  int q_;
  Incidence incidence_;
  std::optional<Partition> point_classes_;
  std::optional<Partition> block_classes_;
};

struct NetAxiomReport {
  bool block_sizes = false;  // every block has mu*q points
  bool s1 = false;           // blocks split into mu*q parallel classes
  bool s2 = false;           // blocks of different classes meet in mu points
  bool s3 = false;           // point classes with the mu / 0 co-occurrence law
  bool s_prime = false;      // every point pair lies in at most mu blocks
  bool s_prime_agrees = false;
  Partition block_classes;
  Partition point_classes;

  [[nodiscard]] bool all() const noexcept { return block_sizes && s1 && s2 && s3; }
};

NetAxiomReport verify_net_axioms(const SymmetricNet& net);

/// Row and column groups of size q such that every q x q block of the
/// rearranged incidence matrix is a permutation matrix.
struct Arrangement {
  Partition row_groups;
  Partition column_groups;
};

/// Throws NetError when no such arrangement exists.
Arrangement find_arrangement(const SymmetricNet& net);

/// True iff, in a block arrangement, both N N^T and N^T N equal the block
/// matrix with mu*q*I on the diagonal and mu*J elsewhere. Throws NetError
/// when no arrangement exists.
bool gram_check(const SymmetricNet& net);

/// Substitutes every entry g by the permutation matrix x -> x*g of the
/// right regular representation. Throws NetError unless verify_gh holds.
SymmetricNet gh_expand(const GeneralizedHadamard& m);

/// C = V_1 u ... u V_n with distance n inside a class and d across.
struct WordPartition {
  int q;
  std::vector<std::vector<Word>> classes;
};

/// Components of the distance-n graph, in order of first word; words in a
/// class ascending. Requires qd = (q-1)n, |C| = qn and d_min >= d.
WordPartition partition_words(const Code& c);

/// Checks the partition law; throws StructureError otherwise.
void validate_partition(const WordPartition& p);

SymmetricNet code_to_net(const Code& c);
/// Uses the class order of `p` for the rows.
SymmetricNet code_to_net(const WordPartition& p);

/// The (mu*q, mu*q - mu)_q code of size mu*q^2 read off a block arrangement.
Code net_to_code(const SymmetricNet& net);

/// Equal up to row and column permutations.
bool nets_isomorphic(const SymmetricNet& a, const SymmetricNet& b);

// Net file: "mu q", then mu*q^2 lines of mu*q^2 characters in {0,1}.
SymmetricNet parse_net(std::string_view text);
std::string emit_net(const SymmetricNet& net);

// GH file: "n |G|", a group line ("cyclic:k", "klein4" or "table" followed
// by |G| rows of the Cayley table), then n rows of n element indices.
GeneralizedHadamard parse_gh(std::string_view text);
std::string emit_gh(const GeneralizedHadamard& m);

}  // namespace codebounds
