#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codebounds/code.hpp"

namespace codebounds {

/// Canonical representative of the equivalence class of a code: the
/// lexicographically least row-sorted matrix over all column permutations
/// combined with per-column symbol renumberings.
Code canonical_form(const Code& c);

/// True iff `c` is its own canonical form. Cheaper than canonical_form
/// because the search stops at the first strictly smaller image.
bool is_canonical(const Code& c);

bool equivalent(const Code& a, const Code& b);

namespace detail {

/// Input to the row-by-row canonical labelling search.
///
/// Rows are sequences of `n` values in [0, q). Keys pack `bits` bits per
/// column, column 0 most significant, so `n * bits` must not exceed 64.
/// With `relabel` the symbols of every column may be renumbered; without it
/// only row and column permutations act (used for 0/1 incidence matrices).
struct MatrixShape {
  int n;
  int q;
  int bits;
  bool relabel;
};

/// Least sorted key sequence over the acting group.
std::vector<std::uint64_t> minimal_image(const std::vector<std::vector<std::uint8_t>>& rows,
                                         const MatrixShape& shape);

/// True iff some group element yields a sorted key sequence strictly below
/// `target` (which must be the key sequence of `rows` under the identity).
bool has_smaller_image(const std::vector<std::vector<std::uint8_t>>& rows, const MatrixShape& shape,
                       std::span<const std::uint64_t> target);

/// Row-major keys of packed code rows under the identity: for a code these
/// coincide with the packed words themselves.
bool is_canonical_packed(std::span<const PackedWord> sorted_rows, int q, int n);

}  // namespace detail

}  // namespace codebounds
