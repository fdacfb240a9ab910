#include "codebounds/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "codebounds/errors.hpp"

namespace codebounds {

namespace detail {

namespace {

constexpr int kMaxColumns = 64;
constexpr int kMaxValues = 16;

// Partial labelling: an ordered partition of the original columns into cells
// (columns inside a cell are still interchangeable) plus the symbol labels
// fixed so far in every column.
struct State {
  std::array<std::uint8_t, kMaxColumns> order{};     // position -> original column
  std::array<std::uint8_t, kMaxColumns> cell_end{};  // meaningful at cell starts
  std::array<std::array<std::int8_t, kMaxValues>, kMaxColumns> label{};
  std::array<std::uint8_t, kMaxColumns> next{};
};

// Row-by-row search for the least sorted image. At depth k every unused row
// is mapped to its least possible image under the current partial labelling;
// the minimum becomes row k and the search branches over the rows attaining it.
class ImageSearch {
 public:
  ImageSearch(const std::vector<std::vector<std::uint8_t>>& rows, const MatrixShape& shape)
      : rows_(rows), shape_(shape), m_(static_cast<int>(rows.size())) {
    if (shape.n < 1 || shape.n > kMaxColumns || shape.n * shape.bits > 64) {
      throw PreconditionError("matrix too wide for canonical labelling");
    }
    if (shape.q < 1 || shape.q > kMaxValues || shape.q > (1 << shape.bits)) {
      throw PreconditionError("alphabet too large for canonical labelling");
    }
    for (const auto& r : rows_) {
      if (static_cast<int>(r.size()) != shape.n) throw LengthMismatch("ragged matrix");
      for (auto v : r) {
        if (v >= shape.q) throw PreconditionError("matrix entry outside alphabet");
      }
    }
    used_.assign(static_cast<std::size_t>(m_), 0);
    path_.assign(static_cast<std::size_t>(m_), 0);
    keys_.assign(static_cast<std::size_t>(m_), std::vector<std::uint64_t>(static_cast<std::size_t>(m_)));
  }

  std::vector<std::uint64_t> minimum() {
    have_best_ = false;
    test_mode_ = false;
    run();
    return best_;
  }

  bool smaller_than(std::span<const std::uint64_t> target) {
    if (static_cast<int>(target.size()) != m_) throw PreconditionError("target size mismatch");
    best_.assign(target.begin(), target.end());
    have_best_ = true;
    test_mode_ = true;
    run();
    return found_smaller_;
  }

 private:
  void run() {
    found_smaller_ = false;
    if (m_ == 0) {
      best_.clear();
      return;
    }
    State root;
    for (int c = 0; c < shape_.n; ++c) {
      root.order[c] = static_cast<std::uint8_t>(c);
      root.label[c].fill(-1);
      root.next[c] = 0;
    }
    root.cell_end[0] = static_cast<std::uint8_t>(shape_.n);
    dfs(0, root, false);
  }

  [[nodiscard]] int value(const State& st, int column, const std::vector<std::uint8_t>& row) const {
    if (!shape_.relabel) return row[column];
    const int lab = st.label[column][row[column]];
    return lab >= 0 ? lab : st.next[column];
  }

  [[nodiscard]] std::uint64_t image(const State& st, const std::vector<std::uint8_t>& row) const {
    std::uint64_t key = 0;
    const int bits = shape_.bits;
    for (int s = 0; s < shape_.n;) {
      const int e = st.cell_end[s];
      if (e == s + 1) {
        key = (key << bits) | static_cast<std::uint64_t>(value(st, st.order[s], row));
      } else {
        std::array<int, kMaxValues> cnt{};
        for (int p = s; p < e; ++p) ++cnt[value(st, st.order[p], row)];
        for (int v = 0; v < shape_.q; ++v) {
          for (int k = 0; k < cnt[v]; ++k) key = (key << bits) | static_cast<std::uint64_t>(v);
        }
      }
      s = e;
    }
    return key;
  }

  void refine(State& st, const std::vector<std::uint8_t>& row) const {
    std::array<int, kMaxColumns> vals{};
    for (int c = 0; c < shape_.n; ++c) vals[c] = value(st, c, row);
    std::array<std::uint8_t, kMaxColumns> scratch{};
    for (int s = 0; s < shape_.n;) {
      const int e = st.cell_end[s];
      if (e > s + 1) {
        int w = s;
        for (int v = 0; v < shape_.q; ++v) {
          const int start = w;
          for (int p = s; p < e; ++p) {
            if (vals[st.order[p]] == v) scratch[w++] = st.order[p];
          }
          if (w > start) st.cell_end[start] = static_cast<std::uint8_t>(w);
        }
        for (int p = s; p < e; ++p) st.order[p] = scratch[p];
      }
      s = e;
    }
    if (shape_.relabel) {
      for (int c = 0; c < shape_.n; ++c) {
        auto& lab = st.label[c][row[c]];
        if (lab < 0) lab = static_cast<std::int8_t>(st.next[c]++);
      }
    }
  }

  void dfs(int depth, const State& st, bool less) {
    if (depth == m_) {
      if (!have_best_ || less) {
        best_ = path_;
        have_best_ = true;
      }
      return;
    }
    auto& keys = keys_[static_cast<std::size_t>(depth)];
    std::uint64_t mn = std::numeric_limits<std::uint64_t>::max();
    for (int r = 0; r < m_; ++r) {
      if (used_[r]) continue;
      keys[r] = image(st, rows_[r]);
      mn = std::min(mn, keys[r]);
    }
    if (have_best_ && !less) {
      if (mn > best_[depth]) return;
      if (mn < best_[depth]) {
        if (test_mode_) {
          found_smaller_ = true;
          return;
        }
        less = true;
      }
    }
    path_[depth] = mn;
    for (int r = 0; r < m_; ++r) {
      if (used_[r] || keys[r] != mn) continue;
      State child = st;
      refine(child, rows_[r]);
      used_[r] = 1;
      dfs(depth + 1, child, less);
      used_[r] = 0;
      if (found_smaller_) return;
      // best_ now shares this prefix, so later siblings compare against it.
      less = false;
    }
  }

  const std::vector<std::vector<std::uint8_t>>& rows_;
  MatrixShape shape_;
  int m_;
  std::vector<char> used_;
  std::vector<std::uint64_t> path_;
  std::vector<std::vector<std::uint64_t>> keys_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
  bool test_mode_ = false;
  bool found_smaller_ = false;
};

std::vector<std::vector<std::uint8_t>> rows_of(std::span<const PackedWord> packed, int n) {
  std::vector<std::vector<std::uint8_t>> rows(packed.size(), std::vector<std::uint8_t>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < packed.size(); ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = packed_symbol(packed[i], n, j);
  }
  return rows;
}

}  // namespace

std::vector<std::uint64_t> minimal_image(const std::vector<std::vector<std::uint8_t>>& rows,
                                         const MatrixShape& shape) {
  return ImageSearch(rows, shape).minimum();
}

bool has_smaller_image(const std::vector<std::vector<std::uint8_t>>& rows, const MatrixShape& shape,
                       std::span<const std::uint64_t> target) {
  return ImageSearch(rows, shape).smaller_than(target);
}

bool is_canonical_packed(std::span<const PackedWord> sorted_rows, int q, int n) {
  const auto rows = rows_of(sorted_rows, n);
  return !has_smaller_image(rows, MatrixShape{n, q, 4, true}, sorted_rows);
}

}  // namespace detail

Code canonical_form(const Code& c) {
  if (!c.packable()) throw PreconditionError("canonical_form supports n <= 16 and q <= 16");
  const auto rows = detail::rows_of(c.packed(), c.n());
  const auto keys = detail::minimal_image(rows, detail::MatrixShape{c.n(), c.q(), 4, true});
  return code_from_packed(c.q(), c.n(), keys);
}

bool is_canonical(const Code& c) {
  if (!c.packable()) throw PreconditionError("is_canonical supports n <= 16 and q <= 16");
  return detail::is_canonical_packed(c.packed(), c.q(), c.n());
}

bool equivalent(const Code& a, const Code& b) {
  if (a.q() != b.q() || a.n() != b.n() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace codebounds
