#pragma once

// Ferrers diagrams of echelon forms.
//
// For an identifying vector v of weight k, the free entries of an RREF
// matrix with pivots at v's ones form a right-aligned dot pattern: row i has
// one dot for every non-pivot column to the right of pivot i.  The diagram
// is stored on a k x m grid, m = dots in the top row; grid column c maps to
// the c-th non-pivot column after the first pivot.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subspace_codec/matrix.hpp"
#include "subspace_codec/skeleton.hpp"

namespace subspace_codec {

/// z_0 zeros before the first one; gaps[i - 1] = z_i zeros after the i-th one.
struct ZeroProfile {
  std::size_t leading = 0;
  std::vector<std::size_t> gaps;

  std::size_t z(std::size_t i) const { return i == 0 ? leading : gaps.at(i - 1); }
  std::size_t weight() const { return gaps.size(); }

  friend bool operator==(const ZeroProfile&, const ZeroProfile&) = default;
};

inline ZeroProfile zero_profile(const IdentifyingVector& v) {
  const auto ones = v.ones();
  if (ones.empty()) throw std::invalid_argument("zero profile of a zero-weight vector");
  ZeroProfile z;
  z.leading = ones.front();
  for (std::size_t i = 0; i < ones.size(); ++i) {
    const std::size_t next = i + 1 < ones.size() ? ones[i + 1] : v.length();
    z.gaps.push_back(next - ones[i] - 1);
  }
  return z;
}

class FerrersDiagram {
 public:
  FerrersDiagram() = default;

  explicit FerrersDiagram(std::vector<std::size_t> row_lengths) : rows_(std::move(row_lengths)) {
    for (std::size_t i = 1; i < rows_.size(); ++i)
      if (rows_[i] > rows_[i - 1]) throw std::invalid_argument("Ferrers rows must be non-increasing");
  }

  static FerrersDiagram rectangle(std::size_t rows, std::size_t cols) {
    return FerrersDiagram(std::vector<std::size_t>(rows, cols));
  }

  const std::vector<std::size_t>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t width() const { return rows_.empty() ? 0 : rows_.front(); }
  std::size_t row_length(std::size_t r) const { return rows_.at(r); }

  std::size_t dot_count() const { return std::accumulate(rows_.begin(), rows_.end(), std::size_t{0}); }

  std::size_t nonempty_rows() const {
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](auto r) { return r > 0; }));
  }

  /// Dots in grid column c, counted from the left.
  std::size_t column_height(std::size_t c) const {
    const std::size_t need = width() - c;
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [&](auto r) { return r >= need; }));
  }

  bool contains(std::size_t r, std::size_t c) const {
    return r < rows_.size() && c < width() && c >= width() - rows_[r];
  }

  /// Every nonempty row has the full width.
  bool is_rectangle() const {
    return std::all_of(rows_.begin(), rows_.end(), [&](auto r) { return r == 0 || r == width(); });
  }

  /// Drops the t leftmost dots of the top row.
  FerrersDiagram without_leading(std::size_t t) const {
    if (rows_.empty() || t > rows_[0] || (rows_.size() > 1 && rows_[0] - t < rows_[1]))
      throw std::invalid_argument("removing leading dots breaks the diagram");
    auto r = rows_;
    r[0] -= t;
    return FerrersDiagram(std::move(r));
  }

  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  std::vector<std::size_t> rows_;
};

/// Row i holds z_i + ... + z_k dots.
inline FerrersDiagram diagram_from_vector(const IdentifyingVector& v) {
  const auto z = zero_profile(v);
  std::vector<std::size_t> rows(z.weight());
  std::size_t suffix = 0;
  for (std::size_t i = z.weight(); i-- > 0;) {
    suffix += z.gaps[i];
    rows[i] = suffix;
  }
  return FerrersDiagram(std::move(rows));
}

/// Exponent of the upper bound on a Ferrers diagram code with minimum rank
/// distance delta: min over i in [0, delta) of the dots outside the top i
/// rows and the rightmost delta - 1 - i columns.
inline std::size_t ferrers_bound(const FerrersDiagram& f, std::size_t delta) {
  if (delta == 0) throw std::invalid_argument("delta must be at least 1");
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < delta; ++i) {
    const std::size_t cut = delta - 1 - i;
    std::size_t w = 0;
    for (std::size_t r = i; r < f.row_count(); ++r) w += f.row_length(r) > cut ? f.row_length(r) - cut : 0;
    best = std::min(best, w);
  }
  return best;
}

/// Closed-form code dimension for the two diagram families where it is
/// known; nullopt when neither applies.  Here a = nonempty rows, b = width.
inline std::optional<std::size_t> corollary_dimension(const FerrersDiagram& f, std::size_t delta) {
  if (delta == 0) throw std::invalid_argument("delta must be at least 1");
  const std::size_t a = f.nonempty_rows(), b = f.width();
  if (a == 0) return std::nullopt;
  const std::size_t full = delta - 1;

  if (a >= b && full <= b) {
    bool ok = true;
    for (std::size_t j = 0; j < full; ++j) ok = ok && f.column_height(b - 1 - j) == a;
    if (ok) {
      std::size_t sum = 0;
      for (std::size_t c = 0; c + full < b; ++c) sum += f.column_height(c);
      return sum;
    }
  }
  if (a <= b && full <= a) {
    bool ok = true;
    for (std::size_t r = 0; r < full; ++r) ok = ok && f.row_length(r) == b;
    if (ok) {
      std::size_t sum = 0;
      for (std::size_t r = full; r < a; ++r) sum += f.row_length(r);
      return sum;
    }
  }
  return std::nullopt;
}

struct PendingReport {
  /// Σ_{i>=1} z_i - max{l : z_l != 0}; 0 for an empty diagram.
  std::int64_t p_formula = 0;
  /// Diagram with a single nonempty row (z_i = 0 for every i > 1).
  bool single_row = false;
  /// Pending dots in the top row; the closed formula for delta = 2, the
  /// removal oracle otherwise.
  std::size_t count = 0;
  std::size_t oracle_count = 0;
  /// Absolute matrix columns of the `count` leftmost top-row dots.
  std::vector<std::size_t> columns;
};

/// Largest t <= z_1 such that dropping the t leftmost top-row dots keeps the
/// bound exponent.
inline std::size_t pending_count_oracle(const IdentifyingVector& v, std::size_t delta) {
  const auto z = zero_profile(v);
  const auto f = diagram_from_vector(v);
  const std::size_t bound = ferrers_bound(f, delta);
  std::size_t best = 0;
  for (std::size_t t = 1; t <= z.z(1); ++t) {
    if (ferrers_bound(f.without_leading(t), delta) != bound) break;
    best = t;
  }
  return best;
}

inline PendingReport pending_analysis(const IdentifyingVector& v, std::size_t delta) {
  if (v.weight() == 0) throw std::invalid_argument("pending analysis of a zero-weight vector");
  if (delta == 0) throw std::invalid_argument("delta must be at least 1");
  const auto z = zero_profile(v);
  const std::size_t k = z.weight();

  PendingReport rep;
  std::int64_t total = 0;
  std::size_t last_nonzero = 0;
  for (std::size_t l = 1; l <= k; ++l) {
    total += static_cast<std::int64_t>(z.z(l));
    if (z.z(l) != 0) last_nonzero = l;
  }
  rep.p_formula = last_nonzero == 0 ? 0 : total - static_cast<std::int64_t>(last_nonzero);
  rep.single_row = true;
  for (std::size_t l = 2; l <= k; ++l) rep.single_row = rep.single_row && z.z(l) == 0;

  rep.oracle_count = pending_count_oracle(v, delta);
  if (delta == 2) {
    if (rep.single_row)
      rep.count = z.z(1);
    else
      rep.count = static_cast<std::size_t>(std::clamp<std::int64_t>(rep.p_formula, 0, std::int64_t(z.z(1))));
  } else {
    rep.count = rep.oracle_count;
  }

  const auto first = v.first_one();
  for (std::size_t t = 0; t < rep.count; ++t) rep.columns.push_back(first + 1 + t);
  return rep;
}

/// Absolute columns of the diagram grid: non-pivot columns after the first pivot.
inline std::vector<std::size_t> grid_columns(const IdentifyingVector& v) {
  std::vector<std::size_t> cols;
  const auto first = v.first_one();
  for (std::size_t c = first + 1; c < v.length(); ++c)
    if (!v[c]) cols.push_back(c);
  return cols;
}

/// Full k x n echelon form with pivots at v's ones and the diagram entries of
/// `fill` (a k x width grid) at the free positions.
inline Matrix embed(const IdentifyingVector& v, const Matrix& fill) {
  const auto f = diagram_from_vector(v);
  const auto ones = v.ones();
  const auto cols = grid_columns(v);
  if (fill.rows() != ones.size() || fill.cols() != f.width())
    throw std::invalid_argument("fill does not match the diagram grid");
  Matrix out(fill.field(), ones.size(), v.length());
  for (std::size_t r = 0; r < ones.size(); ++r) {
    out(r, ones[r]) = 1;
    for (std::size_t c = 0; c < f.width(); ++c) {
      const Element e = fill(r, c);
      if (!f.contains(r, c)) {
        if (e != 0) throw std::invalid_argument("fill has an entry outside the diagram");
        continue;
      }
      out(r, cols[c]) = e;
    }
  }
  return out;
}

/// Diagram entries of an echelon form with identifying vector v.
inline Matrix extract(const IdentifyingVector& v, const Matrix& u) {
  const auto f = diagram_from_vector(v);
  const auto cols = grid_columns(v);
  if (u.rows() != v.weight() || u.cols() != v.length()) throw std::invalid_argument("matrix shape does not match vector");
  Matrix fill(u.field(), u.rows(), f.width());
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < f.width(); ++c)
      if (f.contains(r, c)) fill(r, c) = u(r, cols[c]);
  return fill;
}

/// Pivot indicator of a full-rank RREF matrix.
inline IdentifyingVector identifying_vector(const Matrix& u) {
  auto ech = rref(u);
  if (!(ech.form == u)) throw std::invalid_argument("matrix is not in reduced row echelon form");
  if (ech.rank != u.rows()) throw std::invalid_argument("matrix does not have full row rank");
  return IdentifyingVector::from_positions(u.cols(), ech.pivots);
}

}  // namespace subspace_codec
