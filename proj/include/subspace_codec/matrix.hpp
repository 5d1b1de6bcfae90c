#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subspace_codec/field.hpp"

namespace subspace_codec {

/// Dense row-major matrix over a GaloisField.
class Matrix {
 public:
  Matrix() = default;

  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
  }

  Matrix(FieldPtr field, std::initializer_list<std::initializer_list<Element>> rows)
      : Matrix(std::move(field), rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      std::size_t c = 0;
      for (Element e : row) set(r, c++, e);
      ++r;
    }
  }

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const FieldPtr& field() const { return field_; }
  const GaloisField& gf() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Element at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    return (*this)(r, c);
  }

  void set(std::size_t r, std::size_t c, Element v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    if (!field_->contains(v)) throw std::invalid_argument("entry outside field");
    (*this)(r, c) = v;
  }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
  }

  Matrix transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool same_field(const Matrix& o) const { return field_ == o.field_ || (field_ && o.field_ && *field_ == *o.field_); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.same_field(b);
  }

  // Entrywise lexicographic order; only meaningful for equal shapes.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

inline void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.same_field(b)) throw std::invalid_argument("matrices over different fields");
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  Matrix out(a.field(), a.rows(), a.cols());
  const auto& f = a.gf();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.add(a(r, c), b(r, c));
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  Matrix out(a.field(), a.rows(), a.cols());
  const auto& f = a.gf();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.sub(a(r, c), b(r, c));
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  const auto& f = a.gf();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const Element x = a(r, i);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = f.add(out(r, c), f.mul(x, b(i, c)));
    }
  return out;
}

inline Matrix scaled(const Matrix& a, Element s) {
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.gf().mul(s, a(r, c));
  return out;
}

/// Vertical concatenation [top; bottom].
inline Matrix stack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) throw std::invalid_argument("column mismatch in stack");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) std::copy_n(top.row(r).begin(), top.cols(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy_n(bottom.row(r).begin(), top.cols(), out.row(top.rows() + r).begin());
  return out;
}

namespace gf2 {

// Rows of a GF(2) matrix with at most 64 columns; column c is bit (63 - c) so
// that integer order on a row matches left-to-right lexicographic order.
using BitRow = std::uint64_t;

inline constexpr BitRow column_bit(std::size_t c) { return BitRow{1} << (63 - c); }

/// Rank by XOR elimination; the rows are consumed.
inline std::size_t rank_in_place(std::span<BitRow> rows) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BitRow pivot_row = rows[i];
    if (pivot_row == 0) continue;
    ++rank;
    const BitRow lead = BitRow{1} << (63 - std::countl_zero(pivot_row));
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & lead) rows[j] ^= pivot_row;
  }
  return rank;
}

inline std::vector<BitRow> pack(const Matrix& m) {
  if (m.gf().order() != 2 || m.cols() > 64) throw std::invalid_argument("bit packing needs GF(2) and <= 64 columns");
  std::vector<BitRow> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c)) out[r] |= column_bit(c);
  return out;
}

}  // namespace gf2

/// Reduced row echelon form together with its rank and pivot columns.
struct Echelon {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
inline Echelon rref(Matrix m) {
  const auto& f = m.gf();
  Echelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(lead_row).begin());
    const Element scale = f.inv(m(lead_row, c));
    if (scale != 1)
      for (auto& e : m.row(lead_row)) e = f.mul(e, scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      const Element factor = m(r, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(lead_row, j)));
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.form = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) {
  if (m.gf().order() == 2 && m.cols() <= 64) {
    auto rows = gf2::pack(m);
    return gf2::rank_in_place(rows);
  }
  return rref(m).rank;
}

inline bool is_rref(const Matrix& m) { return rref(m).form == m; }

/// Rank of the vertical stack [u; v].
inline std::size_t rank_of_stack(const Matrix& u, const Matrix& v) { return rank(stack(u, v)); }

/// Rows as space-separated integers, one row per line.
inline std::string to_text(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

inline Matrix parse_matrix(FieldPtr field, std::string_view text) {
  std::vector<std::vector<Element>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<Element> row;
    long long value;
    while (tokens >> value) {
      if (value < 0 || !field->contains(static_cast<Element>(value)))
        throw std::invalid_argument("matrix entry outside field: " + std::to_string(value));
      row.push_back(static_cast<Element>(value));
    }
    if (!tokens.eof()) throw std::invalid_argument("malformed matrix row: " + line);
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("ragged matrix rows");
    rows.push_back(std::move(row));
  }
  Matrix m(std::move(field), rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  return m;
}

}  // namespace subspace_codec
