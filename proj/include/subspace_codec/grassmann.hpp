#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "subspace_codec/matrix.hpp"

namespace subspace_codec {

using BigInt = boost::multiprecision::cpp_int;

/// A subspace of GF(q)^n, stored as its unique RREF basis without zero rows.
/// Two subspaces are equal iff their bases are entrywise equal.
class Subspace {
 public:
  Subspace() = default;

  /// Row space of an arbitrary matrix.
  static Subspace row_space(const Matrix& m) {
    auto ech = rref(m);
    Matrix basis(m.field(), ech.rank, m.cols());
    for (std::size_t r = 0; r < ech.rank; ++r)
      std::copy(ech.form.row(r).begin(), ech.form.row(r).end(), basis.row(r).begin());
    return Subspace(std::move(basis), std::move(ech.pivots));
  }

  /// Wraps a matrix that must already be in RREF with full row rank.
  static Subspace from_rref(Matrix basis) {
    auto ech = rref(basis);
    if (ech.rank != basis.rows() || !(ech.form == basis))
      throw std::invalid_argument("basis is not a full-rank RREF matrix");
    return Subspace(std::move(basis), std::move(ech.pivots));
  }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const FieldPtr& field() const { return basis_.field(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Number of k-dimensional subspaces of GF(q)^n.
inline BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) throw std::invalid_argument("gaussian_binomial needs k <= n");
  if (q < 2) throw std::invalid_argument("gaussian_binomial needs q >= 2");
  BigInt num = 1, den = 1;
  const BigInt base = q;
  for (std::size_t i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(base, static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(base, static_cast<unsigned>(k - i)) - 1;
  }
  return num / den;
}

inline void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("subspaces live in different ambient spaces");
  if (!u.basis().same_field(v.basis())) throw std::invalid_argument("subspaces over different fields");
}

/// dim(U ∩ V) = dim U + dim V - rank [U; V].
inline std::size_t intersection_dimension(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return u.dim() + v.dim() - rank_of_stack(u.basis(), v.basis());
}

/// Subspace distance dim U + dim V - 2 dim(U ∩ V); for equal dimension k this
/// is 2(k - dim(U ∩ V)) = 2 rank[U; V] - 2k.
inline std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  const std::size_t stacked = rank_of_stack(u.basis(), v.basis());
  const std::size_t by_rank = 2 * stacked - u.dim() - v.dim();
  const std::size_t by_intersection = u.dim() + v.dim() - 2 * (u.dim() + v.dim() - stacked);
  if (by_rank != by_intersection) throw std::logic_error("subspace distance formulas disagree");
  return by_rank;
}

/// Null space of the basis under the standard bilinear form x·y = Σ x_i y_i.
inline Subspace orthogonal_complement(const Subspace& u) {
  const auto& f = u.basis().gf();
  const std::size_t n = u.ambient();
  std::vector<bool> is_pivot(n, false);
  for (auto c : u.pivots()) is_pivot[c] = true;
  Matrix out(u.field(), n - u.dim(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    out(row, free) = 1;
    for (std::size_t i = 0; i < u.dim(); ++i) out(row, u.pivots()[i]) = f.neg(u.basis()(i, free));
    ++row;
  }
  return Subspace::row_space(out);
}

/// Every k-dimensional subspace of GF(q)^n, grouped by pivot pattern in
/// decreasing lexicographic order of the pivot indicator.
inline std::vector<Subspace> enumerate_grassmannian(std::size_t n, std::size_t k, const FieldPtr& field,
                                                    std::uint64_t guard = 1'000'000) {
  const BigInt total = gaussian_binomial(n, k, field->order());
  if (total > guard) throw std::length_error("Grassmannian too large to enumerate");
  const std::uint32_t q = field->order();
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(total));

  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    // Free positions: (row i, column c) with c > pivot_i and c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);

    std::vector<Element> digits(free.size(), 0);
    while (true) {
      Matrix m(field, k, n);
      for (std::size_t i = 0; i < k; ++i) m(i, pivots[i]) = 1;
      for (std::size_t j = 0; j < free.size(); ++j) m(free[j].first, free[j].second) = digits[j];
      out.push_back(Subspace::from_rref(std::move(m)));
      std::size_t j = 0;
      while (j < digits.size() && ++digits[j] == q) digits[j++] = 0;
      if (j == digits.size()) break;
    }

    // Next k-subset in lexicographic order of pivot tuples.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace subspace_codec
