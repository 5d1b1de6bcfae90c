#pragma once

// Rank-metric codes: Gabidulin MRD codes on rectangles and Ferrers diagram
// codes obtained as the subcode of an MRD code that vanishes off the diagram.
//
// For an a x b diagram (a nonempty rows, b = top row length) the MRD code of
// a x b matrices with minimum rank distance delta has dimension
// max(a,b)(min(a,b) - delta + 1); forcing the ab - |dots| off-diagram entries
// to zero costs at most that many dimensions.  For delta <= 2 what is left is
// exactly the ferrers_bound exponent.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subspace_codec/ferrers.hpp"
#include "subspace_codec/grassmann.hpp"
#include "subspace_codec/matrix.hpp"

namespace subspace_codec {

namespace detail {

// Polynomials over a GaloisField, coefficient i of x^i, trimmed.
using FieldPoly = std::vector<Element>;

inline void trim_field_poly(FieldPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FieldPoly poly_mul(const GaloisField& f, const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim_field_poly(out);
  return out;
}

inline FieldPoly poly_mod(const GaloisField& f, FieldPoly a, const FieldPoly& m) {
  trim_field_poly(a);
  const Element lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    const Element factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, m[i]));
    trim_field_poly(a);
  }
  return a;
}

inline FieldPoly poly_sub(const GaloisField& f, FieldPoly a, const FieldPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim_field_poly(a);
  return a;
}

inline FieldPoly poly_gcd(const GaloisField& f, FieldPoly a, FieldPoly b) {
  trim_field_poly(a);
  trim_field_poly(b);
  while (!b.empty()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline FieldPoly poly_powmod(const GaloisField& f, FieldPoly base, std::uint64_t e, const FieldPoly& m) {
  FieldPoly result{1};
  base = poly_mod(f, std::move(base), m);
  while (e) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), m);
    base = poly_mod(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

// x^(q^i) mod m by i successive q-th powers.
inline FieldPoly frobenius_power_of_x(const GaloisField& f, std::size_t i, const FieldPoly& m) {
  FieldPoly x = poly_mod(f, FieldPoly{0, 1}, m);
  for (std::size_t s = 0; s < i; ++s) x = poly_powmod(f, x, f.order(), m);
  return x;
}

// Rabin's test: x^(q^m) = x mod g and gcd(x^(q^(m/l)) - x, g) = 1 for primes l | m.
inline bool is_irreducible_over(const GaloisField& f, const FieldPoly& g) {
  const std::size_t m = g.size() - 1;
  if (m == 1) return true;
  const FieldPoly x{0, 1};
  if (!poly_sub(f, frobenius_power_of_x(f, m, g), poly_mod(f, x, g)).empty()) return false;
  std::size_t rest = m;
  for (std::size_t l = 2; l <= rest; ++l) {
    if (rest % l) continue;
    while (rest % l == 0) rest /= l;
    const auto h = poly_sub(f, frobenius_power_of_x(f, m / l, g), x);
    if (poly_gcd(f, g, h).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// GF(q^m) as GF(q)[x]/(g) with g the lexicographically smallest monic
/// irreducible of degree m (constant term compared first).  Elements are
/// coordinate vectors over GF(q) in the polynomial basis 1, x, ..., x^(m-1).
class ExtensionField {
 public:
  using Vec = std::vector<Element>;

  ExtensionField(FieldPtr base, std::size_t degree) : base_(std::move(base)), degree_(degree) {
    if (degree_ == 0) throw std::invalid_argument("extension degree must be positive");
    const std::uint32_t q = base_->order();
    std::vector<Element> digits(degree_, 0);
    while (true) {
      detail::FieldPoly g(degree_ + 1);
      for (std::size_t i = 0; i < degree_; ++i) g[i] = digits[i];
      g[degree_] = 1;
      if (g[0] != 0 && detail::is_irreducible_over(*base_, g)) {
        modulus_ = std::move(g);
        return;
      }
      // Odometer with the constant term as the most significant digit.
      std::size_t i = degree_;
      while (i > 0 && ++digits[i - 1] == q) digits[--i] = 0;
      if (i == 0) throw std::logic_error("no irreducible polynomial over the base field");
    }
  }

  std::size_t degree() const { return degree_; }
  const GaloisField& base() const { return *base_; }
  const std::vector<Element>& modulus() const { return modulus_; }

  Vec basis(std::size_t i) const {
    Vec v(degree_, 0);
    v.at(i) = 1;
    return v;
  }

  Vec mul(const Vec& a, const Vec& b) const {
    auto prod = detail::poly_mod(*base_, detail::poly_mul(*base_, trimmed(a), trimmed(b)), modulus_);
    prod.resize(degree_, 0);
    return prod;
  }

  Vec pow(Vec a, std::uint64_t e) const {
    Vec result = basis(0);
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// a^q
  Vec frobenius(const Vec& a) const { return pow(a, base_->order()); }

 private:
  static detail::FieldPoly trimmed(detail::FieldPoly a) {
    detail::trim_field_poly(a);
    return a;
  }

  FieldPtr base_;
  std::size_t degree_;
  std::vector<Element> modulus_;
};

/// Rank of X - Y.
inline std::size_t rank_distance(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("rank distance needs equal shapes");
  return rank(x - y);
}

/// Affine rank-metric code supported on a Ferrers diagram grid:
/// offset + span(basis).  The offset is nonzero only on fixed leading dots of
/// the top row.
struct RankMetricCode {
  FieldPtr field;
  FerrersDiagram diagram;
  std::size_t delta = 1;
  std::vector<Matrix> basis;
  std::vector<Element> fixed_leading;
  std::size_t target_dimension = 0;

  std::size_t dimension() const { return basis.size(); }
  std::size_t shortfall() const { return target_dimension > dimension() ? target_dimension - dimension() : 0; }
  std::size_t grid_rows() const { return diagram.row_count(); }
  std::size_t grid_cols() const { return diagram.width(); }

  BigInt size() const { return boost::multiprecision::pow(BigInt(field->order()), static_cast<unsigned>(dimension())); }

  Matrix offset() const {
    Matrix m(field, grid_rows(), grid_cols());
    for (std::size_t c = 0; c < fixed_leading.size(); ++c) m(0, c) = fixed_leading[c];
    return m;
  }

  /// offset + Σ coeffs[j] basis[j]
  Matrix codeword(std::span<const Element> coeffs) const {
    if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient count mismatch");
    Matrix m = offset();
    const auto& f = *field;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (coeffs[j] == 0) continue;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.add(m(r, c), f.mul(coeffs[j], basis[j](r, c)));
    }
    return m;
  }

  /// Calls fn(word) for every codeword, in odometer order of the coefficients
  /// (first coefficient fastest).  With `linear_only` the offset is omitted.
  template <class Fn>
  void for_each_codeword(Fn&& fn, bool linear_only = false) const {
    const auto& f = *field;
    const std::uint32_t q = f.order();
    Matrix word = linear_only ? Matrix(field, grid_rows(), grid_cols()) : offset();
    std::vector<Element> digits(basis.size(), 0);
    while (true) {
      fn(static_cast<const Matrix&>(word));
      std::size_t j = 0;
      for (; j < digits.size(); ++j) {
        const Element old = digits[j];
        const Element next = old + 1 == q ? 0 : old + 1;
        digits[j] = next;
        const Element step = f.sub(next, old);
        for (std::size_t r = 0; r < word.rows(); ++r)
          for (std::size_t c = 0; c < word.cols(); ++c)
            word(r, c) = f.add(word(r, c), f.mul(step, basis[j](r, c)));
        if (next != 0) break;
      }
      if (j == digits.size()) return;
    }
  }
};

namespace detail {

// RREF of the basis over the flattened grid, so equal codes get equal bases.
inline std::vector<Matrix> canonical_basis(const FieldPtr& field, std::size_t rows, std::size_t cols,
                                           const std::vector<Matrix>& spanning) {
  if (spanning.empty()) return {};
  Matrix flat(field, spanning.size(), rows * cols);
  for (std::size_t j = 0; j < spanning.size(); ++j)
    std::copy(spanning[j].entries().begin(), spanning[j].entries().end(), flat.row(j).begin());
  auto ech = rref(flat);
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < ech.rank; ++j) {
    Matrix m(field, rows, cols);
    for (std::size_t e = 0; e < rows * cols; ++e) m(e / cols, e % cols) = ech.form(j, e);
    out.push_back(std::move(m));
  }
  return out;
}

// Null space of m: all x with m x = 0, as row vectors.
inline std::vector<std::vector<Element>> null_space(const Matrix& m) {
  const auto& f = m.gf();
  auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<Element>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < ech.rank; ++i) x[ech.pivots[i]] = f.neg(ech.form(i, free));
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

/// Linear MRD code of rows x cols matrices (rows <= cols) with minimum rank
/// distance delta: evaluations of linearized polynomials Σ_{j<K} f_j x^(q^j),
/// K = rows - delta + 1, at the basis points 1, x, ..., x^(rows-1) of
/// GF(q^cols); row i of a codeword holds the coordinates of f(x^i).
inline RankMetricCode gabidulin_mrd(std::size_t rows, std::size_t cols, std::size_t delta, const FieldPtr& field) {
  if (rows == 0 || rows > cols) throw std::invalid_argument("Gabidulin code needs 0 < rows <= cols");
  if (delta == 0 || delta > rows) throw std::invalid_argument("Gabidulin code needs 1 <= delta <= rows");
  const ExtensionField ext(field, cols);
  const std::size_t terms = rows - delta + 1;

  // powers[i][j] = (x^i)^(q^j)
  std::vector<std::vector<ExtensionField::Vec>> powers(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    auto point = ext.basis(i);
    for (std::size_t j = 0; j < terms; ++j) {
      powers[i].push_back(point);
      point = ext.frobenius(point);
    }
  }

  std::vector<Matrix> spanning;
  for (std::size_t j = 0; j < terms; ++j)
    for (std::size_t t = 0; t < cols; ++t) {
      const auto coeff = ext.basis(t);
      Matrix m(field, rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        const auto value = ext.mul(coeff, powers[i][j]);
        std::copy(value.begin(), value.end(), m.row(i).begin());
      }
      spanning.push_back(std::move(m));
    }

  RankMetricCode code;
  code.field = field;
  code.diagram = FerrersDiagram::rectangle(rows, cols);
  code.delta = delta;
  code.basis = detail::canonical_basis(field, rows, cols, spanning);
  code.target_dimension = cols * terms;
  if (code.dimension() != code.target_dimension) throw std::logic_error("Gabidulin generators are dependent");
  return code;
}

/// Linear code supported on `diagram` with minimum rank distance >= delta;
/// the leading top-row dots listed in `fixed_leading` are pinned to those
/// values in every codeword.  The dimension equals the ferrers_bound of the
/// remaining diagram for delta <= 2; for larger delta any gap is reported by
/// `shortfall()`.
inline RankMetricCode build_ferrers_code(const FerrersDiagram& diagram, std::size_t delta, const FieldPtr& field,
                                         std::vector<Element> fixed_leading = {}) {
  if (delta == 0) throw std::invalid_argument("delta must be at least 1");
  for (auto e : fixed_leading)
    if (!field->contains(e)) throw std::invalid_argument("fixed value outside field");
  const std::size_t shift = fixed_leading.size();
  const FerrersDiagram reduced = diagram.without_leading(shift);

  RankMetricCode code;
  code.field = field;
  code.diagram = diagram;
  code.delta = delta;
  code.fixed_leading = std::move(fixed_leading);
  code.target_dimension = ferrers_bound(reduced, delta);

  const std::size_t a = reduced.nonempty_rows(), b = reduced.width();
  if (a == 0 || b == 0 || delta > std::min(a, b)) return code;

  // MRD code on the a x b bounding rectangle of the reduced diagram.
  RankMetricCode mrd = a <= b ? gabidulin_mrd(a, b, delta, field) : gabidulin_mrd(b, a, delta, field);
  if (a > b)
    for (auto& m : mrd.basis) m = m.transposed();

  std::vector<std::pair<std::size_t, std::size_t>> off_diagram;
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t c = 0; c + reduced.row_length(r) < b; ++c) off_diagram.emplace_back(r, c);

  std::vector<std::vector<Element>> combos;
  if (off_diagram.empty()) {
    for (std::size_t j = 0; j < mrd.basis.size(); ++j) {
      std::vector<Element> e(mrd.basis.size(), 0);
      e[j] = 1;
      combos.push_back(std::move(e));
    }
  } else {
    Matrix constraints(field, off_diagram.size(), mrd.basis.size());
    for (std::size_t i = 0; i < off_diagram.size(); ++i)
      for (std::size_t j = 0; j < mrd.basis.size(); ++j)
        constraints(i, j) = mrd.basis[j](off_diagram[i].first, off_diagram[i].second);
    combos = detail::null_space(constraints);
  }

  const auto& f = *field;
  std::vector<Matrix> spanning;
  for (const auto& coeffs : combos) {
    Matrix m(field, diagram.row_count(), diagram.width());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      for (std::size_t r = 0; r < a; ++r)
        for (std::size_t c = 0; c < b; ++c)
          m(r, c + shift) = f.add(m(r, c + shift), f.mul(coeffs[j], mrd.basis[j](r, c)));
    }
    spanning.push_back(std::move(m));
  }
  code.basis = detail::canonical_basis(field, diagram.row_count(), diagram.width(), spanning);
  return code;
}

/// Minimum rank over the nonzero codewords of the linear part; nullopt for
/// the zero code.  Throws std::length_error when q^dim exceeds `guard`.
inline std::optional<std::size_t> min_rank_distance(const RankMetricCode& code, std::uint64_t guard = 10'000'000) {
  if (code.size() > guard) throw std::length_error("code too large for exhaustive rank check");
  if (code.dimension() == 0) return std::nullopt;
  std::size_t best = SIZE_MAX;
  bool first = true;
  code.for_each_codeword(
      [&](const Matrix& w) {
        if (first) {  // the zero word
          first = false;
          return;
        }
        best = std::min(best, rank(w));
      },
      true);
  return best;
}

}  // namespace subspace_codec
