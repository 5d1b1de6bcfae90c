#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subspace_codec/matrix.hpp"

using namespace subspace_codec;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<Element> d(0, f->order() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

Matrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

std::vector<oracle::Vec> rows_of(const Matrix& m) {
  std::vector<oracle::Vec> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

oracle::Field reference(const FieldPtr& f) {
  return {f->characteristic(), f->degree(), f->order(), f->spec().modulus};
}

}  // namespace

TEST(Matrix, RrefExample) {
  const auto f = GaloisField::make(2);
  const Matrix m(f, {{0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}});
  const auto e = rref(m);
  EXPECT_EQ(e.rank, 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.form, Matrix(f, {{1, 0, 1, 1}, {0, 1, 1, 0}, {0, 0, 0, 0}}));
}

TEST(Matrix, RankAgreesWithSpanCount) {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = GaloisField::make(q);
    const auto ref = reference(f);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
      const auto m = random_matrix(f, r, c, rng);
      ASSERT_EQ(rank(m), oracle::rank(ref, rows_of(m), c)) << to_text(m);
    }
  }
}

TEST(Matrix, RrefIsIdempotentAndInvariantUnderRowOperations) {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 7u, 8u}) {
    const auto f = GaloisField::make(q);
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(f, 3, 6, rng);
      const auto e = rref(m);
      EXPECT_TRUE(is_rref(e.form));
      EXPECT_EQ(rref(e.form).form, e.form);
      const auto g = random_invertible(f, 3, rng);
      EXPECT_EQ(rref(g * m).form, e.form);
    }
  }
}

TEST(Matrix, Gf2FastPathMatchesGeneric) {
  std::mt19937_64 rng(3);
  const auto f = GaloisField::make(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(f, 6, 10, rng);
    EXPECT_EQ(rank(m), rref(m).rank);
  }
}

TEST(Matrix, RankOfStack) {
  const auto f = GaloisField::make(3);
  const Matrix u(f, {{1, 0, 2}});
  const Matrix v(f, {{2, 0, 1}});
  EXPECT_EQ(rank_of_stack(u, v), 1u);
  EXPECT_EQ(rank_of_stack(u, Matrix(f, {{0, 1, 0}})), 2u);
}

TEST(Matrix, TextRoundTrip) {
  const auto f = GaloisField::make(5);
  const Matrix m(f, {{0, 4, 2}, {1, 3, 0}});
  EXPECT_EQ(parse_matrix(f, to_text(m)), m);
}

TEST(Matrix, Errors) {
  const auto f = GaloisField::make(3);
  Matrix m(f, 2, 2);
  EXPECT_THROW(m.set(0, 0, 3), std::invalid_argument);
  EXPECT_THROW(m.at(2, 0), std::out_of_range);
  EXPECT_THROW(Matrix(f, 2, 3) * Matrix(f, 2, 3), std::invalid_argument);
  EXPECT_THROW(Matrix(f, 2, 3) + Matrix(GaloisField::make(2), 2, 3), std::invalid_argument);
  EXPECT_THROW(stack(Matrix(f, 1, 2), Matrix(f, 1, 3)), std::invalid_argument);
  EXPECT_THROW(parse_matrix(f, "1 2\n0 5\n"), std::invalid_argument);
}
