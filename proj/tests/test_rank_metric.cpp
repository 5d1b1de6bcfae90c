#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "subspace_codec/rank_metric.hpp"

using namespace subspace_codec;

namespace {

oracle::Field reference(const FieldPtr& f) {
  return {f->characteristic(), f->degree(), f->order(), f->spec().modulus};
}

std::size_t rank_by_span(const oracle::Field& ref, const Matrix& m) {
  std::vector<oracle::Vec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return oracle::rank(ref, rows, m.cols());
}

// Minimum span-counted rank over every difference of two distinct codewords.
std::size_t min_pairwise_rank(const RankMetricCode& code) {
  const auto ref = reference(code.field);
  std::vector<Matrix> words;
  code.for_each_codeword([&](const Matrix& w) { words.push_back(w); });
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, rank_by_span(ref, words[i] - words[j]));
  return best;
}

bool supported_on(const RankMetricCode& code, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) && !code.diagram.contains(r, c)) return false;
  return true;
}

}  // namespace

TEST(RankMetric, ExtensionFieldArithmetic) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto base = GaloisField::make(q);
    for (std::size_t m : {2u, 3u, 4u}) {
      const ExtensionField ext(base, m);
      std::vector<ExtensionField::Vec> all;
      std::size_t total = 1;
      for (std::size_t i = 0; i < m; ++i) total *= q;
      for (std::size_t code = 0; code < total; ++code) {
        ExtensionField::Vec v(m);
        auto x = code;
        for (auto& e : v) {
          e = static_cast<Element>(x % q);
          x /= q;
        }
        all.push_back(v);
      }
      // Every nonzero element satisfies a^(q^m - 1) = 1, and Frobenius is additive.
      const auto one = ext.basis(0);
      for (const auto& a : all) {
        bool zero = std::all_of(a.begin(), a.end(), [](auto e) { return e == 0; });
        if (!zero) { EXPECT_EQ(ext.pow(a, total - 1), one); }
        for (const auto& b : all) {
          ExtensionField::Vec s(m);
          for (std::size_t i = 0; i < m; ++i) s[i] = base->add(a[i], b[i]);
          auto fs = ext.frobenius(s), fa = ext.frobenius(a), fb = ext.frobenius(b);
          for (std::size_t i = 0; i < m; ++i) fa[i] = base->add(fa[i], fb[i]);
          ASSERT_EQ(fs, fa);
        }
      }
    }
  }
}

TEST(RankMetric, RankDistance) {
  const auto f = GaloisField::make(2);
  EXPECT_EQ(rank_distance(Matrix(f, {{1, 0}, {0, 1}}), Matrix(f, {{0, 0}, {0, 0}})), 2u);
  EXPECT_EQ(rank_distance(Matrix(f, {{1, 1}, {1, 1}}), Matrix(f, {{0, 0}, {0, 0}})), 1u);
  EXPECT_EQ(rank_distance(Matrix(f, {{1, 1}, {1, 1}}), Matrix(f, {{1, 1}, {1, 1}})), 0u);
}

TEST(RankMetric, GabidulinParameters) {
  for (std::uint32_t q : {2u, 3u, 4u})
    for (std::size_t rows = 1; rows <= 3; ++rows)
      for (std::size_t cols = rows; cols <= 3; ++cols)
        for (std::size_t delta = 1; delta <= rows; ++delta) {
          const auto code = gabidulin_mrd(rows, cols, delta, GaloisField::make(q));
          EXPECT_EQ(code.dimension(), cols * (rows - delta + 1));
          if (code.size() <= 4096) {
            EXPECT_EQ(min_rank_distance(code), std::optional<std::size_t>(delta));
            if (code.size() <= 512) { EXPECT_EQ(min_pairwise_rank(code), delta); }
          }
        }
}

TEST(RankMetric, GabidulinIsDeterministic) {
  const auto f = GaloisField::make(2);
  const auto a = gabidulin_mrd(3, 4, 2, f), b = gabidulin_mrd(3, 4, 2, f);
  EXPECT_EQ(a.basis, b.basis);
}

TEST(RankMetric, FerrersCodesAttainTheBound) {
  // Every diagram of a weight-3 vector of length <= 8, delta <= 2.
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 3; n <= 8; ++n)
      for (const auto& v : constant_weight_vectors(n, 3))
        for (std::size_t delta : {1u, 2u}) {
          const auto d = diagram_from_vector(v);
          const auto code = build_ferrers_code(d, delta, GaloisField::make(q));
          ASSERT_EQ(code.dimension(), ferrers_bound(d, delta)) << v.to_string();
          EXPECT_EQ(code.shortfall(), 0u);
          for (const auto& b : code.basis) ASSERT_TRUE(supported_on(code, b));
          if (code.dimension() > 0 && code.size() <= 100000) {
            const auto md = min_rank_distance(code);
            ASSERT_TRUE(md);
            ASSERT_GE(*md, delta) << v.to_string();
          }
        }
}

TEST(RankMetric, FerrersCodesDeltaThree) {
  const auto f = GaloisField::make(2);
  for (std::size_t n = 6; n <= 9; ++n)
    for (const auto& v : constant_weight_vectors(n, 3)) {
      const auto d = diagram_from_vector(v);
      const auto code = build_ferrers_code(d, 3, f);
      EXPECT_LE(code.dimension(), ferrers_bound(d, 3));
      if (code.dimension() > 0) { EXPECT_GE(*min_rank_distance(code), 3u); }
      if (const auto c = corollary_dimension(d, 3)) { EXPECT_EQ(code.dimension(), *c) << v.to_string(); }
    }
}

TEST(RankMetric, PinnedLeadingDotsKeepTheSize) {
  const auto f = GaloisField::make(3);
  const auto v = IdentifyingVector::parse("1001100");
  const auto d = diagram_from_vector(v);
  const auto free_code = build_ferrers_code(d, 2, f);
  for (Element val = 0; val < 3; ++val) {
    const auto pinned = build_ferrers_code(d, 2, f, {val});
    EXPECT_EQ(pinned.dimension(), free_code.dimension());
    std::set<Matrix> seen;
    pinned.for_each_codeword([&](const Matrix& w) {
      EXPECT_EQ(w(0, 0), val);
      EXPECT_TRUE(supported_on(pinned, w));
      seen.insert(w);
    });
    EXPECT_EQ(seen.size(), pinned.size());
    EXPECT_EQ(min_pairwise_rank(pinned), 2u);
  }
}

TEST(RankMetric, CodewordMatchesEnumeration) {
  const auto f = GaloisField::make(2);
  const auto code = build_ferrers_code(FerrersDiagram({3, 2, 1}), 2, f, {1});
  std::vector<Matrix> listed;
  code.for_each_codeword([&](const Matrix& w) { listed.push_back(w); });
  ASSERT_EQ(listed.size(), code.size());
  std::set<Matrix> direct;
  std::vector<Element> c(code.dimension(), 0);
  for (std::size_t mask = 0; mask < listed.size(); ++mask) {
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = (mask >> j) & 1;
    direct.insert(code.codeword(c));
  }
  EXPECT_EQ(direct, std::set<Matrix>(listed.begin(), listed.end()));
}

TEST(RankMetric, Errors) {
  const auto f = GaloisField::make(2);
  EXPECT_THROW(gabidulin_mrd(3, 2, 1, f), std::invalid_argument);
  EXPECT_THROW(gabidulin_mrd(2, 3, 3, f), std::invalid_argument);
  EXPECT_THROW(build_ferrers_code(FerrersDiagram({2, 2}), 0, f), std::invalid_argument);
  EXPECT_THROW(build_ferrers_code(FerrersDiagram({2, 2}), 1, f, {2}), std::invalid_argument);
  EXPECT_THROW(build_ferrers_code(FerrersDiagram({2, 2}), 1, f, {0}), std::invalid_argument);
  const auto code = build_ferrers_code(FerrersDiagram({4, 4, 4}), 1, f);
  EXPECT_THROW(min_rank_distance(code, 100), std::length_error);
  EXPECT_THROW(code.codeword(std::vector<Element>{1}), std::invalid_argument);
}
