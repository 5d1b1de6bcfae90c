#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subspace_codec/skeleton.hpp"

using namespace subspace_codec;

TEST(Skeleton, ParseAndPrint) {
  const auto v = IdentifyingVector::parse("1001100");
  EXPECT_EQ(v.length(), 7u);
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 3, 4}));
  EXPECT_EQ(v.first_one(), 0u);
  EXPECT_EQ(v.to_string(), "1001100");
  EXPECT_TRUE(v[3]);
  EXPECT_FALSE(v[1]);
  const std::vector<std::size_t> pos{0, 3, 4};
  EXPECT_EQ(IdentifyingVector::from_positions(7, pos), v);
}

TEST(Skeleton, ParseErrors) {
  EXPECT_THROW(IdentifyingVector::parse("10a1"), std::invalid_argument);
  EXPECT_THROW(IdentifyingVector::parse(""), std::invalid_argument);
  EXPECT_THROW(IdentifyingVector::parse(std::string(65, '1')), std::invalid_argument);
  const std::vector<std::size_t> bad{1, 7};
  EXPECT_THROW(IdentifyingVector::from_positions(7, bad), std::invalid_argument);
}

TEST(Skeleton, HammingDistance) {
  EXPECT_EQ(hamming_distance(IdentifyingVector::parse("111000"), IdentifyingVector::parse("100110")), 4u);
  EXPECT_EQ(hamming_distance(IdentifyingVector::parse("1001100"), IdentifyingVector::parse("1001010")), 2u);
  EXPECT_THROW(hamming_distance(IdentifyingVector::parse("10"), IdentifyingVector::parse("100")), std::invalid_argument);
}

TEST(Skeleton, ConstantWeightOrder) {
  const auto all = constant_weight_vectors(5, 2);
  ASSERT_EQ(all.size(), 10u);
  EXPECT_EQ(all.front().to_string(), "11000");
  EXPECT_EQ(all.back().to_string(), "00011");
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
}

TEST(Skeleton, LexicodeSixThreeFour) {
  // Greedy scan: 001011 is at distance 4 from each of the first three words.
  const auto code = constant_weight_lexicode(6, 3, 4);
  std::vector<std::string> got;
  for (const auto& w : code) got.push_back(w.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"111000", "100110", "010101", "001011"}));
}

TEST(Skeleton, LexicodeMatchesIntegerScan) {
  for (std::size_t n = 2; n <= 11; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t d : {2u, 4u, 6u}) {
        const auto code = constant_weight_lexicode(n, k, d);
        const auto ref = oracle::lexicode(n, k, d);
        ASSERT_EQ(code.size(), ref.size()) << n << ' ' << k << ' ' << d;
        for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_EQ(code[i].mask(), ref[i]);
      }
}

TEST(Skeleton, LexicodeInvariants) {
  for (std::size_t n = 4; n <= 10; ++n) {
    const auto code = constant_weight_lexicode(n, 3, 4);
    EXPECT_EQ(code.front().to_string(), std::string(3, '1') + std::string(n - 3, '0'));
    for (std::size_t i = 0; i < code.size(); ++i) {
      EXPECT_EQ(code[i].weight(), 3u);
      if (i) EXPECT_GT(code[i - 1], code[i]);
      for (std::size_t j = 0; j < i; ++j) EXPECT_GE(hamming_distance(code[i], code[j]), 4u);
    }
    // Maximality: every weight-3 word is within distance 2 of some kept word.
    for (const auto& w : constant_weight_vectors(n, 3)) {
      bool close = false;
      for (const auto& c : code) close = close || hamming_distance(w, c) < 4;
      EXPECT_TRUE(close) << w.to_string();
    }
  }
}

TEST(Skeleton, PredicateSeesKeptWords) {
  std::size_t calls = 0;
  const auto all = lexicode_with_predicate(4, 2, [&](const IdentifyingVector&, std::span<const IdentifyingVector> kept) {
    EXPECT_EQ(kept.size(), calls);
    ++calls;
    return true;
  });
  EXPECT_EQ(all.size(), 6u);
}
