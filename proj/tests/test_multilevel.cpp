#include <gtest/gtest.h>

#include "subspace_codec/code_file.hpp"
#include "subspace_codec/multilevel.hpp"

using namespace subspace_codec;

namespace {

std::vector<std::string> skeleton_strings(const SubspaceCode& c) {
  std::vector<std::string> out;
  for (const auto& v : c.skeleton()) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST(SizePolynomial, FormatParseEvaluate) {
  SizePolynomial p;
  for (auto e : {8u, 4u, 3u, 2u, 2u, 1u, 0u}) p.add_term(e);
  EXPECT_EQ(p.to_string(), "q^8+q^4+q^3+2q^2+q+1");
  EXPECT_EQ(p.evaluate(2), 291);
  EXPECT_EQ(p.evaluate(3), 6691);
  EXPECT_EQ(SizePolynomial::parse(p.to_string()), p);
  EXPECT_EQ(SizePolynomial().to_string(), "0");
  EXPECT_EQ(SizePolynomial::parse("0"), SizePolynomial());
  EXPECT_EQ(SizePolynomial::parse("3q^12+2q+7").evaluate(2), 3 * 4096 + 4 + 7);
  EXPECT_THROW(SizePolynomial::parse("q*2"), std::invalid_argument);
}

TEST(Multilevel, ClassicSixThree) {
  const auto code = construct_classic(6, 3, 2, GaloisField::make(2));
  EXPECT_EQ(skeleton_strings(code), (std::vector<std::string>{"111000", "100110", "010101", "001011"}));
  EXPECT_EQ(code.size_polynomial().to_string(), "q^6+q^2+q+1");
  EXPECT_EQ(code.cardinality(), 71);
}

TEST(Multilevel, ImprovedSevenThreeWorkedExample) {
  const auto code = construct_improved(7, 3, 2, GaloisField::make(2));
  EXPECT_EQ(skeleton_strings(code), (std::vector<std::string>{"1110000", "1001100", "1001010", "1000101", "0101001",
                                                              "0100110", "0010011"}));
  EXPECT_EQ(code.size_polynomial().to_string(), "q^8+q^4+q^3+2q^2+q+1");
  EXPECT_EQ(code.cardinality(), 291);
  ASSERT_TRUE(code.components[1].pending && code.components[2].pending && code.components[3].pending);
  EXPECT_EQ(code.components[1].pending->values.front(), 0u);
  EXPECT_EQ(code.components[2].pending->values.front(), 1u);
  EXPECT_EQ(code.components[3].pending->values.front(), 1u);
  EXPECT_EQ(code.components[1].pending->columns, (std::vector<std::size_t>{1}));
  EXPECT_FALSE(code.components[0].pending);
}

TEST(Multilevel, TablePolynomialsAtQ2) {
  const auto f = GaloisField::make(2);
  EXPECT_EQ(construct_classic(8, 3, 2, f).size_polynomial().to_string(), "q^10+q^6+q^5+2q^4+q^3+q^2");
  EXPECT_EQ(construct_classic(9, 3, 2, f).size_polynomial().to_string(), "q^12+q^8+q^7+2q^6+q^5+q^4+1");
  EXPECT_EQ(construct_improved(8, 3, 2, f).size_polynomial().to_string(), "q^10+q^6+q^5+2q^4+2q^3+2q^2+q+1");
  EXPECT_EQ(construct_improved(9, 3, 2, f).size_polynomial().to_string(),
            "q^12+q^8+q^7+2q^6+2q^5+3q^4+2q^3+2q^2+q+1");
  EXPECT_EQ(construct_improved(8, 3, 2, f).cardinality(), 1179);
  EXPECT_EQ(construct_improved(9, 3, 2, f).cardinality(), 4747);
}

TEST(Multilevel, PolynomialsDoNotDependOnQ) {
  for (std::size_t n = 7; n <= 9; ++n) {
    const auto p2 = construct_improved(n, 3, 2, GaloisField::make(2)).size_polynomial();
    EXPECT_EQ(construct_improved(n, 3, 2, GaloisField::make(3)).size_polynomial(), p2);
    EXPECT_EQ(construct_improved(n, 3, 2, GaloisField::make(4)).size_polynomial(), p2);
  }
  EXPECT_EQ(construct_improved(7, 3, 2, GaloisField::make(3)).cardinality(), 6691);
}

TEST(Multilevel, FirstComponentIsTheFullRectangle) {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 4; n <= 10; ++n)
      for (std::size_t k = 1; 2 * k <= n && k <= 4; ++k)
        for (std::size_t delta = 1; delta <= k; ++delta)
          for (auto m : {Method::classic, Method::improved}) {
            const auto code = construct(m, n, k, delta, GaloisField::make(q));
            EXPECT_EQ(code.components.front().dimension(), (n - k) * (k - delta + 1));
          }
}

TEST(Multilevel, ImprovedNeverSmaller) {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 6; n <= 9; ++n)
      for (std::size_t k = 2; k <= 4 && 2 * k <= n; ++k)
        for (std::size_t delta = 2; delta <= k; ++delta) {
          const auto f = GaloisField::make(q);
          EXPECT_GE(construct_improved(n, k, delta, f).cardinality(), construct_classic(n, k, delta, f).cardinality())
              << n << ' ' << k << ' ' << delta;
        }
}

TEST(Multilevel, DeltaEqualsKMatchesClassic) {
  const auto f = GaloisField::make(2);
  for (std::size_t n : {4u, 5u, 6u}) {
    const auto a = construct_improved(n, 2, 2, f), b = construct_classic(n, 2, 2, f);
    EXPECT_EQ(skeleton_strings(a), skeleton_strings(b));
    for (std::size_t i = 0; i < a.components.size(); ++i) {
      EXPECT_FALSE(a.components[i].pending);
      EXPECT_EQ(a.components[i].dimension(), b.components[i].dimension());
    }
  }
}

TEST(Multilevel, SingleDotWidthOption) {
  const auto f = GaloisField::make(2);
  const auto code = construct_improved(8, 3, 2, f, ImprovedOptions{1});
  for (const auto& c : code.components)
    if (c.pending) EXPECT_EQ(c.pending->values.size(), 1u);
  EXPECT_GE(code.cardinality(), construct_classic(8, 3, 2, f).cardinality());
}

TEST(Multilevel, Deterministic) {
  const auto f = GaloisField::make(3);
  const auto a = to_json(construct_improved(8, 3, 2, f)).dump();
  const auto b = to_json(construct_improved(8, 3, 2, f)).dump();
  EXPECT_EQ(a, b);
}

TEST(Multilevel, MaterializedWordsLieInTheirCells) {
  const auto code = construct_improved(7, 3, 2, GaloisField::make(2));
  const auto words = code.materialize();
  ASSERT_EQ(words.size(), 291u);
  std::size_t i = 0;
  for (const auto& c : code.components)
    for (std::size_t j = 0; j < static_cast<std::size_t>(c.ferrers_code.size()); ++j, ++i) {
      EXPECT_EQ(identifying_vector(words[i].basis()), c.vector);
      if (c.pending)
        for (std::size_t t = 0; t < c.pending->columns.size(); ++t)
          EXPECT_EQ(words[i].basis()(0, c.pending->columns[t]), c.pending->values[t]);
    }
}

TEST(Multilevel, ParameterErrors) {
  const auto f = GaloisField::make(2);
  EXPECT_THROW(construct_classic(5, 3, 2, f), std::invalid_argument);
  EXPECT_THROW(construct_classic(6, 3, 4, f), std::invalid_argument);
  EXPECT_THROW(construct_classic(6, 3, 0, f), std::invalid_argument);
  EXPECT_THROW(construct_classic(6, 0, 1, f), std::invalid_argument);
  EXPECT_THROW(construct_classic(6, 3, 2, nullptr), std::invalid_argument);
  EXPECT_THROW(parse_method("fancy"), std::invalid_argument);
  EXPECT_THROW(construct_classic(40, 20, 2, f), std::length_error);
  EXPECT_THROW(construct_classic(12, 4, 2, f).materialize(1000), std::length_error);
}

TEST(CodeFile, RoundTrip) {
  for (std::uint32_t q : {2u, 4u})
    for (auto m : {Method::classic, Method::improved}) {
      const auto code = construct(m, 8, 3, 2, GaloisField::make(q));
      const auto j = to_json(code);
      const auto back = from_json(j);
      EXPECT_EQ(to_json(back.code).dump(), j.dump());
      EXPECT_EQ(back.code.size_polynomial(), code.size_polynomial());
      EXPECT_FALSE(back.codewords);
    }
}

TEST(CodeFile, MaterializedRoundTrip) {
  const auto code = construct_classic(6, 3, 2, GaloisField::make(2));
  const auto back = from_json(to_json(code, true));
  ASSERT_TRUE(back.codewords);
  EXPECT_EQ(*back.codewords, code.materialize());
}

TEST(CodeFile, Schema) {
  const auto j = to_json(construct_improved(7, 3, 2, GaloisField::make(2)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "k", "q", "p", "r", "modulus", "min_distance", "method", "components"}));
  EXPECT_EQ(j["min_distance"], 4);
  EXPECT_EQ(j["components"][1]["pending"]["column"], 1);
  EXPECT_EQ(j["components"][1]["pending"]["value"], 0);
  EXPECT_TRUE(j["components"][0]["pending"].is_null());
}

TEST(CodeFile, RejectsBadInput) {
  auto j = to_json(construct_improved(7, 3, 2, GaloisField::make(2)));
  auto bad = j;
  bad["q"] = 3;
  EXPECT_THROW(from_json(bad), std::invalid_argument);
  bad = j;
  bad["min_distance"] = 3;
  EXPECT_THROW(from_json(bad), std::invalid_argument);
  bad = j;
  bad["components"][1]["identifying_vector"] = "10011";
  EXPECT_THROW(from_json(bad), std::invalid_argument);
  bad = j;
  bad["components"][1]["pending"]["column"] = 4;
  EXPECT_THROW(from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("components");
  EXPECT_THROW(from_json(bad), nlohmann::json::exception);
}
