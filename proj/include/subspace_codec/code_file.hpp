#pragma once

// JSON code file.
//
// {
//   "n": 7, "k": 3, "q": 2, "p": 2, "r": 1, "modulus": [0, 1],
//   "min_distance": 4, "method": "improved",
//   "components": [
//     {"identifying_vector": "1001100", "dimension": 4,
//      "pending": {"column": 1, "value": 0, "columns": [1], "values": [0]}},
//     {"identifying_vector": "1110000", "dimension": 8, "pending": null}, ...
//   ],
//   "codewords": [[[1,0,0,...], ...], ...]        // only with materialize
// }
//
// Columns are 0-based.  "column"/"value" describe the first pinned dot;
// "columns"/"values" list all of them.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "subspace_codec/multilevel.hpp"

namespace subspace_codec {

using Json = nlohmann::ordered_json;

inline Json to_json(const SubspaceCode& code, bool materialize = false) {
  const auto& spec = code.field->spec();
  Json j;
  j["n"] = code.n;
  j["k"] = code.k;
  j["q"] = spec.q;
  j["p"] = spec.p;
  j["r"] = spec.r;
  j["modulus"] = spec.modulus;
  j["min_distance"] = code.min_distance();
  j["method"] = to_string(code.method);
  j["components"] = Json::array();
  for (const auto& c : code.components) {
    Json jc;
    jc["identifying_vector"] = c.vector.to_string();
    jc["dimension"] = c.dimension();
    if (c.pending) {
      jc["pending"] = {{"column", c.pending->columns.front()},
                       {"value", c.pending->values.front()},
                       {"columns", c.pending->columns},
                       {"values", c.pending->values}};
    } else {
      jc["pending"] = nullptr;
    }
    j["components"].push_back(std::move(jc));
  }
  if (materialize) {
    Json words = Json::array();
    for (const auto& c : code.components)
      c.for_each_matrix([&](const Matrix& m) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<Element>(m.row(r).begin(), m.row(r).end()));
        words.push_back(std::move(rows));
      });
    j["codewords"] = std::move(words);
  }
  return j;
}

struct CodeFile {
  SubspaceCode code;
  /// Dimensions as recorded in the file.
  std::vector<std::size_t> recorded_dimensions;
  std::optional<std::vector<Subspace>> codewords;
};

/// Parses a code file and rebuilds every component from its identifying
/// vector and pinned values.
inline CodeFile from_json(const Json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto r = j.at("r").get<std::uint32_t>();
  const auto q = j.at("q").get<std::uint32_t>();
  const auto field = GaloisField::make(p, r, j.at("modulus").get<std::vector<std::uint32_t>>());
  if (field->order() != q) throw std::invalid_argument("q does not match p^r");

  CodeFile out;
  auto& code = out.code;
  code.n = j.at("n").get<std::size_t>();
  code.k = j.at("k").get<std::size_t>();
  const auto dist = j.at("min_distance").get<std::size_t>();
  if (dist == 0 || dist % 2) throw std::invalid_argument("min_distance must be a positive even number");
  code.delta = dist / 2;
  code.field = field;
  code.method = parse_method(j.at("method").get<std::string>());
  check_parameters(code.n, code.k, code.delta, field);

  for (const auto& jc : j.at("components")) {
    const auto v = IdentifyingVector::parse(jc.at("identifying_vector").get<std::string>());
    if (v.length() != code.n || v.weight() != code.k) throw std::invalid_argument("identifying vector has wrong shape");
    std::optional<std::vector<Element>> pin;
    const auto& jp = jc.at("pending");
    if (!jp.is_null()) {
      std::vector<Element> values =
          jp.contains("values") ? jp.at("values").get<std::vector<Element>>() : std::vector<Element>{jp.at("value").get<Element>()};
      if (jp.contains("column") && jp.at("column").get<std::size_t>() != v.first_one() + 1)
        throw std::invalid_argument("pending column must follow the first pivot");
      pin = std::move(values);
    }
    code.components.push_back(make_component(v, code.delta, field, std::move(pin)));
    out.recorded_dimensions.push_back(jc.at("dimension").get<std::size_t>());
  }

  if (j.contains("codewords")) {
    std::vector<Subspace> words;
    for (const auto& jw : j.at("codewords")) {
      Matrix m(field, code.k, code.n);
      if (jw.size() != code.k) throw std::invalid_argument("codeword has wrong number of rows");
      for (std::size_t r = 0; r < code.k; ++r) {
        const auto row = jw.at(r).get<std::vector<Element>>();
        if (row.size() != code.n) throw std::invalid_argument("codeword row has wrong length");
        for (std::size_t c = 0; c < code.n; ++c) m.set(r, c, row[c]);
      }
      auto s = Subspace::row_space(m);
      if (s.dim() != code.k) throw std::invalid_argument("codeword does not have full rank");
      words.push_back(std::move(s));
    }
    out.codewords = std::move(words);
  }
  return out;
}

}  // namespace subspace_codec
