#pragma once

// Multilevel (echelon-Ferrers) constructions of constant dimension codes.
//
// classic:  skeleton = constant-weight lexicode with d_H >= 2 delta; every
//           skeleton word's Ferrers diagram is filled with a bound-attaining
//           Ferrers diagram code.
// improved: the same greedy scan, but a word w may sit at d_H = 2 delta - 2
//           from a kept word u when both have their first one in the same
//           column, both carry pending dots in the top row, and the values
//           pinned on their shared pending columns differ.  Then the first
//           rows of any U, V from the two cells are independent beyond the
//           pivot structure and rank [U; V] >= k + delta.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subspace_codec/ferrers.hpp"
#include "subspace_codec/grassmann.hpp"
#include "subspace_codec/rank_metric.hpp"
#include "subspace_codec/skeleton.hpp"

namespace subspace_codec {

enum class Method { classic, improved };

inline std::string to_string(Method m) { return m == Method::classic ? "classic" : "improved"; }

inline Method parse_method(const std::string& s) {
  if (s == "classic") return Method::classic;
  if (s == "improved") return Method::improved;
  throw std::invalid_argument("unknown method: " + s);
}

/// Values pinned on the leading top-row dots: columns[i] is the absolute
/// matrix column (first pivot + 1 + i).
struct PendingFix {
  std::vector<std::size_t> columns;
  std::vector<Element> values;

  friend bool operator==(const PendingFix&, const PendingFix&) = default;
};

struct CodeComponent {
  IdentifyingVector vector;
  std::optional<PendingFix> pending;
  RankMetricCode ferrers_code;

  std::size_t dimension() const { return ferrers_code.dimension(); }

  /// Every echelon form of this component, as k x n matrices.
  template <class Fn>
  void for_each_matrix(Fn&& fn) const {
    ferrers_code.for_each_codeword([&](const Matrix& fill) { fn(embed(vector, fill)); });
  }
};

/// Σ multiplicity · q^exponent
class SizePolynomial {
 public:
  using Terms = std::map<std::size_t, std::size_t, std::greater<>>;

  SizePolynomial() = default;
  explicit SizePolynomial(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
  }

  void add_term(std::size_t exponent, std::size_t multiplicity = 1) {
    if (multiplicity) terms_[exponent] += multiplicity;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt evaluate(std::uint64_t q) const {
    BigInt sum = 0;
    for (const auto& [e, m] : terms_) sum += BigInt(m) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
    return sum;
  }

  /// Descending exponents, e.g. "q^8+q^4+q^3+2q^2+q+1"; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, m] : terms_) {
      if (!first) os << '+';
      first = false;
      if (e == 0) {
        os << m;
        continue;
      }
      if (m != 1) os << m;
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

  /// Inverse of to_string.
  static SizePolynomial parse(const std::string& text) {
    SizePolynomial p;
    if (text == "0") return p;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('+', pos);
      if (end == std::string::npos) end = text.size();
      const std::string term = text.substr(pos, end - pos);
      const auto qpos = term.find('q');
      std::size_t mult = 1, exp = 0;
      if (qpos == std::string::npos) {
        mult = std::stoul(term);
      } else {
        if (qpos > 0) mult = std::stoul(term.substr(0, qpos));
        exp = 1;
        if (qpos + 1 < term.size()) {
          if (term[qpos + 1] != '^') throw std::invalid_argument("malformed term: " + term);
          exp = std::stoul(term.substr(qpos + 2));
        }
      }
      p.add_term(exp, mult);
      pos = end + 1;
    }
    return p;
  }

  friend bool operator==(const SizePolynomial&, const SizePolynomial&) = default;

 private:
  Terms terms_;
};

struct SubspaceCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 1;
  FieldPtr field;
  Method method = Method::classic;
  std::vector<CodeComponent> components;

  std::size_t min_distance() const { return 2 * delta; }

  SizePolynomial size_polynomial() const {
    SizePolynomial p;
    for (const auto& c : components) p.add_term(c.dimension());
    return p;
  }

  BigInt cardinality() const { return size_polynomial().evaluate(field->order()); }

  std::vector<IdentifyingVector> skeleton() const {
    std::vector<IdentifyingVector> out;
    for (const auto& c : components) out.push_back(c.vector);
    return out;
  }

  /// All codewords, component by component.
  std::vector<Subspace> materialize(std::uint64_t guard = 10'000'000) const {
    if (cardinality() > guard) throw std::length_error("code too large to materialize");
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (const auto& c : components)
      c.for_each_matrix([&](const Matrix& m) { out.push_back(Subspace::from_rref(m)); });
    return out;
  }
};

struct ImprovedOptions {
  /// Cap on the pinned tuple width per word; 0 = use every pending dot.
  std::size_t max_pending_width = 0;
};

inline void check_parameters(std::size_t n, std::size_t k, std::size_t delta, const FieldPtr& field) {
  if (!field) throw std::invalid_argument("missing field");
  if (k == 0 || 2 * k > n) throw std::invalid_argument("need 1 <= k and 2k <= n");
  if (n > IdentifyingVector::kMaxLength) throw std::invalid_argument("n too large");
  if (delta == 0 || delta > k) throw std::invalid_argument("need 1 <= delta <= k");
}

/// Builds one component; `pending_values` pins the leading top-row dots.
inline CodeComponent make_component(const IdentifyingVector& v, std::size_t delta, const FieldPtr& field,
                                    std::optional<std::vector<Element>> pending_values = std::nullopt) {
  CodeComponent c;
  c.vector = v;
  std::vector<Element> fixed;
  if (pending_values) {
    const auto first = v.first_one();
    PendingFix fix;
    for (std::size_t i = 0; i < pending_values->size(); ++i) fix.columns.push_back(first + 1 + i);
    fix.values = *pending_values;
    fixed = fix.values;
    c.pending = std::move(fix);
  }
  c.ferrers_code = build_ferrers_code(diagram_from_vector(v), delta, field, std::move(fixed));
  return c;
}

inline SubspaceCode construct_classic(std::size_t n, std::size_t k, std::size_t delta, const FieldPtr& field) {
  check_parameters(n, k, delta, field);
  SubspaceCode code{n, k, delta, field, Method::classic, {}};
  for (const auto& v : constant_weight_lexicode(n, k, 2 * delta)) code.components.push_back(make_component(v, delta, field));
  return code;
}

namespace detail {

struct KeptWord {
  IdentifyingVector vector;
  std::vector<Element> tuple;  // empty: takes no part in the relaxation
};

inline bool prefixes_equal(const std::vector<Element>& a, const std::vector<Element>& b) {
  const std::size_t m = std::min(a.size(), b.size());
  return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m), b.begin());
}

// Lexicographically smallest tuple of the given width whose common prefix
// with every conflicting tuple differs somewhere.
inline std::optional<std::vector<Element>> smallest_free_tuple(std::size_t width, std::uint32_t q,
                                                               const std::vector<const std::vector<Element>*>& taken) {
  std::vector<Element> t(width, 0);
  std::function<bool(std::size_t, std::vector<const std::vector<Element>*>)> place =
      [&](std::size_t pos, std::vector<const std::vector<Element>*> alive) -> bool {
    if (alive.empty()) {
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(pos), t.end(), 0);
      return true;
    }
    if (pos == width) return false;
    for (Element x = 0; x < q; ++x) {
      t[pos] = x;
      std::vector<const std::vector<Element>*> still;
      bool blocked = false;
      for (const auto* c : alive) {
        if ((*c)[pos] != x) continue;
        if (std::min(c->size(), width) == pos + 1) {
          blocked = true;
          break;
        }
        still.push_back(c);
      }
      if (!blocked && place(pos + 1, std::move(still))) return true;
    }
    return false;
  };
  if (width == 0) return std::nullopt;
  if (place(0, taken)) return t;
  return std::nullopt;
}

}  // namespace detail

/// Number of leading top-row dots a word may pin in the improved scan: its
/// pending count, except that single-row diagrams do not take part.
inline std::size_t relaxable_width(const IdentifyingVector& v, std::size_t delta, const ImprovedOptions& opt) {
  const auto rep = pending_analysis(v, delta);
  if (rep.single_row) return 0;
  return opt.max_pending_width ? std::min(rep.count, opt.max_pending_width) : rep.count;
}

inline SubspaceCode construct_improved(std::size_t n, std::size_t k, std::size_t delta, const FieldPtr& field,
                                       const ImprovedOptions& options = {}) {
  check_parameters(n, k, delta, field);
  const std::size_t far = 2 * delta;
  const std::size_t near = 2 * delta - 2;
  std::vector<detail::KeptWord> kept;

  for (const auto& w : constant_weight_vectors(n, k)) {
    const std::size_t width = relaxable_width(w, delta, options);
    std::vector<const std::vector<Element>*> conflicts;
    bool ok = true;
    for (const auto& u : kept) {
      const std::size_t d = hamming_distance(w, u.vector);
      if (d >= far) continue;
      if (d == near && width > 0 && !u.tuple.empty() && w.first_one() == u.vector.first_one()) {
        conflicts.push_back(&u.tuple);
        continue;
      }
      ok = false;
      break;
    }
    if (!ok) continue;
    std::vector<Element> tuple;
    if (width > 0) {
      auto t = detail::smallest_free_tuple(width, field->order(), conflicts);
      if (!t) continue;
      tuple = std::move(*t);
    }
    kept.push_back({w, std::move(tuple)});
  }

  SubspaceCode code{n, k, delta, field, Method::improved, {}};
  for (auto& kw : kept) {
    std::optional<std::vector<Element>> pin;
    if (!kw.tuple.empty()) pin = kw.tuple;
    code.components.push_back(make_component(kw.vector, delta, field, std::move(pin)));
  }
  return code;
}

inline SubspaceCode construct(Method m, std::size_t n, std::size_t k, std::size_t delta, const FieldPtr& field,
                              const ImprovedOptions& options = {}) {
  return m == Method::classic ? construct_classic(n, k, delta, field) : construct_improved(n, k, delta, field, options);
}

}  // namespace subspace_codec
