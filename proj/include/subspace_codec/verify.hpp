#pragma once

// Exhaustive certification of subspace codes.
//
// Pairwise subspace distances are reduced by minimum over the upper triangle
// of the codeword list.  Worker t takes rows i = t, t + jobs, ...; each pair
// costs one rank of a 2k x n stack (bit-packed XOR elimination for GF(2)).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "subspace_codec/multilevel.hpp"

namespace subspace_codec {

struct VerifyOptions {
  std::size_t jobs = 1;
  /// Scan every pair even after a pair below the designed distance is seen.
  bool full_scan = false;
  std::size_t max_codewords = 100'000;
};

struct VerifyReport {
  std::size_t codewords = 0;
  std::optional<BigInt> expected_size;
  bool size_matches = true;
  bool distinct = true;
  std::optional<std::size_t> min_distance;  // nullopt for fewer than two codewords
  std::size_t designed_distance = 0;
  std::uint64_t pairs_checked = 0;
  bool early_exit = false;
  bool pass = false;
  double seconds = 0;
  std::size_t jobs = 1;
};

namespace detail {

// Codewords flattened for the pair loop.
class PairKernel {
 public:
  PairKernel(std::span<const Subspace> words) : count_(words.size()) {
    if (words.empty()) return;
    field_ = words.front().field();
    k_ = words.front().dim();
    n_ = words.front().ambient();
    for (const auto& w : words)
      if (w.dim() != k_ || w.ambient() != n_) throw std::invalid_argument("codewords must share dimension and ambient space");
    bits_ = field_->order() == 2 && n_ <= 64 && k_ <= 32;
    if (bits_) {
      packed_.reserve(count_ * k_);
      for (const auto& w : words) {
        auto rows = gf2::pack(w.basis());
        packed_.insert(packed_.end(), rows.begin(), rows.end());
      }
    } else {
      entries_.reserve(count_ * k_ * n_);
      pivots_.reserve(count_ * k_);
      for (const auto& w : words) {
        entries_.insert(entries_.end(), w.basis().entries().begin(), w.basis().entries().end());
        pivots_.insert(pivots_.end(), w.pivots().begin(), w.pivots().end());
      }
    }
  }

  std::size_t size() const { return count_; }

  /// Subspace distance between codewords i and j.
  std::size_t distance(std::size_t i, std::size_t j, std::vector<Element>& scratch) const {
    if (bits_) {
      gf2::BitRow rows[64];
      std::copy_n(packed_.data() + i * k_, k_, rows);
      std::copy_n(packed_.data() + j * k_, k_, rows + k_);
      return 2 * (gf2::rank_in_place(std::span<gf2::BitRow>(rows, 2 * k_)) - k_);
    }
    // Clear U's pivot columns out of V's rows; what is left spans (U + V) / U.
    const auto& f = *field_;
    const Element* u = entries_.data() + i * k_ * n_;
    const std::size_t* piv = pivots_.data() + i * k_;
    scratch.assign(entries_.begin() + static_cast<std::ptrdiff_t>(j * k_ * n_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((j + 1) * k_ * n_));
    for (std::size_t r = 0; r < k_; ++r) {
      Element* row = scratch.data() + r * n_;
      for (std::size_t s = 0; s < k_; ++s) {
        const Element factor = row[piv[s]];
        if (factor == 0) continue;
        const Element* urow = u + s * n_;
        for (std::size_t c = piv[s]; c < n_; ++c)
          if (urow[c]) row[c] = f.sub(row[c], f.mul(factor, urow[c]));
      }
    }
    return 2 * small_rank(scratch.data(), k_, n_);
  }

 private:
  std::size_t small_rank(Element* m, std::size_t rows, std::size_t cols) const {
    const auto& f = *field_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = rank;
      while (p < rows && m[p * cols + c] == 0) ++p;
      if (p == rows) continue;
      if (p != rank) std::swap_ranges(m + p * cols, m + (p + 1) * cols, m + rank * cols);
      const Element inv = f.inv(m[rank * cols + c]);
      for (std::size_t r = rank + 1; r < rows; ++r) {
        const Element lead = m[r * cols + c];
        if (lead == 0) continue;
        const Element factor = f.mul(lead, inv);
        for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = f.sub(m[r * cols + j], f.mul(factor, m[rank * cols + j]));
      }
      ++rank;
    }
    return rank;
  }

  std::size_t count_ = 0;
  FieldPtr field_;
  std::size_t k_ = 0, n_ = 0;
  bool bits_ = false;
  std::vector<gf2::BitRow> packed_;
  std::vector<Element> entries_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

/// Minimum pairwise subspace distance, cardinality and distinctness of an
/// explicit codeword list.
inline VerifyReport verify_codewords(std::span<const Subspace> words, std::size_t designed_distance,
                                     std::optional<BigInt> expected_size = std::nullopt, const VerifyOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (words.size() > opt.max_codewords) throw std::length_error("too many codewords for exhaustive verification");

  VerifyReport rep;
  rep.codewords = words.size();
  rep.designed_distance = designed_distance;
  rep.jobs = std::max<std::size_t>(1, opt.jobs);
  rep.expected_size = expected_size;
  if (expected_size) rep.size_matches = BigInt(words.size()) == *expected_size;

  {
    std::vector<const Subspace*> sorted;
    for (const auto& w : words) sorted.push_back(&w);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (*sorted[i] == *sorted[i - 1]) rep.distinct = false;
  }

  const detail::PairKernel kernel(words);
  std::atomic<bool> stop{false};
  std::vector<std::size_t> minima(rep.jobs, SIZE_MAX);
  std::vector<std::uint64_t> pairs(rep.jobs, 0);

  auto work = [&](std::size_t t) {
    std::vector<Element> scratch;
    std::size_t best = SIZE_MAX;
    std::uint64_t count = 0;
    for (std::size_t i = t; i < kernel.size(); i += rep.jobs) {
      if (stop.load(std::memory_order_relaxed)) break;
      for (std::size_t j = i + 1; j < kernel.size(); ++j) {
        const std::size_t d = kernel.distance(i, j, scratch);
        ++count;
        if (d < best) best = d;
        if (d < designed_distance && !opt.full_scan) {
          stop.store(true, std::memory_order_relaxed);
          break;
        }
      }
    }
    minima[t] = best;
    pairs[t] = count;
  };

  if (rep.jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < rep.jobs; ++t) pool.emplace_back(work, t);
  }

  const std::size_t best = *std::min_element(minima.begin(), minima.end());
  for (auto p : pairs) rep.pairs_checked += p;
  if (words.size() >= 2) rep.min_distance = best;
  rep.early_exit = stop.load();
  rep.pass = rep.size_matches && rep.distinct && (!rep.min_distance || *rep.min_distance >= designed_distance);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline VerifyReport verify_code(const SubspaceCode& code, const VerifyOptions& opt = {}) {
  if (code.cardinality() > opt.max_codewords) throw std::length_error("code too large for exhaustive verification");
  const auto words = code.materialize();
  return verify_codewords(words, code.min_distance(), code.cardinality(), opt);
}

inline std::string describe(const VerifyReport& r) {
  std::ostringstream os;
  os << "codewords: " << r.codewords << '\n';
  if (r.expected_size) os << "expected size: " << *r.expected_size << (r.size_matches ? " (match)" : " (MISMATCH)") << '\n';
  os << "distinct: " << (r.distinct ? "yes" : "NO") << '\n';
  os << "pairs checked: " << r.pairs_checked << (r.early_exit ? " (stopped early)" : "") << '\n';
  os << "min subspace distance: ";
  if (r.min_distance)
    os << *r.min_distance;
  else
    os << "n/a";
  os << " (designed " << r.designed_distance << ")\n";
  os << "workers: " << r.jobs << '\n';
  os << "time: " << r.seconds << " s\n";
  os << "result: " << (r.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Cross-checks of the structural facts the constructions rely on.

/// Members of the cell of v with the leading top-row dots pinned to `fixed`:
/// all of them when there are at most `limit`, otherwise `limit` random ones.
inline std::vector<Matrix> cell_members(const IdentifyingVector& v, const FieldPtr& field, std::size_t limit,
                                        const std::vector<Element>& fixed = {}, std::uint64_t seed = 1) {
  const auto diagram = diagram_from_vector(v);
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t r = 0; r < diagram.row_count(); ++r)
    for (std::size_t c = diagram.width() - diagram.row_length(r); c < diagram.width(); ++c)
      if (!(r == 0 && c < fixed.size())) free.emplace_back(r, c);

  Matrix base(field, diagram.row_count(), diagram.width());
  for (std::size_t c = 0; c < fixed.size(); ++c) base(0, c) = fixed.at(c);

  const std::uint32_t q = field->order();
  BigInt total = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(free.size()));
  std::vector<Matrix> out;
  if (total <= limit) {
    std::vector<Element> digits(free.size(), 0);
    while (true) {
      Matrix fill = base;
      for (std::size_t j = 0; j < free.size(); ++j) fill(free[j].first, free[j].second) = digits[j];
      out.push_back(embed(v, fill));
      std::size_t j = 0;
      while (j < digits.size() && ++digits[j] == q) digits[j++] = 0;
      if (j == digits.size()) break;
    }
  } else {
    std::mt19937_64 rng(seed ^ v.mask());
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (std::size_t s = 0; s < limit; ++s) {
      Matrix fill = base;
      for (auto [r, c] : free) fill(r, c) = pick(rng);
      out.push_back(embed(v, fill));
    }
  }
  return out;
}

struct CellDistanceReport {
  std::uint64_t same_cell_pairs = 0;
  std::uint64_t cross_cell_pairs = 0;
  std::uint64_t pending_pairs = 0;
  std::size_t min_pending_rank = SIZE_MAX;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

namespace detail {

inline std::string show_pair(const Matrix& u, const Matrix& v) {
  std::ostringstream os;
  os << "U=\n" << to_text(u) << "V=\n" << to_text(v);
  return os.str();
}

}  // namespace detail

/// Within one cell: d_S = 2 d_R of the diagram parts.
inline void check_same_cell(const IdentifyingVector& v, const FieldPtr& field, std::size_t limit,
                            CellDistanceReport& rep) {
  const auto members = cell_members(v, field, limit);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto ds = subspace_distance(Subspace::from_rref(members[i]), Subspace::from_rref(members[j]));
      const auto dr = rank_distance(extract(v, members[i]), extract(v, members[j]));
      ++rep.same_cell_pairs;
      if (ds != 2 * dr)
        rep.counterexamples.push_back("same-cell " + v.to_string() + ": d_S=" + std::to_string(ds) +
                                      " d_R=" + std::to_string(dr) + "\n" + detail::show_pair(members[i], members[j]));
    }
}

/// Across two cells: d_S >= d_H of the identifying vectors.
inline void check_cross_cell(const IdentifyingVector& a, const IdentifyingVector& b, const FieldPtr& field,
                             std::size_t limit, CellDistanceReport& rep) {
  const auto ma = cell_members(a, field, limit), mb = cell_members(b, field, limit);
  const auto dh = hamming_distance(a, b);
  for (const auto& u : ma)
    for (const auto& w : mb) {
      const auto ds = 2 * rank_of_stack(u, w) - 2 * u.rows();
      ++rep.cross_cell_pairs;
      if (ds < dh)
        rep.counterexamples.push_back("cross-cell " + a.to_string() + "/" + b.to_string() + ": d_S=" +
                                      std::to_string(ds) + " < d_H=" + std::to_string(dh) + "\n" +
                                      detail::show_pair(u, w));
    }
}

/// Two cells whose leading top-row dots are pinned to different tuples:
/// rank [U; V] >= k + delta for every member pair.
inline void check_pending_pair(const IdentifyingVector& a, const std::vector<Element>& mu, const IdentifyingVector& b,
                               const std::vector<Element>& nu, std::size_t delta, const FieldPtr& field,
                               std::size_t limit, CellDistanceReport& rep) {
  const auto ma = cell_members(a, field, limit, mu), mb = cell_members(b, field, limit, nu);
  const std::size_t k = a.weight();
  for (const auto& u : ma)
    for (const auto& w : mb) {
      const auto r = rank_of_stack(u, w);
      ++rep.pending_pairs;
      rep.min_pending_rank = std::min(rep.min_pending_rank, r);
      if (r < k + delta)
        rep.counterexamples.push_back("pending " + a.to_string() + "/" + b.to_string() + ": rank=" +
                                      std::to_string(r) + " < " + std::to_string(k + delta) + "\n" +
                                      detail::show_pair(u, w));
    }
}

/// Runs the same-cell identity on every cell of G(k, n), the d_H lower bound
/// on every pair of classic skeleton cells, and the pinned-pending rank bound
/// on every relaxed pair of the improved skeleton.  Cells with more than
/// `samples` members are sampled.
inline CellDistanceReport check_cell_distances(std::size_t n, std::size_t k, std::size_t delta, const FieldPtr& field,
                                             std::size_t samples) {
  CellDistanceReport rep;
  for (const auto& v : constant_weight_vectors(n, k)) check_same_cell(v, field, samples, rep);

  const auto classic = construct_classic(n, k, delta, field);
  for (std::size_t i = 0; i < classic.components.size(); ++i)
    for (std::size_t j = i + 1; j < classic.components.size(); ++j)
      check_cross_cell(classic.components[i].vector, classic.components[j].vector, field, samples, rep);

  const auto improved = construct_improved(n, k, delta, field);
  for (std::size_t i = 0; i < improved.components.size(); ++i)
    for (std::size_t j = i + 1; j < improved.components.size(); ++j) {
      const auto& a = improved.components[i];
      const auto& b = improved.components[j];
      if (!a.pending || !b.pending) continue;
      if (hamming_distance(a.vector, b.vector) != 2 * delta - 2) continue;
      check_pending_pair(a.vector, a.pending->values, b.vector, b.pending->values, delta, field, samples, rep);
    }
  return rep;
}

}  // namespace subspace_codec
