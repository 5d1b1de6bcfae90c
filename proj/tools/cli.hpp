#pragma once

// subspace-codec command line: lexicode, inspect, construct, size, verify, table.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "subspace_codec/subspace_codec.hpp"

namespace subspace_codec::cli {

inline std::size_t default_jobs() {
  if (const char* env = std::getenv("SUBSPACE_CODEC_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline Json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

inline Json report_json(const VerifyReport& r) {
  Json j;
  j["codewords"] = r.codewords;
  j["expected_size"] = r.expected_size ? big_to_json(*r.expected_size) : Json(nullptr);
  j["size_matches"] = r.size_matches;
  j["distinct"] = r.distinct;
  j["min_distance"] = r.min_distance ? Json(*r.min_distance) : Json(nullptr);
  j["designed_distance"] = r.designed_distance;
  j["pairs_checked"] = r.pairs_checked;
  j["early_exit"] = r.early_exit;
  j["jobs"] = r.jobs;
  j["pass"] = r.pass;
  return j;
}

inline std::size_t delta_from_dist(std::size_t dist) {
  if (dist == 0 || dist % 2) throw std::invalid_argument("--dist must be a positive even number");
  return dist / 2;
}

struct CodeArgs {
  std::size_t n = 0, k = 0, dist = 0;
  std::uint32_t q = 2;
  std::string method = "improved";
  std::size_t max_pending_width = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--n", n, "ambient dimension")->required();
    sub->add_option("--k", k, "subspace dimension")->required();
    sub->add_option("--q", q, "field order")->default_val(2);
    sub->add_option("--dist", dist, "minimum subspace distance 2*delta")->required();
    sub->add_option("--method", method, "classic or improved")->default_val("improved")->check(
        CLI::IsMember({"classic", "improved"}));
    sub->add_option("--max-pending-width", max_pending_width, "cap on pinned dots per word (0 = no cap)")
        ->default_val(0);
  }

  SubspaceCode build() const {
    const auto delta = delta_from_dist(dist);
    return construct(parse_method(method), n, k, delta, GaloisField::make(q), ImprovedOptions{max_pending_width});
  }
};

inline void print_inspect(std::ostream& out, const IdentifyingVector& v, std::size_t delta) {
  const auto f = diagram_from_vector(v);
  const auto z = zero_profile(v);
  const auto rep = pending_analysis(v, delta);
  out << "vector: " << v.to_string() << '\n';
  out << "zero profile:";
  for (std::size_t i = 0; i <= z.weight(); ++i) out << ' ' << z.z(i);
  out << '\n';
  out << "diagram rows: (";
  for (std::size_t r = 0; r < f.row_count(); ++r) out << (r ? "," : "") << f.row_length(r);
  out << ")\n";
  for (std::size_t r = 0; r < f.row_count(); ++r)
    out << std::string(f.width() - f.row_length(r), ' ') << std::string(f.row_length(r), '*') << '\n';
  out << "bound exponent: " << ferrers_bound(f, delta) << '\n';
  const auto cor = corollary_dimension(f, delta);
  out << "closed-form dimension: " << (cor ? std::to_string(*cor) : "n/a") << '\n';
  out << "p: " << rep.p_formula << '\n';
  out << "pending count: " << rep.count << '\n';
  out << "pending columns:";
  for (auto c : rep.columns) out << ' ' << c;
  out << '\n';
}

inline Json inspect_json(const IdentifyingVector& v, std::size_t delta) {
  const auto f = diagram_from_vector(v);
  const auto z = zero_profile(v);
  const auto rep = pending_analysis(v, delta);
  std::vector<std::size_t> zs;
  for (std::size_t i = 0; i <= z.weight(); ++i) zs.push_back(z.z(i));
  const auto cor = corollary_dimension(f, delta);
  Json j;
  j["vector"] = v.to_string();
  j["delta"] = delta;
  j["zero_profile"] = zs;
  j["rows"] = f.rows();
  j["bound_exponent"] = ferrers_bound(f, delta);
  j["closed_form_dimension"] = cor ? Json(*cor) : Json(nullptr);
  j["p"] = rep.p_formula;
  j["pending_count"] = rep.count;
  j["pending_columns"] = rep.columns;
  return j;
}

struct TableRow {
  std::size_t n;
  SizePolynomial poly;
  BigInt size;
  std::size_t first_dimension;
  std::optional<VerifyReport> report;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant dimension subspace codes from echelon-Ferrers constructions", "subspace-codec"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  auto* lex = app.add_subcommand("lexicode", "greedy constant-weight lexicode");
  std::size_t lex_n = 0, lex_k = 0, lex_d = 0;
  lex->add_option("--n", lex_n, "length")->required();
  lex->add_option("--k", lex_k, "weight")->required();
  lex->add_option("--d", lex_d, "minimum Hamming distance")->required();
  lex->add_flag("--json", json, "machine-readable output");

  auto* ins = app.add_subcommand("inspect", "Ferrers diagram and pending dots of an identifying vector");
  std::string ins_vector;
  std::size_t ins_delta = 2;
  ins->add_option("--vector", ins_vector, "bitstring")->required();
  ins->add_option("--delta", ins_delta, "minimum rank distance")->default_val(2);
  ins->add_flag("--json", json, "machine-readable output");

  auto* con = app.add_subcommand("construct", "build a code and write its JSON file");
  CodeArgs con_args;
  con_args.attach(con);
  std::string con_out;
  bool con_materialize = false;
  con->add_option("--out", con_out, "output file (stdout when omitted)");
  con->add_flag("--materialize", con_materialize, "include every codeword");

  auto* siz = app.add_subcommand("size", "size polynomial and its value");
  CodeArgs siz_args;
  siz_args.attach(siz);
  siz->add_flag("--json", json, "machine-readable output");

  auto* ver = app.add_subcommand("verify", "exhaustive check of a code file");
  std::string ver_in;
  std::size_t ver_jobs = default_jobs();
  bool ver_full = false;
  std::size_t ver_max = 100'000;
  ver->add_option("--in", ver_in, "code file")->required()->check(CLI::ExistingFile);
  ver->add_option("--jobs", ver_jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--full-scan", ver_full, "find the exact minimum instead of stopping at the first violation");
  ver->add_option("--max-codewords", ver_max, "refuse larger codes");
  ver->add_flag("--json", json, "machine-readable output");

  auto* tab = app.add_subcommand("table", "classic and improved size polynomials for n = 7..9");
  std::uint32_t tab_q = 2;
  std::size_t tab_k = 3, tab_dist = 4, tab_from = 7, tab_to = 9, tab_jobs = default_jobs();
  bool tab_verify = false;
  tab->add_option("--q", tab_q, "field order")->default_val(2);
  tab->add_option("--k", tab_k, "subspace dimension")->default_val(3);
  tab->add_option("--dist", tab_dist, "minimum subspace distance")->default_val(4);
  tab->add_option("--from", tab_from, "smallest n")->default_val(7);
  tab->add_option("--to", tab_to, "largest n")->default_val(9);
  tab->add_flag("--verify", tab_verify, "exhaustively verify every improved code");
  tab->add_option("--jobs", tab_jobs, "worker threads for --verify")->check(CLI::PositiveNumber);
  tab->add_flag("--json", json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code;
  }

  try {
    if (*lex) {
      const auto words = constant_weight_lexicode(lex_n, lex_k, lex_d);
      if (json) {
        Json j = Json::array();
        for (const auto& w : words) j.push_back(w.to_string());
        out << j.dump(2) << '\n';
      } else {
        for (const auto& w : words) out << w.to_string() << '\n';
      }
      return 0;
    }

    if (*ins) {
      const auto v = IdentifyingVector::parse(ins_vector);
      if (json)
        out << inspect_json(v, ins_delta).dump(2) << '\n';
      else
        print_inspect(out, v, ins_delta);
      return 0;
    }

    if (*con) {
      const auto code = con_args.build();
      const auto text = to_json(code, con_materialize).dump(2) + "\n";
      if (con_out.empty()) {
        out << text;
      } else {
        std::ofstream f(con_out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + con_out);
        f << text;
        out << "wrote " << con_out << ": " << code.size_polynomial().to_string() << " = " << code.cardinality() << '\n';
      }
      return 0;
    }

    if (*siz) {
      const auto code = siz_args.build();
      const auto poly = code.size_polynomial();
      if (json) {
        Json j;
        j["polynomial"] = poly.to_string();
        j["size"] = big_to_json(code.cardinality());
        out << j.dump(2) << '\n';
      } else {
        out << poly.to_string() << " = " << code.cardinality() << '\n';
      }
      return 0;
    }

    if (*ver) {
      std::ifstream f(ver_in, std::ios::binary);
      const auto file = from_json(Json::parse(f));
      bool dims_ok = true;
      for (std::size_t i = 0; i < file.code.components.size(); ++i)
        dims_ok = dims_ok && file.code.components[i].dimension() == file.recorded_dimensions[i];
      const VerifyOptions opt{ver_jobs, ver_full, ver_max};
      const auto rep = file.codewords
                           ? verify_codewords(*file.codewords, file.code.min_distance(), file.code.cardinality(), opt)
                           : verify_code(file.code, opt);
      const bool pass = rep.pass && dims_ok;
      if (json) {
        auto j = report_json(rep);
        j["dimensions_match"] = dims_ok;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
      } else {
        out << "code: n=" << file.code.n << " k=" << file.code.k << " q=" << file.code.field->order()
            << " method=" << to_string(file.code.method) << '\n';
        out << "size polynomial: " << file.code.size_polynomial().to_string() << '\n';
        out << "component dimensions: " << (dims_ok ? "match" : "MISMATCH") << '\n';
        auto text = describe(rep);
        if (!dims_ok) text.replace(text.rfind("PASS"), 4, "FAIL");
        out << text;
      }
      return pass ? 0 : 1;
    }

    if (*tab) {
      const auto delta = delta_from_dist(tab_dist);
      const auto field = GaloisField::make(tab_q);
      bool all_pass = true;
      Json j;
      j["q"] = tab_q;
      j["k"] = tab_k;
      j["dist"] = tab_dist;
      for (const Method m : {Method::classic, Method::improved}) {
        std::vector<TableRow> rows;
        for (std::size_t n = tab_from; n <= tab_to; ++n) {
          const auto code = construct(m, n, tab_k, delta, field);
          TableRow row{n, code.size_polynomial(), code.cardinality(), code.components.front().dimension(), {}};
          if (tab_verify && m == Method::improved) {
            row.report = verify_code(code, VerifyOptions{tab_jobs, false, 10'000'000});
            all_pass = all_pass && row.report->pass;
          }
          rows.push_back(std::move(row));
        }
        if (json) {
          Json arr = Json::array();
          for (const auto& r : rows) {
            Json jr;
            jr["n"] = r.n;
            jr["polynomial"] = r.poly.to_string();
            jr["size"] = big_to_json(r.size);
            jr["first_component_dimension"] = r.first_dimension;
            if (r.report) jr["verify"] = report_json(*r.report);
            arr.push_back(std::move(jr));
          }
          j[to_string(m)] = std::move(arr);
        } else {
          out << to_string(m) << " (k=" << tab_k << ", d=" << tab_dist << ", q=" << tab_q << ")\n";
          for (const auto& r : rows) {
            out << "  n=" << r.n << "  " << r.poly.to_string() << " = " << r.size;
            if (r.report) {
              out << "  min d_S " << (r.report->min_distance ? std::to_string(*r.report->min_distance) : "n/a") << ", "
                  << r.report->pairs_checked << " pairs, " << (r.report->pass ? "PASS" : "FAIL");
            }
            out << '\n';
          }
        }
      }
      if (json) out << j.dump(2) << '\n';
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace subspace_codec::cli
