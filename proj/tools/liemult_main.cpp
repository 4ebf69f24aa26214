// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Subcommands:
//   mult         weight multiplicity m_lambda(mu)
//   tensor       tensor product coefficient c_{lambda,mu}^nu
//   mult-poly    quasipolynomial form (formal variables, or --stretch t)
//   tensor-poly  quasipolynomial form (formal variables, or --stretch t)
//   kpf          Kostant vector partition function k(Phi, a)
//   kpf-poly     quasipolynomial of k(Phi, t*a) in t
//   chambers     number of conic chambers of the arrangement
//   convert      change a weight between fundamental and canonical basis
//   selftest     oracle-equivalence grids; nonzero exit on any mismatch
//
// Exit codes: 0 success, 2 usage error, 1 internal error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liemult/errors.hpp"
#include "liemult/multiplicity.hpp"
#include "liemult/nested_sets.hpp"
#include "liemult/partition.hpp"
#include "liemult/quasipoly.hpp"
#include "liemult/root_system.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace liemult;

struct Options {
  std::string subcommand;
  std::string family = "A";
  int rank = 0;
  std::string basis = "auto";  // auto: cano for A, funda for B/C/D
  std::string lambda, mu, nu, weight;
  std::string stretch;
  std::string output = "text";
  std::string cache_dir;
  bool no_cache = false;
  bool stats = false;
  int jobs = 1;
};

std::string default_cache_dir() {
  if (const char* v = std::getenv("LIEMULT_CACHE_DIR")) return v;
  if (const char* v = std::getenv("XDG_CACHE_HOME"))
    return std::string(v) + "/liemult";
  if (const char* v = std::getenv("HOME"))
    return std::string(v) + "/.cache/liemult";
  return {};
}

std::string resolve_cache_dir(const Options& o) {
  if (o.no_cache) return {};
  std::string dir = o.cache_dir.empty() ? default_cache_dir() : o.cache_dir;
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return {};  // fall back to no cache rather than failing the query
  }
  return dir;
}

bool use_funda(const Options& o, Family fam) {
  if (o.basis == "funda") return true;
  if (o.basis == "cano") return false;
  if (o.basis == "auto") return fam != Family::A;
  throw UsageError("unknown basis '" + o.basis + "' (expected funda or cano)");
}

// Parses a weight option into canonical coordinates under the active basis.
Weight read_weight(const Options& o, const RootSystem& rs,
                   const std::string& text, const char* flag) {
  if (text.empty())
    throw UsageError(std::string("missing required option --") + flag);
  QVector v = parse_qvector(text);
  if (use_funda(o, rs.family())) {
    if (static_cast<int>(v.size()) != rs.rank())
      throw UsageError(std::string("--") + flag + " expects " +
                       std::to_string(rs.rank()) +
                       " fundamental coordinates, got " +
                       std::to_string(v.size()));
    return rs.from_funda_to_cano(v);
  }
  if (static_cast<int>(v.size()) != rs.dim())
    throw UsageError(std::string("--") + flag + " expects " +
                     std::to_string(rs.dim()) +
                     " canonical coordinates, got " +
                     std::to_string(v.size()));
  return v;
}

RootSystem make_root_system(const Options& o) {
  if (o.rank < 1) throw UsageError("--rank must be a positive integer");
  return build_root_system(parse_family(o.family), o.rank);
}

EngineOptions engine_options(const Options& o) {
  EngineOptions eo;
  eo.cache_dir = resolve_cache_dir(o);
  eo.jobs = o.jobs;
  return eo;
}

json query_json(const Options& o) {
  json q;
  q["subcommand"] = o.subcommand;
  q["family"] = o.family;
  q["rank"] = o.rank;
  q["basis"] = o.basis;
  auto put = [&q](const char* k, const std::string& v) {
    if (!v.empty()) q[k] = v;
  };
  put("lambda", o.lambda);
  put("mu", o.mu);
  put("nu", o.nu);
  put("weight", o.weight);
  put("stretch", o.stretch);
  return q;
}

json quasipoly_json(const QuasiPolynomial& qp) {
  json j;
  j["vars"] = qp.vars();
  json pf = json::array();
  for (const Int& c : qp.parity_form()) pf.push_back(to_string(c));
  j["parity_form"] = pf;
  json terms = json::array();
  for (const auto& [e, pair] : qp.terms()) {
    json t;
    t["exponents"] = e;
    t["even"] = to_string(pair.first);
    t["odd"] = to_string(pair.second);
    terms.push_back(std::move(t));
  }
  j["terms"] = terms;
  return j;
}

void emit_value(const Options& o, const Int& value) {
  if (o.output == "json") {
    json out;
    out["query"] = query_json(o);
    out["value"] = to_string(value);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(value) << "\n";
  }
}

void emit_poly(const Options& o, const FormalResult& fr,
               const Int& base_check) {
  if (o.output == "json") {
    json out;
    out["query"] = query_json(o);
    out["quasipolynomial"] = quasipoly_json(fr.qp);
    if (!fr.valid_set.empty()) out["valid_set"] = fr.valid_set;
    if (!fr.chambers.empty()) out["chambers"] = fr.chambers;
    out["base_point_check"] = to_string(base_check);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << fr.qp.str() << "\n";
    if (!fr.valid_set.empty())
      std::cout << "valid terms: " << fr.valid_set << "\n";
    std::cout << "base point check: " << to_string(base_check) << "\n";
  }
}

void check_stretch_var(const Options& o) {
  if (!o.stretch.empty() && o.stretch != "t")
    throw UsageError("--stretch supports the variable name 't' only");
}

void print_stats(const PartitionEngine& eng) {
  const EngineStats& s = eng.stats();
  std::cerr << "stats: partition_evals=" << s.partition_evals
            << " partition_cache_hits=" << s.partition_cache_hits
            << " chambers_built=" << s.chambers_built
            << " boxes_built=" << s.boxes_built
            << " box_states=" << s.box_states << "\n";
}

int run_selftest(const Options& o) {
  int failures = 0;
  auto report = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  // partition grids, residue path vs dynamic programming
  struct GridCase {
    Family fam;
    int rank, lim;
  };
  for (const GridCase& gc : {GridCase{Family::A, 2, 4}, GridCase{Family::B, 2, 3},
                             GridCase{Family::C, 2, 3}, GridCase{Family::D, 4, 1}}) {
    RootSystem rs = build_root_system(gc.fam, gc.rank);
    PartitionEngine eng(rs, engine_options(o));
    bool ok = true;
    std::vector<int> c(rs.rank(), 0);
    for (;;) {
      Weight a(rs.dim(), Rational(0));
      for (int i = 0; i < rs.rank(); ++i)
        a = a + Rational(c[i]) * rs.simple_roots()[i];
      if (eng.kostant_partition(a) != eng.kostant_partition_dp(a)) ok = false;
      int k = 0;
      while (k < rs.rank() && c[k] == gc.lim) c[k++] = 0;
      if (k == rs.rank()) break;
      ++c[k];
    }
    report("kpf grid " + family_name(gc.fam) + std::to_string(gc.rank), ok);
  }

  // multiplicities vs Freudenthal on small A2 and B2 modules
  for (Family fam : {Family::A, Family::B}) {
    RootSystem rs = build_root_system(fam, 2);
    MultiplicityCalculator calc(rs, engine_options(o));
    bool ok = true;
    std::vector<int> f(rs.rank(), 0);
    for (;;) {
      QVector fv;
      for (int x : f) fv.push_back(Rational(x));
      Weight lam = rs.from_funda_to_cano(fv);
      for (const auto& [mu, m] : calc.freudenthal_table(lam))
        if (calc.weight_multiplicity(lam, mu) != m) ok = false;
      int k = 0;
      while (k < rs.rank() && f[k] == 2) f[k++] = 0;
      if (k == rs.rank()) break;
      ++f[k];
    }
    report("multiplicity grid " + family_name(fam) + "2", ok);
  }

  // tensor coefficients vs the peel-off oracle on A2
  {
    RootSystem rs = build_root_system(Family::A, 2);
    MultiplicityCalculator calc(rs, engine_options(o));
    bool ok = true;
    auto wt = [&rs](int a, int b) {
      return rs.from_funda_to_cano(QVector{Rational(a), Rational(b)});
    };
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b)
        for (int c = 0; c <= 1; ++c)
          for (int d = 0; d <= 1; ++d) {
            Weight lam = wt(a, b), mu = wt(c, d);
            for (const auto& [nu, coef] : calc.tensor_decompose_peel(lam, mu))
              if (calc.tensor_coefficient(lam, mu, nu) != coef) ok = false;
          }
    report("tensor grid A2", ok);
  }

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

int dispatch(const Options& o) {
  if (o.subcommand == "selftest") return run_selftest(o);

  if (o.subcommand == "chambers") {
    RootSystem rs = make_root_system(o);
    Int n(count_chambers(rs));
    emit_value(o, n);
    return 0;
  }

  if (o.subcommand == "convert") {
    RootSystem rs = make_root_system(o);
    if (o.weight.empty()) throw UsageError("missing required option --weight");
    QVector v = parse_qvector(o.weight);
    QVector out;
    if (use_funda(o, rs.family())) {
      if (static_cast<int>(v.size()) != rs.rank())
        throw UsageError("--weight expects " + std::to_string(rs.rank()) +
                         " fundamental coordinates");
      out = rs.from_funda_to_cano(v);
    } else {
      if (static_cast<int>(v.size()) != rs.dim())
        throw UsageError("--weight expects " + std::to_string(rs.dim()) +
                         " canonical coordinates");
      out = rs.from_cano_to_funda(v);
    }
    if (o.output == "json") {
      json j;
      j["query"] = query_json(o);
      j["value"] = to_string(out);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << to_string(out) << "\n";
    }
    return 0;
  }

  RootSystem rs = make_root_system(o);

  if (o.subcommand == "kpf" || o.subcommand == "kpf-poly") {
    PartitionEngine eng(rs, engine_options(o));
    Weight a = read_weight(o, rs, o.weight, "weight");
    if (o.subcommand == "kpf") {
      emit_value(o, eng.kostant_partition(a));
    } else {
      check_stretch_var(o);
      Weight zero(rs.dim(), Rational(0));
      QuasiPolynomial qp = eng.kostant_stretch(a, zero);
      Int base = eng.kostant_partition(a);
      if (quasipoly_eval(qp, {Int(1)}) != Rational(base))
        throw InternalError("stretch quasipolynomial disagrees at t=1");
      FormalResult fr;
      fr.qp = qp;
      emit_poly(o, fr, base);
    }
    if (o.stats) print_stats(eng);
    return 0;
  }

  MultiplicityCalculator calc(rs, engine_options(o));
  const bool poly = o.subcommand == "mult-poly" || o.subcommand == "tensor-poly";
  const bool tensor =
      o.subcommand == "tensor" || o.subcommand == "tensor-poly";
  check_stretch_var(o);

  Weight lam = read_weight(o, rs, o.lambda, "lambda");
  Weight mu = read_weight(o, rs, o.mu, "mu");
  Weight nu;
  if (tensor) nu = read_weight(o, rs, o.nu, "nu");

  if (!poly) {
    Int v = tensor ? calc.tensor_coefficient(lam, mu, nu)
                   : calc.weight_multiplicity(lam, mu);
    emit_value(o, v);
  } else {
    FormalResult fr;
    Int base_check;
    if (!o.stretch.empty()) {
      fr = tensor ? calc.tensor_stretch(lam, mu, nu)
                  : calc.multiplicity_stretch(lam, mu);
      base_check = tensor ? calc.tensor_coefficient(lam, mu, nu)
                          : calc.weight_multiplicity(lam, mu);
      Rational at1 = quasipoly_eval(fr.qp, {Int(1)});
      if (at1 != Rational(base_check))
        throw InternalError("stretch quasipolynomial disagrees at t=1");
    } else {
      fr = tensor ? calc.tensor_quasipoly(lam, mu, nu)
                  : calc.multiplicity_quasipoly(lam, mu);
      std::vector<Int> pt;
      for (const Weight* w : tensor
                                 ? std::vector<const Weight*>{&lam, &mu, &nu}
                                 : std::vector<const Weight*>{&lam, &mu})
        for (const Rational& q : *w) pt.push_back(to_integer(q));
      base_check = tensor ? calc.tensor_coefficient(lam, mu, nu)
                          : calc.weight_multiplicity(lam, mu);
      Rational at = quasipoly_eval(fr.qp, pt);
      if (at != Rational(base_check))
        throw InternalError("formal quasipolynomial disagrees at the base point");
    }
    emit_poly(o, fr, base_check);
  }
  if (o.stats) print_stats(calc.engine());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie algebra multiplicities through Jeffrey-Kirwan residues"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool weights, bool needs_nu) {
    sub->add_option("--family", o.family, "root system family: A, B, C or D");
    sub->add_option("--rank", o.rank, "rank r")->required();
    sub->add_option("--basis", o.basis,
                    "weight coordinate basis: funda, cano or auto");
    sub->add_option("--output", o.output, "output format: text or json");
    sub->add_option("--cache-dir", o.cache_dir, "nested-set cache directory");
    sub->add_flag("--no-cache", o.no_cache, "disable cache reads and writes");
    sub->add_flag("--stats", o.stats, "print engine counters to stderr");
    sub->add_option("--jobs", o.jobs, "worker count hint");
    if (weights) {
      sub->add_option("--lambda", o.lambda, "highest weight lambda");
      sub->add_option("--mu", o.mu, "weight mu");
      if (needs_nu) sub->add_option("--nu", o.nu, "highest weight nu");
    }
    return sub;
  };

  add_common(app.add_subcommand("mult", "weight multiplicity"), true, false);
  add_common(app.add_subcommand("tensor", "tensor product coefficient"), true,
             true);
  add_common(app.add_subcommand("mult-poly", "multiplicity quasipolynomial"),
             true, false)
      ->add_option("--stretch", o.stretch, "stretch variable (t)");
  add_common(app.add_subcommand("tensor-poly", "tensor quasipolynomial"), true,
             true)
      ->add_option("--stretch", o.stretch, "stretch variable (t)");
  auto* kpf = add_common(app.add_subcommand("kpf", "vector partition function"),
                         false, false);
  kpf->add_option("--weight", o.weight, "lattice point a")->required();
  auto* kpfp = add_common(
      app.add_subcommand("kpf-poly", "partition quasipolynomial along t*a"),
      false, false);
  kpfp->add_option("--weight", o.weight, "lattice direction a")->required();
  kpfp->add_option("--stretch", o.stretch, "stretch variable (t)");
  add_common(app.add_subcommand("chambers", "number of conic chambers"), false,
             false);
  auto* conv = add_common(
      app.add_subcommand("convert", "convert weight coordinates"), false,
      false);
  conv->add_option("--weight", o.weight, "weight to convert")->required();
  add_common(app.add_subcommand("selftest", "oracle equivalence grids"), false,
             false)
      ->get_option("--rank")
      ->required(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  o.subcommand = app.get_subcommands().front()->get_name();
  try {
    return dispatch(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
