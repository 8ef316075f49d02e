#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncx/commoracle.hpp"
#include "ncx/crossratio.hpp"
#include "ncx/parse.hpp"
#include "ncx/verify.hpp"

namespace {

using json = nlohmann::json;
using ncx::FourTuple;
using ncx::Quaternion;
using ncx::Vec2;

// Exit codes: 0 success / identities hold, 1 an identity check failed (a
// finding), 2 parse or usage error, 3 degenerate or irregular input.
int exit_code_for(const ncx::NcxError& e) {
  switch (e.kind()) {
    case ncx::ErrorKind::Parse:
    case ncx::ErrorKind::Dimension:
      return 2;
    case ncx::ErrorKind::NotConjugate:
      return 1;
    case ncx::ErrorKind::Internal:
      return 70;
    default:
      return 3;
  }
}

json j_rational(const ncx::Rational& r) {
  return json::array({r.num().str(), r.den().str()});
}

// A quaternion as four numerator/denominator pairs (decimal strings, since
// the integers are arbitrary precision) plus its canonical text.
json j_quat(const Quaternion& q) {
  return json{{"coeffs", json::array({j_rational(q.a()), j_rational(q.b()),
                                      j_rational(q.c()), j_rational(q.d())})},
              {"text", q.str()}};
}

json j_vec(const Vec2<Quaternion>& v) {
  return json{{"components", json::array({j_quat(v.x1), j_quat(v.x2)})},
              {"text", v.str()}};
}

json j_mat2(const ncx::Mat2<Quaternion>& m) {
  return json{{"rows", json::array({json::array({j_quat(m.a11), j_quat(m.a12)}),
                                    json::array({j_quat(m.a21), j_quat(m.a22)})})},
              {"text", m.str()}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Values come either from positional arguments or from --file (one value per
// line, blank lines ignored); mixing the two is rejected.
std::vector<std::string> gather_values(const std::vector<std::string>& positional,
                                       const std::string& file, std::size_t expected,
                                       const char* what) {
  std::vector<std::string> vals = positional;
  if (!file.empty()) {
    if (!vals.empty())
      throw ncx::DimensionMismatch("give values either as arguments or via --file");
    std::ifstream in(file);
    if (!in) throw ncx::DimensionMismatch("cannot open file '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      vals.push_back(line);
    }
  }
  if (expected != 0 && vals.size() != expected)
    throw ncx::DimensionMismatch(std::string(what) + ": expected " +
                                 std::to_string(expected) + " values, got " +
                                 std::to_string(vals.size()));
  return vals;
}

FourTuple<Quaternion> tuple_from_vectors(const std::vector<std::string>& texts) {
  return {ncx::parse_vector(texts[0]).value, ncx::parse_vector(texts[1]).value,
          ncx::parse_vector(texts[2]).value, ncx::parse_vector(texts[3]).value};
}

FourTuple<Quaternion> tuple_from_matrix(const std::string& text) {
  auto m = ncx::parse_matrix(text);
  if (m.columns.size() != 4)
    throw ncx::DimensionMismatch("a tuple needs a 2x4 matrix, got 2x" +
                                 std::to_string(m.columns.size()));
  return {m.columns[0], m.columns[1], m.columns[2], m.columns[3]};
}

struct QuasidetArgs {
  std::string matrix;
  int row = 1, col = 1;
  bool as_json = false;
};

int run_quasidet(const QuasidetArgs& a) {
  if (a.row < 1 || a.row > 2 || a.col < 1 || a.col > 2)
    throw ncx::DimensionMismatch("--row and --col must be 1 or 2");
  auto m = ncx::parse_matrix(a.matrix);
  if (m.columns.size() != 2)
    throw ncx::DimensionMismatch("quasidet needs a 2x2 matrix, got 2x" +
                                 std::to_string(m.columns.size()));
  const ncx::Mat2<Quaternion> g =
      ncx::Mat2<Quaternion>::from_columns(m.columns[0], m.columns[1]);
  const Quaternion v = ncx::quasidet(g, ncx::BoxPos{a.row, a.col});
  if (a.as_json)
    emit(json{{"op", "quasidet"},
              {"box", json::array({a.row, a.col})},
              {"value", j_quat(v)}});
  else
    std::cout << v.str() << "\n";
  return 0;
}

struct QpArgs {
  std::string matrix;
  int i = 0, j = 0, k = 0;
  bool as_json = false;
};

int run_qplucker(const QpArgs& a) {
  auto m = ncx::parse_matrix(a.matrix);
  const int n = static_cast<int>(m.columns.size());
  for (int idx : {a.i, a.j, a.k})
    if (idx < 1 || idx > n)
      throw ncx::DimensionMismatch("indices must lie in 1.." + std::to_string(n));
  if (a.i == a.k) throw ncx::DimensionMismatch("qplucker requires i != k");
  const Quaternion v = ncx::qp(m.matrix(), ncx::QPIndex(a.i, a.j, a.k));
  if (a.as_json)
    emit(json{{"op", "qplucker"},
              {"i", a.i},
              {"j", a.j},
              {"k", a.k},
              {"value", j_quat(v)}});
  else
    std::cout << v.str() << "\n";
  return 0;
}

struct ValuesArgs {
  std::vector<std::string> values;
  std::string file;
  bool as_json = false;
};

int run_cross_ratio(const ValuesArgs& a) {
  const auto texts = gather_values(a.values, a.file, 4, "cross-ratio");
  const FourTuple<Quaternion> T = tuple_from_vectors(texts);
  const Quaternion kappa = ncx::cross_ratio(T);
  if (kappa.is_zero() || kappa == Quaternion::one()) {
    // kappa in {0,1} always comes from a dependent column pair; name it.
    std::string why = "cross-ratio is " + kappa.str();
    if (auto v = ncx::regularity_violation(T.as_matrix())) why += ", " + *v;
    throw ncx::Degenerate("Degenerate", why + " in " + T.str());
  }
  if (a.as_json)
    emit(json{{"op", "cross-ratio"}, {"kappa", j_quat(kappa)}});
  else
    std::cout << kappa.str() << "\n";
  return 0;
}

int run_cocycle(const ValuesArgs& a) {
  const auto texts = gather_values(a.values, a.file, 5, "cocycle");
  const Vec2<Quaternion> x = ncx::parse_vector(texts[0]).value;
  const Vec2<Quaternion> y = ncx::parse_vector(texts[1]).value;
  const Vec2<Quaternion> z = ncx::parse_vector(texts[2]).value;
  const Vec2<Quaternion> t = ncx::parse_vector(texts[3]).value;
  const Vec2<Quaternion> w = ncx::parse_vector(texts[4]).value;
  const auto rep = ncx::cocycle_checks(x, y, z, t, w);
  if (a.as_json) {
    emit(json{{"op", "cocycle"},
              {"kappa", j_quat(rep.kappa)},
              {"chain", json{{"name", rep.chain.name},
                             {"ok", rep.chain.ok},
                             {"lhs", rep.chain.lhs},
                             {"rhs", rep.chain.rhs}}},
              {"flip", json{{"name", rep.flip.name},
                            {"ok", rep.flip.ok},
                            {"lhs", rep.flip.lhs},
                            {"rhs", rep.flip.rhs}}},
              {"status", rep.pass() ? "pass" : "fail"}});
  } else {
    std::cout << rep.chain.name << ": " << (rep.chain.ok ? "pass" : "FAIL") << "\n";
    std::cout << rep.flip.name << ": " << (rep.flip.ok ? "pass" : "FAIL") << "\n";
    if (!rep.pass())
      std::cerr << "counterexample: x=" << x << " y=" << y << " z=" << z << " t=" << t
                << " w=" << w << "\n";
  }
  return rep.pass() ? 0 : 1;
}

struct ChainArgs {
  std::vector<std::string> points;
  std::string file;
  std::string z, t;
  bool as_json = false;
};

int run_chain(const ChainArgs& a) {
  const auto texts = gather_values(a.points, a.file, 0, "chain");
  if (texts.size() < 2)
    throw ncx::DimensionMismatch("chain: need at least 2 points, got " +
                                 std::to_string(texts.size()));
  std::vector<Vec2<Quaternion>> points;
  for (const auto& s : texts) points.push_back(ncx::parse_vector(s).value);
  const Vec2<Quaternion> z = ncx::parse_vector(a.z).value;
  const Vec2<Quaternion> t = ncx::parse_vector(a.t).value;
  const auto rep = ncx::chain_product(points, z, t);
  if (a.as_json) {
    emit(json{{"op", "chain"},
              {"n", points.size()},
              {"product", j_quat(rep.product)},
              {"target", j_quat(rep.target)},
              {"status", rep.ok ? "pass" : "fail"}});
  } else {
    std::cout << "product = " << rep.product << "\n";
    std::cout << "kappa(x1,xn,z,t) = " << rep.target << "\n";
    std::cout << (rep.ok ? "pass" : "FAIL") << "\n";
  }
  return rep.ok ? 0 : 1;
}

int run_perms(const ValuesArgs& a) {
  const auto texts = gather_values(a.values, a.file, 4, "perms");
  const FourTuple<Quaternion> T = tuple_from_vectors(texts);
  const auto rep = ncx::permutation_relations(T);
  const auto table = ncx::all_24(T);
  if (a.as_json) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    json values = json::array();
    for (const auto& e : table) {
      json entry{{"perm", json::array({e.perm[0], e.perm[1], e.perm[2], e.perm[3]})}};
      if (e.value)
        entry["kappa"] = j_quat(*e.value);
      else
        entry["blame"] = e.blame;
      values.push_back(entry);
    }
    emit(json{{"op", "perms"},
              {"relations", checks},
              {"all24", values},
              {"status", rep.pass() ? "pass" : "fail"}});
  } else {
    for (const auto& c : rep.checks)
      std::cout << c.name << ": " << (c.ok ? "pass" : "FAIL") << "\n";
    const char* names = "xyzt";
    for (const auto& e : table) {
      std::string perm;
      for (int p : e.perm) perm += names[p - 1];
      std::cout << "kappa(" << perm << ") = " << (e.value ? e.value->str() : "undefined")
                << "\n";
    }
    if (!rep.pass()) std::cerr << "counterexample: " << T.str() << "\n";
  }
  return rep.pass() ? 0 : 1;
}

struct OrbitArgs {
  std::vector<std::string> tuples;
  std::string file;
  std::string mu;
  bool as_json = false;
};

int run_orbit_check(const OrbitArgs& a) {
  const auto texts = gather_values(a.tuples, a.file, 2, "orbit-check");
  const FourTuple<Quaternion> first = tuple_from_matrix(texts[0]);
  const FourTuple<Quaternion> second = tuple_from_matrix(texts[1]);

  Quaternion mu;
  if (!a.mu.empty()) {
    mu = ncx::parse_quaternion(a.mu).value;
  } else {
    const Quaternion k1 = ncx::normalized_kappa(first);
    const Quaternion k2 = ncx::normalized_kappa(second);
    auto found = ncx::find_conjugator(k1, k2);
    if (!found) {
      if (a.as_json)
        emit(json{{"op", "orbit-check"},
                  {"conjugate", false},
                  {"kappa_first", j_quat(k1)},
                  {"kappa_second", j_quat(k2)}});
      else
        std::cout << "not conjugate: kappa(first) = " << k1 << ", kappa(second) = " << k2
                  << ", no mu with mu*kappa2 = kappa1*mu exists\n";
      return 1;
    }
    mu = *found;
  }

  const auto w = ncx::orbit_witness(first, second, mu);
  if (a.as_json) {
    emit(json{{"op", "orbit-check"},
              {"conjugate", true},
              {"witness",
               json{{"g", j_mat2(w.g)},
                    {"lambda", json::array({j_quat(w.lambda1), j_quat(w.lambda2),
                                            j_quat(w.lambda3), j_quat(w.lambda4)})},
                    {"mu", j_quat(w.mu)}}}});
  } else {
    std::cout << "same orbit\n";
    std::cout << "g = " << w.g << "\n";
    std::cout << "lambda1 = " << w.lambda1 << "\n";
    std::cout << "lambda2 = " << w.lambda2 << "\n";
    std::cout << "lambda3 = " << w.lambda3 << "\n";
    std::cout << "lambda4 = " << w.lambda4 << "\n";
    std::cout << "mu = " << w.mu << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  ncx::verify::Options opt;
  bool as_json = false;
};

int run_verify(const VerifyArgs& a) {
  if (!ncx::verify::is_suite_name(a.suite)) {
    std::string names = "all";
    for (const auto& n : ncx::verify::suite_names()) names += ", " + n;
    throw ncx::DimensionMismatch("unknown suite '" + a.suite + "'; available: " + names);
  }
  const auto results = ncx::verify::run_suite(a.suite, a.opt);
  const bool ok = ncx::verify::all_passed(results);

  if (a.as_json) {
    json suites = json::array();
    for (const auto& r : results) {
      suites.push_back(json{{"suite", r.suite},
                            {"ring", r.ring},
                            {"trials", r.trials},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"status", r.passed() ? "pass" : "fail"},
                            {"counterexamples", r.counterexamples}});
    }
    emit(json{{"op", "verify"},
              {"seed", a.opt.seed},
              {"trials", a.opt.trials},
              {"bound", a.opt.bound},
              {"suites", suites},
              {"status", ok ? "pass" : "fail"}});
  } else {
    std::cout << std::left << std::setw(12) << "suite" << std::setw(12) << "ring"
              << std::right << std::setw(8) << "trials" << std::setw(10) << "checks"
              << std::setw(10) << "failures" << "  status\n";
    for (const auto& r : results) {
      std::cout << std::left << std::setw(12) << r.suite << std::setw(12) << r.ring
                << std::right << std::setw(8) << r.trials << std::setw(10) << r.checks
                << std::setw(10) << r.failures << "  " << (r.passed() ? "pass" : "FAIL")
                << "\n";
      for (const auto& ce : r.counterexamples) std::cerr << "  counterexample: " << ce << "\n";
    }
    std::cout << "result: " << (ok ? "pass" : "FAIL") << " (suite " << a.suite
              << ", seed " << a.opt.seed << ", trials " << a.opt.trials << ", bound "
              << a.opt.bound << ")\n";
  }
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncx - exact noncommutative cross-ratios over division rings"};
  app.require_subcommand(1);

  QuasidetArgs qd;
  auto* c_qd = app.add_subcommand("quasidet", "quasideterminant of a 2x2 matrix");
  c_qd->add_option("--matrix", qd.matrix, "2x2 matrix, e.g. \"[1, 2; 3, 4]\"")->required();
  c_qd->add_option("--row", qd.row, "boxed row (1 or 2)")->required();
  c_qd->add_option("--col", qd.col, "boxed column (1 or 2)")->required();
  c_qd->add_flag("--json", qd.as_json, "machine-readable output");

  QpArgs qp;
  auto* c_qp = app.add_subcommand("qplucker", "quasi-Plucker coordinate q^k_ij of a 2xn matrix");
  c_qp->add_option("--matrix", qp.matrix, "2xn matrix")->required();
  c_qp->add_option("-i", qp.i, "column index i")->required();
  c_qp->add_option("-j", qp.j, "column index j")->required();
  c_qp->add_option("-k", qp.k, "column index k (k != i)")->required();
  c_qp->add_flag("--json", qp.as_json, "machine-readable output");

  ValuesArgs cr;
  auto* c_cr = app.add_subcommand("cross-ratio", "cross-ratio of four vectors");
  c_cr->add_option("vectors", cr.values, "x y z t as \"[q, q]\"");
  c_cr->add_option("--file", cr.file, "read the four vectors from a file, one per line");
  c_cr->add_flag("--json", cr.as_json, "machine-readable output");

  ValuesArgs co;
  auto* c_co = app.add_subcommand("cocycle", "cocycle identities for five vectors");
  c_co->add_option("vectors", co.values, "x y z t w");
  c_co->add_option("--file", co.file, "read the five vectors from a file");
  c_co->add_flag("--json", co.as_json, "machine-readable output");

  ChainArgs ch;
  auto* c_ch = app.add_subcommand("chain", "telescoping chain product");
  c_ch->add_option("points", ch.points, "x1 ... xn (n >= 2)");
  c_ch->add_option("--file", ch.file, "read the points from a file");
  c_ch->add_option("--z", ch.z, "reference vector z")->required();
  c_ch->add_option("--t", ch.t, "reference vector t")->required();
  c_ch->add_flag("--json", ch.as_json, "machine-readable output");

  ValuesArgs pm;
  auto* c_pm = app.add_subcommand("perms", "permutation relations and all 24 cross-ratios");
  c_pm->add_option("vectors", pm.values, "x y z t");
  c_pm->add_option("--file", pm.file, "read the four vectors from a file");
  c_pm->add_flag("--json", pm.as_json, "machine-readable output");

  OrbitArgs ob;
  auto* c_ob = app.add_subcommand("orbit-check", "decide whether two tuples share an orbit");
  c_ob->add_option("tuples", ob.tuples, "two 2x4 matrices with columns x,y,z,t");
  c_ob->add_option("--file", ob.file, "read the two matrices from a file");
  c_ob->add_option("--mu", ob.mu, "conjugator to use (found automatically when omitted)");
  c_ob->add_flag("--json", ob.as_json, "machine-readable output");

  VerifyArgs vf;
  auto* c_vf = app.add_subcommand("verify", "run the identity verification suites");
  c_vf->add_option("--suite", vf.suite, "suite name or 'all'");
  c_vf->add_option("--trials", vf.opt.trials, "sampled instances per suite")
      ->check(CLI::PositiveNumber);
  c_vf->add_option("--seed", vf.opt.seed, "PRNG seed");
  c_vf->add_option("--bound", vf.opt.bound, "magnitude bound for sampled integers")
      ->check(CLI::PositiveNumber);
  c_vf->add_flag("--json", vf.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_qd) return run_quasidet(qd);
    if (*c_qp) return run_qplucker(qp);
    if (*c_cr) return run_cross_ratio(cr);
    if (*c_co) return run_cocycle(co);
    if (*c_ch) return run_chain(ch);
    if (*c_pm) return run_perms(pm);
    if (*c_ob) return run_orbit_check(ob);
    if (*c_vf) return run_verify(vf);
  } catch (const ncx::NcxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 2;
}
