#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quintic/identities.hpp"
#include "quintic/io.hpp"
#include "quintic/surfaces.hpp"

using namespace quintic;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kExhausted = 3 };

struct Shared {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  long bound = 0;  // 0: the command's own default
  std::string out;
  long bound_or(long dflt) const { return bound > 0 ? bound : dflt; }
  std::string store;
};

struct Outcome {
  int code = kOk;
  Json body;
  std::string summary;
};

Integer to_integer(const std::string& s) { return parse_integer(s); }
Rational to_rational(const std::string& s) { return Rational::parse(s); }

template <class K>
Outcome certificate_outcome(const Certificate<K>& c) {
  Outcome o;
  o.body = certificate_to_json(c);
  o.code = c.triviality.nontrivial ? kOk : kFailed;
  o.summary = c.construction + ": residual 0, " + (c.triviality.nontrivial ? "nontrivial" : "TRIVIAL") + " point";
  return o;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string only, mutate;
};

Outcome cmd_verify(const VerifyArgs& a, const Shared& sh) {
  IdentityOptions opt;
  opt.only = a.only;
  opt.mutate = a.mutate;
  opt.seed = sh.seed;
  opt.jobs = sh.jobs;
  auto res = run_identities(opt);
  if (res.empty()) throw Error(Errc::InvalidInput, "no identity matches '" + a.only + "'");
  Outcome o;
  o.body = identity_results_to_json(res);
  std::size_t passed = o.body["passed"].get<std::size_t>();
  o.code = passed == res.size() ? kOk : kFailed;
  o.summary = std::to_string(passed) + "/" + std::to_string(res.size()) + " identities pass";
  for (auto& r : res)
    if (!r.pass) o.summary += "\n  failed: " + r.name;
  return o;
}

struct ConstructArgs {
  std::string a = "0", b = "0", c = "0", u = "1", v = "1", y = "1", branch = "+";
  std::string f = "0", t, k = "1", X, Y;
  std::string example = "consani-scholten", coeffs, route, su = "1", t0, U0, V0, w;
};

Outcome construct_thm1(const ConstructArgs& a) {
  QuinticCoeffs f{to_integer(a.a), to_integer(a.b), to_integer(a.c)};
  if (a.branch != "+" && a.branch != "-") throw Error(Errc::InvalidInput, "--branch must be + or -");
  auto res = thm1_point(f, to_rational(a.u), to_rational(a.v), a.branch == "+" ? ZBranch::Plus : ZBranch::Minus);
  return certificate_outcome(res.certificate);
}

Outcome construct_thm2(const ConstructArgs& a, const Shared& sh) {
  auto cert = thm2_point(to_integer(a.a), to_integer(a.c), to_rational(a.u), to_rational(a.v), sh.bound_or(200));
  return certificate_outcome(cert);
}

Outcome construct_gaussian(const ConstructArgs& a) {
  QuinticCoeffs f{to_integer(a.a), to_integer(a.b), to_integer(a.c)};
  return certificate_outcome(gaussian_point(f, to_rational(a.y), GaussianRational::parse(a.u)));
}

Outcome construct_fifth(const ConstructArgs& a) {
  return certificate_outcome(fifth_power_solution(GaussianRational::parse(a.u), GaussianRational::parse(a.v)));
}

Outcome construct_mixed(const ConstructArgs& a, const Shared& sh) {
  Integer c = to_integer(a.c), f = to_integer(a.f);
  if (c == f) throw Error(Errc::DegenerateSpecialization, "c = f: the special family needs c != f");
  Integer D = abs(Integer(c - f));
  Rational t;
  if (!a.t.empty()) {
    t = to_rational(a.t);
  } else {
    if (D > 100) throw Error(Errc::InvalidInput, "--t is required when |c - f| > 100");
    t = shipped_table()[static_cast<std::size_t>(D.get_si() - 1)].t;
  }
  CurvePoint P;
  if (!a.X.empty() || !a.Y.empty()) {
    if (a.X.empty() || a.Y.empty()) throw Error(Errc::InvalidInput, "--X and --Y go together");
    P = CurvePoint::affine(to_rational(a.X), to_rational(a.Y));
  } else {
    P = special_base_point(c, f, t, SearchBounds{Integer(sh.bound_or(1000)), 2}, sh.jobs);
  }
  long k = std::stol(a.k);
  auto res = mixed_point(c, f, t, k, P);
  auto o = certificate_outcome(res.certificate);
  o.body["curve_point"] = curve_point_to_json(res.curve_point);
  return o;
}

SymmetricQuinticCoeffs parse_symmetric(const std::string& text) {
  std::vector<Integer> v;
  std::stringstream ss(text);
  for (std::string cell; std::getline(ss, cell, ',');) v.push_back(to_integer(cell));
  if (v.size() != 10) throw Error(Errc::InvalidInput, "--coeffs needs a1..a5,b1..b3,c0,c1 (10 integers)");
  SymmetricQuinticCoeffs k;
  for (int i = 0; i < 5; ++i) k.a[i] = v[i];
  for (int i = 0; i < 3; ++i) k.b[i] = v[5 + i];
  k.c0 = v[8];
  k.c1 = v[9];
  return k;
}

Outcome construct_symmetric(const ConstructArgs& a) {
  SymmetricQuinticCoeffs k;
  std::string route = a.route;
  if (!a.coeffs.empty()) {
    k = parse_symmetric(a.coeffs);
    if (route.empty()) route = "gaussian";
  } else if (a.example == "consani-scholten") {
    k = consani_scholten();
    if (route.empty()) route = "gaussian";
  } else if (a.example == "c1-29") {
    k = c1_29_example();
    if (route.empty()) route = "rational";
  } else {
    throw Error(Errc::InvalidInput, "--example must be consani-scholten or c1-29");
  }
  auto pick = [](const std::string& s, const char* dflt) { return s.empty() ? std::string(dflt) : s; };
  if (route == "gaussian") {
    return certificate_outcome(
        symmetric_gaussian_point(k, to_rational(pick(a.t, "2")), GaussianRational::parse(a.su)));
  }
  if (route == "rational") {
    return certificate_outcome(symmetric_rational_point(k, to_rational(pick(a.t0, "1")), to_rational(pick(a.U0, "3")),
                                                        to_rational(pick(a.V0, "8")), to_rational(pick(a.w, "0"))));
  }
  throw Error(Errc::InvalidInput, "--route must be gaussian or rational");
}

// ---------------------------------------------------------------------------

Outcome cmd_solve_form(const std::vector<std::string>& coeffs, const Shared& sh) {
  if (coeffs.size() != 4) throw Error(Errc::InvalidInput, "solve-form needs four integers");
  Coeffs4 raw;
  for (int i = 0; i < 4; ++i) {
    raw[i] = to_integer(coeffs[static_cast<std::size_t>(i)]);
    if (raw[i] == 0) throw Error(Errc::ZeroCoefficient, "coefficient a" + std::to_string(i + 1) + " is zero");
  }
  long bound = sh.bound_or(200);
  auto rep = solve_form(raw, bound);
  Outcome o;
  o.body = form_report_to_json(rep);
  if (rep.jones.solvable && !rep.witness) {
    o.code = kExhausted;
    o.summary = "solvable, but no witness with entries up to " + std::to_string(bound);
  } else {
    o.summary = rep.jones.solvable ? "solvable" : "not solvable";
  }
  return o;
}

struct TableArgs {
  long dmax = 100;
  std::string mode = "verify";
  long hmax = 12;
  long max_e = 2;
};

Outcome cmd_table(const TableArgs& a, const Shared& sh, std::ostream& csv) {
  if (a.dmax < 1) throw Error(Errc::InvalidInput, "--dmax must be at least 1");
  Outcome o;
  std::vector<TableRowReport> reports;
  std::size_t exhausted = 0;
  if (a.mode == "verify") {
    auto rows = shipped_table();
    rows.resize(static_cast<std::size_t>(std::min<long>(a.dmax, 100)));
    reports = table_verify(rows, sh.jobs);
    write_table_csv(csv, reports);
  } else if (a.mode == "search") {
    auto cands = t_candidates(a.hmax);
    SearchBounds bounds{Integer(sh.bound_or(1000)), a.max_e};
    csv << "D,t,X,Y,status\n";
    for (long D = 1; D <= a.dmax; ++D) {
      auto hit = conjecture2_search(Integer(D), Integer(0), cands, bounds, sh.jobs);
      if (!hit) {
        ++exhausted;
        csv << D << ",,,,exhausted\n";
        continue;
      }
      auto rep = verify_row(TableRow{Integer(D), hit->t, hit->P});
      csv << D << ',' << hit->t.to_string() << ',' << hit->P.x.to_string() << ',' << hit->P.y.to_string() << ','
          << (rep.pass ? "pass" : "fail") << '\n';
      reports.push_back(rep);
    }
  } else {
    throw Error(Errc::InvalidInput, "--mode must be verify or search");
  }
  std::size_t passed = 0;
  for (auto& r : reports) passed += r.pass ? 1 : 0;
  std::size_t failed = reports.size() - passed;
  o.body = Json{{"mode", a.mode}, {"rows", reports.size() + exhausted}, {"passed", passed}, {"failed", failed},
                {"exhausted", exhausted}};
  o.code = failed ? kFailed : exhausted ? kExhausted : kOk;
  o.summary = a.mode + ": " + std::to_string(passed) + "/" + std::to_string(reports.size() + exhausted) + " rows pass";
  if (exhausted) o.summary += ", " + std::to_string(exhausted) + " exhausted";
  return o;
}

Outcome cmd_question3(long N, const std::string& c) {
  if (N < 1) throw Error(Errc::InvalidInput, "--N must be at least 1");
  auto res = question3_points(static_cast<unsigned>(N), to_integer(c));
  Outcome o;
  Json pts = Json::array();
  bool all = true;
  for (auto& cert : res.points) {
    pts.push_back(certificate_to_json(cert));
    all = all && cert.triviality.nontrivial;
  }
  o.body = Json{{"N", N}, {"f", coeffs_to_json(res.f)}, {"points", pts}};
  o.code = all ? kOk : kFailed;
  o.summary = "a_N = " + res.f.a.get_str() + ", " + std::to_string(res.points.size()) + " integer points";
  return o;
}

Outcome cmd_scale(const std::string& a, const std::string& b, const std::string& c,
                  const std::vector<std::string>& points) {
  if (points.empty()) throw Error(Errc::EmptyList, "give at least one --point p,q,r,s");
  QuinticCoeffs f{to_integer(a), to_integer(b), to_integer(c)};
  std::vector<Point4<Rational>> in;
  for (auto& text : points) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    for (std::string cell; std::getline(ss, cell, ',');) v.push_back(to_rational(cell));
    if (v.size() != 4) throw Error(Errc::InvalidInput, "--point needs p,q,r,s: '" + text + "'");
    in.push_back({v[0], v[1], v[2], v[3]});
  }
  auto sc = scale_to_integers(f, in);
  Json pts = Json::array();
  for (std::size_t k = 0; k < sc.points.size(); ++k) {
    InputList inputs{{"a", sc.F.a.get_str()}, {"b", sc.F.b.get_str()}, {"c", sc.F.c.get_str()},
                     {"d", sc.d.get_str()}, {"source", points[k]}};
    pts.push_back(certificate_to_json(certify_quintic("scale-integers", inputs, sc.F, sc.points[k])));
  }
  Outcome o;
  o.body = Json{{"d", sc.d.get_str()}, {"F", coeffs_to_json(sc.F)}, {"points", pts}};
  o.summary = "d = " + sc.d.get_str() + ", " + std::to_string(sc.points.size()) + " integer points";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points on f(p)+f(q)=f(r)+f(s) for quintic f"};
  app.require_subcommand(1);
  app.fallthrough();
  Shared sh;
  app.add_option("--jobs", sh.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", sh.seed, "seed for randomized spot checks");
  app.add_option("--bound", sh.bound, "search bound (witness entries, or |X| on curves)")->check(CLI::PositiveNumber);
  app.add_option("--out", sh.out, "output file");
  app.add_option("--store", sh.store, "append-only JSON-lines store (default $QUINTIC_STORE)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-identities", "check every displayed identity symbolically");
  verify->add_option("--only", va.only, "name prefix filter");
  verify->add_option("--mutate", va.mutate, "perturb the named identity (must then fail)");
  bool list = false;
  verify->add_flag("--list", list, "list identity names");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build one certified point");
  construct->require_subcommand(1);
  auto* c_thm1 = construct->add_subcommand("thm1", "b != 0 family via the elliptic surface");
  c_thm1->add_option("--a", ca.a);
  c_thm1->add_option("--b", ca.b);
  c_thm1->add_option("--c", ca.c);
  c_thm1->add_option("--u", ca.u);
  c_thm1->add_option("--v", ca.v);
  c_thm1->add_option("--branch", ca.branch, "z root: + or -");
  auto* c_thm2 = construct->add_subcommand("thm2", "b = 0 family via x^2+2y^2+3z^2+5a = 0");
  c_thm2->add_option("--a", ca.a);
  c_thm2->add_option("--c", ca.c);
  c_thm2->add_option("--u", ca.u);
  c_thm2->add_option("--v", ca.v);
  auto* c_gauss = construct->add_subcommand("gaussian", "Q(i) point from (y, u)");
  c_gauss->add_option("--a", ca.a);
  c_gauss->add_option("--b", ca.b);
  c_gauss->add_option("--c", ca.c);
  c_gauss->add_option("--y", ca.y);
  c_gauss->add_option("--u", ca.u, "Gaussian rational, e.g. 1/2+3i");
  auto* c_fifth = construct->add_subcommand("fifth-power", "p^5 + q^5 = r^5 + s^5 over Q(i)");
  c_fifth->add_option("--u", ca.u);
  c_fifth->add_option("--v", ca.v);
  auto* c_mixed = construct->add_subcommand("mixed", "F = x^5 + cx, G = x^5 + fx");
  c_mixed->add_option("--c", ca.c);
  c_mixed->add_option("--f", ca.f);
  c_mixed->add_option("--t", ca.t, "defaults to the table value for D = |c - f|");
  c_mixed->add_option("--k", ca.k, "multiple of the base point");
  c_mixed->add_option("--X", ca.X, "base point on E_t");
  c_mixed->add_option("--Y", ca.Y);
  auto* c_sym = construct->add_subcommand("symmetric", "symmetric f(x, y)");
  c_sym->add_option("--example", ca.example, "consani-scholten or c1-29");
  c_sym->add_option("--coeffs", ca.coeffs, "a1..a5,b1..b3,c0,c1");
  c_sym->add_option("--route", ca.route, "gaussian or rational");
  c_sym->add_option("--t", ca.t);
  c_sym->add_option("--u", ca.su, "Gaussian parameter");
  c_sym->add_option("--t0", ca.t0);
  c_sym->add_option("--U0", ca.U0);
  c_sym->add_option("--V0", ca.V0);
  c_sym->add_option("--w", ca.w);

  std::vector<std::string> form;
  auto* solve = app.add_subcommand("solve-form", "does a1 X1^2 + ... + a4 X4^2 represent zero");
  solve->add_option("coeffs", form, "a1 a2 a3 a4")->expected(4);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "verify or search specializations E_t for D = 1..dmax");
  table->add_option("--dmax", ta.dmax);
  table->add_option("--mode", ta.mode, "verify or search");
  table->add_option("--hmax", ta.hmax, "height bound on t in search mode");
  table->add_option("--max-e", ta.max_e, "X = m/e^2 with e <= max-e in search mode");

  long qN = 1;
  std::string qc = "1";
  auto* q3 = app.add_subcommand("question3", "N integer points on one f with c fixed");
  q3->add_option("--N", qN);
  q3->add_option("--c", qc);

  std::string sa = "0", sb = "0", sc = "0";
  std::vector<std::string> spoints;
  auto* scale = app.add_subcommand("scale-integers", "clear denominators of points on V_f");
  scale->add_option("--a", sa);
  scale->add_option("--b", sb);
  scale->add_option("--c", sc);
  scale->add_option("--point", spoints, "p,q,r,s (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << Json{{"error", "ParseError"}, {"message", e.what()}}.dump(2) << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  if (sh.store.empty()) {
    if (const char* env = std::getenv("QUINTIC_STORE")) sh.store = env;
  }

  std::string command;
  Json inputs = Json::object();
  Outcome o;
  std::ostringstream csv;
  try {
    if (*verify) {
      command = "verify-identities";
      if (list) {
        Json names = Json::array();
        for (auto& c : identity_checks()) names.push_back(c.name);
        std::cout << names.dump(2) << '\n';
        return kOk;
      }
      inputs = Json{{"only", va.only}, {"mutate", va.mutate}, {"seed", sh.seed}};
      o = cmd_verify(va, sh);
    } else if (*construct) {
      auto* fam = construct->get_subcommands().front();
      command = "construct " + fam->get_name();
      for (auto* opt : fam->get_options()) {
        if (opt->count() > 0 && opt->get_name() != "--help") inputs[opt->get_name()] = opt->as<std::string>();
      }
      if (fam == c_thm1) o = construct_thm1(ca);
      else if (fam == c_thm2) o = construct_thm2(ca, sh);
      else if (fam == c_gauss) o = construct_gaussian(ca);
      else if (fam == c_fifth) o = construct_fifth(ca);
      else if (fam == c_mixed) o = construct_mixed(ca, sh);
      else o = construct_symmetric(ca);
    } else if (*solve) {
      command = "solve-form";
      inputs = Json{{"coeffs", form}, {"bound", sh.bound_or(200)}};
      o = cmd_solve_form(form, sh);
    } else if (*table) {
      command = "table";
      inputs = Json{{"dmax", ta.dmax}, {"mode", ta.mode}, {"hmax", ta.hmax}, {"max_e", ta.max_e}, {"bound", sh.bound_or(1000)}};
      o = cmd_table(ta, sh, csv);
    } else if (*q3) {
      command = "question3";
      inputs = Json{{"N", qN}, {"c", qc}};
      o = cmd_question3(qN, qc);
    } else if (*scale) {
      command = "scale-integers";
      inputs = Json{{"a", sa}, {"b", sb}, {"c", sc}, {"points", spoints}};
      o = cmd_scale(sa, sb, sc, spoints);
    }
  } catch (const Error& e) {
    o.code = kInvalid;
    o.body = error_to_json(e);
    o.summary = std::string("error: ") + e.what();
  } catch (const std::invalid_argument& e) {
    o.code = kInvalid;
    o.body = Json{{"error", "ParseError"}, {"message", e.what()}};
    o.summary = std::string("error: ") + e.what();
  }

  if (*table && o.code != kInvalid) {
    if (sh.out.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream(sh.out) << csv.str();
      std::cout << o.body.dump(2) << '\n';
    }
  } else {
    std::string text = o.body.dump(2);
    std::cout << text << '\n';
    if (!sh.out.empty()) std::ofstream(sh.out) << text << '\n';
  }
  std::cerr << o.summary << '\n';
  if (!sh.store.empty() && !command.empty()) {
    try {
      append_record(sh.store, command, inputs, o.body);
    } catch (const Error& e) {
      std::cerr << "store: " << e.what() << '\n';
    }
  }
  return o.code;
}
