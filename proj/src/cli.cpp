#include "commvar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "commvar/chartab.hpp"
#include "commvar/cohomology.hpp"
#include "commvar/errors.hpp"
#include "commvar/render.hpp"
#include "commvar/verify.hpp"

namespace commvar::cli {

namespace {

using render::Json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string type;
  unsigned n = 0;
  unsigned truncate = 20;
  unsigned degree = 0;
  unsigned m = 0;
  bool all = false;
  std::string format = "plain";
};

Json type_query(const std::string& command, const CartanType& cartan) {
  Json q;
  q["command"] = command;
  q["type"] = cartan.name();
  q["family"] = std::string(1, family_letter(cartan.family()));
  q["rank"] = cartan.rank();
  return q;
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  bool json() const { return format_ == "json"; }
  bool latex() const { return format_ == "latex"; }

  void document(const Json& query, const Json& result) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_).count();
    out_ << render::document(query, result, us).dump(2) << "\n";
  }
  std::ostream& text() { return out_; }

 private:
  std::ostream& out_;
  std::string format_;
  Clock::time_point start_ = Clock::now();
};

int cmd_classes(const Options& o, Emitter& e) {
  const CartanType cartan = CartanType::parse(o.type);
  const WeylData weyl = weyl_data(cartan);
  if (e.json())
    e.document(type_query("classes", cartan), render::classes_json(weyl));
  else
    e.text() << render::classes_plain(weyl);
  return kExitOk;
}

int cmd_poincare(const Options& o, Emitter& e) {
  const CartanType cartan = CartanType::parse(o.type);
  const PoincareResult r = poincare_poly(cartan, o.n);
  if (e.json()) {
    Json q = type_query("poincare", cartan);
    q["n"] = o.n;
    e.document(q, render::poincare_json(r));
  } else {
    e.text() << (e.latex() ? render::poly_latex(r.poly) : render::poly_plain(r.poly)) << "\n";
  }
  return kExitOk;
}

int cmd_equivariant(const Options& o, Emitter& e) {
  const CartanType cartan = CartanType::parse(o.type);
  const EquivariantResult r = equivariant_hilbert(cartan, o.n, o.truncate);
  if (e.json()) {
    Json q = type_query("equivariant", cartan);
    q["n"] = o.n;
    q["truncate"] = o.truncate;
    e.document(q, render::equivariant_json(r));
  } else {
    e.text() << (e.latex() ? render::equivariant_latex(r) : render::equivariant_plain(r));
  }
  return kExitOk;
}

int cmd_betti(const Options& o, Emitter& e) {
  const CartanType cartan = CartanType::parse(o.type);
  const Integer b = betti(cartan, o.n, o.degree);
  if (e.json()) {
    Json q = type_query("betti", cartan);
    q["n"] = o.n;
    q["degree"] = o.degree;
    Json r;
    r["value"] = b.get_str();
    e.document(q, r);
  } else {
    e.text() << b.get_str() << "\n";
  }
  return kExitOk;
}

int cmd_char_table(const Options& o, Emitter& e) {
  const CharacterTable table = character_table(o.m);
  if (e.json()) {
    Json q;
    q["command"] = "char-table";
    q["m"] = o.m;
    e.document(q, render::character_table_json(table));
  } else {
    e.text() << (e.latex() ? render::character_table_latex(table) : render::character_table_plain(table));
  }
  return kExitOk;
}

int cmd_char_poly(const Options& o, Emitter& e) {
  const CartanType cartan = CartanType::parse(o.type);
  const WDecomposition d = graded_w_decomposition(cartan, o.n);
  if (e.json()) {
    Json q = type_query("char-poly", cartan);
    q["n"] = o.n;
    e.document(q, render::char_poly_json(d, o.n));
  } else {
    e.text() << (e.latex() ? render::char_poly_latex(d, o.n) : render::char_poly_plain(d, o.n));
  }
  return kExitOk;
}

int cmd_torsion(const Options& o, Emitter& e) {
  const CartanType cartan = CartanType::parse(o.type);
  const auto primes = torsion_primes(cartan);
  if (e.json()) {
    e.document(type_query("torsion-primes", cartan), render::torsion_json(cartan, primes));
  } else {
    bool first = true;
    for (unsigned long p : primes) {
      e.text() << (first ? "" : " ") << p;
      first = false;
    }
    e.text() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, Emitter& e, std::ostream& err) {
  std::vector<std::pair<CartanType, unsigned>> jobs;
  if (o.all) {
    jobs = verify_all_matrix();
  } else {
    if (o.type.empty()) {
      err << "verify: --type is required unless --all is given\n";
      return kExitUsage;
    }
    jobs.emplace_back(CartanType::parse(o.type), o.n);
  }
  std::vector<CheckResult> results;
  for (const auto& [cartan, n] : jobs) {
    auto r = verify_type(cartan, n);
    results.insert(results.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  const bool ok = all_passed(results);
  if (e.json()) {
    Json q;
    q["command"] = "verify";
    if (o.all) {
      q["all"] = true;
    } else {
      q["type"] = o.type;
      q["n"] = o.n;
    }
    Json checks = Json::array();
    for (const auto& r : results) {
      Json c;
      c["name"] = r.name;
      c["status"] = r.informational ? "info" : (r.passed ? "pass" : "fail");
      c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    Json res;
    res["passed"] = ok;
    res["checks"] = std::move(checks);
    e.document(q, res);
  } else {
    for (const auto& r : results)
      e.text() << (r.informational ? "INFO " : (r.passed ? "PASS " : "FAIL ")) << r.name << ": "
               << r.detail << "\n";
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    e.text() << results.size() << " checks, " << failed << " failed\n";
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of the generic component of the commuting variety Hom(Z^n, G)", "commvar"};
  app.require_subcommand(1);
  Options o;

  const std::string type_help = "Cartan type: " + std::string(CartanType::grammar);
  auto format_opt = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(choices)));
  };
  auto type_opt = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--type", o.type, type_help);
    if (required) opt->required();
  };

  auto* classes = app.add_subcommand("classes", "Weyl group conjugacy classes with det(1 - s w)");
  type_opt(classes);
  format_opt(classes, {"json", "plain"});

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of R_{n,G}");
  type_opt(poincare);
  poincare->add_option("--n", o.n, "Number of commuting elements")->required();
  format_opt(poincare, {"json", "plain", "latex"});

  auto* equivariant = app.add_subcommand("equivariant", "Equivariant Hilbert series of R_{n,G}");
  type_opt(equivariant);
  equivariant->add_option("--n", o.n, "Number of commuting elements")->required();
  equivariant->add_option("--truncate", o.truncate, "Expand the series through this degree")
      ->capture_default_str();
  format_opt(equivariant, {"json", "plain", "latex"});

  auto* betti_cmd = app.add_subcommand("betti", "One Betti number of R_{n,G}");
  type_opt(betti_cmd);
  betti_cmd->add_option("--n", o.n, "Number of commuting elements")->required();
  betti_cmd->add_option("--degree", o.degree, "Cohomological degree")->required();
  format_opt(betti_cmd, {"json", "plain"});

  auto* char_table_cmd = app.add_subcommand("char-table", "Character table of the symmetric group S_m");
  char_table_cmd->add_option("--m", o.m, "Symmetric group degree")->required();
  format_opt(char_table_cmd, {"json", "plain", "latex"});

  auto* char_poly = app.add_subcommand("char-poly", "Character-coefficient factors for type A");
  type_opt(char_poly);
  char_poly->add_option("--n", o.n, "Number of commuting elements")->required();
  format_opt(char_poly, {"json", "plain", "latex"});

  auto* torsion = app.add_subcommand("torsion-primes", "Primes at which integral torsion can occur");
  type_opt(torsion);
  format_opt(torsion, {"json", "plain"});

  auto* verify = app.add_subcommand("verify", "Run the invariant checks; nonzero exit on failure");
  type_opt(verify, false);
  verify->add_option("--n", o.n, "Number of commuting elements");
  verify->add_flag("--all", o.all, "Check {A1..A4, B2, B3, C3, D4} x n in {0..3}");
  format_opt(verify, {"json", "plain"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter emitter(out, o.format);
  try {
    if (*classes) return cmd_classes(o, emitter);
    if (*poincare) return cmd_poincare(o, emitter);
    if (*equivariant) return cmd_equivariant(o, emitter);
    if (*betti_cmd) return cmd_betti(o, emitter);
    if (*char_table_cmd) return cmd_char_table(o, emitter);
    if (*char_poly) return cmd_char_poly(o, emitter);
    if (*torsion) return cmd_torsion(o, emitter);
    if (*verify) return cmd_verify(o, emitter, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace commvar::cli
