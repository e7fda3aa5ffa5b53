#include "confcoh/cli.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "confcoh/annihilation.hpp"
#include "confcoh/calculus.hpp"
#include "confcoh/cocycles.hpp"
#include "confcoh/engine.hpp"
#include "confcoh/extensions.hpp"
#include "confcoh/serialize.hpp"

namespace confcoh {

namespace {

struct Options {
  std::string algebra;
  std::string module;
  std::string spec_file;
  std::string format = "table";
  std::uint64_t seed = 1;
  std::string variant;
  std::optional<int> qmin;
  std::optional<int> qmax;
  std::optional<int> D;
  bool representatives = false;
  int trials = 10;
  int levels = 6;
  int degree = 3;
  std::string cocycle;
  std::string kind = "algebra";
};

// Resolved job: algebra, module and the builtin algebra name ("" if inline).
struct Job {
  ConformalAlgebra A;
  ConformalModule M;
  std::string algebra_name;
  Json spec;
};

struct Row {
  std::string name;
  bool ok = true;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string where_string(const std::vector<int>& where, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (i) s += ", ";
    const int w = where[i];
    s += w >= 0 && w < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(w)] : std::to_string(w);
  }
  return s + ")";
}

Row check_row(const std::string& name, const CheckResult& r, const std::vector<std::string>& names) {
  Row row{name, r.ok, ""};
  if (!r.ok) row.detail = "at " + where_string(r.where, names) + ": " + r.residual;
  return row;
}

std::vector<Row> algebra_checks(const ConformalAlgebra& A) {
  std::vector<Row> rows;
  if (A.kind() == AlgebraKind::Associative) {
    rows.push_back(check_row("associativity", check_associativity(A), A.gens()));
    return rows;
  }
  if (A.kind() == AlgebraKind::Lie) rows.push_back(check_row("skew-symmetry", check_skew_symmetry(A), A.gens()));
  rows.push_back(check_row("jacobi", check_jacobi(A), A.gens()));
  return rows;
}

bool all_ok(const std::vector<Row>& rows) {
  for (const auto& r : rows)
    if (!r.ok) return false;
  return true;
}

void print_rows(std::ostream& out, const std::string& format, const std::string& title, const std::vector<Row>& rows) {
  if (format == "csv") {
    out << "check,result,detail\n";
    for (const auto& r : rows) out << '"' << r.name << "\"," << (r.ok ? "pass" : "fail") << ",\"" << r.detail << "\"\n";
  } else if (format == "json") {
    Json j;
    j["subject"] = title;
    j["ok"] = all_ok(rows);
    j["checks"] = Json::array();
    for (const auto& r : rows) j["checks"].push_back({{"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    out << j.dump(2) << "\n";
  } else {
    out << title << "\n";
    for (const auto& r : rows) {
      out << "  " << (r.ok ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
  }
}

Job resolve(const Options& o, bool need_module) {
  Json spec = Json::object();
  if (!o.spec_file.empty()) {
    spec = parse_json(read_file(o.spec_file));
    if (!spec.is_object()) throw SpecError("spec file must hold a JSON object");
  }
  Json aj = o.algebra.empty() ? spec.value("algebra", Json()) : Json(o.algebra);
  if (aj.is_null()) throw SpecError("no algebra given (use --algebra or a spec file)");
  Json mj = o.module.empty() ? spec.value("module", Json()) : Json(o.module);
  if (mj.is_null()) {
    if (need_module) throw SpecError("no module given (use --module or a spec file)");
    mj = "trivial";
  }
  ConformalAlgebra A = algebra_from_spec(aj);
  const std::string name = aj.is_string() ? aj.get<std::string>() : "";
  // Inline structures must satisfy the axioms before anything runs.
  if (!aj.is_string() && !all_ok(algebra_checks(A))) throw std::domain_error("inline algebra fails its axioms");
  ConformalModule M = module_from_spec(mj, A, name);
  if (!mj.is_string() && !check_module(A, M).ok) throw std::domain_error("inline module fails the module axiom");
  return Job{std::move(A), std::move(M), name, std::move(spec)};
}

int cmd_check(const Options& o, std::ostream& out) {
  Json spec = Json::object();
  if (!o.spec_file.empty()) spec = parse_json(read_file(o.spec_file));
  Json aj = o.algebra.empty() ? spec.value("algebra", Json()) : Json(o.algebra);
  if (aj.is_null()) throw SpecError("no algebra given (use --algebra or a spec file)");
  const ConformalAlgebra A = algebra_from_spec(aj);
  std::vector<Row> rows = algebra_checks(A);
  Json mj = o.module.empty() ? spec.value("module", Json()) : Json(o.module);
  std::string title = A.name();
  if (!mj.is_null()) {
    const ConformalModule M = module_from_spec(mj, A, aj.is_string() ? aj.get<std::string>() : "");
    rows.push_back(check_row("module " + M.name(), check_module(A, M), A.gens()));
    title += " / " + M.name();
  }
  print_rows(out, o.format, title, rows);
  return all_ok(rows) ? kExitOk : kExitSpec;
}

Variant pick_variant(const Options& o, const Json& spec) {
  const std::string v = !o.variant.empty() ? o.variant : spec.value("variant", std::string("reduced"));
  try {
    return parse_variant(v);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

ComplexSpec complex_spec(const Job& job, Variant v) {
  if (v == Variant::Hochschild || v == Variant::HochschildReduced || v == Variant::Cyclic) {
    if (job.A.kind() != AlgebraKind::Associative) throw SpecError(variant_name(v) + " needs an associative algebra");
    return ComplexSpec{job.A, job.M, v, regular_bimodule(job.A)};
  }
  if (v == Variant::Leibniz && job.A.kind() == AlgebraKind::Associative) throw SpecError("leibniz needs a Lie or Leibniz algebra");
  if (is_skew_variant(v) && job.A.kind() != AlgebraKind::Lie) throw SpecError(variant_name(v) + " needs a Lie conformal algebra");
  return ComplexSpec{job.A, job.M, v, std::nullopt};
}

int cmd_betti(const Options& o, std::ostream& out, std::ostream& err) {
  const Job job = resolve(o, false);
  const Variant v = pick_variant(o, job.spec);
  const ComplexSpec spec = complex_spec(job, v);
  const int qmin = o.qmin.value_or(job.spec.value("qmin", 0));
  const int qmax = o.qmax.value_or(job.spec.value("qmax", 3));
  if (qmin < 0 || qmax < qmin) throw SpecError("need 0 <= qmin <= qmax");
  CochainSpace space(spec);
  int D = o.D.value_or(job.spec.value("D", -1));
  if (D < 0) D = space.grading().graded() ? 8 : 10;
  const BettiTable t = truncation_sweep(space, qmin, qmax, D, o.representatives);
  const auto& basis = spec.bimodule ? spec.bimodule->basis : spec.module.basis();
  if (o.format == "csv") {
    out << format_csv(t);
  } else if (o.format == "json") {
    out << format_json(t, spec.algebra.gens(), basis) << "\n";
  } else {
    out << format_table(t);
    for (const auto& r : t.rows)
      for (const auto& c : r.representatives) out << "  rep H^" << r.q << ": " << format_cochain(c, spec.algebra.gens(), basis) << "\n";
  }
  bool stable = true;
  for (const auto& r : t.rows)
    if (!r.stabilized) {
      stable = false;
      err << "warning: H^" << r.q << " did not stabilize over D = " << D << ".." << D + 2 << "\n";
    }
  return stable ? kExitOk : kExitWarning;
}

AlgValue random_element(const ConformalAlgebra& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  AlgValue a(static_cast<std::size_t>(A.size()));
  for (auto& c : a) c = RatPoly(coef(rng)) + RatPoly(coef(rng)) * RatPoly::del();
  return a;
}

int cmd_cartan(const Options& o, std::ostream& out) {
  const Job job = resolve(o, false);
  if (job.A.kind() != AlgebraKind::Lie) throw SpecError("cartan needs a Lie conformal algebra");
  CochainSpace s(ComplexSpec{job.A, job.M, Variant::LieBasic, std::nullopt});
  std::mt19937_64 rng(o.seed);
  std::vector<Row> rows;
  for (int q = 1; q <= o.qmax.value_or(3); ++q) {
    Row cartan{"d iota + iota d = theta, q=" + std::to_string(q), true, ""};
    Row commute{"d theta = theta d, q=" + std::to_string(q), true, ""};
    for (int t = 0; t < o.trials; ++t) {
      const Cochain g = random_cochain(s, q, o.degree, rng);
      const AlgValue a = random_element(job.A, rng);
      const Cochain theta = lie_theta(job.A, job.M, a, g);
      const Cochain lhs = d_basic(job.A, job.M, contract_lambda(job.A, a, g)) +
                          contract_lambda(job.A, a, d_basic(job.A, job.M, g));
      if (cartan.ok && lhs != theta) {
        cartan.ok = false;
        cartan.detail = "trial " + std::to_string(t);
      }
      if (commute.ok && d_basic(job.A, job.M, theta) != lie_theta(job.A, job.M, a, d_basic(job.A, job.M, g))) {
        commute.ok = false;
        commute.detail = "trial " + std::to_string(t);
      }
    }
    rows.push_back(cartan);
    rows.push_back(commute);
  }
  print_rows(out, o.format, job.A.name() + " / " + job.M.name() + ", " + std::to_string(o.trials) + " trials", rows);
  return all_ok(rows) ? kExitOk : kExitWarning;
}

int cmd_annih(const Options& o, std::ostream& out) {
  const Job job = resolve(o, false);
  if (job.A.kind() != AlgebraKind::Lie) throw SpecError("annih-compare needs a Lie conformal algebra");
  CochainSpace s(ComplexSpec{job.A, job.M, Variant::LieBasic, std::nullopt});
  std::mt19937_64 rng(o.seed);
  std::vector<Row> rows;
  for (int q = 0; q <= o.qmax.value_or(3); ++q) {
    Row row{"phi(d g) = d_CE phi(g), q=" + std::to_string(q), true, ""};
    long checked = 0;
    long nonzero = 0;
    for (int t = 0; t < o.trials; ++t) {
      const Cochain g = random_cochain(s, q, o.degree, rng);
      const BridgeReport r = check_bridge(job.A, job.M, g, o.levels);
      checked += r.checked;
      nonzero += r.nonzero;
      if (row.ok && r.failures > 0) {
        row.ok = false;
        row.detail = r.first_failure;
      }
    }
    if (row.ok) row.detail = std::to_string(checked) + " tuples, " + std::to_string(nonzero) + " nonzero";
    rows.push_back(row);
  }
  print_rows(out, o.format, job.A.name() + " / " + job.M.name() + ", levels <= " + std::to_string(o.levels), rows);
  return all_ok(rows) ? kExitOk : kExitWarning;
}

// Named cocycles: central (Vir / C), bracket (Cur sl2 / V4, Cur sl3 / Sym^3), or a JSON file.
Cochain named_cocycle(const std::string& which, const Job& job, const std::vector<std::string>& basis, int q) {
  if (which == "central") {
    if (job.algebra_name != "vir" || job.M.dim() != 1) throw SpecError("central needs vir with a one-dimensional module");
    Cochain c(Variant::LieReduced, 2, 1);
    c.values[{0, 0}] = {RatPoly::lam(1).pow(3) - RatPoly::lam(2).pow(3)};
    return c;
  }
  if (which == "bracket") {
    if (job.algebra_name == "cur:sl2" && job.M.dim() == 5)
      return sl2_example_cocycle(2, sl2_top_projection(2), {}, sl2_irrep(4));
    if (job.algebra_name == "cur:sl3" && job.M.dim() == 10) {
      const LiePresentation g = LiePresentation::sl3();
      const LieRep sym3 = sym_power(sl3_standard(), 3);
      const auto maps = equivariant_maps(g, exterior_square(adjoint_rep(g)), sym3);
      return current_h2_cocycle(g, maps.at(0), sym3);
    }
    throw SpecError("bracket needs cur:sl2 with mu:V4 or cur:sl3 with mu:sym3");
  }
  Json j;
  if (which.empty()) {
    if (!job.spec.contains("cocycle")) throw SpecError("no cocycle given (use --cocycle or a spec file)");
    j = job.spec.at("cocycle");
  } else {
    j = parse_json(read_file(which));
  }
  Cochain c = cochain_from_json(j, job.A.gens(), basis);
  if (c.q != q) throw SpecError("expected a " + std::to_string(q) + "-cochain");
  return c;
}

int cmd_extend(const Options& o, std::ostream& out) {
  const Job job = resolve(o, true);
  if (job.A.kind() != AlgebraKind::Lie) throw SpecError("extend needs a Lie conformal algebra");
  std::vector<Row> rows;
  if (o.kind == "algebra") {
    const Cochain c = named_cocycle(o.cocycle, job, job.M.basis(), 2);
    try {
      const ExtendedAlgebra E = extend_algebra(job.A, job.M, c);
      rows.push_back({"abelian extension is a Lie conformal algebra", true, ""});
      for (int i = 0; i < job.A.size(); ++i)
        for (int k = i; k < job.A.size(); ++k) {
          const ModValue v = E.c_lambda(i, k);
          if (!is_zero(v))
            rows.push_back({"c_lam(" + job.A.gens()[static_cast<std::size_t>(i)] + ", " +
                                job.A.gens()[static_cast<std::size_t>(k)] + ")",
                            true, format_value(v, job.M.basis())});
        }
    } catch (const NotACocycle& e) {
      rows.push_back({"abelian extension is a Lie conformal algebra", false, e.what()});
    }
  } else if (o.kind == "module") {
    const Cochain f = named_cocycle(o.cocycle, job, job.M.basis(), 0);
    try {
      const TrivialExtension E = extend_module_by_trivial(job.A, job.M, value_at(f, {}));
      rows.push_back(check_row("extension of C by " + job.M.name() + " is a module", E.check_module(job.A), job.A.gens()));
      for (int i = 0; i < job.A.size(); ++i)
        rows.push_back({"gamma_lam(" + job.A.gens()[static_cast<std::size_t>(i)] + ")", true,
                        format_value(E.gamma[static_cast<std::size_t>(i)], job.M.basis())});
    } catch (const NotReducedCocycle& e) {
      rows.push_back({"extension of C by " + job.M.name() + " is a module", false, e.what()});
    }
  } else {
    throw SpecError("--kind must be algebra or module");
  }
  print_rows(out, o.format, job.A.name() + " / " + job.M.name(), rows);
  return all_ok(rows) ? kExitOk : kExitWarning;
}

int cmd_deform(const Options& o, std::ostream& out) {
  Options adj = o;
  adj.module = "adjoint";
  const Job job = resolve(adj, false);
  if (job.A.kind() != AlgebraKind::Lie) throw SpecError("deform needs a Lie conformal algebra");
  CochainSpace s(ComplexSpec{job.A, job.M, Variant::LieReduced, std::nullopt});
  std::vector<Row> rows;
  if (!o.cocycle.empty() || job.spec.contains("cocycle")) {
    const Cochain g = named_cocycle(o.cocycle, job, job.M.basis(), 2);
    rows.push_back(check_row("Jacobi mod eps^2", deform(job.A, g).check_first_order(), job.A.gens()));
    rows.push_back({"2-cocycle in C(A, A)", verify_cocycle(s, g).cocycle, ""});
  } else {
    // Random coboundaries and random cochains: validity must match the cocycle test.
    std::mt19937_64 rng(o.seed);
    int valid = 0;
    int agree = 0;
    for (int t = 0; t < o.trials; ++t) {
      const Cochain g = t % 2 == 0 ? s.differential(random_cochain(s, 1, o.degree, rng))
                                   : random_cochain(s, 2, o.degree, rng, 2);
      const bool ok = deform(job.A, g).check_first_order().ok;
      valid += ok;
      agree += ok == verify_cocycle(s, g).cocycle;
    }
    rows.push_back({"validity <=> cocycle", agree == o.trials,
                    std::to_string(agree) + "/" + std::to_string(o.trials) + " agree, " + std::to_string(valid) + " valid"});
  }
  print_rows(out, o.format, job.A.name() + " deformations", rows);
  return all_ok(rows) ? kExitOk : kExitWarning;
}

void common(CLI::App* sub, Options& o) {
  sub->add_option("--algebra", o.algebra, "vir, cur:sl2, cur:sl3, cur:abelian:<n>, cur:dual, leibniz");
  sub->add_option("--module", o.module, "trivial, ca:<a>, mda:<delta>,<alpha>, adjoint, mu:<rep>");
  sub->add_option("--spec", o.spec_file, "JSON spec file (format in README.md)");
  sub->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  sub->add_option("--seed", o.seed, "seed for randomized suites");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of Lie conformal algebras", "confcoh"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "check the algebra and module axioms");
  common(check, o);

  auto* betti = app.add_subcommand("betti", "cohomology dimensions");
  common(betti, o);
  betti->add_option("--variant", o.variant, "basic, reduced, leibniz, hochschild, hochschild-reduced, cyclic");
  betti->add_option("--qmin", o.qmin);
  betti->add_option("--qmax", o.qmax);
  betti->add_option("-D,--bound", o.D, "degree bound (default 8 graded, 10 filtered)");
  betti->add_flag("--representatives", o.representatives, "print cocycle representatives (graded complexes)");

  auto* cartan = app.add_subcommand("cartan", "Cartan identity on random cochains");
  common(cartan, o);
  cartan->add_option("--trials", o.trials);
  cartan->add_option("--qmax", o.qmax);
  cartan->add_option("--degree", o.degree, "maximal slice degree of the random cochains");

  auto* annih = app.add_subcommand("annih-compare", "compare with the annihilation algebra complex");
  common(annih, o);
  annih->add_option("--trials", o.trials);
  annih->add_option("--qmax", o.qmax);
  annih->add_option("--levels", o.levels, "maximal level of the arguments");
  annih->add_option("--degree", o.degree, "maximal slice degree of the random cochains");

  auto* extend = app.add_subcommand("extend", "build an extension from a cocycle");
  common(extend, o);
  extend->add_option("--cocycle", o.cocycle, "central, bracket or a cochain JSON file");
  extend->add_option("--kind", o.kind, "algebra (abelian extension by the module) or module (extension of C by the module)");

  auto* def = app.add_subcommand("deform", "first-order deformations");
  common(def, o);
  def->add_option("--cocycle", o.cocycle, "2-cochain JSON file with values in the algebra");
  def->add_option("--trials", o.trials);
  def->add_option("--degree", o.degree);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*betti) return cmd_betti(o, out, err);
    if (*cartan) return cmd_cartan(o, out);
    if (*annih) return cmd_annih(o, out);
    if (*extend) return cmd_extend(o, out);
    if (*def) return cmd_deform(o, out);
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSpec;
  }
  return kExitSpec;
}

}  // namespace confcoh
