// nga: command-line front end for the enlarged Galilei / Newton-Hooke engine.
//
// Exit codes: 0 when every requested check passes, 1 when a check fails,
// 2 on usage or input errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "nga/newton_hooke.hpp"
#include "nga/parse.hpp"
#include "nga/report.hpp"

namespace {

using namespace nga;

struct Options {
  int n = -1;  // -1: derived from the twist levels
  int dim = 3;
  std::string variant = "galilei";
  std::string twist;  // empty: subcommand default
  int tn = 1, tm = 1;
  int i = 1, k = 2, l = 3;
  int order = 8;
  std::string format = "text";
  std::string alpha_file;
  std::vector<std::string> sets;
  std::vector<std::string> gens;
  std::string f, g;
  std::string x, y;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "Enlargement level N (default: max(1, tn, tm))");
  app->add_option("--dim", o.dim, "Spatial dimension d")->capture_default_str();
  app->add_option("--variant", o.variant, "galilei | nh+ | nh-")
      ->check(CLI::IsMember({"galilei", "nh+", "nh-"}))
      ->capture_default_str();
  app->add_option("--format", o.format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  app->add_option("--set", o.sets, "Substitute a parameter on output: name=p/q");
}

void add_twist(CLI::App* app, Options& o) {
  app->add_option("--twist", o.twist, "nm | single")->check(CLI::IsMember({"nm", "single"}));
  app->add_option("--tn", o.tn, "Twist level n")->capture_default_str();
  app->add_option("--tm", o.tm, "Second twist level m (nm family)")->capture_default_str();
  app->add_option("--i", o.i, "Boost index i (single family)")->capture_default_str();
  app->add_option("--k", o.k, "Rotation index k (single family)")->capture_default_str();
  app->add_option("--l", o.l, "Rotation index l (single family)")->capture_default_str();
  app->add_option("--alpha-matrix", o.alpha_file,
                  "JSON file holding an antisymmetric d x d matrix of parameters");
}

AlgebraSpec make_spec(const Options& o, bool uses_twist) {
  AlgebraSpec spec;
  spec.dim = o.dim;
  spec.variant = parse_variant(o.variant);
  spec.n = o.n;
  if (spec.n < 0) {
    spec.n = 1;
    if (uses_twist) spec.n = std::max({1, o.tn, o.twist == "single" ? 0 : o.tm});
  }
  spec.validate();
  return spec;
}

std::optional<AlphaMatrix> load_alpha(const Options& o) {
  if (o.alpha_file.empty()) return std::nullopt;
  std::ifstream in(o.alpha_file);
  if (!in) throw UsageError("cannot open alpha matrix file '" + o.alpha_file + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("alpha matrix file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_array()) throw UsageError("alpha matrix must be a JSON array of rows");
  std::vector<std::vector<ScalarSum>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError("alpha matrix rows must be arrays");
    std::vector<ScalarSum> r;
    for (const auto& cell : row) {
      if (cell.is_number_integer())
        r.emplace_back(static_cast<int>(cell.get<long>()));
      else if (cell.is_string())
        r.push_back(parse_scalar(cell.get<std::string>()));
      else
        throw UsageError("alpha matrix entries must be integers or expression strings");
    }
    rows.push_back(std::move(r));
  }
  if (static_cast<int>(rows.size()) != o.dim)
    throw UsageError("alpha matrix must be " + std::to_string(o.dim) + " x " +
                     std::to_string(o.dim));
  return AlphaMatrix::from_rows(rows);
}

std::map<std::string, Rational> load_sets(const Options& o) {
  std::map<std::string, Rational> out;
  for (const std::string& s : o.sets) out.insert(parse_assignment(s));
  return out;
}

TwistChoice twist_choice(const Options& o, const std::string& fallback) {
  TwistChoice c;
  c.family = (o.twist.empty() ? fallback : o.twist) == "single" ? TwistChoice::Family::Single
                                                                 : TwistChoice::Family::NM;
  c.n = o.tn;
  c.m = o.tm;
  c.i = o.i;
  c.k = o.k;
  c.l = o.l;
  return c;
}

template <class T>
T apply_sets(const T& value, const std::map<std::string, Rational>& sets) {
  return sets.empty() ? value : value.substitute(sets);
}

int emit(const Document& doc, const Options& o) {
  std::cout << render(doc, parse_format(o.format));
  return exit_code(doc);
}

Document base_document(const AlgebraSpec& spec, const Options& o) {
  Document doc;
  doc.spec = spec;
  doc.substitutions = load_sets(o);
  return doc;
}

void selected_generators(const Options& o, const Enveloping& env,
                         std::vector<EnvElement>& elements, std::vector<std::string>& names) {
  if (o.gens.empty()) {
    for (GenIndex g = 0; g < env.algebra().size(); ++g) {
      elements.push_back(EnvElement::generator(g));
      names.push_back(env.algebra().generator(g).name());
    }
  } else {
    for (const std::string& s : o.gens) {
      elements.push_back(parse_env(s, env));
      names.push_back(s);
    }
  }
}

int run_verify_cmd(const Options& o) {
  const AlgebraSpec spec = make_spec(o, false);
  VerifyOptions vo;
  vo.spec = spec;
  vo.order = o.order;
  vo.alpha = load_alpha(o);
  if (!o.twist.empty()) vo.twists.push_back(twist_choice(o, o.twist));
  VerifyReport r = run_verify(vo);
  Document doc = base_document(spec, o);
  doc.checks = std::move(r.checks);
  doc.tables = std::move(r.tables);
  doc.list_tables = false;
  doc.notes = std::move(r.notes);
  return emit(doc, o);
}

int run_spacetime_cmd(const Options& o) {
  const AlgebraSpec spec = make_spec(o, true);
  const LieAlgebra alg(spec);
  const Representation rep(alg);
  const RMatrix r = make_rmatrix(alg, twist_choice(o, "nm"), load_alpha(o));
  Document doc = base_document(spec, o);
  doc.tables.push_back(spacetime_table(rep, r));
  doc.checks.push_back(check_spacetime(doc.tables.back()));
  doc.notes = alg.notes();
  return emit(doc, o);
}

int run_coproduct_cmd(const Options& o) {
  const AlgebraSpec spec = make_spec(o, true);
  const LieAlgebra alg(spec);
  const Enveloping env(alg);
  const TwistChoice choice = twist_choice(o, "nm");
  const Twist twist{make_rmatrix(alg, choice, load_alpha(o)), o.order};
  Document doc = base_document(spec, o);
  std::vector<EnvElement> elements;
  std::vector<std::string> names;
  selected_generators(o, env, elements, names);
  for (std::size_t n = 0; n < elements.size(); ++n) {
    const SeriesResult s = twisted_coproduct(env, elements[n], twist);
    const TensorElement v = apply_sets(s.value, doc.substitutions);
    doc.results.push_back({"Delta_a(" + names[n] + ")", v.str(alg),
                           "\\Delta_{\\alpha}(" + elements[n].latex(alg) +
                               ") = " + v.latex(alg),
                           s.terminated});
    // For the single family a boost along k has a known rotation series.
    if (choice.family == TwistChoice::Family::Single && elements[n].size() == 1) {
      const auto& [word, c] = *elements[n].terms().begin();
      if (word.size() == 1 && c == ScalarSum(1)) {
        const Generator& gen = alg.generator(word[0]);
        if (gen.kind == Generator::Kind::Boost && gen.a == choice.k)
          doc.checks.push_back(check_rotation_series(env, twist, gen.b));
      }
    }
  }
  doc.notes = alg.notes();
  return emit(doc, o);
}

int run_antipode_cmd(const Options& o) {
  const AlgebraSpec spec = make_spec(o, true);
  const LieAlgebra alg(spec);
  const Enveloping env(alg);
  const Twist twist{make_rmatrix(alg, twist_choice(o, "nm"), load_alpha(o)), o.order};
  const TwistUnit unit = twist_unit(env, twist);
  Document doc = base_document(spec, o);
  doc.results.push_back({"u", unit.u.str(alg), "u = " + unit.u.latex(alg), std::nullopt});
  std::vector<EnvElement> elements;
  std::vector<std::string> names;
  selected_generators(o, env, elements, names);
  for (std::size_t n = 0; n < elements.size(); ++n) {
    const EnvElement v = apply_sets(twisted_antipode(env, elements[n], twist, unit), doc.substitutions);
    doc.results.push_back({"S_a(" + names[n] + ")", v.str(alg),
                           "S_{\\alpha}(" + elements[n].latex(alg) + ") = " +
                               v.latex(alg),
                           std::nullopt});
  }
  doc.checks.push_back(check_antipode(env, twist));
  doc.notes = alg.notes();
  return emit(doc, o);
}

int run_algebra_cmd(const Options& o) {
  const AlgebraSpec spec = make_spec(o, false);
  const LieAlgebra alg(spec);
  Document doc = base_document(spec, o);
  const auto count = static_cast<GenIndex>(alg.size());
  for (GenIndex x = 0; x < count; ++x)
    for (GenIndex y = x + 1; y < count; ++y) {
      const LinearCombination& b = alg.bracket(x, y);
      if (b.empty()) continue;
      const Generator& gx = alg.generator(x);
      const Generator& gy = alg.generator(y);
      std::string latex;
      for (const auto& [g, c] : b) {
        const SignedText s = signed_latex(c);
        latex += (s.negative ? " - " : (latex.empty() ? "" : " + "));
        if (!s.is_unit()) latex += s.body + " ";
        latex += alg.generator(g).latex();
      }
      doc.results.push_back({"[" + gx.name() + "," + gy.name() + "]", alg.render(b),
                             "[" + gx.latex() + ", " + gy.latex() + "] = " + latex, std::nullopt});
    }
  doc.checks.push_back(check_jacobi(alg));
  doc.notes = alg.notes();
  return emit(doc, o);
}

int run_bracket_cmd(const Options& o) {
  const AlgebraSpec spec = make_spec(o, false);
  const LieAlgebra alg(spec);
  const Enveloping env(alg);
  const EnvElement x = parse_env(o.x, env), y = parse_env(o.y, env);
  const EnvElement b = apply_sets(env.multiply(x, y) - env.multiply(y, x), load_sets(o));
  Document doc = base_document(spec, o);
  doc.results.push_back({"[" + o.x + "," + o.y + "]", b.str(alg),
                         "[" + x.latex(alg) + ", " + y.latex(alg) + "] = " + b.latex(alg),
                         std::nullopt});
  doc.notes = alg.notes();
  return emit(doc, o);
}

int run_star_cmd(const Options& o) {
  const AlgebraSpec spec = make_spec(o, true);
  const LieAlgebra alg(spec);
  const Representation rep(alg);
  const RMatrix r = make_rmatrix(alg, twist_choice(o, "nm"), load_alpha(o));
  const StarProduct star(rep, r);
  const FunctionElement f = parse_function(o.f, rep.mode(), spec.dim);
  const FunctionElement g = parse_function(o.g, rep.mode(), spec.dim);
  Document doc = base_document(spec, o);
  const FunctionElement fg = apply_sets(star.product(f, g), doc.substitutions);
  const FunctionElement comm = apply_sets(star.commutator(f, g), doc.substitutions);
  const std::string lf = f.latex(), lg = g.latex();
  doc.results.push_back(
      {"f * g", fg.str(), "(" + lf + ") \\star (" + lg + ") = " + fg.latex(), std::nullopt});
  doc.results.push_back({"[f, g]", comm.str(),
                         "[" + lf + ", " + lg + "]_{\\star} = " + comm.latex(), std::nullopt});
  return emit(doc, o);
}

int run_nh_cmd(const Options& o) {
  AlgebraSpec spec = make_spec(o, false);
  if (!spec.newton_hooke()) {
    spec.variant = Variant::NewtonHookePlus;
    spec.n = kMaxNewtonHookeLevel;
  }
  const NHSign sign = nh_sign(spec.variant);
  Document doc = base_document(spec, o);
  for (int n = 0; n <= kMaxNewtonHookeLevel; ++n) {
    const FunctionElement f = apply_sets(nh_coefficient(n, sign), doc.substitutions);
    doc.results.push_back({"f_" + std::to_string(n), f.str(),
                           "f_{" + std::to_string(n) + "}(t) = " + f.latex(), std::nullopt});
  }
  for (int n = 0; n <= kMaxNewtonHookeLevel; ++n) {
    const FlatLimitReport fl = flat_limit_check(n, sign, std::max(o.order, n));
    doc.results.push_back({"taylor(f_" + std::to_string(n) + ")",
                           fl.expansion.str() + " + O(t^" + std::to_string(fl.order + 1) + ")",
                           "f_{" + std::to_string(n) + "}(t) = " + fl.expansion.latex() +
                               " + O(t^{" + std::to_string(fl.order + 1) + "})",
                           std::nullopt});
  }
  doc.checks.push_back(check_nh_recurrence());
  doc.checks.push_back(check_flat_limit(o.order));
  return emit(doc, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nga: enlarged Galilei Hopf algebras, twists and quantum space-times"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  add_common(verify, o);
  add_twist(verify, o);
  verify->add_option("--order", o.order, "Truncation order K")->capture_default_str();

  auto* spacetime = app.add_subcommand("spacetime", "Quantum space-time commutator table");
  add_common(spacetime, o);
  add_twist(spacetime, o);

  auto* coproduct = app.add_subcommand("coproduct", "Twisted coproducts");
  add_common(coproduct, o);
  add_twist(coproduct, o);
  coproduct->add_option("--order", o.order, "Truncation order K")->capture_default_str();
  coproduct->add_option("--gen", o.gens, "Element of U(g), e.g. G:2:0 or H*G:1:1 (default: all generators)");

  auto* antipode = app.add_subcommand("antipode", "Twisted antipodes");
  add_common(antipode, o);
  add_twist(antipode, o);
  antipode->add_option("--order", o.order, "Truncation order K")->capture_default_str();
  antipode->add_option("--gen", o.gens, "Element of U(g) (default: all generators)");

  auto* algebra = app.add_subcommand("algebra", "Bracket table and Jacobi check");
  add_common(algebra, o);

  auto* bracket = app.add_subcommand("bracket", "Commutator of two elements of U(g)");
  add_common(bracket, o);
  bracket->add_option("x", o.x, "First element")->required();
  bracket->add_option("y", o.y, "Second element")->required();

  auto* star = app.add_subcommand("star", "Star product and star commutator of two functions");
  add_common(star, o);
  add_twist(star, o);
  star->add_option("f", o.f, "First function, e.g. x1*t")->required();
  star->add_option("g", o.g, "Second function")->required();

  auto* nh = app.add_subcommand("nh", "Newton-Hooke coefficient functions and flat limit");
  add_common(nh, o);
  nh->add_option("--order", o.order, "Taylor order in t")->capture_default_str();

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
    if (o.order < 0) throw UsageError("--order must be non-negative");
    if (*verify) return run_verify_cmd(o);
    if (*spacetime) return run_spacetime_cmd(o);
    if (*coproduct) return run_coproduct_cmd(o);
    if (*antipode) return run_antipode_cmd(o);
    if (*algebra) return run_algebra_cmd(o);
    if (*bracket) return run_bracket_cmd(o);
    if (*star) return run_star_cmd(o);
    if (*nh) return run_nh_cmd(o);
  } catch (const UsageError& e) {
    std::cerr << "nga: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "nga: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "nga: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
