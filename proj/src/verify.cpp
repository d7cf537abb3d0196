#include "nga/verify.hpp"

#include <algorithm>

#include "nga/newton_hooke.hpp"

namespace nga {

namespace {

std::string count_text(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

std::map<std::string, Rational> zero_parameters(const RMatrix& r) {
  std::map<std::string, Rational> out;
  for (const std::string& p : r.parameters()) out[p] = 0;
  return out;
}

CheckReport basic_check(std::string name, std::string formula, bool passed) {
  CheckReport c;
  c.name = std::move(name);
  c.formula = std::move(formula);
  c.passed = passed;
  return c;
}

CheckReport twist_check(std::string name, std::string formula, const Twist& twist) {
  CheckReport c;
  c.name = std::move(name);
  c.formula = std::move(formula);
  c.twist = twist.r.label();
  c.order = twist.order;
  return c;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

RMatrix make_rmatrix(const LieAlgebra& algebra, const TwistChoice& choice,
                     const std::optional<AlphaMatrix>& alpha) {
  if (choice.family == TwistChoice::Family::NM)
    return RMatrix::nm(algebra, choice.n, choice.m,
                       alpha ? *alpha : AlphaMatrix::symbolic(algebra.spec().dim));
  return RMatrix::single(algebra, choice.n, choice.i, choice.k, choice.l);
}

CheckReport check_jacobi(const LieAlgebra& algebra) {
  const std::size_t g = algebra.size();
  const std::size_t triples = g * (g + 1) * (g + 2) / 6;
  const auto residuals = jacobi_check(algebra);
  CheckReport c = basic_check("jacobi", "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0", residuals.empty());
  c.detail = count_text(triples, "generator triples") + ", " +
             count_text(residuals.size(), "nonzero residuals");
  if (!residuals.empty()) {
    const auto& r = residuals.front();
    c.detail += "; first at (" + algebra.generator(r.x).name() + ", " +
                algebra.generator(r.y).name() + ", " + algebra.generator(r.z).name() +
                "): " + algebra.render(r.residual);
  }
  return c;
}

CheckReport check_representation(const LieAlgebra& algebra, int max_degree) {
  const auto residuals = rep_consistency_check(algebra, max_degree);
  const std::size_t g = algebra.size();
  const std::size_t monomials = basis_monomials(algebra.spec().dim, max_degree).size();
  CheckReport c = basic_check("representation", "rho([X,Y]) f = rho(X) rho(Y) f - rho(Y) rho(X) f",
                residuals.empty());
  c.detail = count_text(g * (g - 1) / 2, "generator pairs") + " on " +
             count_text(monomials, "monomials") + " of degree <= " + std::to_string(max_degree) +
             ", " + count_text(residuals.size(), "nonzero residuals");
  if (!residuals.empty()) {
    const auto& r = residuals.front();
    c.detail += "; first at (" + algebra.generator(r.x).name() + ", " +
                algebra.generator(r.y).name() + ") on " + r.basis.str() + ": " + r.residual.str();
  }
  return c;
}

CheckReport check_cybe(const Enveloping& env, const RMatrix& r) {
  const TensorElement s = schouten_bracket(env, r);
  CheckReport c = basic_check("cybe", "[r12,r13] + [r12,r23] + [r13,r23] = 0", s.is_zero());
  c.twist = r.label();
  c.detail = s.is_zero() ? "residual is zero" : "residual " + s.str(env.algebra());
  return c;
}

CheckReport check_normalization(const Enveloping& env, const Twist& twist) {
  CheckReport c = twist_check("normalization", "(eps (x) 1)F = (1 (x) eps)F = 1", twist);
  c.passed = normalization_holds(env, twist);
  c.detail = c.passed ? "both counit contractions give 1" : "a counit contraction differs from 1";
  return c;
}

CheckReport check_cocycle(const Enveloping& env, const Twist& twist) {
  CheckReport c = twist_check("cocycle", "F12 (Delta_0 (x) 1)F = F23 (1 (x) Delta_0)F", twist);
  const TensorElement r = cocycle_residual(env, twist);
  c.passed = r.is_zero();
  c.detail = c.passed ? "residual is zero through order " + std::to_string(twist.order)
                      : count_text(r.size(), "nonzero residual terms");
  return c;
}

CheckReport check_coproduct_homomorphism(const Enveloping& env, const Twist& twist) {
  CheckReport c =
      twist_check("coproduct-homomorphism", "Delta_a([X,Y]) = [Delta_a(X), Delta_a(Y)]", twist);
  const LieAlgebra& alg = env.algebra();
  const auto count = static_cast<GenIndex>(alg.size());
  std::vector<TensorElement> delta;
  std::size_t terminated = 0;
  for (GenIndex g = 0; g < count; ++g) {
    SeriesResult s = twisted_coproduct(env, EnvElement::generator(g), twist);
    terminated += s.terminated ? 1 : 0;
    delta.push_back(std::move(s.value));
  }
  std::size_t failures = 0;
  std::string first;
  for (GenIndex x = 0; x < count; ++x)
    for (GenIndex y = x + 1; y < count; ++y) {
      TensorElement lhs(2);
      for (const auto& [g, coeff] : alg.bracket(x, y)) lhs += delta[g] * coeff;
      const TensorElement residual =
          (lhs - env.commutator(delta[x], delta[y], twist.order)).truncated(twist.order);
      if (!residual.is_zero() && failures++ == 0)
        first = "(" + alg.generator(x).name() + ", " + alg.generator(y).name() + ")";
    }
  c.passed = failures == 0;
  c.terminated = terminated == count;
  c.detail = count_text(static_cast<std::size_t>(count) * (count - 1) / 2, "generator pairs") +
             ", " + count_text(failures, "nonzero residuals") + "; " +
             std::to_string(terminated) + " of " + std::to_string(count) +
             " coproduct series terminate exactly";
  if (!first.empty()) c.detail += "; first at " + first;
  return c;
}

CheckReport check_coassociativity(const Enveloping& env, const Twist& twist) {
  CheckReport c = twist_check("coassociativity",
                              "(Delta_a (x) 1)Delta_a(X) = (1 (x) Delta_a)Delta_a(X)", twist);
  std::size_t failures = 0;
  for (GenIndex g = 0; g < env.algebra().size(); ++g)
    if (!coassociativity_residual(env, EnvElement::generator(g), twist).is_zero()) ++failures;
  c.passed = failures == 0;
  c.detail = count_text(env.algebra().size(), "generators") + ", " +
             count_text(failures, "nonzero residuals");
  return c;
}

CheckReport check_antipode(const Enveloping& env, const Twist& twist) {
  CheckReport c = twist_check(
      "antipode", "m(S_a (x) 1)Delta_a(X) = m(1 (x) S_a)Delta_a(X) = eps(X) 1", twist);
  const TwistUnit unit = twist_unit(env, twist);
  std::size_t failures = 0;
  for (GenIndex g = 0; g < env.algebra().size(); ++g) {
    const EnvElement x = EnvElement::generator(g);
    if (!antipode_axiom_residual(env, x, twist, unit, AntipodeSide::Left).is_zero()) ++failures;
    if (!antipode_axiom_residual(env, x, twist, unit, AntipodeSide::Right).is_zero()) ++failures;
  }
  c.passed = failures == 0;
  c.detail = count_text(env.algebra().size(), "generators") + " on both sides, " +
             count_text(failures, "nonzero residuals") + "; u = " + unit.u.str(env.algebra());
  return c;
}

TensorElement rotation_closed_form(const LieAlgebra& algebra, const RMatrix& r, int level,
                                   int order) {
  if (r.family() != RMatrix::Family::Single)
    throw std::invalid_argument("rotation closed form applies to the Single family");
  const GenIndex gk = algebra.index(Generator::boost(r.k(), level));
  const GenIndex gl = algebra.index(Generator::boost(r.l(), level));
  const GenIndex gi = algebra.index(Generator::boost(r.i(), r.n()));
  TensorElement out(2);
  ScalarSum power(1);  // alpha^j / j!
  for (int j = 0; j <= order; ++j) {
    if (j > 0) power = power * r.alpha() * ScalarSum(frac(1, j));
    const Word gi_run(static_cast<std::size_t>(j), gi);
    const ScalarSum sign((j / 2) % 2 == 0 ? 1 : -1);
    if (j % 2 == 0) {
      out.add_term({{gk}, gi_run}, sign * power);
      out.add_term({gi_run, {gk}}, sign * power);
    } else {
      out.add_term({{gl}, gi_run}, -(sign * power));
      out.add_term({gi_run, {gl}}, sign * power);
    }
  }
  return out.truncated(order);
}

CheckReport check_rotation_series(const Enveloping& env, const Twist& twist, int level) {
  const LieAlgebra& alg = env.algebra();
  const std::string name = Generator::boost(twist.r.k(), level).name();
  CheckReport c = twist_check("rotation-series",
                              "Delta_a(G_k) = exp(alpha ad M_kl) acting on G_k (x) 1 + 1 (x) G_k",
                              twist);
  const SeriesResult s = twisted_coproduct(env, EnvElement::generator(alg.index(name)), twist);
  const TensorElement expected = rotation_closed_form(alg, twist.r, level, twist.order);
  c.passed = s.value == expected;
  c.terminated = s.terminated;
  c.detail = "Delta_a(" + name + ") " + (c.passed ? "matches" : "differs from") +
             " the rotation series coefficient by coefficient";
  return c;
}

CheckReport check_spacetime(const SpacetimeTable& table) {
  CheckReport c = basic_check("spacetime", table.closed_form_template, table.all_match());
  c.twist = table.twist;
  std::size_t bad = 0;
  std::string first;
  for (const auto& e : table.entries)
    if (!e.matches && bad++ == 0) first = e.pair_name();
  c.detail = count_text(table.entries.size(), "coordinate pairs") + ", " +
             count_text(bad, "mismatches");
  if (!first.empty()) c.detail += "; first at " + first;
  return c;
}

CheckReport check_nh_recurrence() {
  CheckReport c = basic_check("nh-recurrence", "f_n' = n f_(n-1) (n = 1..6), f_0' = +-f_1/tau^2", true);
  std::size_t failures = 0;
  for (NHSign sign : {NHSign::Plus, NHSign::Minus}) {
    std::vector<FunctionElement> f;
    for (int n = 0; n <= kMaxNewtonHookeLevel; ++n) f.push_back(nh_coefficient(n, sign));
    for (int n = 1; n <= kMaxNewtonHookeLevel; ++n)
      if (!(f[n].d_dt() == f[n - 1] * ScalarSum(n))) ++failures;
    const ScalarSum pm(sign == NHSign::Plus ? 1 : -1);
    if (!(f[0].d_dt() == f[1] * (pm * ScalarSum::param(std::string(kTimeScale), -2)))) ++failures;
  }
  c.passed = failures == 0;
  c.detail = "14 identities over both signs, " + count_text(failures, "failures");
  return c;
}

CheckReport check_flat_limit(int order) {
  order = std::max(order, kMaxNewtonHookeLevel);
  CheckReport c = basic_check("flat-limit", "f_n = t^n + (terms with negative powers of tau)", true);
  std::size_t failures = 0;
  for (NHSign sign : {NHSign::Plus, NHSign::Minus})
    for (int n = 0; n <= kMaxNewtonHookeLevel; ++n)
      if (!flat_limit_check(n, sign, order).passed()) ++failures;
  c.passed = failures == 0;
  c.order = order;
  c.detail = "f_0..f_6 for both signs expanded through t^" + std::to_string(order) + ", " +
             count_text(failures, "failures");
  return c;
}

CheckReport check_degeneration(const Enveloping& env, const Representation& rep,
                               const Twist& twist) {
  CheckReport c = twist_check(
      "degeneration", "alpha -> 0: Delta_a -> Delta_0, S_a -> S_0, f * g -> f g", twist);
  const LieAlgebra& alg = env.algebra();
  const auto zero = zero_parameters(twist.r);
  const TwistUnit unit = twist_unit(env, twist);
  std::size_t failures = 0;
  for (GenIndex g = 0; g < alg.size(); ++g) {
    const EnvElement x = EnvElement::generator(g);
    if (!(twisted_coproduct(env, x, twist).value.substitute(zero) == classical_coproduct(x)))
      ++failures;
    if (!(twisted_antipode(env, x, twist, unit).substitute(zero) == classical_antipode(env, x)))
      ++failures;
  }
  const StarProduct star(rep, twist.r);
  const auto basis = basis_monomials(alg.spec().dim, 2);
  for (const FnMonomial& a : basis)
    for (const FnMonomial& b : basis) {
      const FunctionElement f = FunctionElement::monomial(rep.mode(), a);
      const FunctionElement g = FunctionElement::monomial(rep.mode(), b);
      if (!(star.product(f, g).substitute(zero) == f * g)) ++failures;
    }
  c.passed = failures == 0;
  c.detail = count_text(alg.size(), "generators") + " and " +
             count_text(basis.size() * basis.size(), "star products") + ", " +
             count_text(failures, "failures");
  return c;
}

VerifyReport run_verify(const VerifyOptions& options) {
  options.spec.validate();
  const LieAlgebra alg(options.spec);
  const Enveloping env(alg);
  const Representation rep(alg);
  const AlgebraSpec& spec = options.spec;
  const int N = spec.n;
  const int base = std::min(1, N);

  VerifyReport report;
  report.spec = spec;
  report.notes = alg.notes();

  report.checks.push_back(check_jacobi(alg));
  report.checks.push_back(check_representation(alg, options.rep_degree));

  // Every r-matrix of the algebra: CYBE and the space-time closed forms.
  std::vector<RMatrix> all;
  for (int n = 0; n <= N; ++n)
    for (int m = n; m <= N; ++m)
      all.push_back(RMatrix::nm(alg, n, m,
                                options.alpha ? *options.alpha : AlphaMatrix::symbolic(spec.dim)));
  if (spec.dim >= 3)
    for (int n = 0; n <= N; ++n) all.push_back(RMatrix::single(alg, n, 1, 2, 3));
  std::size_t cybe_failures = 0;
  for (const RMatrix& r : all) {
    CheckReport c = check_cybe(env, r);
    if (!c.passed) {
      ++cybe_failures;
      report.checks.push_back(std::move(c));
    }
  }
  if (cybe_failures == 0) {
    CheckReport c = basic_check("cybe", "[r12,r13] + [r12,r23] + [r13,r23] = 0", true);
    c.detail = count_text(all.size(), "r-matrices") + ", all residuals zero";
    report.checks.push_back(std::move(c));
  }
  std::size_t table_failures = 0;
  for (const RMatrix& r : all) {
    report.tables.push_back(spacetime_table(rep, r));
    if (!report.tables.back().all_match()) {
      ++table_failures;
      report.checks.push_back(check_spacetime(report.tables.back()));
    }
  }
  if (table_failures == 0) {
    CheckReport c =
        basic_check("spacetime", "[t,x_a] = 0 and [x_a,x_b] equal their closed forms", true);
    c.detail = count_text(report.tables.size(), "tables") + ", every entry matches its closed form";
    report.checks.push_back(std::move(c));
  }

  std::vector<TwistChoice> twists = options.twists;
  if (twists.empty()) {
    twists.push_back({TwistChoice::Family::NM, base, base});
    if (spec.dim >= 3) twists.push_back({TwistChoice::Family::Single, base, base});
  }
  for (const TwistChoice& choice : twists) {
    const Twist twist{make_rmatrix(alg, choice, options.alpha), options.order};
    report.checks.push_back(check_normalization(env, twist));
    Twist cocycle_twist = twist;
    if (choice.family == TwistChoice::Family::NM)
      cocycle_twist.order = std::min(options.order, options.cocycle_cap);
    CheckReport coc = check_cocycle(env, cocycle_twist);
    if (cocycle_twist.order < options.order)
      coc.detail += " (order capped at " + std::to_string(cocycle_twist.order) + " for r^(n,m))";
    report.checks.push_back(std::move(coc));
    report.checks.push_back(check_coproduct_homomorphism(env, twist));
    report.checks.push_back(check_coassociativity(env, twist));
    report.checks.push_back(check_antipode(env, twist));
    if (choice.family == TwistChoice::Family::Single)
      for (int p = 0; p <= N; ++p) report.checks.push_back(check_rotation_series(env, twist, p));
    report.checks.push_back(check_degeneration(env, rep, twist));
  }

  report.checks.push_back(check_nh_recurrence());
  report.checks.push_back(check_flat_limit(options.order));
  return report;
}

}  // namespace nga
