#include <doctest.h>

#include "nga/hopf.hpp"
#include "support.hpp"

using namespace nga;

namespace {

struct Fixture {
  explicit Fixture(AlgebraSpec spec = {3, 3, Variant::Galilei}) : alg(spec), env(alg) {}
  LieAlgebra alg;
  Enveloping env;
  GenIndex g(std::string_view name) const { return alg.index(name); }
  EnvElement gen(std::string_view name, const ScalarSum& c = ScalarSum(1)) const {
    return EnvElement::generator(alg.index(name), c);
  }
};

TensorElement pure(const EnvElement& a, const EnvElement& b) { return TensorElement::pure({a, b}); }

TensorElement primitive(const EnvElement& a) {
  return pure(a, EnvElement::unit()) + pure(EnvElement::unit(), a);
}

const std::map<std::string, Rational>& all_zero(const std::vector<std::string>& names) {
  static std::map<std::string, Rational> out;
  out.clear();
  for (const auto& n : names) out[n] = 0;
  return out;
}

}  // namespace

TEST_CASE("classical coproduct") {
  Fixture f;
  CHECK(classical_coproduct(f.gen("H")) == primitive(f.gen("H")));
  CHECK(classical_coproduct(EnvElement::unit()) == TensorElement::unit(2));
  const EnvElement hg = f.env.multiply(f.gen("H"), f.gen("G:1:0"));
  CHECK(classical_coproduct(hg) ==
        f.env.multiply(primitive(f.gen("H")), primitive(f.gen("G:1:0"))));
  // homomorphism on a word that needs reordering
  const EnvElement w = f.env.normal_order(Word{f.g("G:1:2"), f.g("H"), f.g("M:1:2")});
  CHECK(classical_coproduct(w) ==
        f.env.multiply(f.env.multiply(primitive(f.gen("G:1:2")), primitive(f.gen("H"))),
                       primitive(f.gen("M:1:2"))));
}

TEST_CASE("classical antipode and counit") {
  Fixture f;
  CHECK(classical_antipode(f.env, f.gen("G:2:3")) == f.gen("G:2:3", ScalarSum(-1)));
  // S0(H G_1^(1)) = G_1^(1) H = H G_1^(1) - i G_1^(0)
  const EnvElement hg = EnvElement::ordered_word({f.g("H"), f.g("G:1:1")});
  CHECK(classical_antipode(f.env, hg) == hg - f.gen("G:1:0", ScalarSum::i()));
  CHECK(counit(EnvElement::unit()) == ScalarSum(1));
  CHECK(counit(f.gen("H") + EnvElement::scalar(ScalarSum(3))) == ScalarSum(3));
}

TEST_CASE("classical Hopf axioms on generators") {
  Fixture f;
  for (GenIndex g = 0; g < f.alg.size(); ++g) {
    const EnvElement x = EnvElement::generator(g);
    const TensorElement d = classical_coproduct(x);
    CHECK(counit_on_slot(d, 0) == TensorElement::pure({x}));
    CHECK(counit_on_slot(d, 1) == TensorElement::pure({x}));
    TensorElement s_id(2);
    for (const auto& [key, c] : d.terms())
      s_id += TensorElement::pure({classical_antipode(f.env, EnvElement::ordered_word(key[0], c)),
                                   EnvElement::ordered_word(key[1])});
    CHECK(f.env.collapse(s_id).is_zero());
    CHECK(coproduct_on_slot(d, 0) == coproduct_on_slot(d, 1));
  }
}

TEST_CASE("r-matrix expansions") {
  Fixture f;
  const ScalarSum theta = ScalarSum::param("theta");
  AlphaMatrix a(3);
  a.set(1, 2, theta);
  const RMatrix nm = RMatrix::nm(f.alg, 1, 1, a);
  CHECK(nm.expansion() == (pure(f.gen("G:1:1"), f.gen("G:2:1")) - pure(f.gen("G:2:1"), f.gen("G:1:1"))) * theta);
  CHECK(nm.parameters() == std::vector<std::string>{"theta"});

  const ScalarSum alpha = ScalarSum::param("alpha");
  const RMatrix single = RMatrix::single(f.alg, 0, 1, 2, 3);
  CHECK(single.expansion() ==
        (pure(f.gen("G:1:0"), f.gen("M:2:3")) - pure(f.gen("M:2:3"), f.gen("G:1:0"))) * alpha);

  CHECK_THROWS_AS(RMatrix::single(f.alg, 0, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix::single(f.alg, 0, 1, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix::single(f.alg, 4, 1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(AlphaMatrix::from_rows({{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix::nm(f.alg, 0, 1, AlphaMatrix::symbolic(2)), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix::single(Fixture({1, 2, Variant::Galilei}).alg, 0, 1, 2, 3),
                  std::invalid_argument);
}

TEST_CASE("Schouten bracket vanishes") {
  for (int d = 2; d <= 4; ++d) {
    Fixture f({3, d, Variant::Galilei});
    for (int n = 0; n <= 3; ++n)
      for (int m = n; m <= 3; ++m)
        CHECK(schouten_bracket(f.env, RMatrix::nm(f.alg, n, m, AlphaMatrix::symbolic(d))).is_zero());
    if (d < 3) continue;
    for (int trial = 0; trial < 6; ++trial) {
      const int i = testing::uniform(1, d);
      int k = testing::uniform(1, d), l = testing::uniform(1, d);
      if (k > l) std::swap(k, l);
      if (k == l || i == k || i == l) continue;
      CHECK(schouten_bracket(f.env, RMatrix::single(f.alg, testing::uniform(0, 3), i, k, l)).is_zero());
    }
  }
  Fixture f;
  CHECK(schouten_bracket(f.env, RMatrix::nm(f.alg, 1, 2, AlphaMatrix(3))).is_zero());
}

TEST_CASE("twist normalization and cocycle") {
  Fixture f({2, 3, Variant::Galilei});
  const Twist nm{RMatrix::nm(f.alg, 1, 2, AlphaMatrix::symbolic(3)), 4};
  const Twist single{RMatrix::single(f.alg, 0, 1, 2, 3), 4};
  CHECK(normalization_holds(f.env, nm));
  CHECK(normalization_holds(f.env, single));
  CHECK(cocycle_residual(f.env, single).is_zero());
  CHECK(cocycle_residual(f.env, Twist{nm.r, 3}).is_zero());
  CHECK(cocycle_residual(f.env, Twist{nm.r, 0}).is_zero());
  // F F^{-1} = 1 through the order
  CHECK(f.env.multiply(twist_factor(f.env, single), twist_factor(f.env, single, -1), 4) ==
        TensorElement::unit(2));
}

TEST_CASE("numeric deformation parameters are refused for series work") {
  Fixture f;
  AlphaMatrix a(3);
  a.set(1, 2, ScalarSum(Rational(frac(1, 2))));
  const Twist t{RMatrix::nm(f.alg, 1, 1, a), 4};
  CHECK_THROWS_AS(twist_factor(f.env, t), std::invalid_argument);
}

TEST_CASE("boost coproducts are untouched by NM twists") {
  Fixture f;
  const Twist t{RMatrix::nm(f.alg, 1, 2, AlphaMatrix::symbolic(3)), 8};
  for (const char* name : {"G:1:0", "G:2:3", "G:3:1"}) {
    const SeriesResult s = twisted_coproduct(f.env, f.gen(name), t);
    CHECK(s.terminated);
    CHECK(s.vanishing_depth == 1);
    CHECK(s.value == primitive(f.gen(name)));
  }
}

TEST_CASE("twisted coproduct of H under the level (1,1) twist") {
  Fixture f;
  const Twist t{RMatrix::nm(f.alg, 1, 1, AlphaMatrix::symbolic(3)), 8};
  // one commutator: [G^(1), H] = -i G^(0); r = sum alpha^ij G_i^(1) (x) G_j^(1)
  TensorElement expected = primitive(f.gen("H"));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const std::string gi0 = Generator::boost(i, 0).name(), gi1 = Generator::boost(i, 1).name();
      const std::string gj0 = Generator::boost(j, 0).name(), gj1 = Generator::boost(j, 1).name();
      const ScalarSum a = i < j ? ScalarSum::param("alpha_" + std::to_string(i) + "_" + std::to_string(j))
                                : -ScalarSum::param("alpha_" + std::to_string(j) + "_" + std::to_string(i));
      expected += (pure(f.gen(gi0), f.gen(gj1)) + pure(f.gen(gi1), f.gen(gj0))) * a;
    }
  const SeriesResult s = twisted_coproduct(f.env, f.gen("H"), t);
  CHECK(s.terminated);
  CHECK(s.vanishing_depth == 2);
  CHECK(s.value == expected);
}

TEST_CASE("first-order Single coproduct of G_k") {
  Fixture f({0, 3, Variant::Galilei});
  const Twist t{RMatrix::single(f.alg, 0, 1, 2, 3), 1};
  const ScalarSum alpha = ScalarSum::param("alpha");
  // i [r, Delta0(G_2)] with [M_23, G_2] = -i G_3
  const TensorElement expected = primitive(f.gen("G:2:0")) +
                                 (pure(f.gen("G:1:0"), f.gen("G:3:0")) -
                                  pure(f.gen("G:3:0"), f.gen("G:1:0"))) * alpha;
  const SeriesResult s = twisted_coproduct(f.env, f.gen("G:2:0"), t);
  CHECK_FALSE(s.terminated);
  CHECK(s.value == expected);
}

TEST_CASE("u equals one") {
  Fixture f;
  const Twist nm1{RMatrix::nm(f.alg, 1, 2, AlphaMatrix::symbolic(3)), 1};
  // direct first-order Sweedler sum: 1 + i sum c a S0(b)
  EnvElement direct = EnvElement::unit();
  for (const auto& [key, c] : nm1.r.expansion().terms())
    direct += f.env.multiply(EnvElement::ordered_word(key[0], c * ScalarSum::i()),
                             classical_antipode(f.env, EnvElement::ordered_word(key[1])));
  CHECK(twist_u(f.env, nm1) == direct);
  CHECK(direct == EnvElement::unit());
  CHECK(twist_u(f.env, Twist{nm1.r, 4}) == EnvElement::unit());
  CHECK(twist_u(f.env, Twist{RMatrix::single(f.alg, 1, 1, 2, 3), 4}) == EnvElement::unit());
}

TEST_CASE("twisted Hopf axioms through order 4") {
  Fixture f({2, 3, Variant::Galilei});
  const std::vector<Twist> twists{{RMatrix::nm(f.alg, 1, 1, AlphaMatrix::symbolic(3)), 4},
                                  {RMatrix::single(f.alg, 1, 1, 2, 3), 4}};
  for (const Twist& t : twists) {
    const TwistUnit unit = twist_unit(f.env, t);
    for (const char* name : {"H", "M:2:3", "M:1:2", "G:2:0", "G:1:2"}) {
      const EnvElement x = f.gen(name);
      CHECK(coassociativity_residual(f.env, x, t).is_zero());
      CHECK(antipode_axiom_residual(f.env, x, t, unit, AntipodeSide::Left).is_zero());
      CHECK(antipode_axiom_residual(f.env, x, t, unit, AntipodeSide::Right).is_zero());
    }
  }
}

TEST_CASE("twisted structures degenerate at zero deformation") {
  Fixture f({2, 3, Variant::Galilei});
  const std::vector<Twist> twists{{RMatrix::nm(f.alg, 0, 2, AlphaMatrix::symbolic(3)), 5},
                                  {RMatrix::single(f.alg, 2, 1, 2, 3), 5}};
  for (const Twist& t : twists) {
    const auto& zero = all_zero(t.r.parameters());
    for (GenIndex g = 0; g < f.alg.size(); ++g) {
      const EnvElement x = EnvElement::generator(g);
      CHECK(twisted_coproduct(f.env, x, t).value.substitute(zero) == classical_coproduct(x));
      CHECK(twisted_antipode(f.env, x, t).substitute(zero) == classical_antipode(f.env, x));
    }
  }
}
