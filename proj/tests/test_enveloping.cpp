#include <doctest.h>

#include "nga/enveloping.hpp"
#include "support.hpp"

using namespace nga;

namespace {

struct Fixture {
  LieAlgebra alg{{2, 3, Variant::Galilei}};
  Enveloping env{alg};
  GenIndex g(std::string_view name) const { return alg.index(name); }
};

EnvElement word_element(const Enveloping& env, const Word& w) {
  return env.normal_order(w);
}

}  // namespace

TEST_CASE("ordered words are left alone") {
  Fixture f;
  const Word w{f.g("M:1:2"), f.g("H"), f.g("G:1:0"), f.g("G:1:0"), f.g("G:3:2")};
  CHECK(f.env.normal_order(w) == EnvElement::ordered_word(w));
  CHECK(f.env.normal_order(Word{}) == EnvElement::unit());
}

TEST_CASE("reordering a pair adds the bracket") {
  Fixture f;
  const ScalarSum I = ScalarSum::i();
  // G_1^(1) H = H G_1^(1) + [G_1^(1), H] = H G_1^(1) - i G_1^(0)
  EnvElement expected = EnvElement::ordered_word({f.g("H"), f.g("G:1:1")});
  expected -= EnvElement::generator(f.g("G:1:0"), I);
  CHECK(f.env.normal_order(Word{f.g("G:1:1"), f.g("H")}) == expected);

  // commuting boosts just swap
  CHECK(f.env.normal_order(Word{f.g("G:2:1"), f.g("G:1:0")}) ==
        EnvElement::ordered_word({f.g("G:1:0"), f.g("G:2:1")}));
}

TEST_CASE("three-letter reordering") {
  Fixture f;
  const ScalarSum I = ScalarSum::i();
  const GenIndex h = f.g("H"), g2 = f.g("G:1:2"), g1 = f.g("G:1:1"), g0 = f.g("G:1:0");
  // G2 H H: move each H left. [G2,H] = -2i G1, [G1,H] = -i G0.
  // G2 H H = H G2 H - 2i G1 H
  //        = H H G2 - 2i H G1 - 2i (H G1 - i G0)
  //        = H H G2 - 4i H G1 - 2 G0
  EnvElement expected = EnvElement::ordered_word({h, h, g2});
  expected += EnvElement::ordered_word({h, g1}, ScalarSum(-4) * I);
  expected += EnvElement::generator(g0, ScalarSum(-2));
  CHECK(f.env.normal_order(Word{g2, h, h}) == expected);
}

TEST_CASE("multiplication is associative") {
  const LieAlgebra alg({2, 3, Variant::NewtonHookeMinus});
  const Enveloping env(alg);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alg.size()) - 1);
  std::uniform_int_distribution<int> len(0, 4);
  auto random_word = [&] {
    Word w(static_cast<std::size_t>(len(testing::rng())));
    for (auto& x : w) x = static_cast<GenIndex>(pick(testing::rng()));
    return w;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const Word a = random_word(), b = random_word(), c = random_word();
    const EnvElement ea = word_element(env, a), eb = word_element(env, b), ec = word_element(env, c);
    CHECK(env.multiply(env.multiply(ea, eb), ec) == env.multiply(ea, env.multiply(eb, ec)));
    Word abc = a;
    abc.insert(abc.end(), b.begin(), b.end());
    abc.insert(abc.end(), c.begin(), c.end());
    CHECK(env.normal_order(abc) == env.multiply(ea, env.multiply(eb, ec)));
  }
}

TEST_CASE("tensor multiplication is slotwise") {
  Fixture f;
  const EnvElement a = EnvElement::generator(f.g("G:1:1"));
  const EnvElement h = EnvElement::generator(f.g("H"));
  const TensorElement x = TensorElement::pure({a, h});
  const TensorElement y = TensorElement::pure({h, a});
  CHECK(f.env.multiply(x, y) == TensorElement::pure({f.env.multiply(a, h), f.env.multiply(h, a)}));
  CHECK_THROWS_AS(f.env.multiply(x, TensorElement::unit(3)), std::invalid_argument);
}

TEST_CASE("truncation by deformation degree") {
  Fixture f;
  const ScalarSum alpha = ScalarSum::param("alpha");
  const EnvElement a = EnvElement::generator(f.g("H"), alpha);
  const EnvElement b = EnvElement::generator(f.g("G:1:1"), alpha);
  CHECK(f.env.multiply(a, b, 1).is_zero());
  CHECK(f.env.multiply(a, b, 2) == f.env.multiply(a, b));
}

TEST_CASE("adjoint series with -r undoes +r") {
  Fixture f;
  const ScalarSum beta = ScalarSum::param("beta");
  TensorElement r(2);
  r.add_term({{f.g("G:1:1")}, {f.g("M:2:3")}}, beta);
  r.add_term({{f.g("M:2:3")}, {f.g("G:1:1")}}, -beta);
  const TensorElement y = TensorElement::pure({EnvElement::generator(f.g("H")), EnvElement::unit()}) +
                          TensorElement::pure({EnvElement::unit(), EnvElement::generator(f.g("H"))});
  const int order = 5;
  const SeriesResult forward = ad_series_conjugate(f.env, r, y, order);
  const SeriesResult back = ad_series_conjugate(f.env, r * ScalarSum(-1), forward.value, order);
  CHECK(back.value == y);
  CHECK_FALSE(forward.value == y);
}

TEST_CASE("adjoint series terminates on commuting input") {
  Fixture f;
  TensorElement r(2);
  r.add_term({{f.g("G:1:1")}, {f.g("G:2:1")}}, ScalarSum::param("alpha"));
  const TensorElement y = TensorElement::pure({EnvElement::generator(f.g("G:3:0")), EnvElement::unit()});
  const SeriesResult s = ad_series_conjugate(f.env, r, y, 6);
  CHECK(s.terminated);
  CHECK(s.vanishing_depth == 1);
  CHECK(s.value == y);
}

TEST_CASE("rendering") {
  Fixture f;
  EnvElement e = EnvElement::ordered_word({f.g("H"), f.g("G:1:1")});
  e -= EnvElement::generator(f.g("G:1:0"), ScalarSum::i());
  CHECK(e.str(f.alg) == "H*G:1:1 - i*G:1:0");
  CHECK(TensorElement::pure({EnvElement::generator(f.g("H")), EnvElement::unit()}).str(f.alg) ==
        "H (x) 1");
}
