#include <doctest.h>

#include "nga/newton_hooke.hpp"
#include "nga/representation.hpp"

using namespace nga;

namespace {

FunctionElement x(TimeMode m, int i) { return FunctionElement::coordinate(m, i); }

}  // namespace

TEST_CASE("generator actions on coordinates") {
  const LieAlgebra alg({3, 3, Variant::Galilei});
  const Representation rep(alg);
  const auto P = TimeMode::PolyTime;
  const ScalarSum I = ScalarSum::i();
  CHECK(rep.apply(alg.index("G:2:3"), x(P, 2)) == FunctionElement::time(P).pow(3) * I);
  CHECK(rep.apply(alg.index("G:2:3"), x(P, 1)).is_zero());
  CHECK(rep.apply(alg.index("M:1:2"), x(P, 1)) == x(P, 2) * -I);
  CHECK(rep.apply(alg.index("M:1:2"), x(P, 2)) == x(P, 1) * I);
  CHECK(rep.apply(alg.index("H"), FunctionElement::time(P).pow(2)) ==
        FunctionElement::time(P) * (ScalarSum(2) * I));
}

TEST_CASE("Newton-Hooke boost action") {
  const LieAlgebra alg({2, 3, Variant::NewtonHookePlus});
  const Representation rep(alg);
  CHECK(rep.mode() == TimeMode::Hyper);
  const FunctionElement r = rep.apply(alg.index("G:1:2"), x(TimeMode::Hyper, 1));
  const FunctionElement C = FunctionElement::cosine(TimeMode::Hyper);
  CHECK(r == (C - FunctionElement::constant(TimeMode::Hyper, 1)) *
                 (ScalarSum::i() * ScalarSum(2) * ScalarSum::param("tau", 2)));
  FnMonomial t2;
  t2.t = 2;
  const TaylorExpansion e = taylor_expand(r, 2);
  CHECK(e.poly == FunctionElement::monomial(TimeMode::PolyTime, t2, ScalarSum::i()));
}

TEST_CASE("hand-expanded homomorphism case") {
  // [G_1^(1), H] = -i G_1^(0) on x_1 with t-dependence t*x1
  const LieAlgebra alg({1, 3, Variant::Galilei});
  const Representation rep(alg);
  const auto P = TimeMode::PolyTime;
  const FunctionElement f = x(P, 1);
  const GenIndex g = alg.index("G:1:1"), h = alg.index("H");
  const FunctionElement lhs = rep.apply(g, rep.apply(h, f)) - rep.apply(h, rep.apply(g, f));
  // G(H x1) = 0, H(G x1) = H(i t) = i*i = -1, so lhs = 1; -i G_1^(0) x1 = -i*i = 1
  CHECK(lhs == FunctionElement::constant(P, 1));
  CHECK(rep.apply(alg.bracket(g, h), f) == lhs);
}

TEST_CASE("representation is a Lie homomorphism") {
  CHECK(rep_consistency_check(LieAlgebra({6, 3, Variant::Galilei}), 4).empty());
  CHECK(rep_consistency_check(LieAlgebra({6, 2, Variant::NewtonHookePlus}), 3).empty());
  CHECK(rep_consistency_check(LieAlgebra({6, 2, Variant::NewtonHookeMinus}), 3).empty());
}

TEST_CASE("basis monomials") {
  // monomials in (x1, x2, t) of degree <= 2: C(5,2) = 10
  CHECK(basis_monomials(2, 2).size() == 10);
  CHECK(basis_monomials(3, 0).size() == 1);
}
