#include <doctest.h>

#include "nga/newton_hooke.hpp"

using namespace nga;

namespace {

ScalarSum tau(int e) { return ScalarSum::param("tau", e); }

FunctionElement poly_t(int k, const ScalarSum& c = ScalarSum(1)) {
  FnMonomial m;
  m.t = k;
  return FunctionElement::monomial(TimeMode::PolyTime, m, c);
}

// Terms of a PolyTime expansion whose coefficient has no tau.
FunctionElement tau_free_part(const FunctionElement& f) {
  FunctionElement out(f.mode());
  for (const auto& [m, c] : f.terms())
    for (const Scalar& s : c.scalars())
      if (s.params.exponent("tau") == 0) out.add_term(m, ScalarSum(s));
  return out;
}

}  // namespace

TEST_CASE("low coefficient functions") {
  const auto Hy = TimeMode::Hyper;
  CHECK(nh_coefficient(0, NHSign::Plus) == FunctionElement::cosine(Hy));
  CHECK(nh_coefficient(1, NHSign::Plus) == FunctionElement::sine(Hy) * tau(1));
  CHECK(nh_coefficient(2, NHSign::Plus) ==
        (FunctionElement::cosine(Hy) - FunctionElement::constant(Hy, 1)) * (ScalarSum(2) * tau(2)));
  CHECK(nh_coefficient(2, NHSign::Minus) ==
        (FunctionElement::cosine(TimeMode::Trig) - FunctionElement::constant(TimeMode::Trig, 1)) *
            (ScalarSum(-2) * tau(2)));
  CHECK_THROWS_AS(nh_coefficient(7, NHSign::Plus), std::invalid_argument);
  CHECK_THROWS_AS(nh_sign(Variant::Galilei), std::invalid_argument);
}

TEST_CASE("derivative recurrences") {
  for (NHSign sign : {NHSign::Plus, NHSign::Minus}) {
    const ScalarSum pm(sign == NHSign::Plus ? 1 : -1);
    for (int n = 1; n <= 6; ++n)
      CHECK(nh_coefficient(n, sign).d_dt() == nh_coefficient(n - 1, sign) * ScalarSum(n));
    CHECK(nh_coefficient(0, sign).d_dt() == nh_coefficient(1, sign) * (pm * tau(-2)));
  }
}

TEST_CASE("Taylor expansion of f_2") {
  const TaylorExpansion e = taylor_expand(nh_coefficient(2, NHSign::Plus), 6);
  CHECK(e.poly == poly_t(2) + poly_t(4, ScalarSum(Rational(frac(1, 12))) * tau(-2)) +
                      poly_t(6, ScalarSum(Rational(frac(1, 360))) * tau(-4)));
}

TEST_CASE("flat limit") {
  for (NHSign sign : {NHSign::Plus, NHSign::Minus})
    for (int n = 0; n <= 6; ++n) {
      const int order = n + 6;
      CHECK(tau_free_part(taylor_expand(nh_coefficient(n, sign), order).poly) == poly_t(n));
      const FlatLimitReport r = flat_limit_check(n, sign, order);
      CHECK(r.passed());
      CHECK(r.leading == poly_t(n));
    }
  const FlatLimitReport c = flat_limit_check(0, NHSign::Plus, 2);
  CHECK(c.expansion == poly_t(0) + poly_t(2, ScalarSum(Rational(frac(1, 2))) * tau(-2)));
}

TEST_CASE("finite transformations") {
  const int dim = 3;
  for (NHSign sign : {NHSign::Plus, NHSign::Minus}) {
    const TimeMode mode = time_mode(sign);
    const SpacetimePoint p = SpacetimePoint::coordinates(mode, dim);
    const SpacetimePoint same = nh_transform(p, NHTransformParams::identity(dim), sign);
    CHECK(same.t == p.t);
    CHECK(same.x == p.x);

    NHTransformParams boost = NHTransformParams::identity(dim);
    const ScalarSum v = ScalarSum::param("v");
    boost.a[1][1] = v;
    const SpacetimePoint q = nh_transform(p, boost, sign);
    CHECK(q.x[0] == p.x[0]);
    CHECK(q.x[1] == p.x[1] + FunctionElement::sine(mode) * (v * tau(1)));
    // flat limit gives the Galilei boost x_2 + v t
    const FunctionElement lim = tau_free_part(taylor_expand(q.x[1], 3).poly);
    CHECK(lim == FunctionElement::coordinate(TimeMode::PolyTime, 2) + poly_t(1, v));

    NHTransformParams six = NHTransformParams::identity(dim);
    const ScalarSum b = ScalarSum::param("b");
    six.a[2][6] = b;
    const ScalarSum pm(sign == NHSign::Plus ? 1 : -1);
    const FunctionElement u = FunctionElement::time(mode) * tau(-1);
    const FunctionElement f6 = (FunctionElement::cosine(mode) * pm - u.pow(4) * (pm * frac(1, 24)) -
                                u.pow(2) * ScalarSum(frac(1, 2)) - FunctionElement::constant(mode, pm)) *
                               (ScalarSum(720) * tau(6));
    CHECK(nh_transform(p, six, sign).x[2] == p.x[2] + f6 * b);

    NHTransformParams shift = NHTransformParams::identity(dim);
    shift.shift_time = true;
    CHECK(nh_transform(p, shift, sign).t ==
          p.t + FunctionElement::constant(mode, ScalarSum::param("t0")));
  }
}
