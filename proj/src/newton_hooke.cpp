#include "nga/newton_hooke.hpp"

#include <stdexcept>

namespace nga {

std::string sign_name(NHSign s) { return s == NHSign::Plus ? "+" : "-"; }

TimeMode time_mode(NHSign s) { return s == NHSign::Plus ? TimeMode::Hyper : TimeMode::Trig; }

NHSign nh_sign(Variant v) {
  switch (v) {
    case Variant::NewtonHookePlus: return NHSign::Plus;
    case Variant::NewtonHookeMinus: return NHSign::Minus;
    default: throw std::invalid_argument("Galilei variant has no Newton-Hooke sign");
  }
}

FunctionElement nh_coefficient(int n, NHSign sign) {
  if (n < 0 || n > kMaxNewtonHookeLevel)
    throw std::invalid_argument("Newton-Hooke coefficient functions exist for n = 0..6 only");
  const TimeMode mode = time_mode(sign);
  const ScalarSum pm(sign == NHSign::Plus ? 1 : -1);
  auto tau = [](int e) { return ScalarSum::param(std::string(kTimeScale), e); };
  auto k = [mode](const ScalarSum& c) { return FunctionElement::constant(mode, c); };
  const FunctionElement C = FunctionElement::cosine(mode);
  const FunctionElement S = FunctionElement::sine(mode);
  const FunctionElement u = FunctionElement::time(mode) * tau(-1);  // t/tau
  const FunctionElement one = k(1);

  switch (n) {
    case 0: return C;
    case 1: return S * tau(1);
    case 2: return (C - one) * (pm * 2 * tau(2));
    case 3: return (S - u) * (pm * 6 * tau(3));
    case 4: return (C - u.pow(2) * (pm * frac(1, 2)) - one) * (24 * tau(4));
    case 5: return (S - u.pow(3) * (pm * frac(1, 6)) - u) * (120 * tau(5));
    default:
      return (C * pm - u.pow(4) * (pm * frac(1, 24)) - u.pow(2) * ScalarSum(frac(1, 2)) -
              one * pm) *
             (720 * tau(6));
  }
}

FunctionElement level_coefficient(const AlgebraSpec& spec, int n) {
  if (!spec.newton_hooke()) {
    FnMonomial m;
    m.t = n;
    return FunctionElement::monomial(TimeMode::PolyTime, m);
  }
  return nh_coefficient(n, nh_sign(spec.variant));
}

SpacetimePoint SpacetimePoint::coordinates(TimeMode mode, int dim) {
  SpacetimePoint p{FunctionElement::time(mode), {}};
  for (int i = 1; i <= dim; ++i) p.x.push_back(FunctionElement::coordinate(mode, i));
  return p;
}

NHTransformParams NHTransformParams::identity(int dim) {
  NHTransformParams p;
  p.omega.assign(static_cast<std::size_t>(dim), std::vector<ScalarSum>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i) p.omega[i][i] = ScalarSum(1);
  p.a.assign(static_cast<std::size_t>(dim), std::vector<ScalarSum>(kMaxNewtonHookeLevel + 1));
  return p;
}

SpacetimePoint nh_transform(const SpacetimePoint& p, const NHTransformParams& params,
                            NHSign sign) {
  const TimeMode mode = time_mode(sign);
  const std::size_t dim = p.x.size();
  if (params.omega.size() != dim) throw std::invalid_argument("omega must be d x d");
  std::vector<FunctionElement> f;
  for (int n = 0; n <= kMaxNewtonHookeLevel; ++n) f.push_back(nh_coefficient(n, sign));

  SpacetimePoint out{params.shift_time ? shift_time(p.t, params.t0) : p.t, {}};
  for (std::size_t i = 0; i < dim; ++i) {
    if (params.omega[i].size() != dim) throw std::invalid_argument("omega must be d x d");
    FunctionElement xi(mode);
    for (std::size_t j = 0; j < dim; ++j) xi += p.x[j] * params.omega[i][j];
    if (i < params.a.size()) {
      if (params.a[i].size() > f.size())
        throw std::invalid_argument("translation coefficients exist for n = 0..6 only");
      for (std::size_t n = 0; n < params.a[i].size(); ++n) xi += f[n] * params.a[i][n];
    }
    out.x.push_back(std::move(xi));
  }
  return out;
}

FlatLimitReport flat_limit_check(int n, NHSign sign, int order) {
  if (order < n) throw std::invalid_argument("flat-limit order must be at least n");
  FlatLimitReport rep;
  rep.n = n;
  rep.sign = sign;
  rep.order = order;
  rep.expansion = taylor_expand(nh_coefficient(n, sign), order).poly;
  rep.remainder_negative = true;
  for (const auto& [m, c] : rep.expansion.terms())
    for (const auto& [pm, g] : c.terms()) {
      const int e = pm.exponent(kTimeScale);
      if (e == 0)
        rep.leading.add_term(m, Scalar{g, pm});
      else if (e > 0)
        rep.remainder_negative = false;
    }
  FnMonomial tn;
  tn.t = n;
  rep.leading_matches = rep.leading == FunctionElement::monomial(TimeMode::PolyTime, tn);
  return rep;
}

}  // namespace nga
