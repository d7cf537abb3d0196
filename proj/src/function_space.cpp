#include "nga/function_space.hpp"

#include <stdexcept>

namespace nga {

namespace {

void trim(std::vector<int>& x) {
  while (!x.empty() && x.back() == 0) x.pop_back();
}

ScalarSum tau_power(int e) { return ScalarSum::param(std::string(kTimeScale), e); }

// Series coefficients of S and C in powers of u = t/tau.
Rational series_coeff(TimeMode mode, bool sine, int k) {
  if (sine != (k % 2 == 1)) return 0;
  Rational v = 1;
  for (int j = 2; j <= k; ++j) v /= j;
  if (mode == TimeMode::Trig && ((sine ? (k - 1) / 2 : k / 2) % 2 == 1)) v = -v;
  return v;
}

// Truncated series in t with coefficients on tau^{-k}: index k holds the rational
// multiplying (t/tau)^k.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order + 1), Rational(0));
  for (int i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::string mode_name(TimeMode m) {
  switch (m) {
    case TimeMode::PolyTime: return "poly";
    case TimeMode::Hyper: return "hyper";
    case TimeMode::Trig: return "trig";
  }
  return "poly";
}

TimeMode time_mode(Variant v) {
  switch (v) {
    case Variant::NewtonHookePlus: return TimeMode::Hyper;
    case Variant::NewtonHookeMinus: return TimeMode::Trig;
    default: return TimeMode::PolyTime;
  }
}

// --- FnMonomial --------------------------------------------------------------

int FnMonomial::x_exponent(int i) const {
  return i >= 1 && i <= static_cast<int>(x.size()) ? x[static_cast<std::size_t>(i - 1)] : 0;
}

int FnMonomial::x_degree() const {
  int d = 0;
  for (int e : x) d += e;
  return d;
}

std::string FnMonomial::str() const {
  std::string out;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < x.size(); ++i) factor("x" + std::to_string(i + 1), x[i]);
  factor("t", t);
  factor("S", s);
  factor("C", c);
  return out.empty() ? "1" : out;
}

std::string FnMonomial::latex(TimeMode mode) const {
  std::string out;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  };
  for (std::size_t i = 0; i < x.size(); ++i) factor("x_{" + std::to_string(i + 1) + "}", x[i]);
  factor("t", t);
  const bool hyp = mode == TimeMode::Hyper;
  const std::string arg = "\\left(\\frac{t}{\\tau}\\right)";
  if (s) factor(std::string(hyp ? "\\sinh" : "\\sin") + arg, s);
  if (c) factor(std::string(hyp ? "\\cosh" : "\\cos") + arg, c);
  return out.empty() ? "1" : out;
}

// --- FunctionElement -----------------------------------------------------------

FunctionElement FunctionElement::constant(TimeMode mode, const ScalarSum& c) {
  FunctionElement f(mode);
  f.add_term({}, c);
  return f;
}

FunctionElement FunctionElement::coordinate(TimeMode mode, int i) {
  if (i < 1) throw std::invalid_argument("coordinate index must be >= 1");
  FnMonomial m;
  m.x.assign(static_cast<std::size_t>(i), 0);
  m.x.back() = 1;
  return monomial(mode, m);
}

FunctionElement FunctionElement::time(TimeMode mode) {
  FnMonomial m;
  m.t = 1;
  return monomial(mode, m);
}

FunctionElement FunctionElement::sine(TimeMode mode) {
  if (mode == TimeMode::PolyTime) throw std::invalid_argument("S is not part of the polynomial time ring");
  FnMonomial m;
  m.s = 1;
  return monomial(mode, m);
}

FunctionElement FunctionElement::cosine(TimeMode mode) {
  if (mode == TimeMode::PolyTime) throw std::invalid_argument("C is not part of the polynomial time ring");
  FnMonomial m;
  m.c = 1;
  return monomial(mode, m);
}

FunctionElement FunctionElement::monomial(TimeMode mode, const FnMonomial& m, const ScalarSum& c) {
  FunctionElement f(mode);
  f.add_term(m, c);
  return f;
}

void FunctionElement::add_term(FnMonomial m, const ScalarSum& c) {
  if (c.is_zero()) return;
  trim(m.x);
  if (mode_ == TimeMode::PolyTime && (m.s != 0 || m.c != 0))
    throw std::invalid_argument("hyperbolic/trigonometric atom in polynomial time mode");
  if (m.c >= 2) {
    // C^2 = 1 + S^2 (Hyper) or 1 - S^2 (Trig)
    FnMonomial lower = m;
    lower.c -= 2;
    FnMonomial raised = lower;
    raised.s += 2;
    add_term(lower, c);
    add_term(raised, mode_ == TimeMode::Hyper ? c : -c);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FunctionElement::check_mode(const FunctionElement& o) const {
  if (o.mode_ != mode_)
    throw std::invalid_argument("time ring mode mismatch: " + mode_name(mode_) + " vs " +
                                mode_name(o.mode_));
}

FunctionElement& FunctionElement::operator+=(const FunctionElement& o) {
  check_mode(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FunctionElement& FunctionElement::operator-=(const FunctionElement& o) {
  check_mode(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FunctionElement& FunctionElement::operator*=(const ScalarSum& c) {
  TermMap out;
  for (auto& [m, v] : terms_) {
    ScalarSum p = v * c;
    if (!p.is_zero()) out.emplace_hint(out.end(), m, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

FunctionElement operator*(const FunctionElement& a, const FunctionElement& b) {
  a.check_mode(b);
  FunctionElement out(a.mode_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      FnMonomial m;
      m.x.assign(std::max(ma.x.size(), mb.x.size()), 0);
      for (std::size_t i = 0; i < ma.x.size(); ++i) m.x[i] += ma.x[i];
      for (std::size_t i = 0; i < mb.x.size(); ++i) m.x[i] += mb.x[i];
      m.t = ma.t + mb.t;
      m.s = ma.s + mb.s;
      m.c = ma.c + mb.c;
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

FunctionElement FunctionElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a function element");
  FunctionElement out = constant(mode_, ScalarSum(1));
  for (int j = 0; j < k; ++j) out = out * *this;
  return out;
}

FunctionElement FunctionElement::d_dt() const {
  FunctionElement out(mode_);
  const ScalarSum inv_tau = tau_power(-1);
  for (const auto& [m, c] : terms_) {
    if (m.t > 0) {
      FnMonomial d = m;
      d.t -= 1;
      out.add_term(d, c * m.t);
    }
    if (m.s > 0) {  // S' = C / tau
      FnMonomial d = m;
      d.s -= 1;
      d.c += 1;
      out.add_term(d, c * inv_tau * m.s);
    }
    if (m.c > 0) {  // C' = +-S / tau
      FnMonomial d = m;
      d.c -= 1;
      d.s += 1;
      out.add_term(d, c * inv_tau * (mode_ == TimeMode::Hyper ? 1 : -1));
    }
  }
  return out;
}

FunctionElement FunctionElement::d_dx(int i) const {
  if (i < 1) throw std::invalid_argument("coordinate index must be >= 1");
  FunctionElement out(mode_);
  for (const auto& [m, c] : terms_) {
    const int e = m.x_exponent(i);
    if (e == 0) continue;
    FnMonomial d = m;
    d.x[static_cast<std::size_t>(i - 1)] -= 1;
    out.add_term(d, c * e);
  }
  return out;
}

int FunctionElement::x_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
  return d;
}

int FunctionElement::t_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.t);
  return d;
}

bool FunctionElement::has_hyperbolic_atoms() const {
  for (const auto& [m, c] : terms_)
    if (m.s || m.c) return true;
  return false;
}

FunctionElement FunctionElement::substitute(const std::map<std::string, Rational>& values) const {
  FunctionElement out(mode_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.substitute(values));
  return out;
}

namespace {

template <typename Render>
std::string render_function(const FunctionElement::TermMap& terms, bool latex, Render key) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    SignedText t = latex ? signed_latex(c) : signed_text(c);
    std::string body;
    if (m.is_one())
      body = t.body;
    else if (t.is_unit())
      body = key(m);
    else
      body = t.body + (latex ? " " : "*") + key(m);
    out += first ? (t.negative ? "-" : "") : (t.negative ? " - " : " + ");
    out += body;
    first = false;
  }
  return out;
}

}  // namespace

std::string FunctionElement::str() const {
  return render_function(terms_, false, [](const FnMonomial& m) { return m.str(); });
}

std::string FunctionElement::latex() const {
  return render_function(terms_, true, [this](const FnMonomial& m) { return m.latex(mode_); });
}

// --- Taylor expansion and time shift ---------------------------------------------

TaylorExpansion taylor_expand(const FunctionElement& f, int order) {
  if (order < 0) throw std::invalid_argument("expansion order must be non-negative");
  const TimeMode mode = f.mode();
  TaylorExpansion out;
  out.remainder_order = order + 1;
  Series sine(static_cast<std::size_t>(order + 1)), cosine(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) {
    sine[k] = series_coeff(mode, true, k);
    cosine[k] = series_coeff(mode, false, k);
  }
  for (const auto& [m, c] : f.terms()) {
    if (m.t > order) continue;
    const int room = order - m.t;
    Series acc(static_cast<std::size_t>(room + 1), Rational(0));
    acc[0] = 1;
    if (mode != TimeMode::PolyTime) {
      for (int j = 0; j < m.s; ++j) acc = series_mul(acc, sine, room);
      for (int j = 0; j < m.c; ++j) acc = series_mul(acc, cosine, room);
    }
    for (int k = 0; k <= room; ++k) {
      if (sgn(acc[k]) == 0) continue;
      FnMonomial pm;
      pm.x = m.x;
      pm.t = m.t + k;
      out.poly.add_term(pm, c * ScalarSum(acc[k]) * tau_power(-k));
    }
  }
  return out;
}

FunctionElement shift_time(const FunctionElement& f, const std::string& shift) {
  const TimeMode mode = f.mode();
  const FunctionElement t = FunctionElement::time(mode);
  const FunctionElement shifted_t = t + FunctionElement::constant(mode, ScalarSum::param(shift));
  FunctionElement shifted_s(mode), shifted_c(mode);
  if (mode != TimeMode::PolyTime) {
    const ScalarSum s0 = ScalarSum::param("S0"), c0 = ScalarSum::param("C0");
    const FunctionElement S = FunctionElement::sine(mode), C = FunctionElement::cosine(mode);
    shifted_s = S * c0 + C * s0;
    shifted_c = C * c0 + S * s0 * (mode == TimeMode::Hyper ? 1 : -1);
  }
  FunctionElement out(mode);
  for (const auto& [m, c] : f.terms()) {
    FnMonomial xs;
    xs.x = m.x;
    FunctionElement term = FunctionElement::monomial(mode, xs, c) * shifted_t.pow(m.t);
    if (m.s) term = term * shifted_s.pow(m.s);
    if (m.c) term = term * shifted_c.pow(m.c);
    out += term;
  }
  return out;
}

}  // namespace nga
