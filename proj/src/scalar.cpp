#include "nga/scalar.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace nga {

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

// Rational factor placed in front of other factors: "3", "(3/2)".
std::string rational_factor(const Rational& q) {
  if (q.get_den() == 1) return q.get_str();
  return "(" + q.get_str() + ")";
}

std::string rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_str();
  std::string sign = sgn(q) < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

// Positive-looking representative of a Gaussian and whether it was negated.
std::pair<Gaussian, bool> split_sign(const Gaussian& g) {
  bool neg = false;
  if (sgn(g.im) == 0)
    neg = sgn(g.re) < 0;
  else if (sgn(g.re) == 0)
    neg = sgn(g.im) < 0;
  return {neg ? -g : g, neg};
}

// Text of a non-negative-looking Gaussian used as a multiplicative factor.
std::string gaussian_factor(const Gaussian& g) {
  if (sgn(g.im) == 0) return rational_factor(g.re);
  if (sgn(g.re) == 0) {
    if (g.im == 1) return "i";
    return rational_factor(g.im) + "*i";
  }
  return "(" + g.str() + ")";
}

std::string gaussian_factor_latex(const Gaussian& g) {
  if (sgn(g.im) == 0) return rational_latex(g.re);
  if (sgn(g.re) == 0) {
    if (g.im == 1) return "i";
    return rational_latex(g.im) + " i";
  }
  return "\\left(" + g.latex() + "\\right)";
}

SignedText term_text(const Gaussian& c, const ParamMonomial& m, bool latex) {
  auto [pos, neg] = split_sign(c);
  SignedText out;
  out.negative = neg;
  if (pos.is_one()) {
    out.body = m.empty() ? "1" : (latex ? m.latex() : m.str());
    return out;
  }
  out.body = latex ? gaussian_factor_latex(pos) : gaussian_factor(pos);
  if (!m.empty()) out.body += latex ? " " + m.latex() : "*" + m.str();
  return out;
}

std::string join_terms(const ScalarSum::TermMap& terms, bool latex) {
  if (terms.empty()) return "0";
  if (terms.size() == 1 && terms.begin()->first.empty())
    return latex ? terms.begin()->second.latex() : terms.begin()->second.str();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    SignedText t = term_text(c, m, latex);
    if (first)
      out += (t.negative ? "-" : "") + t.body;
    else
      out += (t.negative ? " - " : " + ") + t.body;
    first = false;
  }
  return out;
}

bool is_greek(std::string_view w) {
  static constexpr std::array<std::string_view, 24> names = {
      "alpha", "beta",  "gamma",   "delta", "epsilon", "zeta", "eta",   "theta",
      "iota",  "kappa", "lambda",  "mu",    "nu",      "xi",   "pi",    "rho",
      "sigma", "tau",   "upsilon", "phi",   "chi",     "psi",  "omega", "varphi"};
  return std::find(names.begin(), names.end(), w) != names.end();
}

}  // namespace

// --- Gaussian --------------------------------------------------------------

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian Gaussian::inverse() const {
  Rational norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero Gaussian rational");
  return {re / norm, -im / norm};
}

std::string Gaussian::str() const {
  if (sgn(im) == 0) return rational_text(re);
  std::string imag;
  Rational mag = abs(im);
  imag = mag == 1 ? "i" : rational_factor(mag) + "*i";
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag;
  return rational_text(re) + (sgn(im) < 0 ? " - " : " + ") + imag;
}

std::string Gaussian::latex() const {
  if (sgn(im) == 0) return rational_latex(re);
  Rational mag = abs(im);
  std::string imag = mag == 1 ? "i" : rational_latex(mag) + " i";
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag;
  return rational_latex(re) + (sgn(im) < 0 ? " - " : " + ") + imag;
}

// --- ParamMonomial ---------------------------------------------------------

ParamMonomial ParamMonomial::power(std::string name, int exponent) {
  if (name.empty()) throw std::invalid_argument("empty parameter name");
  if (exponent < 0 && name != kTimeScale)
    throw std::invalid_argument("negative exponent for non-Laurent parameter '" + name + "'");
  ParamMonomial m;
  if (exponent != 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

int ParamMonomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

int ParamMonomial::degree() const {
  int d = 0;
  for (const auto& [n, e] : factors_)
    if (n != kTimeScale) d += e;
  return d;
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      f.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      f.push_back(*ib++);
    } else {
      int e = ia->second + ib->second;
      if (e != 0) f.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::string ParamMonomial::str() const {
  std::string out;
  for (const auto& [n, e] : factors_) {
    if (!out.empty()) out += "*";
    out += n;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string ParamMonomial::latex() const {
  std::string out;
  for (const auto& [n, e] : factors_) {
    if (!out.empty()) out += " ";
    out += latex_param_name(n);
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out.empty() ? "1" : out;
}

std::string latex_param_name(std::string_view name) {
  auto us = name.find('_');
  std::string_view head = name.substr(0, us);
  std::string out = is_greek(head) ? "\\" + std::string(head) : std::string(head);
  if (head.size() > 1 && !is_greek(head)) out = "\\mathrm{" + out + "}";
  if (us != std::string_view::npos) {
    std::string sub;
    for (char ch : name.substr(us + 1))
      if (ch != '_') sub += ch;
    out += "_{" + sub + "}";
  }
  return out;
}

// --- Scalar ----------------------------------------------------------------

std::string Scalar::str() const { return ScalarSum(*this).str(); }

// --- ScalarSum -------------------------------------------------------------

ScalarSum::ScalarSum(Gaussian g) {
  if (!g.is_zero()) terms_.emplace(ParamMonomial{}, std::move(g));
}

ScalarSum::ScalarSum(const Scalar& s) {
  if (!s.is_zero()) terms_.emplace(s.params, s.coeff);
}

ScalarSum ScalarSum::param(std::string name, int exponent) {
  return ScalarSum(Scalar{Gaussian(1), ParamMonomial::power(std::move(name), exponent)});
}

std::vector<Scalar> ScalarSum::scalars() const {
  std::vector<Scalar> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({c, m});
  return out;
}

void ScalarSum::add_term(const ParamMonomial& m, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarSum& ScalarSum::operator+=(const ScalarSum& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ScalarSum& ScalarSum::operator-=(const ScalarSum& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ScalarSum& ScalarSum::operator*=(const ScalarSum& o) { return *this = *this * o; }

ScalarSum& ScalarSum::operator*=(const Gaussian& g) {
  if (g.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= g;
  return *this;
}

ScalarSum operator*(const ScalarSum& a, const ScalarSum& b) {
  ScalarSum out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ScalarSum operator-(ScalarSum a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

int ScalarSum::min_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

int ScalarSum::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

ScalarSum ScalarSum::truncated(int max_degree) const {
  ScalarSum out;
  for (const auto& [m, c] : terms_)
    if (m.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

ScalarSum ScalarSum::substitute(const std::map<std::string, Rational>& values) const {
  ScalarSum out;
  for (const auto& [m, c] : terms_) {
    Gaussian coeff = c;
    ParamMonomial rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) {
        rest = rest * ParamMonomial::power(name, e);
        continue;
      }
      if (sgn(it->second) == 0 && e < 0)
        throw std::domain_error("substituting zero for '" + name + "' with negative exponent");
      Rational v = 1;
      Rational base = e < 0 ? Rational(1 / it->second) : it->second;
      for (int k = 0; k < std::abs(e); ++k) v *= base;
      coeff *= Gaussian(v);
    }
    out.add_term(rest, coeff);
  }
  return out;
}

bool ScalarSum::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Gaussian ScalarSum::constant_part() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? Gaussian{} : it->second;
}

std::string ScalarSum::str() const { return join_terms(terms_, false); }
std::string ScalarSum::latex() const { return join_terms(terms_, true); }

SignedText signed_text(const ScalarSum& s) {
  if (s.size() == 1) {
    const auto& [m, c] = *s.terms().begin();
    return term_text(c, m, false);
  }
  return {false, "(" + s.str() + ")"};
}

SignedText signed_latex(const ScalarSum& s) {
  if (s.size() == 1) {
    const auto& [m, c] = *s.terms().begin();
    return term_text(c, m, true);
  }
  return {false, "\\left(" + s.latex() + "\\right)"};
}

}  // namespace nga
