#pragma once

// Exact coefficient ring: Gaussian rationals times monomials in commuting
// formal parameters. Only the time scale "tau" may carry negative exponents.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nga {

using Rational = mpq_class;

/// p/q in canonical form.
inline Rational frac(long p, long q) {
  Rational r(p);
  r /= q;
  return r;
}

/// Name of the Newton-Hooke time scale parameter.
inline constexpr std::string_view kTimeScale = "tau";

/// re + i*im with exact rational parts.
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(int r) : re(r), im(0) {}

  static Gaussian i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Gaussian inverse() const;

  std::string str() const;
  std::string latex() const;
};

/// Product of formal parameters with integer exponents, sorted by name.
class ParamMonomial {
 public:
  using Factor = std::pair<std::string, int>;

  ParamMonomial() = default;

  /// name^exponent; negative exponents are accepted only for tau.
  static ParamMonomial power(std::string name, int exponent = 1);

  bool empty() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }
  int exponent(std::string_view name) const;

  /// Total degree in deformation parameters (every parameter except tau).
  int degree() const;

  friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  std::string str() const;
  std::string latex() const;

 private:
  std::vector<Factor> factors_;
};

/// A single coefficient term: Gaussian rational times a parameter monomial.
struct Scalar {
  Gaussian coeff;
  ParamMonomial params;

  bool is_zero() const { return coeff.is_zero(); }
  std::string str() const;
};

/// Finite sum of Scalars with pairwise-distinct parameter monomials.
class ScalarSum {
 public:
  using TermMap = std::map<ParamMonomial, Gaussian>;

  ScalarSum() = default;
  ScalarSum(int v) : ScalarSum(Gaussian(v)) {}
  ScalarSum(Rational v) : ScalarSum(Gaussian(std::move(v))) {}
  ScalarSum(Gaussian g);
  ScalarSum(const Scalar& s);

  static ScalarSum i() { return ScalarSum(Gaussian::i()); }
  static ScalarSum param(std::string name, int exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::vector<Scalar> scalars() const;

  ScalarSum& operator+=(const ScalarSum& o);
  ScalarSum& operator-=(const ScalarSum& o);
  ScalarSum& operator*=(const ScalarSum& o);
  ScalarSum& operator*=(const Gaussian& g);

  friend ScalarSum operator+(ScalarSum a, const ScalarSum& b) { return a += b; }
  friend ScalarSum operator-(ScalarSum a, const ScalarSum& b) { return a -= b; }
  friend ScalarSum operator*(const ScalarSum& a, const ScalarSum& b);
  friend ScalarSum operator-(ScalarSum a);
  friend bool operator==(const ScalarSum&, const ScalarSum&) = default;

  /// Adds c * m without building a temporary sum.
  void add_term(const ParamMonomial& m, const Gaussian& c);

  /// Smallest / largest deformation degree among the terms (0 for zero).
  int min_degree() const;
  int max_degree() const;

  /// Drops every term of deformation degree above max_degree.
  ScalarSum truncated(int max_degree) const;

  /// Replaces the named parameters by rational values.
  ScalarSum substitute(const std::map<std::string, Rational>& values) const;

  /// True when the sum is a constant (no parameters).
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Gaussian constant_part() const;

  /// Canonical text, e.g. "(3/2)*i*alpha^2*tau^-1".
  std::string str() const;
  std::string latex() const;

 private:
  TermMap terms_;
};

ScalarSum operator*(const ScalarSum& a, const ScalarSum& b);
ScalarSum operator-(ScalarSum a);

/// LaTeX for a parameter name: greek words get a backslash, "_a_b" becomes a subscript.
std::string latex_param_name(std::string_view name);

/// Sign-separated rendering of a coefficient for use in front of a basis
/// element. `body` is "1" for a unit coefficient; multi-term sums come back
/// parenthesised with negative = false.
struct SignedText {
  bool negative = false;
  std::string body;
  bool is_unit() const { return body == "1"; }
};

SignedText signed_text(const ScalarSum& s);
SignedText signed_latex(const ScalarSum& s);

}  // namespace nga
