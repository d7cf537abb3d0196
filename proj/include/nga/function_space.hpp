#pragma once

// Functions f(t, x_1..x_d): polynomials in the coordinates whose coefficients
// live in a time ring. PolyTime is the plain polynomial ring in t; Hyper and
// Trig adjoin S, C = sinh, cosh (resp. sin, cos) of t/tau, with C^2 always
// rewritten as 1 + S^2 (resp. 1 - S^2).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nga/algebra.hpp"
#include "nga/scalar.hpp"

namespace nga {

enum class TimeMode { PolyTime, Hyper, Trig };

std::string mode_name(TimeMode m);
/// PolyTime for Galilei, Hyper for nh+, Trig for nh-.
TimeMode time_mode(Variant v);

/// x^e * t^a * S^b * C^c with c in {0, 1}; x exponents carry no trailing zeros.
struct FnMonomial {
  std::vector<int> x;
  int t = 0;
  int s = 0;
  int c = 0;

  int x_exponent(int i) const;  ///< 1-based
  int x_degree() const;
  bool is_one() const { return x.empty() && t == 0 && s == 0 && c == 0; }

  friend auto operator<=>(const FnMonomial&, const FnMonomial&) = default;
  friend bool operator==(const FnMonomial&, const FnMonomial&) = default;

  std::string str() const;
  std::string latex(TimeMode mode) const;
};

class FunctionElement {
 public:
  using TermMap = std::map<FnMonomial, ScalarSum>;

  explicit FunctionElement(TimeMode mode = TimeMode::PolyTime) : mode_(mode) {}

  static FunctionElement constant(TimeMode mode, const ScalarSum& c);
  static FunctionElement coordinate(TimeMode mode, int i);  ///< x_i, 1-based
  static FunctionElement time(TimeMode mode);
  /// S and C exist only in Hyper / Trig mode.
  static FunctionElement sine(TimeMode mode);
  static FunctionElement cosine(TimeMode mode);
  /// Adds the monomial, reducing C^2 if present.
  static FunctionElement monomial(TimeMode mode, const FnMonomial& m,
                                  const ScalarSum& c = ScalarSum(1));

  TimeMode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c * m; m may carry C^k for any k >= 0, which is reduced.
  void add_term(FnMonomial m, const ScalarSum& c);

  FunctionElement& operator+=(const FunctionElement& o);
  FunctionElement& operator-=(const FunctionElement& o);
  FunctionElement& operator*=(const ScalarSum& c);
  friend FunctionElement operator+(FunctionElement a, const FunctionElement& b) { return a += b; }
  friend FunctionElement operator-(FunctionElement a, const FunctionElement& b) { return a -= b; }
  friend FunctionElement operator*(FunctionElement a, const ScalarSum& c) { return a *= c; }
  friend FunctionElement operator*(const FunctionElement& a, const FunctionElement& b);
  friend FunctionElement operator-(FunctionElement a) { return a *= ScalarSum(-1); }
  friend bool operator==(const FunctionElement&, const FunctionElement&) = default;

  FunctionElement pow(int k) const;

  FunctionElement d_dt() const;
  FunctionElement d_dx(int i) const;

  /// Highest total x-degree (0 for zero).
  int x_degree() const;
  /// Highest power of t (0 for zero).
  int t_degree() const;
  bool has_hyperbolic_atoms() const;

  FunctionElement substitute(const std::map<std::string, Rational>& values) const;

  std::string str() const;
  std::string latex() const;

 private:
  void check_mode(const FunctionElement& o) const;

  TimeMode mode_;
  TermMap terms_;
};

FunctionElement operator*(const FunctionElement& a, const FunctionElement& b);

/// Truncated expansion of S, C in powers of t/tau; terms with t-power above
/// `order` are dropped and `remainder_order` = order + 1 marks O(t^(order+1)).
struct TaylorExpansion {
  FunctionElement poly{TimeMode::PolyTime};
  int remainder_order = 0;
};

TaylorExpansion taylor_expand(const FunctionElement& f, int order);

/// f(t + t0): powers of t expand binomially and S, C use the addition rules
/// with the formal constants S0 = S(t0/tau), C0 = C(t0/tau).
FunctionElement shift_time(const FunctionElement& f, const std::string& shift = "t0");

}  // namespace nga
