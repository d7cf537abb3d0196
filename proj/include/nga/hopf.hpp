#pragma once

// Classical Hopf structure, the two Abelian r-matrix families, twist factors,
// and the twisted coproduct / antipode together with their consistency checks.

#include <string>
#include <vector>

#include "nga/algebra.hpp"
#include "nga/enveloping.hpp"

namespace nga {

/// Primitive coproduct extended multiplicatively; Delta_0(1) = 1 (x) 1.
TensorElement classical_coproduct(const EnvElement& x);
/// Anti-homomorphic extension of a -> -a, re-normal-ordered.
EnvElement classical_antipode(const Enveloping& env, const EnvElement& x);
/// Coefficient of the empty word.
ScalarSum counit(const EnvElement& x);

/// Applies Delta_0 to one slot of a tensor element, raising its rank by one.
TensorElement coproduct_on_slot(const TensorElement& t, int slot);
/// Applies epsilon to one slot of a tensor element, lowering its rank by one.
TensorElement counit_on_slot(const TensorElement& t, int slot);

/// Antisymmetric d x d matrix of deformation coefficients, 1-based access.
class AlphaMatrix {
 public:
  explicit AlphaMatrix(int dim);
  /// alpha_i_j above the diagonal (and its negative below).
  static AlphaMatrix symbolic(int dim, const std::string& prefix = "alpha");
  /// Full matrix; throws std::invalid_argument when it is not antisymmetric.
  static AlphaMatrix from_rows(const std::vector<std::vector<ScalarSum>>& rows);

  int dim() const { return dim_; }
  const ScalarSum& at(int i, int j) const;
  /// Sets entry (i,j) and its mirror (j,i) = -value.
  void set(int i, int j, const ScalarSum& value);

 private:
  int dim_;
  std::vector<ScalarSum> entries_;
};

class RMatrix {
 public:
  enum class Family { NM, Single };

  /// 1/2 alpha^{ij} G_i^(n) ^ G_j^(m), summed over i, j.
  static RMatrix nm(const LieAlgebra& algebra, int n, int m, const AlphaMatrix& alpha);
  /// alpha G_i^(n) ^ M_kl with i not in {k, l}.
  static RMatrix single(const LieAlgebra& algebra, int n, int i, int k, int l,
                        const ScalarSum& alpha = ScalarSum::param("alpha"));

  Family family() const { return family_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int i() const { return i_; }
  int k() const { return k_; }
  int l() const { return l_; }
  const AlphaMatrix& alpha_matrix() const { return alpha_matrix_; }
  const ScalarSum& alpha() const { return alpha_; }

  const TensorElement& expansion() const { return expansion_; }
  /// Generators appearing in the expansion, sorted.
  const std::vector<GenIndex>& carriers() const { return carriers_; }
  /// Names of the deformation parameters occurring in the expansion.
  std::vector<std::string> parameters() const;

  /// e.g. "r^(1,2)" or "r^(0)[i=1,k=2,l=3]"
  std::string label() const;

 private:
  RMatrix(const LieAlgebra& algebra, Family family);
  void finish(const LieAlgebra& algebra);

  Family family_;
  int n_ = 0, m_ = 0, i_ = 0, k_ = 0, l_ = 0;
  AlphaMatrix alpha_matrix_;
  ScalarSum alpha_;
  TensorElement expansion_;
  std::vector<GenIndex> carriers_;
};

/// Twist F = exp(i r) handled as a formal series through `order` in the deformation parameters.
struct Twist {
  RMatrix r;
  int order = 8;
};

/// exp(sign * i r) truncated at the twist order; sign = -1 gives F^{-1}.
TensorElement twist_factor(const Enveloping& env, const Twist& twist, int sign = 1);

/// [r12, r13 + r23] + [r13, r23] in U^(x)3.
TensorElement schouten_bracket(const Enveloping& env, const RMatrix& r);

/// F12 (Delta_0 (x) 1)F - F23 (1 (x) Delta_0)F through the twist order.
TensorElement cocycle_residual(const Enveloping& env, const Twist& twist);
/// (eps (x) 1)F = (1 (x) eps)F = 1.
bool normalization_holds(const Enveloping& env, const Twist& twist);

/// F Delta_0(x) F^{-1} via the adjoint series.
SeriesResult twisted_coproduct(const Enveloping& env, const EnvElement& x, const Twist& twist);

/// u = sum f_(1) S_0(f_(2)) from the order-K expansion of F.
EnvElement twist_u(const Enveloping& env, const Twist& twist);
/// Formal-series inverse of u (u = 1 + higher order).
EnvElement twist_u_inverse(const Enveloping& env, const Twist& twist);
/// u and u^{-1} together, for callers evaluating many antipodes under one twist.
struct TwistUnit {
  EnvElement u, u_inv;
};
TwistUnit twist_unit(const Enveloping& env, const Twist& twist);

/// u S_0(x) u^{-1} through the twist order.
EnvElement twisted_antipode(const Enveloping& env, const EnvElement& x, const Twist& twist);
EnvElement twisted_antipode(const Enveloping& env, const EnvElement& x, const Twist& twist,
                            const TwistUnit& unit);

/// (Delta_a (x) id) Delta_a(x) - (id (x) Delta_a) Delta_a(x) through the twist order.
TensorElement coassociativity_residual(const Enveloping& env, const EnvElement& x,
                                       const Twist& twist);

enum class AntipodeSide { Left, Right };
/// m (S_a (x) id) Delta_a(x) - eps(x) 1 (Left) or m (id (x) S_a) Delta_a(x) - eps(x) 1 (Right).
EnvElement antipode_axiom_residual(const Enveloping& env, const EnvElement& x, const Twist& twist,
                                   AntipodeSide side = AntipodeSide::Left);
EnvElement antipode_axiom_residual(const Enveloping& env, const EnvElement& x, const Twist& twist,
                                   const TwistUnit& unit, AntipodeSide side);

}  // namespace nga
