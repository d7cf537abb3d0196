#pragma once

// Generators realised as first-order differential operators on FunctionElements:
//   M_ij -> i (x_i d_j - x_j d_i),  H -> i d_t,  G_i^(n) -> i f_n(t) d_i
// with f_n = t^n (Galilei) or the Newton-Hooke multipliers.

#include <vector>

#include "nga/algebra.hpp"
#include "nga/function_space.hpp"

namespace nga {

/// sum_k coeff_k * D_k where D_k is d_t (var = 0) or d_{x_var} (var >= 1).
class DiffOperator {
 public:
  struct Term {
    FunctionElement coeff;
    int var;
  };

  DiffOperator() = default;
  explicit DiffOperator(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  FunctionElement apply(const FunctionElement& f) const;
  /// Largest derivative order (always 1 for generator images).
  int order() const { return terms_.empty() ? 0 : 1; }

 private:
  std::vector<Term> terms_;
};

class Representation {
 public:
  explicit Representation(const LieAlgebra& algebra);

  const LieAlgebra& algebra() const { return algebra_; }
  TimeMode mode() const { return mode_; }

  const DiffOperator& op(GenIndex g) const { return ops_.at(g); }
  FunctionElement apply(GenIndex g, const FunctionElement& f) const { return op(g).apply(f); }
  FunctionElement apply(const LinearCombination& v, const FunctionElement& f) const;

 private:
  const LieAlgebra& algebra_;
  TimeMode mode_;
  std::vector<DiffOperator> ops_;
};

struct RepResidual {
  GenIndex x, y;
  FnMonomial basis;
  FunctionElement residual;
};

/// X(Y f) - Y(X f) - [X,Y] f for every generator pair and every monomial
/// x^a t^k of total degree <= max_degree; returns the nonzero residuals.
std::vector<RepResidual> rep_consistency_check(const LieAlgebra& algebra, int max_degree);

/// All monomials x_1^a_1 ... x_d^a_d t^k with total degree <= max_degree.
std::vector<FnMonomial> basis_monomials(int dim, int max_degree);

}  // namespace nga
