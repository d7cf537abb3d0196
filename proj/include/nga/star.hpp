#pragma once

// Twisted star products f * g = m((F^{-1}) |> f (x) g) and the quantum
// space-time commutator tables they induce.

#include <string>
#include <vector>

#include "nga/hopf.hpp"
#include "nga/representation.hpp"

namespace nga {

struct StarEvaluation {
  FunctionElement value;
  /// Deepest nesting reached by any single-carrier exponential.
  int max_depth = 0;
  /// deg_x f + deg_x g; max_depth never exceeds it.
  int depth_bound = 0;
};

/// Star product for an Abelian r-matrix. exp(-i r) factorises into one
/// exponential per tensor term of r; each one is expanded until its boost
/// carrier annihilates the slot, so results are exact with no truncation.
class StarProduct {
 public:
  StarProduct(const Representation& rep, const RMatrix& r);

  StarEvaluation evaluate(const FunctionElement& f, const FunctionElement& g) const;
  FunctionElement product(const FunctionElement& f, const FunctionElement& g) const {
    return evaluate(f, g).value;
  }
  FunctionElement commutator(const FunctionElement& f, const FunctionElement& g) const;

 private:
  const Representation& rep_;
  const RMatrix& r_;
};

/// Coordinate index: 0 is t, 1..d are x_1..x_d.
struct SpacetimeEntry {
  int a = 0, b = 0;
  FunctionElement value;
  FunctionElement closed_form;
  bool matches = false;

  /// "[t,x1]" or "[x1,x2]"
  std::string pair_name() const;
};

struct SpacetimeTable {
  std::string twist;
  AlgebraSpec spec;
  std::vector<SpacetimeEntry> entries;  ///< all pairs a < b
  /// Closed-form template the entries are compared against.
  std::string closed_form_template;

  bool all_match() const;
  /// [c_a, c_b] with antisymmetry applied for a > b and zero on the diagonal.
  FunctionElement commutator(int a, int b) const;
};

/// Closed-form star commutator [c_a, c_b] predicted for this twist.
FunctionElement closed_form_commutator(const Representation& rep, const RMatrix& r, int a, int b);
std::string closed_form_template(const AlgebraSpec& spec, const RMatrix& r);

SpacetimeTable spacetime_table(const Representation& rep, const RMatrix& r);

/// Coordinate function for index 0 (t) or 1..d.
FunctionElement coordinate_function(TimeMode mode, int index);

}  // namespace nga
