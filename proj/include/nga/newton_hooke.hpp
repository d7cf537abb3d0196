#pragma once

// Coefficient functions, finite transformations and the flat limit of the
// 6-enlarged Newton-Hooke symmetry.

#include <string>
#include <vector>

#include "nga/algebra.hpp"
#include "nga/function_space.hpp"

namespace nga {

enum class NHSign { Plus, Minus };

std::string sign_name(NHSign s);
TimeMode time_mode(NHSign s);
/// Throws std::invalid_argument for the Galilei variant.
NHSign nh_sign(Variant v);

/// The n-th time multiplier f_n(t) of the transformation law (n = 0..6):
/// f0 = C, f1 = tau S, f2 = +-2 tau^2 (C - 1), ..., f6 = 720 tau^6 (+-C -+ u^4/24 - u^2/2 -+ 1)
/// with u = t/tau. Throws std::invalid_argument for n outside 0..6.
FunctionElement nh_coefficient(int n, NHSign sign);

/// t^n for Galilei, f_n for the Newton-Hooke variants.
FunctionElement level_coefficient(const AlgebraSpec& spec, int n);

struct SpacetimePoint {
  FunctionElement t;
  std::vector<FunctionElement> x;

  /// (t, x_1, ..., x_d) as coordinate functions.
  static SpacetimePoint coordinates(TimeMode mode, int dim);
};

struct NHTransformParams {
  std::vector<std::vector<ScalarSum>> omega;  ///< d x d, not required to be orthogonal
  std::vector<std::vector<ScalarSum>> a;      ///< d rows of a_{i0}..a_{i6}; missing entries are 0
  bool shift_time = false;
  std::string t0 = "t0";

  /// omega = identity, a = 0.
  static NHTransformParams identity(int dim);
};

/// x_i -> omega_ij x_j + sum_n a_in f_n(t), t -> t + t0 (when requested).
SpacetimePoint nh_transform(const SpacetimePoint& p, const NHTransformParams& params, NHSign sign);

struct FlatLimitReport {
  int n = 0;
  NHSign sign = NHSign::Plus;
  int order = 0;
  FunctionElement expansion{TimeMode::PolyTime};
  FunctionElement leading{TimeMode::PolyTime};  ///< tau^0 part
  bool leading_matches = false;                 ///< leading == t^n
  bool remainder_negative = false;              ///< every other term has a negative tau power

  bool passed() const { return leading_matches && remainder_negative; }
};

/// Expands f_n through t^order (order >= n) and inspects the tau powers.
FlatLimitReport flat_limit_check(int n, NHSign sign, int order);

}  // namespace nga
