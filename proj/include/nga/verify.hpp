#pragma once

// The aggregate verification run behind `nga verify`: every identity the engine
// can check for one algebra, collected into a report with a fixed order.

#include <optional>
#include <string>
#include <vector>

#include "nga/hopf.hpp"
#include "nga/star.hpp"

namespace nga {

struct CheckReport {
  std::string name;
  /// The identity being checked, as formula text.
  std::string formula;
  bool passed = false;
  bool terminated = true;
  std::string twist;  ///< empty when the check does not involve a twist
  int order = -1;     ///< truncation order, -1 when exact
  std::string detail;
};

struct TwistChoice {
  enum class Family { NM, Single } family = Family::NM;
  int n = 1, m = 1;
  int i = 1, k = 2, l = 3;
};

struct VerifyOptions {
  AlgebraSpec spec;
  int order = 8;
  /// Twists used for the cocycle, coproduct and antipode checks. Empty means
  /// NM at levels (min(1,N), min(1,N)) plus Single at level min(1,N) with
  /// (i,k,l) = (1,2,3) when d >= 3.
  std::vector<TwistChoice> twists;
  /// Optional alpha matrix for every NM twist; symbolic alpha_i_j otherwise.
  std::optional<AlphaMatrix> alpha;
  /// Total-degree bound for the representation check.
  int rep_degree = 6;
  /// The NM cocycle residual lives in U^(x)3 and its size grows steeply with the
  /// order; it is checked through min(order, cocycle_cap).
  int cocycle_cap = 4;
};

struct VerifyReport {
  AlgebraSpec spec;
  std::vector<CheckReport> checks;
  std::vector<SpacetimeTable> tables;
  std::vector<std::string> notes;

  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options);

RMatrix make_rmatrix(const LieAlgebra& algebra, const TwistChoice& choice,
                     const std::optional<AlphaMatrix>& alpha = std::nullopt);

/// Individual checks, also used by the CLI subcommands.
CheckReport check_jacobi(const LieAlgebra& algebra);
CheckReport check_representation(const LieAlgebra& algebra, int max_degree);
CheckReport check_cybe(const Enveloping& env, const RMatrix& r);
CheckReport check_normalization(const Enveloping& env, const Twist& twist);
CheckReport check_cocycle(const Enveloping& env, const Twist& twist);
CheckReport check_coproduct_homomorphism(const Enveloping& env, const Twist& twist);
CheckReport check_coassociativity(const Enveloping& env, const Twist& twist);
CheckReport check_antipode(const Enveloping& env, const Twist& twist);
/// Single twist only: Delta_a(G_k^(p)) against the rotation closed form.
CheckReport check_rotation_series(const Enveloping& env, const Twist& twist, int level);
CheckReport check_spacetime(const SpacetimeTable& table);
CheckReport check_nh_recurrence();
CheckReport check_flat_limit(int order);
CheckReport check_degeneration(const Enveloping& env, const Representation& rep,
                               const Twist& twist);

/// Delta_a(G_k^(p)) for Single(n; i, k, l) through `order`, written down from
/// the rotation exp(alpha ad M_kl) acting on the (G_k, G_l) plane.
TensorElement rotation_closed_form(const LieAlgebra& algebra, const RMatrix& r, int level,
                                   int order);

}  // namespace nga
