#pragma once

// Generators and structure constants of the N-enlarged Galilei algebra and
// its Newton-Hooke variants.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nga/scalar.hpp"

namespace nga {

enum class Variant { Galilei, NewtonHookePlus, NewtonHookeMinus };

std::string variant_name(Variant v);
Variant parse_variant(std::string_view s);

/// Highest enlargement level for which Newton-Hooke coefficient functions are known.
inline constexpr int kMaxNewtonHookeLevel = 6;

struct AlgebraSpec {
  int n = 1;    ///< enlargement order N
  int dim = 3;  ///< spatial dimension d
  Variant variant = Variant::Galilei;

  bool newton_hooke() const { return variant != Variant::Galilei; }
  /// +1 for the hyperbolic variant, -1 for the trigonometric one, 0 for Galilei.
  int nh_sign() const;
  /// Throws std::invalid_argument when the combination is unsupported.
  void validate() const;
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// M(i,j) with i < j, H, or G(i,n); spatial indices are 1-based.
struct Generator {
  enum class Kind : std::uint8_t { Rotation, TimeTranslation, Boost };

  Kind kind = Kind::TimeTranslation;
  int a = 0;  ///< M: first index; G: spatial index
  int b = 0;  ///< M: second index; G: level n

  static Generator rotation(int i, int j) { return {Kind::Rotation, i, j}; }
  static Generator time_translation() { return {Kind::TimeTranslation, 0, 0}; }
  static Generator boost(int i, int level) { return {Kind::Boost, i, level}; }

  /// "M:i:j", "H" or "G:i:n".
  std::string name() const;
  std::string latex() const;
  static Generator parse(std::string_view text);

  friend bool operator==(const Generator&, const Generator&) = default;
};

using GenIndex = std::uint16_t;

/// Element of the linear span of generators: sorted by index, no zero coefficients.
using LinearCombination = std::vector<std::pair<GenIndex, ScalarSum>>;

LinearCombination& add_to(LinearCombination& acc, GenIndex g, const ScalarSum& c);
LinearCombination operator+(const LinearCombination& a, const LinearCombination& b);
LinearCombination scaled(const LinearCombination& a, const ScalarSum& c);

/// Lie algebra with generators listed in PBW order: all M(i,j) lexicographically,
/// then H, then G(i,n) ordered by level and then spatial index.
class LieAlgebra {
 public:
  explicit LieAlgebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(GenIndex g) const { return gens_.at(g); }

  std::optional<GenIndex> find(const Generator& g) const;
  /// Throws std::out_of_range when g is not part of this algebra.
  GenIndex index(const Generator& g) const;
  GenIndex index(std::string_view name) const { return index(Generator::parse(name)); }

  const LinearCombination& bracket(GenIndex x, GenIndex y) const {
    return table_[static_cast<std::size_t>(x) * gens_.size() + y];
  }
  LinearCombination bracket(const LinearCombination& x, const LinearCombination& y) const;

  std::string render(const LinearCombination& v) const;

  /// Human-readable remarks attached to verification reports.
  std::vector<std::string> notes() const;

 private:
  LinearCombination compute_bracket(const Generator& x, const Generator& y) const;
  // Span element for M(i,j) with arbitrary index order; zero when i == j.
  LinearCombination rotation_term(int i, int j, const ScalarSum& c) const;

  AlgebraSpec spec_;
  std::vector<Generator> gens_;
  std::vector<LinearCombination> table_;
};

struct JacobiResidual {
  GenIndex x, y, z;
  LinearCombination residual;
};

/// [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] for every unordered triple (repeats included);
/// returns only the nonzero residuals.
std::vector<JacobiResidual> jacobi_check(const LieAlgebra& algebra);

}  // namespace nga
