#pragma once

// Universal enveloping algebra in the PBW basis, its tensor powers, and the
// truncated adjoint exponential used for twist conjugation.

#include <climits>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nga/algebra.hpp"
#include "nga/scalar.hpp"

namespace nga {

/// Sequence of generator indices. Stored words are weakly increasing (PBW-ordered).
using Word = std::vector<GenIndex>;

inline constexpr int kNoTruncation = INT_MAX;

class EnvElement {
 public:
  using TermMap = std::map<Word, ScalarSum>;

  EnvElement() = default;
  static EnvElement unit() { return scalar(ScalarSum(1)); }
  static EnvElement scalar(const ScalarSum& c);
  static EnvElement generator(GenIndex g, const ScalarSum& c = ScalarSum(1));
  /// The caller guarantees `w` is PBW-ordered.
  static EnvElement ordered_word(Word w, const ScalarSum& c = ScalarSum(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Word& w, const ScalarSum& c);
  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const ScalarSum& c);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(EnvElement a, const ScalarSum& c) { return a *= c; }
  friend bool operator==(const EnvElement&, const EnvElement&) = default;

  EnvElement truncated(int max_degree) const;
  EnvElement substitute(const std::map<std::string, Rational>& values) const;
  int max_degree() const;

  /// e.g. "H*G:1:1 - i*G:1:0"
  std::string str(const LieAlgebra& algebra) const;
  std::string latex(const LieAlgebra& algebra) const;

 private:
  TermMap terms_;
};

/// Element of U (x) U or U (x) U (x) U; every slot is PBW-ordered.
class TensorElement {
 public:
  using Key = std::vector<Word>;
  using TermMap = std::map<Key, ScalarSum>;

  explicit TensorElement(int rank = 2);
  static TensorElement unit(int rank);
  /// Product of single-slot elements, e.g. pure({a, b}) = a (x) b.
  static TensorElement pure(const std::vector<EnvElement>& slots);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Key& k, const ScalarSum& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const ScalarSum& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const ScalarSum& c) { return a *= c; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  TensorElement truncated(int max_degree) const;
  TensorElement substitute(const std::map<std::string, Rational>& values) const;
  int max_degree() const;

  /// Places a rank-2 element into the given slots of a rank-3 unit, e.g. {0, 2} gives r_13.
  TensorElement embed(int target_rank, std::span<const int> slots) const;

  /// e.g. "H (x) 1 + 1 (x) H"
  std::string str(const LieAlgebra& algebra) const;
  std::string latex(const LieAlgebra& algebra) const;

 private:
  int rank_;
  TermMap terms_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Multiplication in U(g) by bracket rewriting. Products of PBW words are memoised;
/// the caches are guarded so one engine can be shared across threads.
class Enveloping {
 public:
  explicit Enveloping(const LieAlgebra& algebra) : algebra_(algebra) {}
  Enveloping(const Enveloping&) = delete;
  Enveloping& operator=(const Enveloping&) = delete;

  const LieAlgebra& algebra() const { return algebra_; }

  /// PBW normal form of an arbitrary word.
  EnvElement normal_order(std::span<const GenIndex> word) const;

  /// Normal form of u*v for PBW-ordered u and v.
  const EnvElement& word_product(const Word& u, const Word& v) const;

  EnvElement multiply(const EnvElement& a, const EnvElement& b,
                      int max_degree = kNoTruncation) const;
  /// Slotwise product; throws std::invalid_argument on rank mismatch.
  TensorElement multiply(const TensorElement& a, const TensorElement& b,
                         int max_degree = kNoTruncation) const;
  TensorElement commutator(const TensorElement& a, const TensorElement& b,
                           int max_degree = kNoTruncation) const;

  /// Sum of c * a1 * a2 * ... over the slots of a tensor element: the map m.
  EnvElement collapse(const TensorElement& t, int max_degree = kNoTruncation) const;

 private:
  const EnvElement& times_generator(const Word& w, GenIndex g) const;

  struct PairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept;
  };
  struct GenKeyHash {
    std::size_t operator()(const std::pair<Word, GenIndex>& p) const noexcept;
  };

  const LieAlgebra& algebra_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::pair<Word, GenIndex>, EnvElement, GenKeyHash> gen_cache_;
  mutable std::unordered_map<std::pair<Word, Word>, EnvElement, PairHash> word_cache_;
};

struct SeriesResult {
  TensorElement value;
  /// True when some nested commutator vanished exactly, so `value` is the full series.
  bool terminated = false;
  /// First nesting depth whose commutator is exactly zero (-1 when not terminated).
  int vanishing_depth = -1;
};

/// exp(ad_{i r})(y) = sum_{k <= order} i^k / k! ad_r^k(y), truncated at total
/// deformation degree `order`.
SeriesResult ad_series_conjugate(const Enveloping& env, const TensorElement& r,
                                 const TensorElement& y, int order);

}  // namespace nga
