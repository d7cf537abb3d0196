#include "nga/hopf.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace nga {

namespace {

// Delta_0 of a PBW word: sum over all ways of splitting the letters into two
// order-preserving subsequences. Subsequences of an ordered word stay ordered.
void split_word(const Word& w, const ScalarSum& c, const std::vector<Word>& prefix,
                const std::vector<Word>& suffix, TensorElement& out) {
  const std::size_t len = w.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    Word left, right;
    for (std::size_t b = 0; b < len; ++b) ((mask >> b) & 1 ? left : right).push_back(w[b]);
    TensorElement::Key key = prefix;
    key.push_back(std::move(left));
    key.push_back(std::move(right));
    key.insert(key.end(), suffix.begin(), suffix.end());
    out.add_term(key, c);
  }
}

// The twist series are truncated by deformation degree, which only means
// something when every coefficient of r carries a deformation parameter.
void require_graded(const RMatrix& r) {
  for (const auto& [k, c] : r.expansion().terms())
    if (c.min_degree() < 1)
      throw std::invalid_argument(
          "twist series need every r-matrix coefficient to carry a deformation parameter");
}

EnvElement antipode_of_word(const Enveloping& env, const Word& w) {
  Word rev(w.rbegin(), w.rend());
  EnvElement e = env.normal_order(rev);
  if (w.size() % 2 == 1) e *= ScalarSum(-1);
  return e;
}

std::string idx(int v) { return std::to_string(v); }

}  // namespace

TensorElement classical_coproduct(const EnvElement& x) {
  TensorElement out(2);
  for (const auto& [w, c] : x.terms()) split_word(w, c, {}, {}, out);
  return out;
}

TensorElement coproduct_on_slot(const TensorElement& t, int slot) {
  if (slot < 0 || slot >= t.rank()) throw std::out_of_range("coproduct slot out of range");
  TensorElement out(t.rank() + 1);
  for (const auto& [k, c] : t.terms()) {
    std::vector<Word> prefix(k.begin(), k.begin() + slot);
    std::vector<Word> suffix(k.begin() + slot + 1, k.end());
    split_word(k[static_cast<std::size_t>(slot)], c, prefix, suffix, out);
  }
  return out;
}

TensorElement counit_on_slot(const TensorElement& t, int slot) {
  if (slot < 0 || slot >= t.rank()) throw std::out_of_range("counit slot out of range");
  if (t.rank() == 1) throw std::invalid_argument("counit_on_slot needs rank >= 2");
  TensorElement out(t.rank() - 1);
  for (const auto& [k, c] : t.terms()) {
    if (!k[static_cast<std::size_t>(slot)].empty()) continue;
    TensorElement::Key nk = k;
    nk.erase(nk.begin() + slot);
    out.add_term(nk, c);
  }
  return out;
}

EnvElement classical_antipode(const Enveloping& env, const EnvElement& x) {
  EnvElement out;
  for (const auto& [w, c] : x.terms()) out += antipode_of_word(env, w) * c;
  return out;
}

ScalarSum counit(const EnvElement& x) {
  auto it = x.terms().find(Word{});
  return it == x.terms().end() ? ScalarSum{} : it->second;
}

// --- AlphaMatrix ---------------------------------------------------------------

AlphaMatrix::AlphaMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim)) {
  if (dim < 1) throw std::invalid_argument("alpha matrix dimension must be positive");
}

AlphaMatrix AlphaMatrix::symbolic(int dim, const std::string& prefix) {
  AlphaMatrix a(dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j)
      a.set(i, j, ScalarSum::param(prefix + "_" + idx(i) + "_" + idx(j)));
  return a;
}

AlphaMatrix AlphaMatrix::from_rows(const std::vector<std::vector<ScalarSum>>& rows) {
  const int dim = static_cast<int>(rows.size());
  AlphaMatrix a(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim)
      throw std::invalid_argument("alpha matrix must be square");
    for (int j = 0; j < dim; ++j)
      if (!(rows[i][j] == -rows[j][i]))
        throw std::invalid_argument("alpha matrix is not antisymmetric at (" + idx(i + 1) + "," +
                                    idx(j + 1) + ")");
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) a.set(i + 1, j + 1, rows[i][j]);
  return a;
}

const ScalarSum& AlphaMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) throw std::out_of_range("alpha matrix index");
  return entries_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))];
}

void AlphaMatrix::set(int i, int j, const ScalarSum& value) {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) throw std::out_of_range("alpha matrix index");
  if (i == j && !value.is_zero())
    throw std::invalid_argument("alpha matrix diagonal must vanish");
  entries_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))] = value;
  entries_[static_cast<std::size_t>((j - 1) * dim_ + (i - 1))] = -value;
}

// --- RMatrix -------------------------------------------------------------------

RMatrix::RMatrix(const LieAlgebra& algebra, Family family)
    : family_(family), alpha_matrix_(algebra.spec().dim), expansion_(2) {}

RMatrix RMatrix::nm(const LieAlgebra& algebra, int n, int m, const AlphaMatrix& alpha) {
  const AlgebraSpec& spec = algebra.spec();
  if (n < 0 || m < 0 || n > spec.n || m > spec.n)
    throw std::invalid_argument("twist levels must lie in 0..N");
  if (alpha.dim() != spec.dim)
    throw std::invalid_argument("alpha matrix dimension differs from the spatial dimension");
  RMatrix r(algebra, Family::NM);
  r.n_ = n;
  r.m_ = m;
  r.alpha_matrix_ = alpha;
  const ScalarSum half(frac(1, 2));
  for (int i = 1; i <= spec.dim; ++i)
    for (int j = 1; j <= spec.dim; ++j) {
      const ScalarSum& a = alpha.at(i, j);
      if (a.is_zero()) continue;
      const GenIndex gi = algebra.index(Generator::boost(i, n));
      const GenIndex gj = algebra.index(Generator::boost(j, m));
      r.expansion_.add_term({{gi}, {gj}}, half * a);
      r.expansion_.add_term({{gj}, {gi}}, -(half * a));
    }
  r.finish(algebra);
  return r;
}

RMatrix RMatrix::single(const LieAlgebra& algebra, int n, int i, int k, int l,
                        const ScalarSum& alpha) {
  const AlgebraSpec& spec = algebra.spec();
  if (spec.dim < 3) throw std::invalid_argument("single-index twist needs dimension >= 3");
  if (n < 0 || n > spec.n) throw std::invalid_argument("twist level must lie in 0..N");
  if (i < 1 || k < 1 || l < 1 || i > spec.dim || k > spec.dim || l > spec.dim)
    throw std::invalid_argument("twist indices must lie in 1..d");
  if (i == k || i == l) throw std::invalid_argument("single-index twist requires i != k, l");
  if (k >= l) throw std::invalid_argument("single-index twist requires k < l");
  RMatrix r(algebra, Family::Single);
  r.n_ = n;
  r.i_ = i;
  r.k_ = k;
  r.l_ = l;
  r.alpha_ = alpha;
  const GenIndex g = algebra.index(Generator::boost(i, n));
  const GenIndex rot = algebra.index(Generator::rotation(k, l));
  r.expansion_.add_term({{g}, {rot}}, alpha);
  r.expansion_.add_term({{rot}, {g}}, -alpha);
  r.finish(algebra);
  return r;
}

void RMatrix::finish(const LieAlgebra& algebra) {
  std::set<GenIndex> seen;
  for (const auto& [k, c] : expansion_.terms())
    for (const auto& w : k) seen.insert(w.begin(), w.end());
  carriers_.assign(seen.begin(), seen.end());
  for (GenIndex a : carriers_)
    for (GenIndex b : carriers_)
      if (!algebra.bracket(a, b).empty())
        throw std::invalid_argument("r-matrix carriers " + algebra.generator(a).name() + " and " +
                                    algebra.generator(b).name() + " do not commute");
}

std::vector<std::string> RMatrix::parameters() const {
  std::set<std::string> names;
  for (const auto& [k, c] : expansion_.terms())
    for (const auto& [m, v] : c.terms())
      for (const auto& [name, e] : m.factors())
        if (name != kTimeScale) names.insert(name);
  return {names.begin(), names.end()};
}

std::string RMatrix::label() const {
  if (family_ == Family::NM) return "r^(" + idx(n_) + "," + idx(m_) + ")";
  return "r^(" + idx(n_) + ")[i=" + idx(i_) + ",k=" + idx(k_) + ",l=" + idx(l_) + "]";
}

// --- twist machinery -------------------------------------------------------------

TensorElement twist_factor(const Enveloping& env, const Twist& twist, int sign) {
  require_graded(twist.r);
  const int order = twist.order;
  TensorElement out = TensorElement::unit(2);
  TensorElement power = TensorElement::unit(2);
  Gaussian factor(1);
  for (int k = 1; k <= order; ++k) {
    power = env.multiply(power, twist.r.expansion(), order);
    if (power.is_zero()) break;
    factor *= Gaussian(0, frac(sign, k));  // (sign i)^k / k!
    out += power * ScalarSum(factor);
  }
  return out;
}

TensorElement schouten_bracket(const Enveloping& env, const RMatrix& r) {
  static constexpr std::array<int, 2> s12{0, 1}, s13{0, 2}, s23{1, 2};
  const TensorElement& e = r.expansion();
  TensorElement r12 = e.embed(3, s12), r13 = e.embed(3, s13), r23 = e.embed(3, s23);
  return env.commutator(r12, r13 + r23) + env.commutator(r13, r23);
}

TensorElement cocycle_residual(const Enveloping& env, const Twist& twist) {
  static constexpr std::array<int, 2> s12{0, 1}, s23{1, 2};
  const int order = twist.order;
  const TensorElement f = twist_factor(env, twist);
  TensorElement lhs = env.multiply(f.embed(3, s12), coproduct_on_slot(f, 0), order);
  TensorElement rhs = env.multiply(f.embed(3, s23), coproduct_on_slot(f, 1), order);
  return (lhs - rhs).truncated(order);
}

bool normalization_holds(const Enveloping& env, const Twist& twist) {
  const TensorElement f = twist_factor(env, twist);
  const TensorElement one = TensorElement::unit(1);
  return counit_on_slot(f, 0) == one && counit_on_slot(f, 1) == one;
}

SeriesResult twisted_coproduct(const Enveloping& env, const EnvElement& x, const Twist& twist) {
  require_graded(twist.r);
  return ad_series_conjugate(env, twist.r.expansion(), classical_coproduct(x), twist.order);
}

EnvElement twist_u(const Enveloping& env, const Twist& twist) {
  const TensorElement f = twist_factor(env, twist);
  EnvElement u;
  for (const auto& [k, c] : f.terms())
    u += env.multiply(EnvElement::ordered_word(k[0], c), antipode_of_word(env, k[1]),
                      twist.order);
  return u.truncated(twist.order);
}

EnvElement twist_u_inverse(const Enveloping& env, const Twist& twist) {
  return twist_unit(env, twist).u_inv;
}

TwistUnit twist_unit(const Enveloping& env, const Twist& twist) {
  TwistUnit out{twist_u(env, twist), {}};
  if (!(counit(out.u) == ScalarSum(1)))
    throw std::logic_error("twist element u does not start with 1");
  const EnvElement minus_w = EnvElement::unit() - out.u;
  out.u_inv = EnvElement::unit();
  EnvElement power = EnvElement::unit();
  for (int k = 1; k <= twist.order; ++k) {
    power = env.multiply(power, minus_w, twist.order);
    if (power.is_zero()) break;
    out.u_inv += power;
  }
  out.u_inv = out.u_inv.truncated(twist.order);
  return out;
}

EnvElement twisted_antipode(const Enveloping& env, const EnvElement& x, const Twist& twist,
                            const TwistUnit& unit) {
  const int order = twist.order;
  return env.multiply(env.multiply(unit.u, classical_antipode(env, x), order), unit.u_inv, order);
}

EnvElement twisted_antipode(const Enveloping& env, const EnvElement& x, const Twist& twist) {
  return twisted_antipode(env, x, twist, twist_unit(env, twist));
}

TensorElement coassociativity_residual(const Enveloping& env, const EnvElement& x,
                                       const Twist& twist) {
  const int order = twist.order;
  const TensorElement d = twisted_coproduct(env, x, twist).value;
  std::map<Word, TensorElement> memo;
  auto delta = [&](const Word& w) -> const TensorElement& {
    auto it = memo.find(w);
    if (it == memo.end())
      it = memo.emplace(w, twisted_coproduct(env, EnvElement::ordered_word(w), twist).value)
               .first;
    return it->second;
  };

  TensorElement left(3), right(3);
  for (const auto& [k, c] : d.terms()) {
    for (const auto& [k2, c2] : delta(k[0]).terms()) {
      ScalarSum coeff = (c * c2).truncated(order);
      left.add_term({k2[0], k2[1], k[1]}, coeff);
    }
    for (const auto& [k2, c2] : delta(k[1]).terms()) {
      ScalarSum coeff = (c * c2).truncated(order);
      right.add_term({k[0], k2[0], k2[1]}, coeff);
    }
  }
  return left - right;
}

EnvElement antipode_axiom_residual(const Enveloping& env, const EnvElement& x, const Twist& twist,
                                   AntipodeSide side) {
  return antipode_axiom_residual(env, x, twist, twist_unit(env, twist), side);
}

EnvElement antipode_axiom_residual(const Enveloping& env, const EnvElement& x, const Twist& twist,
                                   const TwistUnit& unit, AntipodeSide side) {
  const int order = twist.order;
  const TensorElement d = twisted_coproduct(env, x, twist).value;
  EnvElement sum;
  for (const auto& [k, c] : d.terms()) {
    if (c.min_degree() > order) continue;
    if (side == AntipodeSide::Left) {
      EnvElement s = twisted_antipode(env, EnvElement::ordered_word(k[0]), twist, unit);
      sum += env.multiply(s * c, EnvElement::ordered_word(k[1]), order);
    } else {
      EnvElement s = twisted_antipode(env, EnvElement::ordered_word(k[1]), twist, unit);
      sum += env.multiply(EnvElement::ordered_word(k[0], c), s, order);
    }
  }
  sum -= EnvElement::scalar(counit(x));
  return sum.truncated(order);
}

}  // namespace nga
