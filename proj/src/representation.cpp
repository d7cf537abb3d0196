#include "nga/representation.hpp"

#include "nga/newton_hooke.hpp"

namespace nga {

FunctionElement DiffOperator::apply(const FunctionElement& f) const {
  FunctionElement out(f.mode());
  for (const auto& [coeff, var] : terms_) {
    FunctionElement d = var == 0 ? f.d_dt() : f.d_dx(var);
    if (!d.is_zero()) out += coeff * d;
  }
  return out;
}

Representation::Representation(const LieAlgebra& algebra)
    : algebra_(algebra), mode_(time_mode(algebra.spec().variant)) {
  using K = Generator::Kind;
  const FunctionElement i_unit = FunctionElement::constant(mode_, ScalarSum::i());
  for (const Generator& g : algebra.generators()) {
    switch (g.kind) {
      case K::Rotation:
        ops_.emplace_back(std::vector<DiffOperator::Term>{
            {i_unit * FunctionElement::coordinate(mode_, g.a), g.b},
            {-(i_unit * FunctionElement::coordinate(mode_, g.b)), g.a}});
        break;
      case K::TimeTranslation:
        ops_.emplace_back(std::vector<DiffOperator::Term>{{i_unit, 0}});
        break;
      case K::Boost:
        ops_.emplace_back(std::vector<DiffOperator::Term>{
            {i_unit * level_coefficient(algebra.spec(), g.b), g.a}});
        break;
    }
  }
}

FunctionElement Representation::apply(const LinearCombination& v, const FunctionElement& f) const {
  FunctionElement out(f.mode());
  for (const auto& [g, c] : v) out += apply(g, f) * c;
  return out;
}

std::vector<FnMonomial> basis_monomials(int dim, int max_degree) {
  std::vector<FnMonomial> out;
  // Exponent vectors over (x_1..x_d, t) with bounded total degree.
  std::vector<int> e(static_cast<std::size_t>(dim + 1), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == dim + 1) {
      FnMonomial m;
      m.x.assign(e.begin(), e.begin() + dim);
      while (!m.x.empty() && m.x.back() == 0) m.x.pop_back();
      m.t = e[static_cast<std::size_t>(dim)];
      out.push_back(std::move(m));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

std::vector<RepResidual> rep_consistency_check(const LieAlgebra& algebra, int max_degree) {
  const Representation rep(algebra);
  const auto count = static_cast<GenIndex>(algebra.size());
  std::vector<RepResidual> out;
  for (const FnMonomial& m : basis_monomials(algebra.spec().dim, max_degree)) {
    const FunctionElement f = FunctionElement::monomial(rep.mode(), m);
    std::vector<FunctionElement> once;
    once.reserve(count);
    for (GenIndex g = 0; g < count; ++g) once.push_back(rep.apply(g, f));
    for (GenIndex x = 0; x < count; ++x)
      for (GenIndex y = x + 1; y < count; ++y) {
        FunctionElement r = rep.apply(x, once[y]) - rep.apply(y, once[x]) -
                            rep.apply(algebra.bracket(x, y), f);
        if (!r.is_zero()) out.push_back({x, y, m, std::move(r)});
      }
  }
  return out;
}

}  // namespace nga
