#include "nga/star.hpp"

#include <map>
#include <stdexcept>

#include "nga/newton_hooke.hpp"

namespace nga {

namespace {

using BiKey = std::pair<FnMonomial, FnMonomial>;
using BiFunction = std::map<BiKey, ScalarSum>;

void add_bi(BiFunction& acc, const BiKey& k, const ScalarSum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

StarProduct::StarProduct(const Representation& rep, const RMatrix& r) : rep_(rep), r_(r) {
  for (const auto& [k, c] : r.expansion().terms())
    if (k[0].size() != 1 || k[1].size() != 1)
      throw std::invalid_argument("star product expects an r-matrix with single-generator slots");
}

StarEvaluation StarProduct::evaluate(const FunctionElement& f, const FunctionElement& g) const {
  const TimeMode mode = rep_.mode();
  if (f.mode() != mode || g.mode() != mode)
    throw std::invalid_argument("star product operands must live in the " + mode_name(mode) +
                                " time ring of the algebra");
  StarEvaluation out;
  out.depth_bound = f.x_degree() + g.x_degree();

  BiFunction state;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) add_bi(state, {mf, mg}, cf * cg);

  std::map<std::pair<GenIndex, FnMonomial>, FunctionElement> memo;
  auto act = [&](GenIndex gen, const FnMonomial& m) -> const FunctionElement& {
    auto key = std::make_pair(gen, m);
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, rep_.apply(gen, FunctionElement::monomial(mode, m))).first;
    return it->second;
  };

  const ScalarSum minus_i = -ScalarSum::i();
  for (const auto& [key, c] : r_.expansion().terms()) {
    const GenIndex left = key[0][0], right = key[1][0];
    // exp(-i c a (x) b) = sum_k (-i c)^k / k! (a (x) b)^k
    BiFunction acc = state, current = state;
    ScalarSum factor(1);
    for (int depth = 1;; ++depth) {
      BiFunction next;
      for (const auto& [bk, bc] : current) {
        const FunctionElement& fa = act(left, bk.first);
        if (fa.is_zero()) continue;
        const FunctionElement& fb = act(right, bk.second);
        if (fb.is_zero()) continue;
        for (const auto& [ma, ca] : fa.terms())
          for (const auto& [mb, cb] : fb.terms()) add_bi(next, {ma, mb}, bc * ca * cb);
      }
      if (next.empty()) break;
      if (depth > out.depth_bound)
        throw std::logic_error("star product series exceeded its degree bound");
      out.max_depth = std::max(out.max_depth, depth);
      factor = factor * minus_i * c * ScalarSum(frac(1, depth));
      for (const auto& [bk, bc] : next) add_bi(acc, bk, bc * factor);
      current = std::move(next);
    }
    state = std::move(acc);
  }

  FunctionElement value(mode);
  for (const auto& [bk, bc] : state)
    value += FunctionElement::monomial(mode, bk.first, bc) * FunctionElement::monomial(mode, bk.second);
  out.value = std::move(value);
  return out;
}

FunctionElement StarProduct::commutator(const FunctionElement& f, const FunctionElement& g) const {
  return product(f, g) - product(g, f);
}

// --- tables ------------------------------------------------------------------------

std::string SpacetimeEntry::pair_name() const {
  auto name = [](int c) { return c == 0 ? std::string("t") : "x" + std::to_string(c); };
  return "[" + name(a) + "," + name(b) + "]";
}

bool SpacetimeTable::all_match() const {
  for (const auto& e : entries)
    if (!e.matches) return false;
  return true;
}

FunctionElement SpacetimeTable::commutator(int a, int b) const {
  const TimeMode mode = time_mode(spec.variant);
  if (a == b) return FunctionElement(mode);
  for (const auto& e : entries) {
    if (e.a == a && e.b == b) return e.value;
    if (e.a == b && e.b == a) return -e.value;
  }
  throw std::out_of_range("coordinate index outside the table");
}

FunctionElement coordinate_function(TimeMode mode, int index) {
  return index == 0 ? FunctionElement::time(mode) : FunctionElement::coordinate(mode, index);
}

FunctionElement closed_form_commutator(const Representation& rep, const RMatrix& r, int a, int b) {
  const AlgebraSpec& spec = rep.algebra().spec();
  const TimeMode mode = rep.mode();
  FunctionElement out(mode);
  if (a == 0 || b == 0 || a == b) return out;  // [t, x_a] = 0
  const ScalarSum I = ScalarSum::i();

  if (r.family() == RMatrix::Family::NM) {
    FunctionElement time_factor(mode);
    if (!spec.newton_hooke()) {
      FnMonomial m;
      m.t = r.n() + r.m();
      time_factor = FunctionElement::monomial(mode, m);
    } else if (r.n() == 6 && r.m() == 6) {
      // 518400 tau^12 (+-C -+ u^4/24 - u^2/2 -+ 1)^2, u = t/tau
      const ScalarSum pm(nh_sign(spec.variant) == NHSign::Plus ? 1 : -1);
      const FunctionElement u =
          FunctionElement::time(mode) * ScalarSum::param(std::string(kTimeScale), -1);
      const FunctionElement inner = FunctionElement::cosine(mode) * pm -
                                    u.pow(4) * (pm * frac(1, 24)) - u.pow(2) * frac(1, 2) -
                                    FunctionElement::constant(mode, pm);
      time_factor =
          inner.pow(2) * (ScalarSum(518400) * ScalarSum::param(std::string(kTimeScale), 12));
    } else {
      time_factor = level_coefficient(spec, r.n()) * level_coefficient(spec, r.m());
    }
    ScalarSum coeff;
    for (int i = 1; i <= spec.dim; ++i)
      for (int j = 1; j <= spec.dim; ++j)
        coeff += I * r.alpha_matrix().at(i, j) *
                 (delta(a, i) * delta(b, j) - delta(a, j) * delta(b, i));
    return time_factor * coeff;
  }

  // 2 i alpha f_n(t) [d_ia (x_k d_bl - x_l d_bk) - d_ib (x_k d_al - x_l d_ak)]
  const int i = r.i(), k = r.k(), l = r.l();
  const FunctionElement xk = FunctionElement::coordinate(mode, k);
  const FunctionElement xl = FunctionElement::coordinate(mode, l);
  const FunctionElement bracket = (xk * delta(b, l) - xl * delta(b, k)) * delta(i, a) -
                                  (xk * delta(a, l) - xl * delta(a, k)) * delta(i, b);
  return level_coefficient(spec, r.n()) * bracket * (2 * I * r.alpha());
}

std::string closed_form_template(const AlgebraSpec& spec, const RMatrix& r) {
  if (r.family() == RMatrix::Family::NM) {
    std::string time = spec.newton_hooke()
                           ? "f_" + std::to_string(r.n()) + "(t)*f_" + std::to_string(r.m()) + "(t)"
                           : "t^" + std::to_string(r.n() + r.m());
    if (spec.newton_hooke() && r.n() == 6 && r.m() == 6)
      time = "518400*tau^12*(+-C -+ (t/tau)^4/24 - (t/tau)^2/2 -+ 1)^2";
    return "[t,x_a] = 0; [x_a,x_b] = i*alpha^{ij}*" + time + "*(d_ai*d_bj - d_aj*d_bi)";
  }
  const std::string time = spec.newton_hooke() ? "f_" + std::to_string(r.n()) + "(t)"
                                               : "t^" + std::to_string(r.n());
  return "[t,x_a] = 0; [x_a,x_b] = 2*i*alpha*" + time +
         "*(d_ia*(x_k*d_bl - x_l*d_bk) - d_ib*(x_k*d_al - x_l*d_ak))";
}

SpacetimeTable spacetime_table(const Representation& rep, const RMatrix& r) {
  const AlgebraSpec& spec = rep.algebra().spec();
  const StarProduct star(rep, r);
  SpacetimeTable table{r.label(), spec, {}, closed_form_template(spec, r)};
  for (int a = 0; a <= spec.dim; ++a)
    for (int b = a + 1; b <= spec.dim; ++b) {
      SpacetimeEntry e;
      e.a = a;
      e.b = b;
      e.value = star.commutator(coordinate_function(rep.mode(), a),
                                coordinate_function(rep.mode(), b));
      e.closed_form = closed_form_commutator(rep, r, a, b);
      e.matches = e.value == e.closed_form;
      table.entries.push_back(std::move(e));
    }
  return table;
}

}  // namespace nga
