#include "nga/enveloping.hpp"

#include <algorithm>
#include <stdexcept>

namespace nga {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string word_text(const Word& w, const LieAlgebra& algebra, bool latex) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    const Generator& g = algebra.generator(w[k]);
    std::string piece = latex ? g.latex() : g.name();
    if (run > 1) piece = latex ? "\\left(" + piece + "\\right)^{" + std::to_string(run) + "}"
                               : piece + "^" + std::to_string(run);
    if (!out.empty()) out += latex ? " " : "*";
    out += piece;
    k += run;
  }
  return out;
}

template <typename Map, typename Render>
std::string render_sum(const Map& terms, Render render_key, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    SignedText t = latex ? signed_latex(c) : signed_text(c);
    std::string basis = render_key(key);
    std::string body;
    if (basis == "1")
      body = t.body;
    else if (t.is_unit())
      body = basis;
    else
      body = t.body + (latex ? " " : "*") + basis;
    if (first)
      out += (t.negative ? "-" : "") + body;
    else
      out += (t.negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace

// --- EnvElement ----------------------------------------------------------------

EnvElement EnvElement::scalar(const ScalarSum& c) {
  EnvElement e;
  e.add_term({}, c);
  return e;
}

EnvElement EnvElement::generator(GenIndex g, const ScalarSum& c) {
  EnvElement e;
  e.add_term({g}, c);
  return e;
}

EnvElement EnvElement::ordered_word(Word w, const ScalarSum& c) {
  EnvElement e;
  e.add_term(w, c);
  return e;
}

void EnvElement::add_term(const Word& w, const ScalarSum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const ScalarSum& c) {
  TermMap out;
  for (auto& [w, v] : terms_) {
    ScalarSum p = v * c;
    if (!p.is_zero()) out.emplace_hint(out.end(), w, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

EnvElement EnvElement::truncated(int max_degree) const {
  EnvElement out;
  for (const auto& [w, c] : terms_) out.add_term(w, c.truncated(max_degree));
  return out;
}

EnvElement EnvElement::substitute(const std::map<std::string, Rational>& values) const {
  EnvElement out;
  for (const auto& [w, c] : terms_) out.add_term(w, c.substitute(values));
  return out;
}

int EnvElement::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, c.max_degree());
  return d;
}

std::string EnvElement::str(const LieAlgebra& algebra) const {
  return render_sum(terms_, [&](const Word& w) { return word_text(w, algebra, false); }, false);
}

std::string EnvElement::latex(const LieAlgebra& algebra) const {
  return render_sum(terms_, [&](const Word& w) { return word_text(w, algebra, true); }, true);
}

// --- TensorElement -----------------------------------------------------------

TensorElement::TensorElement(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("tensor rank must be positive");
}

TensorElement TensorElement::unit(int rank) {
  TensorElement t(rank);
  t.add_term(Key(static_cast<std::size_t>(rank)), ScalarSum(1));
  return t;
}

TensorElement TensorElement::pure(const std::vector<EnvElement>& slots) {
  TensorElement out(static_cast<int>(slots.size()));
  std::vector<std::pair<Key, ScalarSum>> acc{{Key{}, ScalarSum(1)}};
  for (const auto& slot : slots) {
    std::vector<std::pair<Key, ScalarSum>> next;
    for (const auto& [k, c] : acc)
      for (const auto& [w, v] : slot.terms()) {
        Key nk = k;
        nk.push_back(w);
        next.emplace_back(std::move(nk), c * v);
      }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) out.add_term(k, c);
  return out;
}

void TensorElement::add_term(const Key& k, const ScalarSum& c) {
  if (static_cast<int>(k.size()) != rank_)
    throw std::invalid_argument("tensor term rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("tensor rank mismatch in sum");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("tensor rank mismatch in difference");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const ScalarSum& c) {
  TermMap out;
  for (auto& [k, v] : terms_) {
    ScalarSum p = v * c;
    if (!p.is_zero()) out.emplace_hint(out.end(), k, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

TensorElement TensorElement::truncated(int max_degree) const {
  TensorElement out(rank_);
  for (const auto& [k, c] : terms_) out.add_term(k, c.truncated(max_degree));
  return out;
}

TensorElement TensorElement::substitute(const std::map<std::string, Rational>& values) const {
  TensorElement out(rank_);
  for (const auto& [k, c] : terms_) out.add_term(k, c.substitute(values));
  return out;
}

int TensorElement::max_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, c.max_degree());
  return d;
}

TensorElement TensorElement::embed(int target_rank, std::span<const int> slots) const {
  if (static_cast<int>(slots.size()) != rank_)
    throw std::invalid_argument("embedding needs one target slot per tensor factor");
  TensorElement out(target_rank);
  for (const auto& [k, c] : terms_) {
    Key nk(static_cast<std::size_t>(target_rank));
    for (int s = 0; s < rank_; ++s) nk.at(static_cast<std::size_t>(slots[s])) = k[s];
    out.add_term(nk, c);
  }
  return out;
}

std::string TensorElement::str(const LieAlgebra& algebra) const {
  return render_sum(
      terms_,
      [&](const Key& k) {
        std::string s;
        for (std::size_t i = 0; i < k.size(); ++i) {
          if (i) s += " (x) ";
          s += word_text(k[i], algebra, false);
        }
        return s;
      },
      false);
}

std::string TensorElement::latex(const LieAlgebra& algebra) const {
  return render_sum(
      terms_,
      [&](const Key& k) {
        std::string s;
        for (std::size_t i = 0; i < k.size(); ++i) {
          if (i) s += " \\otimes ";
          s += word_text(k[i], algebra, true);
        }
        return s;
      },
      true);
}

// --- Enveloping ------------------------------------------------------------------

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (GenIndex g : w) h = mix(h, g);
  return h;
}

std::size_t Enveloping::PairHash::operator()(const std::pair<Word, Word>& p) const noexcept {
  return mix(WordHash{}(p.first), WordHash{}(p.second));
}

std::size_t Enveloping::GenKeyHash::operator()(
    const std::pair<Word, GenIndex>& p) const noexcept {
  return mix(WordHash{}(p.first), p.second);
}

const EnvElement& Enveloping::times_generator(const Word& w, GenIndex g) const {
  std::pair<Word, GenIndex> key{w, g};
  {
    std::lock_guard lock(mutex_);
    if (auto it = gen_cache_.find(key); it != gen_cache_.end()) return it->second;
  }

  EnvElement result;
  if (w.empty() || w.back() <= g) {
    Word ordered = w;
    ordered.push_back(g);
    result.add_term(ordered, ScalarSum(1));
  } else {
    // w' y g = w' g y + w' [y, g]
    const GenIndex y = w.back();
    const Word prefix(w.begin(), w.end() - 1);
    for (const auto& [u, c] : times_generator(prefix, g).terms())
      for (const auto& [v, cv] : times_generator(u, y).terms()) result.add_term(v, c * cv);
    for (const auto& [z, cz] : algebra_.bracket(y, g))
      for (const auto& [u, c] : times_generator(prefix, z).terms()) result.add_term(u, c * cz);
  }

  std::lock_guard lock(mutex_);
  return gen_cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

const EnvElement& Enveloping::word_product(const Word& u, const Word& v) const {
  std::pair<Word, Word> key{u, v};
  {
    std::lock_guard lock(mutex_);
    if (auto it = word_cache_.find(key); it != word_cache_.end()) return it->second;
  }

  EnvElement current = EnvElement::ordered_word(u);
  for (GenIndex g : v) {
    EnvElement next;
    for (const auto& [w, c] : current.terms())
      for (const auto& [x, cx] : times_generator(w, g).terms()) next.add_term(x, c * cx);
    current = std::move(next);
  }

  std::lock_guard lock(mutex_);
  return word_cache_.try_emplace(std::move(key), std::move(current)).first->second;
}

EnvElement Enveloping::normal_order(std::span<const GenIndex> word) const {
  for (GenIndex g : word)
    if (g >= algebra_.size()) throw std::out_of_range("generator index outside the algebra");
  return word_product({}, Word(word.begin(), word.end()));
}

namespace {

// Terms paired with their lowest deformation degree, sorted by it, so that a
// truncated product can stop scanning once the degree budget is exhausted.
template <class Map>
std::vector<std::pair<typename Map::const_pointer, int>> by_degree(const Map& terms) {
  std::vector<std::pair<typename Map::const_pointer, int>> out;
  out.reserve(terms.size());
  for (const auto& entry : terms) out.emplace_back(&entry, entry.second.min_degree());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

bool over_budget(int da, int db, int max_degree) {
  return max_degree != kNoTruncation && da + db > max_degree;
}

}  // namespace

EnvElement Enveloping::multiply(const EnvElement& a, const EnvElement& b, int max_degree) const {
  EnvElement out;
  const auto bs = by_degree(b.terms());
  for (const auto& [wa, ca] : a.terms()) {
    const int da = ca.min_degree();
    for (const auto& [entry, db] : bs) {
      if (over_budget(da, db, max_degree)) break;
      const auto& [wb, cb] = *entry;
      ScalarSum c = ca * cb;
      if (max_degree != kNoTruncation) c = c.truncated(max_degree);
      if (c.is_zero()) continue;
      for (const auto& [w, cw] : word_product(wa, wb).terms()) out.add_term(w, c * cw);
    }
  }
  return out;
}

TensorElement Enveloping::multiply(const TensorElement& a, const TensorElement& b,
                                   int max_degree) const {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor rank mismatch in product");
  const int rank = a.rank();
  TensorElement out(rank);
  std::vector<const EnvElement*> slots(static_cast<std::size_t>(rank));
  const auto bs = by_degree(b.terms());
  for (const auto& [ka, ca] : a.terms()) {
    const int da = ca.min_degree();
    for (const auto& [entry, db] : bs) {
      if (over_budget(da, db, max_degree)) break;
      const auto& [kb, cb] = *entry;
      ScalarSum c = ca * cb;
      if (max_degree != kNoTruncation) c = c.truncated(max_degree);
      if (c.is_zero()) continue;
      bool zero = false;
      for (int s = 0; s < rank; ++s) {
        slots[s] = &word_product(ka[s], kb[s]);
        zero = zero || slots[s]->is_zero();
      }
      if (zero) continue;
      // Cartesian product of the slot expansions.
      std::vector<EnvElement::TermMap::const_iterator> it(static_cast<std::size_t>(rank));
      for (int s = 0; s < rank; ++s) it[s] = slots[s]->terms().begin();
      TensorElement::Key key(static_cast<std::size_t>(rank));
      while (true) {
        ScalarSum coeff = c;
        for (int s = 0; s < rank; ++s) {
          key[s] = it[s]->first;
          if (!(it[s]->second == ScalarSum(1))) coeff *= it[s]->second;
        }
        out.add_term(key, coeff);
        int s = rank - 1;
        while (s >= 0 && ++it[s] == slots[s]->terms().end()) {
          it[s] = slots[s]->terms().begin();
          --s;
        }
        if (s < 0) break;
      }
    }
  }
  return out;
}

TensorElement Enveloping::commutator(const TensorElement& a, const TensorElement& b,
                                     int max_degree) const {
  return multiply(a, b, max_degree) - multiply(b, a, max_degree);
}

EnvElement Enveloping::collapse(const TensorElement& t, int max_degree) const {
  EnvElement out;
  for (const auto& [k, c] : t.terms()) {
    if (c.min_degree() > max_degree) continue;
    EnvElement acc = EnvElement::ordered_word(k[0], c);
    for (std::size_t s = 1; s < k.size(); ++s)
      acc = multiply(acc, EnvElement::ordered_word(k[s]), max_degree);
    out += acc;
  }
  return max_degree == kNoTruncation ? out : out.truncated(max_degree);
}

SeriesResult ad_series_conjugate(const Enveloping& env, const TensorElement& r,
                                 const TensorElement& y, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  SeriesResult out;
  TensorElement current = y.truncated(order);
  out.value = current;
  Gaussian factor(1);
  for (int k = 1; k <= order; ++k) {
    TensorElement next = env.commutator(r, current);
    if (next.is_zero()) {
      out.terminated = true;
      out.vanishing_depth = k;
      break;
    }
    current = next.truncated(order);
    if (current.is_zero()) break;
    factor *= Gaussian(0, frac(1, k));  // i^k / k!
    out.value += current * ScalarSum(factor);
  }
  return out;
}

}  // namespace nga
