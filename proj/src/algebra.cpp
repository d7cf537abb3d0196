#include "nga/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace nga {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad generator name '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Galilei: return "galilei";
    case Variant::NewtonHookePlus: return "nh+";
    case Variant::NewtonHookeMinus: return "nh-";
  }
  return "galilei";
}

Variant parse_variant(std::string_view s) {
  if (s == "galilei") return Variant::Galilei;
  if (s == "nh+") return Variant::NewtonHookePlus;
  if (s == "nh-") return Variant::NewtonHookeMinus;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

int AlgebraSpec::nh_sign() const {
  switch (variant) {
    case Variant::NewtonHookePlus: return 1;
    case Variant::NewtonHookeMinus: return -1;
    default: return 0;
  }
}

void AlgebraSpec::validate() const {
  if (dim < 2) throw std::invalid_argument("spatial dimension must be at least 2");
  if (n < 0) throw std::invalid_argument("enlargement order must be non-negative");
  if (newton_hooke() && n > kMaxNewtonHookeLevel)
    throw std::invalid_argument("Newton-Hooke variant is only defined up to N = 6");
  // [H, G^(0)] lands in G^(1), so the Newton-Hooke algebra needs N >= 1 to close.
  if (newton_hooke() && n < 1)
    throw std::invalid_argument("Newton-Hooke variant requires N >= 1");
}

// --- Generator ---------------------------------------------------------------

std::string Generator::name() const {
  switch (kind) {
    case Kind::Rotation: return "M:" + std::to_string(a) + ":" + std::to_string(b);
    case Kind::TimeTranslation: return "H";
    case Kind::Boost: return "G:" + std::to_string(a) + ":" + std::to_string(b);
  }
  return "H";
}

std::string Generator::latex() const {
  switch (kind) {
    case Kind::Rotation: return "M_{" + std::to_string(a) + std::to_string(b) + "}";
    case Kind::TimeTranslation: return "H";
    case Kind::Boost: return "G_{" + std::to_string(a) + "}^{(" + std::to_string(b) + ")}";
  }
  return "H";
}

Generator Generator::parse(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() == 1 && parts[0] == "H") return time_translation();
  if (parts.size() == 3 && parts[0] == "M") {
    int i = parse_int(parts[1], text), j = parse_int(parts[2], text);
    if (i < 1 || j < 1 || i >= j)
      throw std::invalid_argument("rotation indices must satisfy 1 <= i < j: '" +
                                  std::string(text) + "'");
    return rotation(i, j);
  }
  if (parts.size() == 3 && parts[0] == "G") {
    int i = parse_int(parts[1], text), n = parse_int(parts[2], text);
    if (i < 1 || n < 0) throw std::invalid_argument("bad boost indices '" + std::string(text) + "'");
    return boost(i, n);
  }
  throw std::invalid_argument("bad generator name '" + std::string(text) + "'");
}

// --- LinearCombination -----------------------------------------------------

LinearCombination& add_to(LinearCombination& acc, GenIndex g, const ScalarSum& c) {
  if (c.is_zero()) return acc;
  auto it = std::lower_bound(acc.begin(), acc.end(), g,
                             [](const auto& e, GenIndex k) { return e.first < k; });
  if (it != acc.end() && it->first == g) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  } else {
    acc.insert(it, {g, c});
  }
  return acc;
}

LinearCombination operator+(const LinearCombination& a, const LinearCombination& b) {
  LinearCombination out = a;
  for (const auto& [g, c] : b) add_to(out, g, c);
  return out;
}

LinearCombination scaled(const LinearCombination& a, const ScalarSum& c) {
  LinearCombination out;
  for (const auto& [g, v] : a) add_to(out, g, v * c);
  return out;
}

// --- LieAlgebra --------------------------------------------------------------

LieAlgebra::LieAlgebra(AlgebraSpec spec) : spec_(spec) {
  spec_.validate();
  const int d = spec_.dim;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) gens_.push_back(Generator::rotation(i, j));
  gens_.push_back(Generator::time_translation());
  for (int n = 0; n <= spec_.n; ++n)
    for (int i = 1; i <= d; ++i) gens_.push_back(Generator::boost(i, n));

  const std::size_t count = gens_.size();
  table_.resize(count * count);
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = x + 1; y < count; ++y) {
      LinearCombination v = compute_bracket(gens_[x], gens_[y]);
      table_[y * count + x] = scaled(v, ScalarSum(-1));
      table_[x * count + y] = std::move(v);
    }
}

std::optional<GenIndex> LieAlgebra::find(const Generator& g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<GenIndex>(it - gens_.begin());
}

GenIndex LieAlgebra::index(const Generator& g) const {
  if (auto idx = find(g)) return *idx;
  throw std::out_of_range("generator " + g.name() + " is not part of the algebra");
}

LinearCombination LieAlgebra::rotation_term(int i, int j, const ScalarSum& c) const {
  LinearCombination out;
  if (i == j || c.is_zero()) return out;
  if (i < j) return add_to(out, index(Generator::rotation(i, j)), c);
  return add_to(out, index(Generator::rotation(j, i)), -c);
}

LinearCombination LieAlgebra::compute_bracket(const Generator& x, const Generator& y) const {
  using K = Generator::Kind;
  const ScalarSum I = ScalarSum::i();
  LinearCombination out;

  if (x.kind == K::Rotation && y.kind == K::Rotation) {
    // [M_ij, M_kl] = i(d_il M_jk - d_jl M_ik + d_jk M_il - d_ik M_jl)
    const int i = x.a, j = x.b, k = y.a, l = y.b;
    out = rotation_term(j, k, I * delta(i, l)) + rotation_term(i, k, -I * delta(j, l)) +
          rotation_term(i, l, I * delta(j, k)) + rotation_term(j, l, -I * delta(i, k));
    return out;
  }
  if (x.kind == K::Rotation && y.kind == K::Boost) {
    // [M_ij, G_k^(n)] = i(d_jk G_i^(n) - d_ik G_j^(n))
    const int i = x.a, j = x.b, k = y.a, n = y.b;
    if (j == k) add_to(out, index(Generator::boost(i, n)), I);
    if (i == k) add_to(out, index(Generator::boost(j, n)), -I);
    return out;
  }
  if (x.kind == K::Boost && y.kind == K::Rotation)
    return scaled(compute_bracket(y, x), ScalarSum(-1));
  if (x.kind == K::Boost && y.kind == K::TimeTranslation) {
    // [G_i^(n), H] = -i n G_i^(n-1)
    const int i = x.a, n = x.b;
    if (n > 0) return add_to(out, index(Generator::boost(i, n - 1)), -I * n);
    if (spec_.newton_hooke()) {
      // From d/dt f_0 = +-f_1/tau^2: [G_i^(0), H] = -+ (i/tau^2) G_i^(1).
      ScalarSum c = -I * ScalarSum::param(std::string(kTimeScale), -2) * spec_.nh_sign();
      return add_to(out, index(Generator::boost(i, 1)), c);
    }
    return out;
  }
  if (x.kind == K::TimeTranslation && y.kind == K::Boost)
    return scaled(compute_bracket(y, x), ScalarSum(-1));
  // [H, M] = 0, [G, G] = 0
  return out;
}

LinearCombination LieAlgebra::bracket(const LinearCombination& x,
                                      const LinearCombination& y) const {
  LinearCombination out;
  for (const auto& [gx, cx] : x)
    for (const auto& [gy, cy] : y) {
      const ScalarSum c = cx * cy;
      for (const auto& [gz, cz] : bracket(gx, gy)) add_to(out, gz, c * cz);
    }
  return out;
}

std::string LieAlgebra::render(const LinearCombination& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : v) {
    SignedText t = signed_text(c);
    std::string body = t.is_unit() ? gens_[g].name() : t.body + "*" + gens_[g].name();
    if (out.empty())
      out = (t.negative ? "-" : "") + body;
    else
      out += (t.negative ? " - " : " + ") + body;
  }
  return out;
}

std::vector<std::string> LieAlgebra::notes() const {
  std::vector<std::string> out;
  if (spec_.newton_hooke()) {
    out.push_back(
        "[H, G_i^(0)] = " + std::string(spec_.nh_sign() > 0 ? "+" : "-") +
        "(i/tau^2) G_i^(1); this is the coefficient for which G_i^(n) -> i f_n(t) d_i "
        "is a representation (a coefficient i/tau is dimensionally inconsistent with it)");
  }
  return out;
}

std::vector<JacobiResidual> jacobi_check(const LieAlgebra& algebra) {
  std::vector<JacobiResidual> out;
  const auto count = static_cast<GenIndex>(algebra.size());
  auto unit = [](GenIndex g) { return LinearCombination{{g, ScalarSum(1)}}; };
  for (GenIndex x = 0; x < count; ++x)
    for (GenIndex y = x; y < count; ++y)
      for (GenIndex z = y; z < count; ++z) {
        LinearCombination r = algebra.bracket(algebra.bracket(x, y), unit(z)) +
                              algebra.bracket(algebra.bracket(y, z), unit(x)) +
                              algebra.bracket(algebra.bracket(z, x), unit(y));
        if (!r.empty()) out.push_back({x, y, z, std::move(r)});
      }
  return out;
}

}  // namespace nga
