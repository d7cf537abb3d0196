#pragma once

// Shared helpers for the unit tests: seeded random generators of ring elements.

#include <random>
#include <string>
#include <vector>

#include "nga/function_space.hpp"
#include "nga/scalar.hpp"

namespace nga::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational() {
  int den = uniform(1, 6);
  return frac(uniform(-9, 9), den);
}

/// Up to `terms` terms over the parameters alpha, beta and tau (tau may be negative).
inline ScalarSum random_scalar(int terms = 5) {
  static const std::vector<std::string> names{"alpha", "beta", "tau"};
  ScalarSum out;
  const int count = uniform(0, terms);
  for (int k = 0; k < count; ++k) {
    ParamMonomial m;
    for (const auto& name : names) {
      const int e = name == "tau" ? uniform(-2, 2) : uniform(0, 2);
      if (e != 0) m = m * ParamMonomial::power(name, e);
    }
    out.add_term(m, Gaussian(random_rational(), random_rational()));
  }
  return out;
}

inline FunctionElement random_function(TimeMode mode, int dim = 3, int terms = 4) {
  FunctionElement out(mode);
  const int count = uniform(0, terms);
  for (int k = 0; k < count; ++k) {
    FnMonomial m;
    for (int i = 1; i <= dim; ++i) m.x.push_back(uniform(0, 2));
    while (!m.x.empty() && m.x.back() == 0) m.x.pop_back();
    m.t = uniform(0, 3);
    if (mode != TimeMode::PolyTime) {
      m.s = uniform(0, 2);
      m.c = uniform(0, 2);  // C^2 exercises the reduction
    }
    out.add_term(m, random_scalar(2));
  }
  return out;
}

// Braces balanced outside escapes, and every \begin{x} closed by \end{x} in order.
inline bool latex_balanced(const std::string& s) {
  int depth = 0;
  std::vector<std::string> envs;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '%') {
      while (k < s.size() && s[k] != '\n') ++k;
      continue;
    }
    if (s[k] == '\\' && k + 1 < s.size() && (s[k + 1] == '{' || s[k + 1] == '}' || s[k + 1] == '\\')) {
      ++k;
      continue;
    }
    for (const char* kw : {"\\begin{", "\\end{"}) {
      const std::string key = kw;
      if (s.compare(k, key.size(), key) != 0) continue;
      const std::size_t close = s.find('}', k + key.size());
      if (close == std::string::npos) return false;
      const std::string name = s.substr(k + key.size(), close - k - key.size());
      if (key == "\\begin{") {
        envs.push_back(name);
      } else {
        if (envs.empty() || envs.back() != name) return false;
        envs.pop_back();
      }
    }
    if (s[k] == '{') ++depth;
    if (s[k] == '}' && --depth < 0) return false;
  }
  return depth == 0 && envs.empty();
}

}  // namespace nga::testing
