#pragma once

// Text input for the command line: function expressions such as
// "x1*x2 + 2*i*theta*t^2", scalar expressions for matrix entries, generator
// polynomials such as "G:1:1*H - i*G:1:0", and "name=p/q" assignments.
//
// Identifiers: t, x<k>, S, C (Newton-Hooke only), i, generator names M:i:j,
// H, G:i:n where a generator is expected, and anything else is a parameter.
// Division and negative powers are allowed only on single-term scalars.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "nga/enveloping.hpp"
#include "nga/function_space.hpp"

namespace nga {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

FunctionElement parse_function(std::string_view text, TimeMode mode, int dim);
ScalarSum parse_scalar(std::string_view text);
EnvElement parse_env(std::string_view text, const Enveloping& env);

/// "name=p/q" or "name=p"
std::pair<std::string, Rational> parse_assignment(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace nga
