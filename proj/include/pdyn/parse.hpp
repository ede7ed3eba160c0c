#pragma once

#include <string>
#include <utility>

#include "pdyn/algebra.hpp"

namespace pdyn {

// Polynomial expression in z1 z2 x y s t e1 e2; 'w' is zeta_N for the given order.
MPoly parse_poly(const std::string& text, int order = 1);

// "(p, q)"
std::pair<MPoly, MPoly> parse_pair(const std::string& text, int order = 1);

Rational parse_rational(const std::string& text);

}  // namespace pdyn
