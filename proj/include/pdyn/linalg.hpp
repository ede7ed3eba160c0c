#pragma once

#include <optional>
#include <vector>

#include "pdyn/algebra.hpp"

namespace pdyn {

using Matrix = std::vector<std::vector<Coefficient>>;

// Basis of {x : A x = 0}; A has `cols` columns.
std::vector<std::vector<Coefficient>> nullspace(Matrix a, std::size_t cols);

// Some solution of A x = b, or nothing when inconsistent.
std::optional<std::vector<Coefficient>> solve_linear(Matrix a, std::vector<Coefficient> b, std::size_t cols);

}  // namespace pdyn
