#pragma once

#include <vector>

#include "numwall/field.hpp"

namespace nw {

using Matrix = std::vector<std::vector<Fe>>;

// Basis of {x : A x = 0}; cols is the number of unknowns.
std::vector<std::vector<Fe>> nullspace(const Field& f, Matrix a, std::size_t cols);
std::size_t rank(const Field& f, Matrix a);

} // namespace nw
