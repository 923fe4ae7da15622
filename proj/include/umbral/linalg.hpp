#pragma once

#include "umbral/rational.hpp"

#include <optional>
#include <vector>

namespace umbral {

using Matrix = std::vector<std::vector<Rational>>;

// reduced row echelon form in place; returns the pivot columns
std::vector<std::size_t> row_reduce(Matrix& a, std::size_t ncols);
std::size_t rank(Matrix a, std::size_t ncols);
// a basis of {x : a x = 0}
std::vector<std::vector<Rational>> nullspace(Matrix a, std::size_t ncols);
// the unique solution of a x = b, or nullopt when a is singular or the system is inconsistent
std::optional<std::vector<Rational>> solve_unique(const Matrix& a, const std::vector<Rational>& b);

}  // namespace umbral
