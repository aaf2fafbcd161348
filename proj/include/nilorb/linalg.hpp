#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilorb/matrix.hpp"

namespace nilorb {

/// Rank over Q by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing denominators row by row.
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form. Pivot rows come first, in pivot-column order.
struct EchelonForm {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

EchelonForm reduced_echelon(RatMatrix m);

/// Basis of the right null space; one vector per non-pivot column, with a 1
/// in that column and 0 in the other free columns.
std::vector<RatVector> kernel(const RatMatrix& m);
std::vector<RatVector> kernel(const EchelonForm& ef, std::size_t cols);

struct Solution {
    RatVector particular;
    std::vector<RatVector> kernel;
};

/// Solves m * x = b. Returns nullopt when the system is inconsistent.
std::optional<Solution> solve(const RatMatrix& m, std::span<const Rational> b);

}  // namespace nilorb
