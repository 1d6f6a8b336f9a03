#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "affmon/vec.hpp"

namespace affmon {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// Rank of an integer matrix given as rows (exact rational elimination).
int int_rank(const std::vector<ExpVec>& rows, int ncols);

// Basis of { n : <row, n> = 0 for every row }, as primitive integer vectors.
std::vector<ExpVec> integer_kernel(const std::vector<ExpVec>& rows, int ncols);

// Solves sum_i q_i * rows[i] = target exactly; nullopt when inconsistent.
// When the rows are dependent one solution is returned.
std::optional<QVec> solve_combination(const std::vector<ExpVec>& rows, const ExpVec& target);

}  // namespace affmon
