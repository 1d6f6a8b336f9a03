#include "affmon/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "affmon/errors.hpp"

namespace affmon {

IntegerLattice hermite_normal_form(int ambient_rank, std::vector<ExpVec> generators) {
  if (ambient_rank < 0) throw input_error("ambient rank must be nonnegative");
  for (const auto& g : generators)
    if ((int)g.size() != ambient_rank)
      throw input_error("generator length does not match ambient rank");

  std::vector<ExpVec>& rows = generators;
  int pivot_row = 0;
  for (int col = 0; col < ambient_rank && pivot_row < (int)rows.size(); ++col) {
    // Reduce all entries in this column below pivot_row to a single nonzero one.
    while (true) {
      int best = -1;
      int nonzero = 0;
      for (int i = pivot_row; i < (int)rows.size(); ++i) {
        if (rows[i][col] != 0) {
          ++nonzero;
          if (best < 0 || std::abs(rows[i][col]) < std::abs(rows[best][col])) best = i;
        }
      }
      if (nonzero == 0) { best = -1; }
      if (best < 0) break;
      if (nonzero == 1) {
        std::swap(rows[pivot_row], rows[best]);
        break;
      }
      for (int i = pivot_row; i < (int)rows.size(); ++i) {
        if (i == best || rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[best][col];
        for (int j = 0; j < ambient_rank; ++j) rows[i][j] -= q * rows[best][j];
      }
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (int j = 0; j < ambient_rank; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < pivot_row; ++i) {
      long long p = rows[pivot_row][col];
      long long q = rows[i][col] / p;
      if (rows[i][col] - q * p < 0) --q;
      if (q != 0)
        for (int j = 0; j < ambient_rank; ++j) rows[i][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);

  IntegerLattice lattice;
  lattice.ambient_rank = ambient_rank;
  lattice.basis = rows;
  return lattice;
}

std::optional<ExpVec> lattice_coordinates(const IntegerLattice& lattice, const ExpVec& v) {
  if ((int)v.size() != lattice.ambient_rank)
    throw input_error("vector length does not match lattice ambient rank");
  ExpVec residual = v;
  ExpVec coords(lattice.basis.size(), 0);
  for (std::size_t k = 0; k < lattice.basis.size(); ++k) {
    const ExpVec& row = lattice.basis[k];
    int pivot_col = 0;
    while (row[pivot_col] == 0) ++pivot_col;
    if (residual[pivot_col] % row[pivot_col] != 0) return std::nullopt;
    long long q = residual[pivot_col] / row[pivot_col];
    coords[k] = q;
    for (int j = 0; j < lattice.ambient_rank; ++j) residual[j] -= q * row[j];
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coords;
}

bool lattice_contains(const IntegerLattice& lattice, const ExpVec& v) {
  return lattice_coordinates(lattice, v).has_value();
}

}  // namespace affmon
