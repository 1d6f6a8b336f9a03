#pragma once

#include <optional>
#include <vector>

#include "affmon/vec.hpp"

namespace affmon {

// Subgroup of Z^r in canonical form: rows are a basis in Hermite normal form
// (row echelon, positive pivots, entries above a pivot reduced into [0, pivot)).
struct IntegerLattice {
  int ambient_rank = 0;
  std::vector<ExpVec> basis;

  int rank() const { return (int)basis.size(); }
  bool operator==(const IntegerLattice&) const = default;
};

// Canonical basis of the subgroup generated by the inputs.  Empty input gives
// the rank-0 lattice.
IntegerLattice hermite_normal_form(int ambient_rank, std::vector<ExpVec> generators);

bool lattice_contains(const IntegerLattice& lattice, const ExpVec& v);

// Integer coordinates c with c * basis = v; nullopt when v is outside.
std::optional<ExpVec> lattice_coordinates(const IntegerLattice& lattice, const ExpVec& v);

}  // namespace affmon
