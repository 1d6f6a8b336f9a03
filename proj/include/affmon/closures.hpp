#pragma once

#include <vector>

#include "affmon/monoid.hpp"

namespace affmon {

// Irreducible elements of cone(M) ^ gp(M) together with their provenance.
struct HilbertBasis {
  std::vector<ExpVec> elements;
  RationalCone cone;
  IntegerLattice lattice;
};

HilbertBasis hilbert_basis(const AffineMonoid& m);

// Monoid generated by the Hilbert basis of cone(M) ^ gp(M).  Rank-deficient
// monoids are rebased onto gp(M) first and mapped back.
AffineMonoid normalization(const AffineMonoid& m);

bool is_normal(const AffineMonoid& m);

struct SeminormalizationResult {
  AffineMonoid monoid;
  // Degree bound at which the face-wise enumeration stabilized and the
  // 2z/3z oracle confirmed closure.  Empirical ("bound-certified").
  long long certified_bound;
};

// Face-wise algorithm: union over the faces F of cone(M) of
// relint(F) ^ gp(M ^ F), plus 0, with an adaptive doubling degree bound.
SeminormalizationResult seminormalization(const AffineMonoid& m);

// Independent route: fixpoint of the 2z/3z closure over enumerated candidates
// of gp(M) ^ cone(M) up to the degree bound.
AffineMonoid seminormalization_fixpoint(const AffineMonoid& m, long long degree_bound);

// Runs both routes and throws std::logic_error if they disagree.
SeminormalizationResult seminormalization_checked(const AffineMonoid& m);

bool is_seminormal(const AffineMonoid& m);

// Bounded oracle: every z in gp(M) ^ cone(M) with total degree <= bound and
// 2z, 3z in M is already in M.
bool seminormal_oracle(const AffineMonoid& m, long long bound);

// Lattice points of Z_+^r strictly inside cone(M), degree <= bound, sorted by
// the lower order.  Empty when cone(M) is not full-dimensional.
std::vector<ExpVec> interior_points(const AffineMonoid& m, long long degree_bound);
std::vector<ExpVec> interior_points_serial(const AffineMonoid& m, long long degree_bound);

}  // namespace affmon
