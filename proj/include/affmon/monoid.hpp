#pragma once

#include <optional>
#include <vector>

#include "affmon/cone.hpp"
#include "affmon/lattice.hpp"
#include "affmon/vec.hpp"

namespace affmon {

// Finitely generated submonoid of Z_+^r with a fixed embedding.  Generators
// are nonzero, componentwise nonnegative, deduplicated and sorted under the
// lower order.  The generator list is kept as given (no minimalization);
// canonicalize() drops redundant generators.
class AffineMonoid {
 public:
  AffineMonoid(int ambient_rank, std::vector<ExpVec> generators);

  int ambient_rank() const { return ambient_rank_; }
  const std::vector<ExpVec>& generators() const { return generators_; }

  bool operator==(const AffineMonoid&) const = default;

 private:
  int ambient_rank_;
  std::vector<ExpVec> generators_;
};

struct MembershipWitness {
  bool member = false;
  // Multiplicity of each generator, aligned with generators(); recombines to
  // the queried vector when member is true.
  std::vector<long long> multiplicities;
};

MembershipWitness membership(const AffineMonoid& m, const ExpVec& v);
bool is_member(const AffineMonoid& m, const ExpVec& v);

IntegerLattice group_of_fractions(const AffineMonoid& m);
int rank(const AffineMonoid& m);
RationalCone cone_of(const AffineMonoid& m);

// Full rank and cone equal to the whole orthant; equivalently the extension
// M c Z_+^r is integral (every point of Z_+^r has a positive multiple in M).
bool is_phi_simplicial(const AffineMonoid& m);

// Submonoid of elements supported on the first m coordinates, re-embedded in
// ambient rank m.  Nonnegativity makes the generator filter exact: an element
// with vanishing tail coordinates can only use generators with vanishing tail.
AffineMonoid truncation(const AffineMonoid& m, int level);

// Minimal generating subset (drops any generator expressible in the others).
AffineMonoid canonicalize(const AffineMonoid& m);

// Semantic equality: the same element set, via two-sided generator membership.
bool same_monoid(const AffineMonoid& a, const AffineMonoid& b);

}  // namespace affmon
