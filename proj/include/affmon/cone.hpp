#pragma once

#include <vector>

#include "affmon/vec.hpp"

namespace affmon {

// Rational polyhedral cone through the origin, kept as a double-description
// pair.  For a cone whose span is a proper subspace the normal list contains
// opposite pairs +/-n cutting out the span, so {x : <n,x> >= 0 for all n}
// always equals the cone.  Rays and normals are primitive and sorted.
struct RationalCone {
  int rank = 0;  // ambient rank
  int dim = 0;   // dimension of the linear span
  std::vector<ExpVec> extreme_rays;
  std::vector<ExpVec> facet_normals;

  bool full_dimensional() const { return dim == rank; }
  bool operator==(const RationalCone&) const = default;
};

// Cone of nonnegative combinations of the generators.  Zero vectors among the
// generators are ignored; an all-zero input yields the degenerate cone {0}.
// Ambient rank is restricted to <= 4.
RationalCone cone_from_generators(int rank, const std::vector<ExpVec>& generators);

// Non-strict: every facet inequality holds.  Strict: every facet inequality is
// strict; on a cone that is not full-dimensional this is always false, because
// the normal list carries opposite pairs for the span.
bool cone_contains(const RationalCone& cone, const ExpVec& v, bool strict);

struct Face {
  std::vector<ExpVec> tight_normals;  // all facet normals vanishing on the face
  std::vector<ExpVec> rays;           // extreme rays lying on the face
};

// All faces, including the cone itself and {0}, for a pointed cone.
std::vector<Face> faces(const RationalCone& cone);

// Indices (into facet_normals) of the normals vanishing at v.
std::vector<int> tight_normal_set(const RationalCone& cone, const ExpVec& v);

}  // namespace affmon
