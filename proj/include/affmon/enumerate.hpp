#pragma once

#include <functional>
#include <vector>

#include "affmon/vec.hpp"

namespace affmon {

using PointPredicate = std::function<bool(const ExpVec&)>;

// All points of Z_+^rank with total degree <= degree_bound satisfying the
// predicate, sorted by the lower order.  The predicate must be a pure
// function; the parallel kernel evaluates it concurrently.
std::vector<ExpVec> enumerate_points_serial(int rank, long long degree_bound,
                                            const PointPredicate& pred);
std::vector<ExpVec> enumerate_points(int rank, long long degree_bound,
                                     const PointPredicate& pred);

// Integer points of the box [lo, hi] (componentwise) satisfying the predicate.
std::vector<ExpVec> enumerate_box(const ExpVec& lo, const ExpVec& hi,
                                  const PointPredicate& pred);

}  // namespace affmon
