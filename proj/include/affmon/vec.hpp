#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace affmon {

// Exponent vector of a monomial t1^a1 * ... * tr^ar.
using ExpVec = std::vector<long long>;

long long total_degree(const ExpVec& v);
ExpVec vec_add(const ExpVec& a, const ExpVec& b);
ExpVec vec_sub(const ExpVec& a, const ExpVec& b);
ExpVec vec_scale(const ExpVec& a, long long k);
long long vec_dot(const ExpVec& a, const ExpVec& b);
bool vec_is_zero(const ExpVec& v);
bool vec_all_nonneg(const ExpVec& v);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
ExpVec primitive(ExpVec v);

// The "lower" order: x is lower than y when, at the highest index where they
// differ, x has the smaller entry.  Strict total order on vectors of equal
// length; t_i is lower than t_j iff i < j.
bool lower_than(const ExpVec& x, const ExpVec& y);

struct LowerLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return lower_than(a, b); }
};

// "t1^2*t2"; the zero vector renders as "1".
std::string monomial_to_string(const ExpVec& v);

std::string vec_to_string(const ExpVec& v);  // "(2, 0, 1)"

}  // namespace affmon
