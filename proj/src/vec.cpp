#include "affmon/vec.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace affmon {

long long total_degree(const ExpVec& v) {
  long long s = 0;
  for (long long x : v) s += x;
  return s;
}

ExpVec vec_add(const ExpVec& a, const ExpVec& b) {
  assert(a.size() == b.size());
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec vec_sub(const ExpVec& a, const ExpVec& b) {
  assert(a.size() == b.size());
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExpVec vec_scale(const ExpVec& a, long long k) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

long long vec_dot(const ExpVec& a, const ExpVec& b) {
  assert(a.size() == b.size());
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const ExpVec& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

bool vec_all_nonneg(const ExpVec& v) {
  for (long long x : v)
    if (x < 0) return false;
  return true;
}

ExpVec primitive(ExpVec v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  if (g > 1)
    for (long long& x : v) x /= g;
  return v;
}

bool lower_than(const ExpVec& x, const ExpVec& y) {
  assert(x.size() == y.size());
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

std::string monomial_to_string(const ExpVec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << "*";
    os << "t" << (i + 1);
    if (v[i] != 1) os << "^" << v[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string vec_to_string(const ExpVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace affmon
