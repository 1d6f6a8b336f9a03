#include <doctest.h>

#include <algorithm>
#include <random>

#include "affmon/cone.hpp"
#include "affmon/lattice.hpp"
#include "affmon/linalg.hpp"

using namespace affmon;

namespace {

// Brute-force subgroup membership: v is an integer combination of the
// generators with coefficients in [-box, box].
bool brute_in_subgroup(const std::vector<ExpVec>& gens, const ExpVec& v, long long box) {
  std::vector<long long> coeff(gens.size(), -box);
  while (true) {
    ExpVec sum(v.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
      sum = vec_add(sum, vec_scale(gens[i], coeff[i]));
    if (sum == v) return true;
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] == box) coeff[k++] = -box;
    if (k == coeff.size()) return false;
    ++coeff[k];
  }
}

// Caratheodory oracle: v lies in cone(rays) iff some linearly independent
// subset of the rays expresses v with nonnegative coefficients.
bool brute_in_cone(const std::vector<ExpVec>& rays, int rank, const ExpVec& v) {
  if (vec_is_zero(v)) return true;
  int n = (int)rays.size();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<ExpVec> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) subset.push_back(rays[i]);
    if ((int)subset.size() > rank) continue;
    if (int_rank(subset, rank) != (int)subset.size()) continue;
    auto sol = solve_combination(subset, v);
    if (!sol) continue;
    bool nonneg = std::all_of(sol->begin(), sol->end(),
                              [](const mpq_class& q) { return q >= 0; });
    if (nonneg) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("hermite normal form of simple inputs") {
  auto l = hermite_normal_form(2, {{2, 0}, {0, 2}});
  CHECK(l.basis == std::vector<ExpVec>{{2, 0}, {0, 2}});

  auto v = hermite_normal_form(2, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(v.basis == std::vector<ExpVec>{{1, 1}, {0, 2}});

  auto full = hermite_normal_form(2, {{2, 1}, {1, 1}});
  CHECK(full.basis == std::vector<ExpVec>{{1, 0}, {0, 1}});

  CHECK(hermite_normal_form(3, {}).rank() == 0);
  CHECK(hermite_normal_form(2, {{0, 0}}).rank() == 0);
}

TEST_CASE("HNF pivots are positive and entries above are reduced") {
  auto l = hermite_normal_form(3, {{2, 4, 4}, {0, 6, 2}, {0, 0, 10}});
  for (const auto& row : l.basis) {
    auto pivot_col = std::find_if(row.begin(), row.end(), [](long long x) { return x != 0; });
    REQUIRE(pivot_col != row.end());
    CHECK(*pivot_col > 0);
  }
  // Each basis row must still lie in the generated subgroup and vice versa.
  std::vector<ExpVec> gens = {{2, 4, 4}, {0, 6, 2}, {0, 0, 10}};
  for (const auto& row : l.basis) CHECK(brute_in_subgroup(gens, row, 6));
  for (const auto& g : gens) CHECK(lattice_contains(l, g));
}

TEST_CASE("HNF is canonical under generator shuffles and redundancy") {
  std::mt19937_64 rng(7);
  std::vector<ExpVec> gens = {{3, 1, 0}, {1, 2, 1}, {0, 0, 4}};
  auto reference = hermite_normal_form(3, gens);
  for (int trial = 0; trial < 40; ++trial) {
    auto copy = gens;
    std::shuffle(copy.begin(), copy.end(), rng);
    // Append a random combination of the originals; the subgroup is unchanged.
    ExpVec extra(3, 0);
    for (const auto& g : gens)
      extra = vec_add(extra, vec_scale(g, (long long)(rng() % 7) - 3));
    copy.push_back(extra);
    CHECK(hermite_normal_form(3, copy) == reference);
  }
}

TEST_CASE("lattice membership agrees with brute force") {
  std::vector<ExpVec> gens = {{2, 0}, {1, 3}};
  auto l = hermite_normal_form(2, gens);
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b) {
      ExpVec v{a, b};
      CHECK(lattice_contains(l, v) == brute_in_subgroup(gens, v, 8));
    }
}

TEST_CASE("lattice coordinates round-trip") {
  auto l = hermite_normal_form(3, {{1, 2, 0}, {0, 3, 1}});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ExpVec v(3, 0);
    for (const auto& row : l.basis)
      v = vec_add(v, vec_scale(row, (long long)(rng() % 9) - 4));
    auto c = lattice_coordinates(l, v);
    REQUIRE(c.has_value());
    ExpVec back(3, 0);
    for (std::size_t i = 0; i < l.basis.size(); ++i)
      back = vec_add(back, vec_scale(l.basis[i], (*c)[i]));
    CHECK(back == v);
  }
  CHECK_FALSE(lattice_coordinates(l, {0, 0, 1}).has_value());
}

TEST_CASE("integer kernel is orthogonal and has the right dimension") {
  std::vector<ExpVec> rows = {{1, 2, 3, 4}, {0, 1, 1, 0}};
  auto kernel = integer_kernel(rows, 4);
  CHECK((int)kernel.size() == 4 - int_rank(rows, 4));
  for (const auto& n : kernel) {
    CHECK(primitive(n) == n);
    for (const auto& row : rows) CHECK(vec_dot(row, n) == 0);
  }
  CHECK(int_rank(kernel, 4) == (int)kernel.size());
}

TEST_CASE("solve_combination solves and detects inconsistency") {
  std::vector<ExpVec> rows = {{2, 0, 1}, {0, 3, 1}};
  auto sol = solve_combination(rows, {2, 3, 2});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 1);
  CHECK((*sol)[1] == 1);
  CHECK_FALSE(solve_combination(rows, {1, 0, 0}).has_value());
}

TEST_CASE("orthant cone from unit vectors") {
  auto cone = cone_from_generators(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(cone.full_dimensional());
  CHECK(cone.extreme_rays.size() == 3);
  CHECK(cone.facet_normals.size() == 3);
  CHECK(cone_contains(cone, {2, 5, 1}, true));
  CHECK(cone_contains(cone, {2, 0, 1}, false));
  CHECK_FALSE(cone_contains(cone, {2, 0, 1}, true));
  CHECK_FALSE(cone_contains(cone, {-1, 0, 1}, false));
}

TEST_CASE("double description agrees with the Caratheodory oracle") {
  struct Case {
    int rank;
    std::vector<ExpVec> gens;
  };
  std::vector<Case> cases = {
      {2, {{2, 1}, {1, 3}}},
      {3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}},  // cone over a square
      {3, {{2, 0, 1}, {0, 2, 1}, {1, 1, 3}}},
      {4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 2}}},
  };
  for (const auto& c : cases) {
    auto cone = cone_from_generators(c.rank, c.gens);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      ExpVec v(c.rank);
      for (auto& x : v) x = (long long)(rng() % 9) - 2;
      CHECK(cone_contains(cone, v, false) == brute_in_cone(c.gens, c.rank, v));
    }
    // Every generator and every extreme ray is inside.
    for (const auto& g : c.gens) CHECK(cone_contains(cone, g, false));
    for (const auto& r : cone.extreme_rays) CHECK(cone_contains(cone, r, false));
  }
}

TEST_CASE("non-full-dimensional cones carry span equations") {
  auto cone = cone_from_generators(3, {{1, 1, 0}, {2, 2, 0}});
  CHECK(cone.dim == 1);
  CHECK_FALSE(cone.full_dimensional());
  CHECK(cone_contains(cone, {3, 3, 0}, false));
  CHECK_FALSE(cone_contains(cone, {1, 2, 0}, false));
  CHECK_FALSE(cone_contains(cone, {1, 1, 1}, false));
  CHECK_FALSE(cone_contains(cone, {3, 3, 0}, true));  // strict is always false here
}

TEST_CASE("face lattice of the rank-3 orthant") {
  auto cone = cone_from_generators(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto fs = faces(cone);
  CHECK(fs.size() == 8);  // cone, 3 facets, 3 rays, origin
  std::size_t by_rays[4] = {0, 0, 0, 0};
  for (const auto& f : fs) {
    REQUIRE(f.rays.size() <= 3);
    ++by_rays[f.rays.size()];
    // Each listed ray vanishes on each tight normal.
    for (const auto& n : f.tight_normals)
      for (const auto& r : f.rays) CHECK(vec_dot(n, r) == 0);
  }
  CHECK(by_rays[0] == 1);
  CHECK(by_rays[1] == 3);
  CHECK(by_rays[2] == 3);
  CHECK(by_rays[3] == 1);
}

TEST_CASE("tight normal sets identify relative position") {
  auto cone = cone_from_generators(2, {{2, 1}, {1, 3}});
  CHECK(tight_normal_set(cone, {3, 4}).empty());       // interior
  CHECK(tight_normal_set(cone, {2, 1}).size() == 1);   // on a facet
  CHECK(tight_normal_set(cone, {0, 0}).size() == 2);   // apex
}
