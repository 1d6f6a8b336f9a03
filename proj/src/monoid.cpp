#include "affmon/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "affmon/errors.hpp"

namespace affmon {

AffineMonoid::AffineMonoid(int ambient_rank, std::vector<ExpVec> generators)
    : ambient_rank_(ambient_rank) {
  if (ambient_rank < 1) throw input_error("ambient rank must be positive");
  std::set<ExpVec, LowerLess> dedup;
  for (const auto& g : generators) {
    if ((int)g.size() != ambient_rank)
      throw input_error("generator length does not match ambient rank");
    if (vec_is_zero(g)) throw input_error("zero vector cannot be a generator");
    if (!vec_all_nonneg(g)) throw input_error("generator has a negative coordinate");
    dedup.insert(g);
  }
  generators_.assign(dedup.begin(), dedup.end());
}

namespace {

// Memoized search subtracting generators; every generator has total degree
// >= 1, so the residual degree strictly drops.
struct MembershipSearch {
  const std::vector<ExpVec>& gens;
  std::map<ExpVec, int> choice;  // -1 = not a member, otherwise generator index

  bool search(const ExpVec& v) {
    if (vec_is_zero(v)) return true;
    auto it = choice.find(v);
    if (it != choice.end()) return it->second >= 0;
    choice[v] = -1;  // guard; overwritten on success
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool fits = true;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (gens[i][j] > v[j]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      if (search(vec_sub(v, gens[i]))) {
        choice[v] = (int)i;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

MembershipWitness membership(const AffineMonoid& m, const ExpVec& v) {
  if ((int)v.size() != m.ambient_rank())
    throw input_error("vector length does not match ambient rank");
  if (!vec_all_nonneg(v)) throw input_error("membership query has a negative coordinate");
  MembershipSearch search{m.generators(), {}};
  MembershipWitness w;
  w.member = search.search(v);
  w.multiplicities.assign(m.generators().size(), 0);
  if (w.member) {
    ExpVec cur = v;
    while (!vec_is_zero(cur)) {
      int i = search.choice.at(cur);
      ++w.multiplicities[i];
      cur = vec_sub(cur, m.generators()[i]);
    }
  }
  return w;
}

bool is_member(const AffineMonoid& m, const ExpVec& v) { return membership(m, v).member; }

IntegerLattice group_of_fractions(const AffineMonoid& m) {
  return hermite_normal_form(m.ambient_rank(), m.generators());
}

int rank(const AffineMonoid& m) { return group_of_fractions(m).rank(); }

RationalCone cone_of(const AffineMonoid& m) {
  return cone_from_generators(m.ambient_rank(), m.generators());
}

bool is_phi_simplicial(const AffineMonoid& m) {
  int r = m.ambient_rank();
  if (rank(m) != r) return false;
  RationalCone cone = cone_of(m);
  if (!cone.full_dimensional()) return false;
  ExpVec unit(r, 0);
  for (int i = 0; i < r; ++i) {
    unit.assign(r, 0);
    unit[i] = 1;
    if (!cone_contains(cone, unit, false)) return false;
  }
  return true;
}

AffineMonoid truncation(const AffineMonoid& m, int level) {
  if (level < 1 || level > m.ambient_rank())
    throw input_error("truncation level out of range");
  std::vector<ExpVec> kept;
  for (const auto& g : m.generators()) {
    bool tail_zero = true;
    for (int j = level; j < m.ambient_rank(); ++j)
      if (g[j] != 0) tail_zero = false;
    if (tail_zero) kept.push_back(ExpVec(g.begin(), g.begin() + level));
  }
  return AffineMonoid(level, kept);
}

AffineMonoid canonicalize(const AffineMonoid& m) {
  std::vector<ExpVec> gens = m.generators();
  // Increasing degree: a redundant generator decomposes into lower-degree ones.
  std::stable_sort(gens.begin(), gens.end(), [](const ExpVec& a, const ExpVec& b) {
    long long da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : lower_than(a, b);
  });
  std::vector<ExpVec> kept;
  for (const auto& g : gens) {
    if (!kept.empty() && is_member(AffineMonoid(m.ambient_rank(), kept), g)) continue;
    kept.push_back(g);
  }
  return AffineMonoid(m.ambient_rank(), kept);
}

bool same_monoid(const AffineMonoid& a, const AffineMonoid& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  for (const auto& g : a.generators())
    if (!is_member(b, g)) return false;
  for (const auto& g : b.generators())
    if (!is_member(a, g)) return false;
  return true;
}

}  // namespace affmon
