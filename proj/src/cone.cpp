#include "affmon/cone.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "affmon/errors.hpp"
#include "affmon/lattice.hpp"
#include "affmon/linalg.hpp"

namespace affmon {

namespace {

constexpr int kMaxRank = 4;

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k <= n) rec(0, 0);
}

}  // namespace

RationalCone cone_from_generators(int rank, const std::vector<ExpVec>& generators) {
  if (rank < 1 || rank > kMaxRank)
    throw input_error("cone ambient rank must be between 1 and 4");
  std::set<ExpVec, LowerLess> prim_set;
  for (const auto& g : generators) {
    if ((int)g.size() != rank) throw input_error("generator length does not match rank");
    if (vec_is_zero(g)) continue;
    prim_set.insert(primitive(g));
  }
  std::vector<ExpVec> prim(prim_set.begin(), prim_set.end());

  RationalCone cone;
  cone.rank = rank;

  ExpVec unit(rank, 0);
  if (prim.empty()) {
    cone.dim = 0;
    for (int i = 0; i < rank; ++i) {
      unit.assign(rank, 0);
      unit[i] = 1;
      cone.facet_normals.push_back(unit);
      unit[i] = -1;
      cone.facet_normals.push_back(unit);
    }
    std::sort(cone.facet_normals.begin(), cone.facet_normals.end(), LowerLess{});
    return cone;
  }

  int d = int_rank(prim, rank);
  cone.dim = d;

  std::set<ExpVec, LowerLess> normals;
  std::vector<ExpVec> span_equations = integer_kernel(prim, rank);
  for (const auto& eq : span_equations) {
    normals.insert(eq);
    normals.insert(vec_scale(eq, -1));
  }

  if (d == 1) {
    // Cone is a single ray unless opposite generators make it a line.
    bool line = false;
    for (const auto& g : prim)
      if (g == vec_scale(prim[0], -1)) line = true;
    if (!line) normals.insert(prim[0]);
  } else {
    for_each_subset((int)prim.size(), d - 1, [&](const std::vector<int>& idx) {
      std::vector<ExpVec> sub;
      for (int i : idx) sub.push_back(prim[i]);
      if (int_rank(sub, rank) != d - 1) return;
      // Normal within the span, orthogonal to the subset.
      std::vector<ExpVec> constraints = sub;
      constraints.insert(constraints.end(), span_equations.begin(), span_equations.end());
      auto kernel = integer_kernel(constraints, rank);
      if (kernel.size() != 1) return;
      ExpVec n = kernel[0];
      bool nonneg = true, nonpos = true, some_strict = false;
      for (const auto& g : prim) {
        long long s = vec_dot(n, g);
        if (s > 0) nonpos = false;
        if (s < 0) nonneg = false;
        if (s != 0) some_strict = true;
      }
      if (!some_strict) return;
      if (nonneg)
        normals.insert(n);
      else if (nonpos)
        normals.insert(vec_scale(n, -1));
    });
  }
  cone.facet_normals.assign(normals.begin(), normals.end());

  for (const auto& g : prim) {
    std::vector<ExpVec> tight;
    for (const auto& n : cone.facet_normals)
      if (vec_dot(n, g) == 0) tight.push_back(n);
    if (tight.empty() ? rank == 1 : int_rank(tight, rank) == rank - 1)
      cone.extreme_rays.push_back(g);
  }
  std::sort(cone.extreme_rays.begin(), cone.extreme_rays.end(), LowerLess{});
  return cone;
}

bool cone_contains(const RationalCone& cone, const ExpVec& v, bool strict) {
  if ((int)v.size() != cone.rank) throw input_error("vector length does not match cone rank");
  for (const auto& n : cone.facet_normals) {
    long long s = vec_dot(n, v);
    if (strict ? s <= 0 : s < 0) return false;
  }
  if (strict && cone.facet_normals.empty()) return true;  // whole space
  return true;
}

std::vector<int> tight_normal_set(const RationalCone& cone, const ExpVec& v) {
  std::vector<int> tight;
  for (std::size_t i = 0; i < cone.facet_normals.size(); ++i)
    if (vec_dot(cone.facet_normals[i], v) == 0) tight.push_back((int)i);
  return tight;
}

std::vector<Face> faces(const RationalCone& cone) {
  const auto& normals = cone.facet_normals;
  if (normals.size() > 12) throw input_error("face enumeration limited to 12 facets");
  std::map<std::vector<ExpVec>, Face> by_rays;
  for (unsigned long mask = 0; mask < (1ul << normals.size()); ++mask) {
    std::vector<ExpVec> rays;
    for (const auto& r : cone.extreme_rays) {
      bool on_all = true;
      for (std::size_t i = 0; i < normals.size(); ++i)
        if ((mask >> i) & 1 && vec_dot(normals[i], r) != 0) {
          on_all = false;
          break;
        }
      if (on_all) rays.push_back(r);
    }
    Face face;
    face.rays = rays;
    for (const auto& n : normals) {
      bool tight_on_all = true;
      for (const auto& r : rays)
        if (vec_dot(n, r) != 0) {
          tight_on_all = false;
          break;
        }
      if (tight_on_all) face.tight_normals.push_back(n);
    }
    by_rays.emplace(rays, std::move(face));
  }
  std::vector<Face> result;
  for (auto& [rays, face] : by_rays) result.push_back(std::move(face));
  return result;
}

}  // namespace affmon
