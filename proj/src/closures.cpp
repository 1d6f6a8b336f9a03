#include "affmon/closures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "affmon/enumerate.hpp"
#include "affmon/errors.hpp"
#include "affmon/linalg.hpp"

namespace affmon {

namespace {

// Sort key for generating-set minimalization: degree first, then lower order.
void sort_by_degree(std::vector<ExpVec>& v) {
  std::stable_sort(v.begin(), v.end(), [](const ExpVec& a, const ExpVec& b) {
    long long da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : lower_than(a, b);
  });
}

// Minimal generating subset of the monoid generated by the candidates.
// Processing by increasing degree makes a single greedy pass exact.
std::vector<ExpVec> minimal_generators(int rank, std::vector<ExpVec> candidates) {
  sort_by_degree(candidates);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<ExpVec> kept;
  for (const auto& c : candidates) {
    if (vec_is_zero(c)) continue;
    if (!kept.empty() && is_member(AffineMonoid(rank, kept), c)) continue;
    kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), LowerLess{});
  return kept;
}

// Placing (lexicographic) triangulation of a pointed full-dimensional cone.
// Rays are processed in lower order; returns index sets of simplicial cones.
std::vector<std::vector<int>> placing_triangulation(int dim, const std::vector<ExpVec>& rays) {
  std::vector<int> order(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lower_than(rays[a], rays[b]); });

  std::vector<std::vector<int>> simplices;
  std::vector<int> placed;
  std::vector<int> pending;

  // Seed with the first lex-independent dim rays.
  std::vector<int> seed;
  std::vector<ExpVec> seed_rows;
  for (int idx : order) {
    if ((int)seed.size() == dim) {
      pending.push_back(idx);
      continue;
    }
    seed_rows.push_back(rays[idx]);
    if (int_rank(seed_rows, dim) == (int)seed_rows.size()) {
      seed.push_back(idx);
    } else {
      seed_rows.pop_back();
      pending.push_back(idx);
    }
  }
  if ((int)seed.size() != dim)
    throw std::logic_error("triangulation needs a full-dimensional cone");
  simplices.push_back(seed);
  placed = seed;

  for (int v : pending) {
    std::vector<std::vector<int>> fresh;
    for (const auto& simplex : simplices) {
      for (int drop = 0; drop < dim; ++drop) {
        std::vector<int> facet;
        std::vector<ExpVec> facet_rows;
        for (int j = 0; j < dim; ++j)
          if (j != drop) {
            facet.push_back(simplex[j]);
            facet_rows.push_back(rays[simplex[j]]);
          }
        auto kernel = integer_kernel(facet_rows, dim);
        if (kernel.size() != 1) continue;
        ExpVec n = kernel[0];
        if (vec_dot(n, rays[simplex[drop]]) < 0) n = vec_scale(n, -1);
        // Facet is on the hull boundary iff no placed ray is behind it.
        bool boundary = true;
        for (int p : placed)
          if (vec_dot(n, rays[p]) < 0) {
            boundary = false;
            break;
          }
        if (!boundary) continue;
        if (vec_dot(n, rays[v]) < 0) {
          std::vector<int> s = facet;
          s.push_back(v);
          fresh.push_back(std::move(s));
        }
      }
    }
    simplices.insert(simplices.end(), fresh.begin(), fresh.end());
    placed.push_back(v);
  }
  return simplices;
}

// Hilbert basis of cone(gens) ^ lattice for a full-dimensional pointed setup;
// generators may have negative coordinates (rebased inputs).
std::vector<ExpVec> hilbert_internal(int dim, const std::vector<ExpVec>& gens,
                                     const RationalCone& cone, const IntegerLattice& lattice) {
  if (cone.dim != dim) throw std::logic_error("hilbert_internal expects a full-dimensional cone");

  // Extreme rays scaled to their smallest multiple inside the lattice.
  std::vector<ExpVec> scaled_rays;
  for (const auto& ray : cone.extreme_rays) {
    long long k = 1;
    while (!lattice_contains(lattice, vec_scale(ray, k))) {
      ++k;
      if (k > 100000) throw std::logic_error("no lattice multiple found on extreme ray");
    }
    scaled_rays.push_back(vec_scale(ray, k));
  }

  std::set<ExpVec, LowerLess> candidates(scaled_rays.begin(), scaled_rays.end());
  for (const auto& simplex : placing_triangulation(dim, scaled_rays)) {
    std::vector<ExpVec> w;
    for (int i : simplex) w.push_back(scaled_rays[i]);
    ExpVec lo(dim, 0), hi(dim, 0);
    for (int j = 0; j < dim; ++j)
      for (const auto& wi : w) (wi[j] < 0 ? lo[j] : hi[j]) += wi[j];
    auto points = enumerate_box(lo, hi, [&](const ExpVec& x) {
      if (vec_is_zero(x) || !lattice_contains(lattice, x)) return false;
      auto q = solve_combination(w, x);
      if (!q) return false;
      for (const auto& qi : *q)
        if (qi < 0 || qi >= 1) return false;
      return true;
    });
    candidates.insert(points.begin(), points.end());
  }

  // Irreducibility filter: h is reducible iff h - g stays in cone ^ lattice
  // for some other candidate g.
  std::vector<ExpVec> all(candidates.begin(), candidates.end());
  std::vector<ExpVec> irreducible;
  for (const auto& h : all) {
    bool reducible = false;
    for (const auto& g : all) {
      ExpVec rest = vec_sub(h, g);
      if (vec_is_zero(rest) || !cone_contains(cone, rest, false)) continue;
      if (lattice_contains(lattice, rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(h);
  }
  return irreducible;
}

}  // namespace

HilbertBasis hilbert_basis(const AffineMonoid& m) {
  int r = m.ambient_rank();
  IntegerLattice gp = group_of_fractions(m);
  if (gp.rank() == r) {
    RationalCone cone = cone_of(m);
    HilbertBasis hb;
    hb.cone = cone;
    hb.lattice = gp;
    hb.elements = hilbert_internal(r, m.generators(), cone, gp);
    std::sort(hb.elements.begin(), hb.elements.end(), LowerLess{});
    return hb;
  }
  // Rebase onto gp(M): generators get integer coordinates in the basis.
  int d = gp.rank();
  if (d == 0) {
    HilbertBasis hb;
    hb.cone = cone_of(m);
    hb.lattice = gp;
    return hb;
  }
  std::vector<ExpVec> rebased;
  for (const auto& g : m.generators()) {
    auto c = lattice_coordinates(gp, g);
    if (!c) throw std::logic_error("generator outside its own group of fractions");
    rebased.push_back(*c);
  }
  RationalCone cone = cone_from_generators(d, rebased);
  IntegerLattice full = hermite_normal_form(d, [&] {
    std::vector<ExpVec> units;
    for (int i = 0; i < d; ++i) {
      ExpVec e(d, 0);
      e[i] = 1;
      units.push_back(e);
    }
    return units;
  }());
  auto elems = hilbert_internal(d, rebased, cone, full);
  HilbertBasis hb;
  hb.cone = cone_of(m);
  hb.lattice = gp;
  for (const auto& e : elems) {
    ExpVec back(r, 0);
    for (int i = 0; i < d; ++i) back = vec_add(back, vec_scale(gp.basis[i], e[i]));
    hb.elements.push_back(back);
  }
  std::sort(hb.elements.begin(), hb.elements.end(), LowerLess{});
  return hb;
}

AffineMonoid normalization(const AffineMonoid& m) {
  HilbertBasis hb = hilbert_basis(m);
  if (hb.elements.empty()) return m;
  return AffineMonoid(m.ambient_rank(), hb.elements);
}

bool is_normal(const AffineMonoid& m) {
  for (const auto& h : hilbert_basis(m).elements)
    if (!is_member(m, h)) return false;
  return true;
}

namespace {

long long max_generator_degree(const AffineMonoid& m) {
  long long d = 1;
  for (const auto& g : m.generators()) d = std::max(d, total_degree(g));
  return d;
}

// Generators of sn(M) visible up to the degree bound, by the face-wise formula.
std::vector<ExpVec> facewise_generators(const AffineMonoid& m, const RationalCone& cone,
                                        long long bound) {
  std::vector<ExpVec> candidates;
  for (const auto& face : faces(cone)) {
    std::vector<ExpVec> on_face;
    for (const auto& g : m.generators()) {
      bool tight = true;
      for (const auto& n : face.tight_normals)
        if (vec_dot(n, g) != 0) {
          tight = false;
          break;
        }
      if (tight) on_face.push_back(g);
    }
    if (on_face.empty()) continue;
    IntegerLattice gp_face = hermite_normal_form(m.ambient_rank(), on_face);
    // Relative interior of the face: tight exactly on its tight normal set.
    std::vector<int> face_tight;
    for (std::size_t i = 0; i < cone.facet_normals.size(); ++i)
      if (std::find(face.tight_normals.begin(), face.tight_normals.end(),
                    cone.facet_normals[i]) != face.tight_normals.end())
        face_tight.push_back((int)i);
    auto points = enumerate_points(m.ambient_rank(), bound, [&](const ExpVec& v) {
      if (vec_is_zero(v)) return false;
      if (!cone_contains(cone, v, false)) return false;
      if (tight_normal_set(cone, v) != face_tight) return false;
      return lattice_contains(gp_face, v);
    });
    candidates.insert(candidates.end(), points.begin(), points.end());
  }
  return minimal_generators(m.ambient_rank(), std::move(candidates));
}

}  // namespace

bool seminormal_oracle(const AffineMonoid& m, long long bound) {
  IntegerLattice gp = group_of_fractions(m);
  RationalCone cone = cone_of(m);
  auto zs = enumerate_points(m.ambient_rank(), bound, [&](const ExpVec& v) {
    return !vec_is_zero(v) && cone_contains(cone, v, false) && lattice_contains(gp, v);
  });
  for (const auto& z : zs) {
    if (is_member(m, z)) continue;
    if (is_member(m, vec_scale(z, 2)) && is_member(m, vec_scale(z, 3))) return false;
  }
  return true;
}

SeminormalizationResult seminormalization(const AffineMonoid& m) {
  if (rank(m) != m.ambient_rank())
    throw precondition_error("seminormalization requires a full-dimensional monoid");
  RationalCone cone = cone_of(m);
  long long bound = std::max<long long>(2, 2 * max_generator_degree(m));
  std::vector<ExpVec> prev = facewise_generators(m, cone, bound);
  for (int round = 0; round < 6; ++round) {
    long long next_bound = 2 * bound;
    std::vector<ExpVec> next = facewise_generators(m, cone, next_bound);
    if (prev == next) {
      AffineMonoid result(m.ambient_rank(), next);
      if (seminormal_oracle(result, std::max<long long>(1, next_bound / 3)))
        return {canonicalize(result), next_bound};
    }
    prev = std::move(next);
    bound = next_bound;
  }
  throw std::logic_error("seminormalization bound did not stabilize");
}

AffineMonoid seminormalization_fixpoint(const AffineMonoid& m, long long degree_bound) {
  IntegerLattice gp = group_of_fractions(m);
  RationalCone cone = cone_of(m);
  auto candidates = enumerate_points(m.ambient_rank(), degree_bound, [&](const ExpVec& v) {
    return !vec_is_zero(v) && cone_contains(cone, v, false) && lattice_contains(gp, v);
  });
  sort_by_degree(candidates);
  std::vector<ExpVec> gens = m.generators();
  bool changed = true;
  while (changed) {
    changed = false;
    AffineMonoid current(m.ambient_rank(), gens);
    for (const auto& z : candidates) {
      if (is_member(current, z)) continue;
      if (is_member(current, vec_scale(z, 2)) && is_member(current, vec_scale(z, 3))) {
        gens.push_back(z);
        current = AffineMonoid(m.ambient_rank(), gens);
        changed = true;
      }
    }
  }
  return canonicalize(AffineMonoid(m.ambient_rank(), gens));
}

SeminormalizationResult seminormalization_checked(const AffineMonoid& m) {
  SeminormalizationResult facewise = seminormalization(m);
  AffineMonoid fixpoint = seminormalization_fixpoint(m, facewise.certified_bound);
  if (!same_monoid(facewise.monoid, fixpoint))
    throw std::logic_error("face-wise and fixpoint seminormalization disagree");
  return facewise;
}

bool is_seminormal(const AffineMonoid& m) {
  return same_monoid(seminormalization(m).monoid, m);
}

std::vector<ExpVec> interior_points_serial(const AffineMonoid& m, long long degree_bound) {
  RationalCone cone = cone_of(m);
  return enumerate_points_serial(m.ambient_rank(), degree_bound, [&](const ExpVec& v) {
    return cone_contains(cone, v, true);
  });
}

std::vector<ExpVec> interior_points(const AffineMonoid& m, long long degree_bound) {
  RationalCone cone = cone_of(m);
  return enumerate_points(m.ambient_rank(), degree_bound, [&](const ExpVec& v) {
    return cone_contains(cone, v, true);
  });
}

}  // namespace affmon
