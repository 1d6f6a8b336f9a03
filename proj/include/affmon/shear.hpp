#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "affmon/algebra.hpp"
#include "affmon/monoid.hpp"

namespace affmon {

// eta: t_i -> t_i + sign * t_r^{c_i} for i < r, t_r fixed.  The sign -1
// automorphism with the same exponents is the two-sided inverse.
struct ShearAutomorphism {
  int rank = 0;
  std::vector<long long> exponents;  // c_1, ..., c_{r-1}, all >= 1
  int sign = 1;

  ShearAutomorphism inverse() const { return {rank, exponents, -sign}; }
};

ShearAutomorphism make_shear(int rank, std::vector<long long> exponents, int sign = 1);

// Exact binomial expansion; any ambient-monoid attachment is dropped because
// the support may leave M.
AlgebraElement apply_shear(const ShearAutomorphism& eta, const AlgebraElement& f);

struct TranscriptLine {
  ExpVec generator;
  bool inverse_direction = false;
  ExpVec image_monomial;
  bool in_monoid = false;
};

struct RestrictionCheck {
  bool restricts = false;
  std::vector<TranscriptLine> transcript;
};

// True iff every support monomial of eta(g) and eta^{-1}(g) is a member of M
// for every generator g; sufficient because generators generate.
RestrictionCheck restricts_to_monoid(const ShearAutomorphism& eta, const AffineMonoid& m);

struct LevelWitness {
  int level = 0;  // truncation level m
  std::vector<long long> c;
  RestrictionCheck check;
};

struct CPhiWitness {
  long long bound_c = 0;
  std::vector<LevelWitness> levels;  // one per level 2..r
};

// Searches, per truncation level, exponent vectors with bound_c < c_i <=
// search_limit such that the shear restricts.  Arithmetic progressions
// suggested by the generator degrees are tried first.  A witness certifies
// the property at this bound; nullopt is not a proof of failure.
std::optional<CPhiWitness> find_cphi_witness(const AffineMonoid& m, long long bound_c,
                                             long long search_limit);

struct Progression {
  long long first = 1;
  long long step = 1;
};

// Residue scan: progressions whose members make the shear restrict to M.
std::vector<Progression> discover_progressions(const AffineMonoid& m, long long search_limit);

// Finds eta with exponents drawn from the per-coordinate progressions, each
// <= limit, such that eta restricts to M and eta(f) is monic: the weight
// c_1 a_1 + ... + c_{r-1} a_{r-1} + a_r must be uniquely maximized over the
// support of f at a term with unit coefficient.
std::pair<ShearAutomorphism, AlgebraElement> monicize(const AlgebraElement& f,
                                                      const AffineMonoid& m,
                                                      const std::vector<Progression>& allowed,
                                                      long long limit);

// Canonical parameters (a1, a2) of a rank-2 Phi-simplicial normal monoid:
// gp(M) has Hermite basis {(a, b), (0, c)} and with g = gcd(b, c) the monoid
// is isomorphic to the intersection of the lattice ((1, b/g), (0, c/g)) with
// the orthant.  Verified by two-sided membership up to degree 10.
std::pair<long long, long long> rank2_canonical_form(const AffineMonoid& m);

}  // namespace affmon
