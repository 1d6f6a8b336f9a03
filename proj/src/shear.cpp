#include "affmon/shear.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "affmon/closures.hpp"
#include "affmon/errors.hpp"

namespace affmon {

ShearAutomorphism make_shear(int rank, std::vector<long long> exponents, int sign) {
  if (rank < 2) throw input_error("shear automorphism needs rank >= 2");
  if ((int)exponents.size() != rank - 1)
    throw input_error("shear needs exactly rank-1 exponents");
  for (long long c : exponents)
    if (c < 1) throw input_error("shear exponents must be >= 1");
  if (sign != 1 && sign != -1) throw input_error("shear sign must be +1 or -1");
  return {rank, std::move(exponents), sign};
}

namespace {

mpz_class binomial(long long n, long long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return b;
}

}  // namespace

AlgebraElement apply_shear(const ShearAutomorphism& eta, const AlgebraElement& f) {
  if (eta.rank != f.rank()) throw input_error("shear rank does not match element rank");
  const int r = eta.rank;
  AlgebraElement result(r, f.domain());
  for (const auto& [e, coeff] : f.terms()) {
    // Expand prod_i (t_i + sign*t_r^{c_i})^{e_i} * t_r^{e_r} term by term.
    AlgebraElement expansion = AlgebraElement::monomial(r, f.domain(), ExpVec(r, 0), coeff);
    for (int i = 0; i < r - 1; ++i) {
      if (e[i] == 0) continue;
      AlgebraElement binom(r, f.domain());
      for (long long l = 0; l <= e[i]; ++l) {
        ExpVec mono(r, 0);
        mono[i] = e[i] - l;
        mono[r - 1] = eta.exponents[i] * l;
        mpz_class c = binomial(e[i], l);
        if (eta.sign < 0 && (l % 2)) c = -c;
        binom.add_term(mono, Coeff(c));
      }
      expansion = multiply(expansion, binom);
    }
    ExpVec tail(r, 0);
    tail[r - 1] = e[r - 1];
    expansion = multiply(expansion, AlgebraElement::monomial(r, f.domain(), tail));
    result = add(result, expansion);
  }
  return result;
}

RestrictionCheck restricts_to_monoid(const ShearAutomorphism& eta, const AffineMonoid& m) {
  if (eta.rank != m.ambient_rank()) throw input_error("shear rank does not match monoid rank");
  RestrictionCheck check;
  check.restricts = true;
  CoefficientDomain z = CoefficientDomain::integers();
  for (bool inverse : {false, true}) {
    ShearAutomorphism dir = inverse ? eta.inverse() : eta;
    for (const auto& g : m.generators()) {
      AlgebraElement image = apply_shear(dir, AlgebraElement::monomial(eta.rank, z, g));
      for (const auto& [mono, coeff] : image.terms()) {
        TranscriptLine line;
        line.generator = g;
        line.inverse_direction = inverse;
        line.image_monomial = mono;
        line.in_monoid = is_member(m, mono);
        if (!line.in_monoid) check.restricts = false;
        check.transcript.push_back(std::move(line));
      }
    }
  }
  return check;
}

namespace {

// Elements of M supported on the last `level` coordinates, re-embedded in
// ambient rank `level` so the distinguished variable stays last.  The
// witness shears are always taken with respect to the final variable, so
// the truncation chain must preserve it; by nonnegativity the generator
// filter is exact, as for the leading-coordinate truncation.
AffineMonoid upper_truncation(const AffineMonoid& m, int level) {
  int drop = m.ambient_rank() - level;
  std::vector<ExpVec> gens;
  for (const auto& g : m.generators()) {
    bool head_zero = true;
    for (int i = 0; i < drop; ++i) head_zero = head_zero && g[i] == 0;
    if (head_zero) gens.emplace_back(g.begin() + drop, g.end());
  }
  return AffineMonoid(level, gens);
}

// Candidate exponent values in (bound, limit], progression-guided first:
// values congruent to +1 and then -1 modulo each generator degree, then the
// remaining values in increasing order.
std::vector<long long> candidate_values(const AffineMonoid& m, long long bound,
                                        long long limit) {
  std::set<long long> degrees;
  for (const auto& g : m.generators()) {
    long long d = total_degree(g);
    if (d >= 2) degrees.insert(d);
  }
  std::vector<long long> out;
  std::set<long long> seen;
  auto push = [&](long long v) {
    if (v > bound && v <= limit && seen.insert(v).second) out.push_back(v);
  };
  for (long long d : degrees)
    for (long long v = bound + 1; v <= limit; ++v)
      if (v % d == 1 % d) push(v);
  for (long long d : degrees)
    for (long long v = bound + 1; v <= limit; ++v)
      if (v % d == (d - 1) % d) push(v);
  for (long long v = bound + 1; v <= limit; ++v) push(v);
  return out;
}

template <typename Fn>
bool lex_product(const std::vector<std::vector<long long>>& choices, Fn&& fn) {
  std::vector<std::size_t> idx(choices.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) return false;
  while (true) {
    std::vector<long long> tuple(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) tuple[i] = choices[i][idx[i]];
    if (fn(tuple)) return true;
    std::size_t k = choices.size();
    while (k-- > 0) {
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return false;
    }
  }
}

}  // namespace

std::optional<CPhiWitness> find_cphi_witness(const AffineMonoid& m, long long bound_c,
                                             long long search_limit) {
  if (!is_phi_simplicial(m))
    throw precondition_error("C(Phi) witness search requires a Phi-simplicial monoid");
  if (bound_c < 1) throw input_error("bound must be >= 1");
  CPhiWitness witness;
  witness.bound_c = bound_c;
  for (int level = 2; level <= m.ambient_rank(); ++level) {
    AffineMonoid mm = upper_truncation(m, level);
    std::vector<long long> values = candidate_values(mm, bound_c, search_limit);
    std::vector<std::vector<long long>> choices(level - 1, values);
    std::optional<LevelWitness> found;
    lex_product(choices, [&](const std::vector<long long>& c) {
      RestrictionCheck check = restricts_to_monoid(make_shear(level, c), mm);
      if (!check.restricts) return false;
      found = LevelWitness{level, c, std::move(check)};
      return true;
    });
    if (!found) return std::nullopt;
    witness.levels.push_back(std::move(*found));
  }
  return witness;
}

std::vector<Progression> discover_progressions(const AffineMonoid& m, long long search_limit) {
  const int r = m.ambient_rank();
  std::set<long long> moduli;
  for (const auto& g : m.generators()) {
    long long d = total_degree(g);
    if (d >= 2) moduli.insert(d);
  }
  moduli.insert(1);
  for (long long n : moduli) {
    for (long long residue : {1 % n, (n - 1) % n}) {
      long long first = residue == 0 ? n : residue;
      while (first < 2) first += n;  // keep exponents >= 2, cheap separation
      if (first > search_limit) continue;
      std::vector<long long> c(r - 1, first);
      if (restricts_to_monoid(make_shear(r, c), m).restricts)
        return std::vector<Progression>(r - 1, Progression{first, n});
    }
  }
  throw search_exhausted("no restricting progression found up to limit " +
                         std::to_string(search_limit));
}

std::pair<ShearAutomorphism, AlgebraElement> monicize(const AlgebraElement& f,
                                                      const AffineMonoid& m,
                                                      const std::vector<Progression>& allowed,
                                                      long long limit) {
  const int r = f.rank();
  if (f.is_zero()) throw precondition_error("cannot monicize the zero element");
  if (m.ambient_rank() != r) throw input_error("monoid rank does not match element rank");
  if ((int)allowed.size() != r - 1)
    throw input_error("need one progression per shear exponent");
  auto [hc, he] = highest_member(f);
  if (!coeff_is_unit(f.domain(), hc))
    throw precondition_error("highest coefficient must be a unit");
  for (const auto& [e, c] : f.terms())
    if (!is_member(m, e))
      throw precondition_error("element support must lie in the monoid");

  std::vector<std::vector<long long>> choices;
  for (const auto& p : allowed) {
    std::vector<long long> vals;
    for (long long v = p.first; v <= limit; v += p.step) vals.push_back(v);
    choices.push_back(std::move(vals));
  }

  std::optional<std::pair<ShearAutomorphism, AlgebraElement>> found;
  lex_product(choices, [&](const std::vector<long long>& c) {
    // Weight check first: unique maximizer with a unit coefficient.
    long long best = 0;
    int best_count = 0;
    const ExpVec* best_exp = nullptr;
    const Coeff* best_coeff = nullptr;
    for (const auto& [e, coeff] : f.terms()) {
      long long w = e[r - 1];
      for (int i = 0; i < r - 1; ++i) w += c[i] * e[i];
      if (best_exp == nullptr || w > best) {
        best = w;
        best_count = 1;
        best_exp = &e;
        best_coeff = &coeff;
      } else if (w == best) {
        ++best_count;
      }
    }
    if (best_count != 1 || !coeff_is_unit(f.domain(), *best_coeff)) return false;
    ShearAutomorphism eta = make_shear(r, c);
    if (!restricts_to_monoid(eta, m).restricts) return false;
    AlgebraElement image = apply_shear(eta, f);
    if (!is_monic(image))
      throw std::logic_error("weight-selected shear produced a non-monic image");
    found = {eta, std::move(image)};
    return true;
  });
  if (!found)
    throw search_exhausted("no admissible shear exponents up to limit " + std::to_string(limit));
  return *found;
}

std::pair<long long, long long> rank2_canonical_form(const AffineMonoid& m) {
  if (m.ambient_rank() != 2) throw precondition_error("canonical form needs ambient rank 2");
  if (!is_phi_simplicial(m)) throw precondition_error("canonical form needs a Phi-simplicial monoid");
  if (!is_normal(m)) throw precondition_error("canonical form needs a normal monoid");
  IntegerLattice gp = group_of_fractions(m);
  // Full rank 2: basis rows {(a, b), (0, c)}.
  long long a = gp.basis[0][0], b = gp.basis[0][1], c = gp.basis[1][1];
  if (a <= 0 || c <= 0 || gp.basis[1][0] != 0)
    throw std::logic_error("unexpected Hermite basis shape");
  long long g = std::gcd(b, c);
  if (g == 0) g = 1;
  long long a1 = b / g, a2 = c / g;

  // Reconstructed lattice and the coordinate isomorphism
  // p*(a,b) + q*(0,c) -> (p, p*a1 + q*a2); verify both directions to degree 10.
  IntegerLattice target = hermite_normal_form(2, {{1, a1}, {0, a2}});
  const long long kCheckDegree = 10;
  for (long long x = 0; x <= kCheckDegree; ++x) {
    for (long long y = 0; x + y <= kCheckDegree; ++y) {
      ExpVec v{x, y};
      auto coords = lattice_coordinates(gp, v);
      bool in_m = is_member(m, v);
      bool in_model = coords.has_value();
      if (in_m != in_model)
        throw std::logic_error("normal monoid does not match its lattice intersection");
      if (coords) {
        ExpVec image{(*coords)[0], (*coords)[0] * a1 + (*coords)[1] * a2};
        if (!vec_all_nonneg(image) || !lattice_contains(target, image))
          throw std::logic_error("canonical-form isomorphism failed forward check");
      }
      // Reverse direction: points of the model monoid pull back into M.
      auto tcoords = lattice_coordinates(target, v);
      if (tcoords) {
        ExpVec pre = vec_add(vec_scale(gp.basis[0], (*tcoords)[0]),
                             vec_scale(gp.basis[1], (*tcoords)[1]));
        if (vec_all_nonneg(pre) && !is_member(m, pre))
          throw std::logic_error("canonical-form isomorphism failed reverse check");
      }
    }
  }
  return {a1, a2};
}

}  // namespace affmon
