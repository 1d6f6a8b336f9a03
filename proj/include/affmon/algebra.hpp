#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affmon/monoid.hpp"
#include "affmon/vec.hpp"

namespace affmon {

// Closed-world coefficient domains so the unit test stays decidable:
// rationals (nonzero), integers (+/-1), integers mod m (gcd with m = 1).
struct CoefficientDomain {
  enum class Kind { integers, rationals, mod };
  Kind kind = Kind::rationals;
  long long modulus = 0;

  static CoefficientDomain integers() { return {Kind::integers, 0}; }
  static CoefficientDomain rationals() { return {Kind::rationals, 0}; }
  static CoefficientDomain mod(long long m);

  bool is_integral_domain() const;
  bool operator==(const CoefficientDomain&) const = default;
  std::string to_string() const;
};

using Coeff = mpq_class;

Coeff normalize_coeff(const CoefficientDomain& d, Coeff c);
bool coeff_is_unit(const CoefficientDomain& d, const Coeff& c);
std::string coeff_to_string(const Coeff& c);

// Element of R[M] (or R[Z_+^r] when no ambient monoid is attached): finite
// term map monomial -> nonzero coefficient, iterated in the lower order.
class AlgebraElement {
 public:
  using TermMap = std::map<ExpVec, Coeff, LowerLess>;

  AlgebraElement(int rank, CoefficientDomain domain);
  AlgebraElement(int rank, CoefficientDomain domain, TermMap terms);

  static AlgebraElement monomial(int rank, CoefficientDomain domain, const ExpVec& e,
                                 const Coeff& c = 1);

  int rank() const { return rank_; }
  const CoefficientDomain& domain() const { return domain_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Attaching a monoid checks that every support monomial is a member.
  void attach_monoid(const AffineMonoid& m);
  const std::optional<AffineMonoid>& ambient_monoid() const { return ambient_; }
  void detach_monoid() { ambient_.reset(); }

  void add_term(const ExpVec& e, const Coeff& c);  // accumulates, drops zeros

  bool operator==(const AlgebraElement&) const = default;

 private:
  int rank_;
  CoefficientDomain domain_;
  TermMap terms_;
  std::optional<AffineMonoid> ambient_;
};

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);

// The unique term not lower than any other support monomial; f must be nonzero.
std::pair<Coeff, ExpVec> highest_member(const AlgebraElement& f);

// True iff the highest monomial is a positive pure power of t_r with a unit
// coefficient.
bool is_monic(const AlgebraElement& f);

struct LeadingCoeffIdeal {
  std::vector<Coeff> generators;
  bool exact = false;  // true only in the certified cases
};

// Generators of a sub-ideal of the leading coefficient ideal of (fs); exact
// for a single element over an integral domain, labeled otherwise.
LeadingCoeffIdeal leading_coeff_ideal_gens(const std::vector<AlgebraElement>& fs);

// Splits f by the exponent of t_r; components sum to f and component 0 is
// supported on M_0.
std::map<long long, AlgebraElement> grade_decompose(const AlgebraElement& f);

// Text syntax: "3*t1^2*t2 + 5*t1*t2^2", rational coefficients as "1/2";
// whitespace-insensitive.  Throws parse_error with the offending position.
AlgebraElement parse_element(const std::string& text, int rank, CoefficientDomain domain);

std::string element_to_string(const AlgebraElement& f);

}  // namespace affmon
