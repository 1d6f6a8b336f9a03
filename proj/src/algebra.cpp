#include "affmon/algebra.hpp"

#include <cctype>
#include <sstream>

#include "affmon/errors.hpp"

namespace affmon {

CoefficientDomain CoefficientDomain::mod(long long m) {
  if (m < 2) throw input_error("modulus must be at least 2");
  return {Kind::mod, m};
}

bool CoefficientDomain::is_integral_domain() const {
  switch (kind) {
    case Kind::integers:
    case Kind::rationals:
      return true;
    case Kind::mod: {
      // prime modulus
      if (modulus < 2) return false;
      for (long long p = 2; p * p <= modulus; ++p)
        if (modulus % p == 0) return false;
      return true;
    }
  }
  return false;
}

std::string CoefficientDomain::to_string() const {
  switch (kind) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::mod:
      return "Z/" + std::to_string(modulus);
  }
  return "?";
}

Coeff normalize_coeff(const CoefficientDomain& d, Coeff c) {
  c.canonicalize();
  if (d.kind == CoefficientDomain::Kind::mod) {
    if (c.get_den() != 1) throw input_error("non-integer coefficient in Z/m");
    mpz_class r = c.get_num() % mpz_class((long)d.modulus);
    if (r < 0) r += mpz_class((long)d.modulus);
    c = r;
  } else if (d.kind == CoefficientDomain::Kind::integers) {
    if (c.get_den() != 1) throw input_error("non-integer coefficient in Z");
  }
  return c;
}

bool coeff_is_unit(const CoefficientDomain& d, const Coeff& c) {
  switch (d.kind) {
    case CoefficientDomain::Kind::rationals:
      return c != 0;
    case CoefficientDomain::Kind::integers:
      return c == 1 || c == -1;
    case CoefficientDomain::Kind::mod:
      return gcd(mpz_class(c.get_num()), mpz_class((long)d.modulus)) == 1;
  }
  return false;
}

std::string coeff_to_string(const Coeff& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

AlgebraElement::AlgebraElement(int rank, CoefficientDomain domain)
    : rank_(rank), domain_(domain) {
  if (rank < 1) throw input_error("element rank must be positive");
}

AlgebraElement::AlgebraElement(int rank, CoefficientDomain domain, TermMap terms)
    : AlgebraElement(rank, domain) {
  for (auto& [e, c] : terms) {
    if ((int)e.size() != rank) throw input_error("term monomial has wrong rank");
    add_term(e, c);
  }
}

AlgebraElement AlgebraElement::monomial(int rank, CoefficientDomain domain, const ExpVec& e,
                                        const Coeff& c) {
  AlgebraElement f(rank, domain);
  f.add_term(e, c);
  return f;
}

void AlgebraElement::attach_monoid(const AffineMonoid& m) {
  if (m.ambient_rank() != rank_) throw input_error("ambient monoid rank mismatch");
  for (const auto& [e, c] : terms_)
    if (!is_member(m, e))
      throw precondition_error("support monomial " + monomial_to_string(e) +
                               " is not a member of the ambient monoid");
  ambient_ = m;
}

void AlgebraElement::add_term(const ExpVec& e, const Coeff& c) {
  if ((int)e.size() != rank_) throw input_error("term monomial has wrong rank");
  Coeff v = normalize_coeff(domain_, terms_.count(e) ? terms_[e] + c : c);
  if (v == 0)
    terms_.erase(e);
  else
    terms_[e] = v;
}

namespace {

void check_compatible(const AlgebraElement& f, const AlgebraElement& g) {
  if (f.rank() != g.rank()) throw input_error("rank mismatch");
  if (!(f.domain() == g.domain())) throw input_error("coefficient domain mismatch");
  if (f.ambient_monoid().has_value() && g.ambient_monoid().has_value() &&
      !(*f.ambient_monoid() == *g.ambient_monoid()))
    throw input_error("ambient monoid mismatch");
}

std::optional<AffineMonoid> merged_ambient(const AlgebraElement& f, const AlgebraElement& g) {
  if (f.ambient_monoid()) return f.ambient_monoid();
  return g.ambient_monoid();
}

}  // namespace

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) {
  check_compatible(f, g);
  AlgebraElement r = f;
  r.detach_monoid();
  for (const auto& [e, c] : g.terms()) r.add_term(e, c);
  if (auto amb = merged_ambient(f, g)) r.attach_monoid(*amb);
  return r;
}

AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g) {
  check_compatible(f, g);
  AlgebraElement r = f;
  r.detach_monoid();
  for (const auto& [e, c] : g.terms()) r.add_term(e, -c);
  if (auto amb = merged_ambient(f, g)) r.attach_monoid(*amb);
  return r;
}

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) {
  check_compatible(f, g);
  AlgebraElement r(f.rank(), f.domain());
  for (const auto& [e1, c1] : f.terms())
    for (const auto& [e2, c2] : g.terms()) r.add_term(vec_add(e1, e2), c1 * c2);
  if (auto amb = merged_ambient(f, g)) r.attach_monoid(*amb);
  return r;
}

std::pair<Coeff, ExpVec> highest_member(const AlgebraElement& f) {
  if (f.is_zero()) throw precondition_error("zero element has no highest member");
  auto it = std::prev(f.terms().end());
  return {it->second, it->first};
}

bool is_monic(const AlgebraElement& f) {
  auto [c, e] = highest_member(f);
  for (int i = 0; i + 1 < f.rank(); ++i)
    if (e[i] != 0) return false;
  if (e[f.rank() - 1] <= 0) return false;
  return coeff_is_unit(f.domain(), c);
}

LeadingCoeffIdeal leading_coeff_ideal_gens(const std::vector<AlgebraElement>& fs) {
  LeadingCoeffIdeal result;
  if (fs.empty()) {
    result.exact = true;  // zero ideal
    return result;
  }
  const CoefficientDomain& domain = fs.front().domain();
  for (const auto& f : fs) {
    if (f.is_zero()) throw precondition_error("zero element in leading coefficient ideal input");
    if (!(f.domain() == domain)) throw input_error("coefficient domain mismatch");
    result.generators.push_back(highest_member(f).first);
  }
  if (fs.size() == 1 && domain.is_integral_domain()) {
    // H(hf) = H(h)H(f) over a domain, so lambda((f)) = (highest coeff of f).
    result.exact = true;
    return result;
  }
  // One round of cross-multiplication: align the highest monomials of each
  // pair by monomial shifts and record the leading coefficient of the
  // combination that cancels the top terms.
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      auto [ci, ei] = highest_member(fs[i]);
      auto [cj, ej] = highest_member(fs[j]);
      ExpVec top(ei.size());
      for (std::size_t k = 0; k < ei.size(); ++k) top[k] = std::max(ei[k], ej[k]);
      AlgebraElement si = multiply(
          fs[i], AlgebraElement::monomial(fs[i].rank(), domain, vec_sub(top, ei)));
      AlgebraElement sj = multiply(
          fs[j], AlgebraElement::monomial(fs[j].rank(), domain, vec_sub(top, ej)));
      AlgebraElement combo = sub(multiply(si, AlgebraElement::monomial(si.rank(), domain,
                                                                       ExpVec(ei.size(), 0), cj)),
                                 multiply(sj, AlgebraElement::monomial(sj.rank(), domain,
                                                                       ExpVec(ei.size(), 0), ci)));
      if (!combo.is_zero()) result.generators.push_back(highest_member(combo).first);
    }
  }
  result.exact = false;
  return result;
}

std::map<long long, AlgebraElement> grade_decompose(const AlgebraElement& f) {
  std::map<long long, AlgebraElement> parts;
  for (const auto& [e, c] : f.terms()) {
    long long deg = e[f.rank() - 1];
    auto it = parts.find(deg);
    if (it == parts.end())
      it = parts.emplace(deg, AlgebraElement(f.rank(), f.domain())).first;
    it->second.add_term(e, c);
  }
  return parts;
}

namespace {

struct ElementParser {
  const std::string& text;
  std::size_t pos = 0;
  int rank;
  CoefficientDomain domain;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  mpz_class parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) throw parse_error(start, "expected a number");
    return mpz_class(text.substr(start, pos - start));
  }

  long long parse_small_integer() {
    mpz_class z = parse_integer();
    if (!z.fits_slong_p()) throw parse_error(pos, "exponent too large");
    return z.get_si();
  }

  // number ['/' number] | t<k> ['^' number]
  void parse_factor(Coeff& coeff, ExpVec& mono) {
    skip_ws();
    if (pos >= text.size()) throw parse_error(pos, "unexpected end of input");
    char c = text[pos];
    if (std::isdigit((unsigned char)c)) {
      mpz_class num = parse_integer();
      if (peek() == '/') {
        ++pos;
        std::size_t dpos = pos;
        mpz_class den = parse_integer();
        if (den == 0) throw parse_error(dpos, "zero denominator");
        coeff *= Coeff(num, den);
      } else {
        coeff *= Coeff(num);
      }
      return;
    }
    if (c == 't') {
      std::size_t tpos = pos;
      ++pos;
      long long idx = parse_small_integer();
      if (idx < 1 || idx > rank)
        throw parse_error(tpos, "variable index out of range for rank " + std::to_string(rank));
      long long exp = 1;
      if (peek() == '^') {
        ++pos;
        exp = parse_small_integer();
        if (exp < 0) throw parse_error(pos, "negative exponent");
      }
      mono[idx - 1] += exp;
      return;
    }
    throw parse_error(pos, std::string("unexpected character '") + c + "'");
  }

  AlgebraElement parse() {
    AlgebraElement f(rank, domain);
    bool first = true;
    while (!eof()) {
      int sign = 1;
      char c = peek();
      if (c == '+' || c == '-') {
        if (c == '-') sign = -1;
        ++pos;
      } else if (!first) {
        throw parse_error(pos, "expected '+' or '-' between terms");
      }
      Coeff coeff = sign;
      ExpVec mono(rank, 0);
      parse_factor(coeff, mono);
      while (peek() == '*') {
        ++pos;
        parse_factor(coeff, mono);
      }
      f.add_term(mono, coeff);
      first = false;
    }
    if (first) throw parse_error(pos, "empty element");
    return f;
  }
};

}  // namespace

AlgebraElement parse_element(const std::string& text, int rank, CoefficientDomain domain) {
  ElementParser parser{text, 0, rank, domain};
  return parser.parse();
}

std::string element_to_string(const AlgebraElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Coeff a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || vec_is_zero(e)) {
      os << a;
      if (!vec_is_zero(e)) os << "*";
    }
    if (!vec_is_zero(e)) os << monomial_to_string(e);
    first = false;
  }
  return os.str();
}

}  // namespace affmon
