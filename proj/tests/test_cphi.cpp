#include <doctest.h>

#include <random>

#include "affmon/catalog.hpp"
#include "affmon/errors.hpp"
#include "affmon/shear.hpp"

using namespace affmon;

namespace {

AlgebraElement random_element(std::mt19937_64& rng, int rank, int nterms, long long max_exp) {
  AlgebraElement f(rank, CoefficientDomain::rationals());
  while (f.terms().size() < (std::size_t)nterms) {
    ExpVec e(rank);
    for (auto& x : e) x = (long long)(rng() % (max_exp + 1));
    f.add_term(e, (long)((rng() % 7)) - 3);
  }
  return f;
}

}  // namespace

TEST_CASE("shear validation") {
  CHECK_THROWS_AS(make_shear(2, {0}), input_error);
  CHECK_THROWS_AS(make_shear(2, {1, 1}), input_error);  // one exponent too many
  CHECK_THROWS_AS(make_shear(1, {}), input_error);      // needs rank >= 2
}

TEST_CASE("binomial expansion of a shear image") {
  auto eta = make_shear(2, {3});
  auto d = CoefficientDomain::rationals();
  auto f = AlgebraElement::monomial(2, d, {2, 0});
  // (t1 + t2^3)^2 = t1^2 + 2 t1 t2^3 + t2^6
  CHECK(apply_shear(eta, f) == parse_element("t1^2 + 2*t1*t2^3 + t2^6", 2, d));
  auto g = AlgebraElement::monomial(2, d, {0, 2});
  CHECK(apply_shear(eta, g) == g);  // t_r is fixed
}

TEST_CASE("shear inverse and multiplicativity") {
  std::mt19937_64 rng(13);
  auto eta = make_shear(3, {2, 5});
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_element(rng, 3, 3, 4);
    auto g = random_element(rng, 3, 3, 4);
    CHECK(apply_shear(eta.inverse(), apply_shear(eta, f)) == f);
    CHECK(apply_shear(eta, multiply(f, g)) == multiply(apply_shear(eta, f), apply_shear(eta, g)));
    CHECK(apply_shear(eta, add(f, g)) == add(apply_shear(eta, f), apply_shear(eta, g)));
  }
}

TEST_CASE("restriction to the degree-2 Veronese") {
  auto m = catalog_entry("veronese(2,2)").monoid;
  CHECK(restricts_to_monoid(make_shear(2, {3}), m).restricts);
  auto bad = restricts_to_monoid(make_shear(2, {2}), m);
  CHECK_FALSE(bad.restricts);
  bool found_failure = false;
  for (const auto& line : bad.transcript)
    if (!line.in_monoid) {
      found_failure = true;
      CHECK_FALSE(is_member(m, line.image_monomial));
    }
  CHECK(found_failure);
}

TEST_CASE("witness search on the Veronese family") {
  for (int n : {2, 3}) {
    auto m = veronese(n, 3);
    auto w = find_cphi_witness(m, 2, 40);
    REQUIRE(w.has_value());
    CHECK(w->levels.size() == 2);  // levels 2 and 3
    for (const auto& level : w->levels)
      for (long long c : level.c) {
        CHECK(c > 2);
        CHECK(c % n == 1);
      }
  }
}

TEST_CASE("witness search on the rank-3 squares example uses odd exponents") {
  auto m = catalog_entry("ex3.9").monoid;
  auto w = find_cphi_witness(m, 2, 40);
  REQUIRE(w.has_value());
  CHECK(w->levels.size() == 2);
  for (const auto& level : w->levels)
    for (long long c : level.c) {
      CHECK(c >= 3);
      CHECK(c % 2 == 1);
    }
}

TEST_CASE("witness search can come back empty") {
  AffineMonoid m(2, {{2, 0}, {0, 1}});  // no shear restricts: odd first coordinates appear
  CHECK_FALSE(find_cphi_witness(m, 2, 12).has_value());
  CHECK_THROWS_AS(find_cphi_witness(AffineMonoid(2, {{1, 0}}), 2, 12), precondition_error);
}

TEST_CASE("progression discovery on the Veronese") {
  auto m = catalog_entry("veronese(2,2)").monoid;
  auto progs = discover_progressions(m, 40);
  REQUIRE(progs.size() == 1);
  // Members of the progression restrict; check the first few.
  for (int k = 0; k < 3; ++k) {
    long long c = progs[0].first + k * progs[0].step;
    CHECK(restricts_to_monoid(make_shear(2, {c}), m).restricts);
  }
}

TEST_CASE("monicize on supported elements") {
  auto m = catalog_entry("veronese(2,2)").monoid;
  auto d = CoefficientDomain::rationals();
  auto f = parse_element("t1^2 + 3*t1*t2", 2, d);
  auto progs = discover_progressions(m, 100);
  auto [eta, image] = monicize(f, m, progs, 100);
  CHECK(is_monic(image));
  CHECK(restricts_to_monoid(eta, m).restricts);
  CHECK(image == apply_shear(eta, f));
}

TEST_CASE("monicize when the weight maximum is away from the highest member") {
  // H(f) = t1 t2 but every admissible weight is maximized at t1^4.
  auto m = catalog_entry("free(2)").monoid;
  auto d = CoefficientDomain::rationals();
  auto f = parse_element("t1*t2 + t1^4", 2, d);
  auto [eta, image] = monicize(f, m, {{1, 1}}, 50);
  CHECK(is_monic(image));
  auto [c, e] = highest_member(image);
  CHECK(e[0] == 0);
}

TEST_CASE("monicize rejects bad inputs") {
  auto m = catalog_entry("veronese(2,2)").monoid;
  auto d = CoefficientDomain::rationals();
  CHECK_THROWS_AS(monicize(AlgebraElement(2, d), m, {{1, 1}}, 50), precondition_error);
  // Support outside the monoid.
  auto g = parse_element("t1 + t2", 2, d);
  CHECK_THROWS_AS(monicize(g, m, {{1, 1}}, 50), precondition_error);
  // Non-unit highest coefficient over Z.
  auto h = parse_element("t1^2 + 2*t2^2", 2, CoefficientDomain::integers());
  CHECK_THROWS_AS(monicize(h, m, {{1, 1}}, 50), precondition_error);
  // Exhausting the progression without a restricting shear.
  AffineMonoid no(2, {{2, 0}, {0, 1}});
  auto f = parse_element("t1^2 + t2", 2, d);
  CHECK_THROWS_AS(monicize(f, no, {{1, 1}}, 10), search_exhausted);
}

TEST_CASE("rank-2 canonical forms") {
  CHECK(rank2_canonical_form(catalog_entry("free(2)").monoid) ==
        std::pair<long long, long long>(0, 1));
  CHECK(rank2_canonical_form(catalog_entry("veronese(2,2)").monoid) ==
        std::pair<long long, long long>(1, 2));
  CHECK(rank2_canonical_form(catalog_entry("veronese(3,2)").monoid) ==
        std::pair<long long, long long>(2, 3));
  CHECK(rank2_canonical_form(catalog_entry("ex3.12.1(3)").monoid) ==
        std::pair<long long, long long>(1, 3));
  // Preconditions: rank 2, Phi-simplicial, normal.
  CHECK_THROWS_AS(rank2_canonical_form(catalog_entry("ex3.9").monoid), precondition_error);
  CHECK_THROWS_AS(rank2_canonical_form(catalog_entry("ex3.12.2").monoid), precondition_error);
}
