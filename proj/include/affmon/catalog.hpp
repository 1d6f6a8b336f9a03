#pragma once

#include <map>
#include <string>
#include <vector>

#include "affmon/monoid.hpp"

namespace affmon {

// Named monoid families used by the tests and the CLI.
struct CatalogEntry {
  std::string name;
  AffineMonoid monoid;
  // Predicate name -> expected value, e.g. {"normal", "false"}.  The "sn"
  // key, when present, lists the expected seminormalization generators.
  std::map<std::string, std::string> expected;
};

// Generators: all exponent vectors of total degree exactly n in rank r.
AffineMonoid veronese(int n, int r);

// Accepts: free(r), veronese(n,r), ex3.9, ex3.12.1(n), ex3.12.2, ex3.12.3(j),
// ex3.12.4.  Unknown names throw input_error.
CatalogEntry catalog_entry(const std::string& name);

// The fixed list driven through the regression/property suites.
std::vector<CatalogEntry> standard_catalog();

}  // namespace affmon
