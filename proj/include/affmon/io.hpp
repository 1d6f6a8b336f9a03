#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affmon/closures.hpp"
#include "affmon/monoid.hpp"
#include "affmon/shear.hpp"

namespace affmon {

struct MonoidSpec {
  std::string name;
  int rank = 0;
  std::vector<ExpVec> generators;

  AffineMonoid to_monoid() const { return AffineMonoid(rank, generators); }
};

// Line-oriented text: "rank: 3", optional "name: ...", one generator per line
// as space-separated integers.  '#' starts a comment.  JSON alternative:
// {"rank": 3, "generators": [[...], ...], "name": "..."}; content starting
// with '{' is treated as JSON.
MonoidSpec parse_monoid_spec(const std::string& content);
MonoidSpec load_monoid_spec(const std::string& path);
std::string monoid_spec_to_text(const MonoidSpec& spec);

struct ClassificationReport {
  std::string input_name;
  int ambient_rank = 0;
  int rank = 0;
  std::vector<ExpVec> input_generators;
  bool phi_simplicial = false;
  // The closure fields are only populated for full-dimensional monoids.
  std::optional<bool> normal;
  std::optional<bool> seminormal;
  std::vector<ExpVec> normalization_generators;
  std::vector<ExpVec> seminormalization_generators;
  long long sn_certified_bound = 0;
  std::optional<CPhiWitness> witness;
  double elapsed_seconds = 0.0;
};

ClassificationReport classify(const AffineMonoid& m, const std::string& name,
                              std::optional<long long> witness_bound = std::nullopt,
                              long long witness_limit = 0);

// Machine output is byte-stable: sorted keys, canonical orders, and no
// timings unless with_timings is set.
std::string report_to_json(const ClassificationReport& report, bool with_timings = false);
std::string report_to_text(const ClassificationReport& report);

}  // namespace affmon
