#include "affmon/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "affmon/errors.hpp"

namespace affmon {

namespace {

using nlohmann::json;

MonoidSpec parse_json_spec(const std::string& content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    throw parse_error(e.byte, std::string("invalid JSON: ") + e.what());
  }
  MonoidSpec spec;
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw input_error("JSON spec needs an integer \"rank\"");
  spec.rank = j["rank"].get<int>();
  if (j.contains("name")) spec.name = j["name"].get<std::string>();
  if (!j.contains("generators") || !j["generators"].is_array())
    throw input_error("JSON spec needs a \"generators\" array");
  for (const auto& row : j["generators"]) {
    ExpVec v;
    for (const auto& x : row) v.push_back(x.get<long long>());
    if ((int)v.size() != spec.rank)
      throw input_error("JSON generator length does not match rank");
    spec.generators.push_back(std::move(v));
  }
  return spec;
}

json vec_list_to_json(const std::vector<ExpVec>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(v);
  return arr;
}

}  // namespace

MonoidSpec parse_monoid_spec(const std::string& content) {
  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') return parse_json_spec(content);

  MonoidSpec spec;
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  bool have_rank = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "rank:") {
      if (!(ls >> spec.rank)) throw parse_error(lineno, "expected integer after rank:");
      have_rank = true;
      continue;
    }
    if (head == "name:") {
      ls >> spec.name;
      continue;
    }
    if (!have_rank) throw parse_error(lineno, "generator line before rank:");
    ExpVec v;
    ls.clear();
    ls.str(line);
    long long x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof()) throw parse_error(lineno, "non-integer token in generator line");
    if ((int)v.size() != spec.rank)
      throw parse_error(lineno, "generator length does not match rank");
    spec.generators.push_back(std::move(v));
  }
  if (!have_rank) throw input_error("spec is missing a rank: line");
  return spec;
}

MonoidSpec load_monoid_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  MonoidSpec spec = parse_monoid_spec(buf.str());
  if (spec.name.empty()) spec.name = path;
  return spec;
}

std::string monoid_spec_to_text(const MonoidSpec& spec) {
  std::ostringstream os;
  if (!spec.name.empty()) os << "name: " << spec.name << "\n";
  os << "rank: " << spec.rank << "\n";
  for (const auto& g : spec.generators) {
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << g[i];
    os << "\n";
  }
  return os.str();
}

ClassificationReport classify(const AffineMonoid& m, const std::string& name,
                              std::optional<long long> witness_bound, long long witness_limit) {
  auto start = std::chrono::steady_clock::now();
  ClassificationReport report;
  report.input_name = name;
  report.ambient_rank = m.ambient_rank();
  report.input_generators = m.generators();
  report.rank = rank(m);
  report.phi_simplicial = is_phi_simplicial(m);
  report.normalization_generators = normalization(m).generators();
  report.normal = true;
  for (const auto& h : report.normalization_generators)
    if (!is_member(m, h)) report.normal = false;
  if (report.rank == m.ambient_rank()) {
    SeminormalizationResult sn = seminormalization(m);
    report.seminormalization_generators = sn.monoid.generators();
    report.sn_certified_bound = sn.certified_bound;
    report.seminormal = same_monoid(sn.monoid, m);
  }
  if (witness_bound) report.witness = find_cphi_witness(m, *witness_bound, witness_limit);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

json witness_to_json(const CPhiWitness& w) {
  json jw;
  jw["bound_c"] = w.bound_c;
  jw["levels"] = json::array();
  for (const auto& level : w.levels) {
    json jl;
    jl["level"] = level.level;
    jl["c"] = level.c;
    jl["restricts"] = level.check.restricts;
    json lines = json::array();
    for (const auto& line : level.check.transcript) {
      lines.push_back({{"generator", line.generator},
                       {"inverse", line.inverse_direction},
                       {"image_monomial", line.image_monomial},
                       {"in_monoid", line.in_monoid}});
    }
    jl["transcript"] = lines;
    jw["levels"].push_back(jl);
  }
  return jw;
}

}  // namespace

std::string report_to_json(const ClassificationReport& report, bool with_timings) {
  json j;
  j["input"] = {{"name", report.input_name},
                {"rank", report.ambient_rank},
                {"generators", vec_list_to_json(report.input_generators)}};
  j["rank"] = report.rank;
  j["phi_simplicial"] = report.phi_simplicial;
  j["normal"] = report.normal.has_value() ? json(*report.normal) : json(nullptr);
  j["seminormal"] = report.seminormal.has_value() ? json(*report.seminormal) : json(nullptr);
  j["normalization"] = vec_list_to_json(report.normalization_generators);
  j["seminormalization"] = {
      {"generators", vec_list_to_json(report.seminormalization_generators)},
      {"certified_bound", report.sn_certified_bound},
      {"certification", "bound-certified"}};
  j["cphi_witness"] = report.witness ? witness_to_json(*report.witness) : json(nullptr);
  if (with_timings) j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2);
}

std::string report_to_text(const ClassificationReport& report) {
  std::ostringstream os;
  os << "input: " << report.input_name << "\n";
  os << "ambient rank: " << report.ambient_rank << "\n";
  os << "rank: " << report.rank << "\n";
  os << "generators:";
  for (const auto& g : report.input_generators) os << " " << vec_to_string(g);
  os << "\n";
  os << "phi_simplicial: " << (report.phi_simplicial ? "true" : "false") << "\n";
  os << "normal: " << (report.normal ? (*report.normal ? "true" : "false") : "n/a") << "\n";
  os << "seminormal: "
     << (report.seminormal ? (*report.seminormal ? "true" : "false") : "n/a") << "\n";
  os << "normalization:";
  for (const auto& g : report.normalization_generators) os << " " << vec_to_string(g);
  os << "\n";
  os << "seminormalization:";
  for (const auto& g : report.seminormalization_generators) os << " " << vec_to_string(g);
  os << "  [bound-certified at " << report.sn_certified_bound << "]\n";
  if (report.witness) {
    os << "cphi witness (bound " << report.witness->bound_c << "):";
    for (const auto& level : report.witness->levels) {
      os << " level " << level.level << " c=(";
      for (std::size_t i = 0; i < level.c.size(); ++i) os << (i ? "," : "") << level.c[i];
      os << ")";
    }
    os << "\n";
  }
  os << "elapsed: " << report.elapsed_seconds << " s\n";
  return os.str();
}

}  // namespace affmon
