// affmon: classify and transform finitely generated submonoids of Z_+^r and
// elements of their monoid algebras, in exact arithmetic.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affmon/catalog.hpp"
#include "affmon/closures.hpp"
#include "affmon/errors.hpp"
#include "affmon/io.hpp"
#include "affmon/shear.hpp"

namespace {

using affmon::AffineMonoid;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSearchExhausted = 4;

struct CommonOptions {
  std::string catalog;
  std::string file;
  std::string format = "text";
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--catalog", opts.catalog, "catalog monoid name, e.g. ex3.9 or veronese(2,2)");
  cmd->add_option("--file", opts.file, "monoid spec file (text or JSON)");
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timings", opts.timings, "include timings in JSON output");
}

std::pair<AffineMonoid, std::string> resolve_monoid(const CommonOptions& opts) {
  if (!opts.catalog.empty() && !opts.file.empty())
    throw affmon::input_error("give either --catalog or --file, not both");
  if (!opts.catalog.empty()) {
    auto entry = affmon::catalog_entry(opts.catalog);
    return {entry.monoid, entry.name};
  }
  if (!opts.file.empty()) {
    auto spec = affmon::load_monoid_spec(opts.file);
    return {spec.to_monoid(), spec.name};
  }
  throw affmon::input_error("a monoid is required: use --catalog or --file");
}

long long default_search_limit(long long fallback) {
  if (const char* env = std::getenv("AFFMON_SEARCH_LIMIT")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw affmon::input_error("AFFMON_SEARCH_LIMIT is not an integer");
    }
  }
  return fallback;
}

void print_generators(const CommonOptions& opts, const std::string& key,
                      const std::vector<affmon::ExpVec>& gens, json extra = json::object()) {
  if (opts.format == "json") {
    json j = extra;
    j[key] = gens;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& g : gens) std::cout << affmon::vec_to_string(g) << "\n";
  }
}

std::vector<affmon::Progression> parse_progressions(const std::string& text, int count) {
  // "first:step,first:step,..." — one entry per shear exponent.
  std::vector<affmon::Progression> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw affmon::input_error("progression needs first:step");
    out.push_back({std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1))});
  }
  if ((int)out.size() != count)
    throw affmon::input_error("expected " + std::to_string(count) + " progressions");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact classification of finitely generated submonoids of Z+^r"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string dir;
  long long witness_bound = 0, limit = 0, degree_bound = 12;
  std::vector<long long> int_args;
  std::string element_text, progressions_text, domain_name = "Q";

  auto* classify = app.add_subcommand("classify", "full classification report");
  add_common(classify, opts);
  classify->add_option("--dir", dir, "classify every spec file in a directory");
  classify->add_option("--witness-bound", witness_bound,
                       "also search a C(Phi) witness with c_i > bound");
  classify->add_option("--limit", limit, "witness search limit");

  auto* normalize = app.add_subcommand("normalize", "generators of the normalization");
  add_common(normalize, opts);
  auto* seminormalize =
      app.add_subcommand("seminormalize", "generators of the seminormalization");
  add_common(seminormalize, opts);
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of cone(M) ^ gp(M)");
  add_common(hilbert, opts);

  auto* member = app.add_subcommand("member", "decide membership of a vector");
  add_common(member, opts);
  member->add_option("vector", int_args, "vector coordinates")->required();

  auto* monicize = app.add_subcommand("monicize", "find a shear making an element monic");
  add_common(monicize, opts);
  monicize->add_option("element", element_text, "algebra element, e.g. \"t1^2 + 3*t1*t2\"")
      ->required();
  monicize->add_option("--domain", domain_name, "coefficient domain: Q, Z, or Z<m>");
  monicize->add_option("--progressions", progressions_text,
                       "per-exponent progressions first:step,... (default: discovered)");
  monicize->add_option("--limit", limit, "largest shear exponent to try");

  auto* eta_check = app.add_subcommand("eta-check", "does a shear restrict to the monoid?");
  add_common(eta_check, opts);
  eta_check->add_option("c", int_args, "shear exponents c_1..c_{r-1}")->required();

  auto* cphi = app.add_subcommand("cphi-witness", "search C(Phi) witnesses per level");
  add_common(cphi, opts);
  cphi->add_option("bound", witness_bound, "require c_i > bound")->required();
  cphi->add_option("--limit", limit, "search limit");

  auto* interior = app.add_subcommand("interior", "interior lattice points up to a degree");
  add_common(interior, opts);
  interior->add_option("bound", degree_bound, "total degree bound")->required();

  auto* canonical2 = app.add_subcommand("canonical2", "rank-2 canonical form (a1, a2)");
  add_common(canonical2, opts);

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) {
    std::optional<long long> wb;
    if (witness_bound > 0) wb = witness_bound;
    long long wl = limit > 0 ? limit : default_search_limit(16);
    if (!dir.empty()) {
      std::vector<std::filesystem::path> files;
      for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      int worst = kExitOk;
      for (const auto& path : files) {
        try {
          auto spec = affmon::load_monoid_spec(path.string());
          auto report = affmon::classify(spec.to_monoid(), spec.name, wb, wl);
          if (opts.format == "json")
            std::cout << affmon::report_to_json(report, opts.timings) << "\n";
          else
            std::cout << affmon::report_to_text(report) << "\n";
        } catch (const std::exception& e) {
          std::cout << "error: " << path.string() << ": " << e.what() << "\n";
          worst = std::max(worst, kExitInput);
        }
      }
      return worst;
    }
    auto [m, name] = resolve_monoid(opts);
    auto report = affmon::classify(m, name, wb, wl);
    if (opts.format == "json")
      std::cout << affmon::report_to_json(report, opts.timings) << "\n";
    else
      std::cout << affmon::report_to_text(report);
    return kExitOk;
  }

  if (normalize->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    print_generators(opts, "normalization", affmon::normalization(m).generators());
    return kExitOk;
  }
  if (seminormalize->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    auto sn = affmon::seminormalization(m);
    print_generators(opts, "seminormalization", sn.monoid.generators(),
                     json{{"certified_bound", sn.certified_bound}});
    return kExitOk;
  }
  if (hilbert->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    print_generators(opts, "hilbert_basis", affmon::hilbert_basis(m).elements);
    return kExitOk;
  }
  if (member->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    auto w = affmon::membership(m, affmon::ExpVec(int_args.begin(), int_args.end()));
    if (opts.format == "json") {
      json j{{"member", w.member}};
      if (w.member) j["witness"] = w.multiplicities;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (w.member ? "true" : "false") << "\n";
      if (w.member) {
        std::cout << "witness:";
        for (std::size_t i = 0; i < w.multiplicities.size(); ++i)
          if (w.multiplicities[i])
            std::cout << " " << w.multiplicities[i] << "x" << affmon::vec_to_string(m.generators()[i]);
        std::cout << "\n";
      }
    }
    return kExitOk;
  }
  if (monicize->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    affmon::CoefficientDomain domain = affmon::CoefficientDomain::rationals();
    if (domain_name == "Z")
      domain = affmon::CoefficientDomain::integers();
    else if (domain_name != "Q")
      domain = affmon::CoefficientDomain::mod(std::stoll(domain_name.substr(1)));
    auto f = affmon::parse_element(element_text, m.ambient_rank(), domain);
    long long lim = limit > 0 ? limit : default_search_limit(500);
    auto progs = progressions_text.empty()
                     ? affmon::discover_progressions(m, lim)
                     : parse_progressions(progressions_text, m.ambient_rank() - 1);
    auto [eta, image] = affmon::monicize(f, m, progs, lim);
    if (opts.format == "json") {
      json j{{"c", eta.exponents}, {"image", affmon::element_to_string(image)},
             {"monic", true}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "c = (";
      for (std::size_t i = 0; i < eta.exponents.size(); ++i)
        std::cout << (i ? "," : "") << eta.exponents[i];
      std::cout << ")\n" << "image: " << affmon::element_to_string(image) << "\n";
    }
    return kExitOk;
  }
  if (eta_check->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    auto eta = affmon::make_shear(m.ambient_rank(),
                                  std::vector<long long>(int_args.begin(), int_args.end()));
    auto check = affmon::restricts_to_monoid(eta, m);
    if (opts.format == "json") {
      json lines = json::array();
      for (const auto& line : check.transcript)
        lines.push_back({{"generator", line.generator},
                         {"inverse", line.inverse_direction},
                         {"image_monomial", line.image_monomial},
                         {"in_monoid", line.in_monoid}});
      std::cout << json{{"restricts", check.restricts}, {"transcript", lines}}.dump(2) << "\n";
    } else {
      std::cout << "restricts: " << (check.restricts ? "true" : "false") << "\n";
      for (const auto& line : check.transcript)
        std::cout << (line.inverse_direction ? "eta^-1" : "eta   ") << "("
                  << affmon::monomial_to_string(line.generator)
                  << ") term " << affmon::monomial_to_string(line.image_monomial) << " : "
                  << (line.in_monoid ? "in M" : "NOT in M") << "\n";
    }
    return kExitOk;
  }
  if (cphi->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    long long lim = limit > 0 ? limit : default_search_limit(16);
    auto witness = affmon::find_cphi_witness(m, witness_bound, lim);
    if (!witness) {
      std::cout << "no witness found within limit " << lim << "\n";
      return kExitSearchExhausted;
    }
    if (opts.format == "json") {
      json levels = json::array();
      for (const auto& level : witness->levels)
        levels.push_back({{"level", level.level}, {"c", level.c}});
      std::cout << json{{"bound_c", witness->bound_c}, {"levels", levels}}.dump(2) << "\n";
    } else {
      for (const auto& level : witness->levels) {
        std::cout << "level " << level.level << ": c = (";
        for (std::size_t i = 0; i < level.c.size(); ++i)
          std::cout << (i ? "," : "") << level.c[i];
        std::cout << ")\n";
      }
    }
    return kExitOk;
  }
  if (interior->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    print_generators(opts, "interior_points", affmon::interior_points(m, degree_bound));
    return kExitOk;
  }
  if (canonical2->parsed()) {
    auto [m, name] = resolve_monoid(opts);
    auto [a1, a2] = affmon::rank2_canonical_form(m);
    if (opts.format == "json")
      std::cout << json{{"a1", a1}, {"a2", a2}}.dump(2) << "\n";
    else
      std::cout << "(" << a1 << ", " << a2 << ")\n";
    return kExitOk;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const affmon::search_exhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kExitSearchExhausted;
  } catch (const affmon::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const affmon::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
