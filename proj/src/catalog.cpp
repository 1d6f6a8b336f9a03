#include "affmon/catalog.hpp"

#include <functional>
#include <regex>
#include <sstream>

#include "affmon/errors.hpp"

namespace affmon {

namespace {

std::string gens_to_string(const std::vector<ExpVec>& gens) {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << " ";
    os << vec_to_string(gens[i]);
  }
  return os.str();
}

}  // namespace

AffineMonoid veronese(int n, int r) {
  if (n < 1) throw input_error("veronese degree must be >= 1");
  if (r < 1 || r > 4) throw input_error("veronese rank must be between 1 and 4");
  std::vector<ExpVec> gens;
  ExpVec cur(r, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r - 1) {
      cur[pos] = left;
      gens.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n);
  return AffineMonoid(r, gens);
}

CatalogEntry catalog_entry(const std::string& name) {
  std::smatch match;
  if (std::regex_match(name, match, std::regex(R"(free\((\d+)\))"))) {
    int r = std::stoi(match[1]);
    CatalogEntry e{name, veronese(1, r), {}};
    e.expected = {{"phi_simplicial", "true"}, {"normal", "true"}, {"seminormal", "true"}};
    if (r == 2) e.expected["canonical2"] = "(0, 1)";
    return e;
  }
  if (std::regex_match(name, match, std::regex(R"(veronese\((\d+),\s*(\d+)\))"))) {
    int n = std::stoi(match[1]), r = std::stoi(match[2]);
    CatalogEntry e{name, veronese(n, r), {}};
    e.expected = {{"phi_simplicial", "true"}, {"normal", "true"}, {"seminormal", "true"}};
    if (n == 2 && r == 2) e.expected["canonical2"] = "(1, 2)";
    return e;
  }
  if (name == "ex3.9") {
    AffineMonoid m(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 0, 1}, {0, 1, 1}});
    return CatalogEntry{name, m,
                        {{"phi_simplicial", "true"},
                         {"normal", "false"},
                         {"seminormal", "true"},
                         {"rank", "3"}}};
  }
  if (std::regex_match(name, match, std::regex(R"(ex3\.12\.1\((\d+)\))"))) {
    long long n = std::stoll(match[1]);
    if (n < 1) throw input_error("ex3.12.1 needs n >= 1");
    AffineMonoid m(2, {{n, 0}, {1, 1}, {0, n}});
    CatalogEntry e{name, m,
                   {{"phi_simplicial", "true"}, {"normal", "true"}, {"seminormal", "true"}}};
    if (n == 3) e.expected["canonical2"] = "(1, 3)";
    return e;
  }
  if (name == "ex3.12.2") {
    AffineMonoid m(2, {{2, 0}, {1, 2}, {0, 2}});
    return CatalogEntry{name, m,
                        {{"phi_simplicial", "true"},
                         {"normal", "false"},
                         {"seminormal", "true"}}};
  }
  if (std::regex_match(name, match, std::regex(R"(ex3\.12\.3\((\d+)\))"))) {
    long long j = std::stoll(match[1]);
    if (j < 3) throw input_error("ex3.12.3 needs j >= 3");
    AffineMonoid m(2, {{2, 0}, {1, j}, {0, 2}});
    CatalogEntry e{name, m,
                   {{"phi_simplicial", "true"}, {"normal", "false"}, {"seminormal", "false"}}};
    e.expected["sn"] = j % 2 ? gens_to_string({{2, 0}, {1, 1}, {0, 2}})
                             : gens_to_string({{2, 0}, {0, 2}, {1, 2}});
    return e;
  }
  if (name == "ex3.12.4") {
    AffineMonoid m(2, {{3, 0}, {1, 2}, {0, 3}});
    CatalogEntry e{name, m,
                   {{"phi_simplicial", "true"}, {"normal", "false"}, {"seminormal", "false"}}};
    e.expected["sn"] = gens_to_string({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    return e;
  }
  throw input_error("unknown catalog name: " + name);
}

std::vector<CatalogEntry> standard_catalog() {
  std::vector<std::string> names = {
      "free(1)",       "free(2)",       "free(3)",       "veronese(2,2)", "veronese(2,3)",
      "veronese(3,2)", "veronese(3,3)", "ex3.9",         "ex3.12.1(2)",   "ex3.12.1(3)",
      "ex3.12.1(4)",   "ex3.12.1(5)",   "ex3.12.1(6)",   "ex3.12.2",      "ex3.12.3(3)",
      "ex3.12.3(4)",   "ex3.12.3(5)",   "ex3.12.3(6)",   "ex3.12.4"};
  std::vector<CatalogEntry> entries;
  for (const auto& n : names) entries.push_back(catalog_entry(n));
  return entries;
}

}  // namespace affmon
