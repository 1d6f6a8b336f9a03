// Benchmark: parallel vs serial degree-bounded lattice point enumeration.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "affmon/catalog.hpp"
#include "affmon/closures.hpp"
#include "affmon/enumerate.hpp"

namespace {

template <typename F>
double time_it(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  long long bound = argc > 1 ? std::atoll(argv[1]) : 60;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  auto m = affmon::catalog_entry("ex3.9").monoid;
  auto cone = affmon::cone_of(m);
  auto pred = [&](const affmon::ExpVec& v) { return affmon::cone_contains(cone, v, true); };

  std::size_t count = 0;
  double best_serial = 1e300, best_parallel = 1e300;
  for (int i = 0; i < repeats; ++i) {
    std::vector<affmon::ExpVec> serial_pts, parallel_pts;
    best_serial = std::min(best_serial, time_it([&] {
      serial_pts = affmon::enumerate_points_serial(m.ambient_rank(), bound, pred);
    }));
    best_parallel = std::min(best_parallel, time_it([&] {
      parallel_pts = affmon::enumerate_points(m.ambient_rank(), bound, pred);
    }));
    if (serial_pts != parallel_pts) {
      std::cerr << "MISMATCH between serial and parallel enumeration\n";
      return 1;
    }
    count = serial_pts.size();
  }

  std::cout << "interior points of cone(ex3.9), degree <= " << bound << ": " << count << "\n";
  std::cout << "serial:   " << best_serial << " s\n";
  std::cout << "parallel: " << best_parallel << " s\n";
  std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
  return 0;
}
