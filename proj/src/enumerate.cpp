#include "affmon/enumerate.hpp"

#include <algorithm>

namespace affmon {

namespace {

void rec_simplex(ExpVec& cur, int pos, long long budget, const PointPredicate& pred,
                 std::vector<ExpVec>& out) {
  if (pos == (int)cur.size()) {
    if (pred(cur)) out.push_back(cur);
    return;
  }
  for (long long v = 0; v <= budget; ++v) {
    cur[pos] = v;
    rec_simplex(cur, pos + 1, budget - v, pred, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<ExpVec> enumerate_points_serial(int rank, long long degree_bound,
                                            const PointPredicate& pred) {
  std::vector<ExpVec> out;
  if (rank <= 0 || degree_bound < 0) return out;
  ExpVec cur(rank, 0);
  rec_simplex(cur, 0, degree_bound, pred, out);
  std::sort(out.begin(), out.end(), LowerLess{});
  return out;
}

std::vector<ExpVec> enumerate_points(int rank, long long degree_bound,
                                     const PointPredicate& pred) {
  if (rank <= 0 || degree_bound < 0) return {};
  std::vector<std::vector<ExpVec>> slices(degree_bound + 1);
#pragma omp parallel for schedule(dynamic)
  for (long long first = 0; first <= degree_bound; ++first) {
    ExpVec cur(rank, 0);
    cur[0] = first;
    rec_simplex(cur, 1, degree_bound - first, pred, slices[first]);
  }
  std::vector<ExpVec> out;
  for (auto& s : slices) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end(), LowerLess{});
  return out;
}

std::vector<ExpVec> enumerate_box(const ExpVec& lo, const ExpVec& hi,
                                  const PointPredicate& pred) {
  std::vector<ExpVec> out;
  int rank = (int)lo.size();
  ExpVec cur(rank, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rank) {
      if (pred(cur)) out.push_back(cur);
      return;
    }
    for (long long v = lo[pos]; v <= hi[pos]; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), LowerLess{});
  return out;
}

}  // namespace affmon
