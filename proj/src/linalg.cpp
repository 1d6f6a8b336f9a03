#include "affmon/linalg.hpp"

#include <cassert>

namespace affmon {

namespace {

// Row-reduces in place, returns pivot column of each reduced row.
std::vector<int> gauss(QMat& m, int ncols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    mpq_class inv = 1 / m[row][col];
    for (int j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (int j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row, QVec(ncols, 0));
  return pivots;
}

QMat to_qmat(const std::vector<ExpVec>& rows, int ncols) {
  QMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    assert((int)r.size() == ncols);
    QVec q(ncols);
    for (int j = 0; j < ncols; ++j) q[j] = (long)r[j];
    m.push_back(std::move(q));
  }
  return m;
}

ExpVec clear_denominators(const QVec& q) {
  mpz_class lcm = 1;
  for (const auto& x : q) lcm = lcm / gcd(lcm, x.get_den()) * x.get_den();
  ExpVec v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_class num = q[i].get_num() * (lcm / q[i].get_den());
    v[i] = num.get_si();
  }
  return primitive(v);
}

}  // namespace

int int_rank(const std::vector<ExpVec>& rows, int ncols) {
  QMat m = to_qmat(rows, ncols);
  return (int)gauss(m, ncols).size();
}

std::vector<ExpVec> integer_kernel(const std::vector<ExpVec>& rows, int ncols) {
  QMat m = to_qmat(rows, ncols);
  std::vector<int> pivots = gauss(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<ExpVec> basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec n(ncols, 0);
    n[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) n[pivots[i]] = -m[i][free_col];
    basis.push_back(clear_denominators(n));
  }
  return basis;
}

std::optional<QVec> solve_combination(const std::vector<ExpVec>& rows, const ExpVec& target) {
  // Solve A^T q = target where A rows are the given vectors.
  int ncols = (int)target.size();
  int nvars = (int)rows.size();
  QMat m(ncols, QVec(nvars + 1, 0));
  for (int i = 0; i < ncols; ++i) {
    for (int k = 0; k < nvars; ++k) m[i][k] = (long)rows[k][i];
    m[i][nvars] = (long)target[i];
  }
  std::vector<int> pivots = gauss(m, nvars + 1);
  QVec sol(nvars, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == nvars) return std::nullopt;  // inconsistent
    sol[pivots[i]] = m[i][nvars];
  }
  return sol;
}

}  // namespace affmon
