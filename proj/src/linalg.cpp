#include "linalg.hpp"

#include <algorithm>

namespace germcalc {

QMat rref(QMat m) {
  if (m.empty()) return m;
  const size_t cols = m.front().size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational lead = m[row][col];
    for (auto& v : m[row]) v /= lead;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  m.resize(row);  // drop zero rows
  return m;
}

int rank_q(const QMat& m) { return static_cast<int>(rref(m).size()); }

QMat span_basis(const QMat& rows) { return rref(rows); }

QMat annihilator(const QMat& rows, int ambient_dim) {
  // Solve rows * v = 0 by RREF with free-variable back substitution.
  QMat r = rref(rows);
  std::vector<int> pivot_col(r.size(), -1);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (size_t i = 0; i < r.size(); ++i) {
    for (int c = 0; c < ambient_dim; ++c)
      if (r[i][c] != 0) {
        pivot_col[i] = c;
        is_pivot[c] = true;
        break;
      }
  }
  QMat basis;
  for (int free = 0; free < ambient_dim; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ambient_dim, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < r.size(); ++i)
      if (pivot_col[i] >= 0) v[pivot_col[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat subspace_sum(const QMat& a, const QMat& b, int ambient_dim) {
  QMat all = a;
  all.insert(all.end(), b.begin(), b.end());
  if (all.empty()) all.emplace_back(ambient_dim, Rational(0));
  return span_basis(all);
}

QMat subspace_intersection(const QMat& a, const QMat& b, int ambient_dim) {
  // ann(ann(a) + ann(b)); the standard dot product is nondegenerate over Q.
  QMat anns = subspace_sum(annihilator(a, ambient_dim), annihilator(b, ambient_dim),
                           ambient_dim);
  return annihilator(anns, ambient_dim);
}

bool subspace_equal(const QMat& a, const QMat& b, int ambient_dim) {
  (void)ambient_dim;
  return span_basis(a) == span_basis(b);
}

bool subspace_contains(const QMat& outer, const QMat& inner, int ambient_dim) {
  QMat sum = subspace_sum(outer, inner, ambient_dim);
  return static_cast<int>(sum.size()) == rank_q(outer);
}

}  // namespace germcalc
