#pragma once
// Smith normal form over Z by elementary row/column operations, with explicit
// unimodular transforms: u * a * v = d, diagonal with divisibility chain.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace cartoric {

struct SmithResult {
  Mat<Int> u, d, v;            // u (rows x rows), d (rows x cols), v (cols x cols)
  std::vector<Int> divisors;   // nonzero diagonal entries, d1 | d2 | ...
  int rank = 0;
};

inline SmithResult smith_normal_form(const Mat<Int>& a) {
  const int n = a.rows(), m = a.cols();
  SmithResult res{Mat<Int>::identity(n), a, Mat<Int>::identity(m), {}, 0};
  Mat<Int>& d = res.d;
  Mat<Int>& u = res.u;
  Mat<Int>& v = res.v;

  auto swap_rows = [&](int i1, int i2) {
    for (int j = 0; j < m; ++j) std::swap(d(i1, j), d(i2, j));
    for (int j = 0; j < n; ++j) std::swap(u(i1, j), u(i2, j));
  };
  auto swap_cols = [&](int j1, int j2) {
    for (int i = 0; i < n; ++i) std::swap(d(i, j1), d(i, j2));
    for (int i = 0; i < m; ++i) std::swap(v(i, j1), v(i, j2));
  };
  auto row_sub = [&](int dst, int src, const Int& q) {
    for (int j = 0; j < m; ++j) d(dst, j) -= q * d(src, j);
    for (int j = 0; j < n; ++j) u(dst, j) -= q * u(src, j);
  };
  auto col_sub = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < n; ++i) d(i, dst) -= q * d(i, src);
    for (int i = 0; i < m; ++i) v(i, dst) -= q * v(i, src);
  };
  auto negate_row = [&](int i) {
    for (int j = 0; j < m; ++j) d(i, j) = -d(i, j);
    for (int j = 0; j < n; ++j) u(i, j) = -u(i, j);
  };

  const int steps = std::min(n, m);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Minimal |entry| in the trailing submatrix becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < m; ++j) {
          if (d(i, j) == 0) continue;
          if (pi < 0 || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done;  // trailing submatrix is zero
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        if (q != 0) row_sub(i, t, q);
        if (d(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < m; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        if (q != 0) col_sub(j, t, q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the rest of the submatrix for the divisor chain.
      int bi = -1;
      for (int i = t + 1; i < n && bi < 0; ++i)
        for (int j = t + 1; j < m; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      row_sub(t, bi, Int(-1));  // fold row bi into row t, then re-reduce
    }
    if (d(t, t) < 0) negate_row(t);
  }
done:
  for (int t = 0; t < steps; ++t)
    if (d(t, t) != 0) res.divisors.push_back(d(t, t));
  res.rank = static_cast<int>(res.divisors.size());
  return res;
}

// Z-basis of {x : a x = 0}: columns of v past the rank.
inline std::vector<std::vector<Int>> right_kernel_int(const Mat<Int>& a) {
  SmithResult s = smith_normal_form(a);
  std::vector<std::vector<Int>> basis;
  for (int j = s.rank; j < a.cols(); ++j) basis.push_back(s.v.col(j));
  return basis;
}

// Z-basis of {y : y a = 0}: rows of u past the rank.
inline std::vector<std::vector<Int>> left_kernel_int(const Mat<Int>& a) {
  SmithResult s = smith_normal_form(a);
  std::vector<std::vector<Int>> basis;
  for (int i = s.rank; i < a.rows(); ++i) basis.push_back(s.u.row(i));
  return basis;
}

}  // namespace cartoric
