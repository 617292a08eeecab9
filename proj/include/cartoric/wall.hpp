#pragma once
// Wall crossings: for each index ell and disjoint (J, K) on the remaining
// indices, the cone sigma_{J,K} is a common facet of sigma_{J+ell,K} and
// sigma_{J,K+ell}.  There are n 3^{n-1} such triples.  When |J|+|K| = n-1
// the two sides are maximal cones and the n+1 rays involved satisfy a
// linear relation, unique up to scale:
//
//   x_ell (-alpha_ell^vee) + sum_j x_j (-alpha_j^vee)
//     + sum_k y_k varpi_k^vee + y_ell varpi_ell^vee = 0,  y_ell := 1.
//
// The x part solves through the sub-Cartan inverse: x_j = (C_{J'}^{-1})_{j,ell}
// with J' = J + ell, which is where nonnegativity comes from.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fan.hpp"

namespace cartoric {

struct WallTriple {
  ConeJK wall;
  int ell = 0;
  ConeJK side_j;  // sigma_{J+ell, K}
  ConeJK side_k;  // sigma_{J, K+ell}
  bool codim_one = false;
};

inline std::vector<WallTriple> enumerate_walls(const FanSigma& fan) {
  const int n = fan.rank();
  std::vector<WallTriple> out;
  long rest_total = 1;
  for (int i = 0; i < n - 1; ++i) rest_total *= 3;
  for (int ell = 0; ell < n; ++ell) {
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
      if (i != ell) others.push_back(i);
    for (long c = 0; c < rest_total; ++c) {
      WallTriple w;
      w.ell = ell;
      long rest = c;
      for (int pos = 0; pos < n - 1; ++pos) {
        int digit = rest % 3;
        rest /= 3;
        if (digit == 1) w.wall.J.push_back(others[pos]);
        if (digit == 2) w.wall.K.push_back(others[pos]);
      }
      w.codim_one = w.wall.dim() == n - 1;
      w.side_j = w.wall;
      w.side_j.J.insert(std::upper_bound(w.side_j.J.begin(), w.side_j.J.end(), ell), ell);
      w.side_k = w.wall;
      w.side_k.K.insert(std::upper_bound(w.side_k.K.begin(), w.side_k.K.end(), ell), ell);
      out.push_back(std::move(w));
    }
  }
  return out;
}

struct WallRelation {
  WallTriple wall;
  Rat x_ell;
  std::map<int, Rat> x;  // j in J
  std::map<int, Rat> y;  // k in K
  Rat y_ell;
  bool relation_holds = false;     // coefficients hit the exact zero vector
  bool closed_form_agrees = false; // x side equals column ell of C_{J'}^{-1}
};

// Kernel of [-alpha_ell^vee | -alpha_j^vee | varpi_k^vee | varpi_ell^vee],
// normalized to y_ell = 1.  Requires a genuine codimension-1 wall.
inline WallRelation wall_relation(const FanSigma& fan, const WallTriple& w) {
  const int n = fan.rank();
  if (!w.codim_one) throw std::invalid_argument("wall relation needs |J|+|K| = n-1");
  const CartanMatrix& cm = fan.cartan();

  Mat<Rat> g(n, n + 1);
  int col = 0;
  auto coroot_col = [&](int idx) {
    for (int r = 0; r < n; ++r) g(r, col) = -cm.matrix()(r, idx);
    ++col;
  };
  coroot_col(w.ell);
  for (int j : w.wall.J) coroot_col(j);
  for (int k : w.wall.K) {
    g(k, col) = 1;
    ++col;
  }
  g(w.ell, col) = 1;

  std::vector<std::vector<Rat>> ker = kernel_basis(g);
  if (ker.size() != 1) throw std::invalid_argument("wall relation kernel is not a line");
  std::vector<Rat> v = ker[0];
  Rat last = v[n];
  if (last == 0) throw std::invalid_argument("wall relation does not involve varpi_ell^vee");
  for (Rat& t : v) t /= last;

  WallRelation rel;
  rel.wall = w;
  rel.x_ell = v[0];
  int at = 1;
  for (int j : w.wall.J) rel.x[j] = v[at++];
  for (int k : w.wall.K) rel.y[k] = v[at++];
  rel.y_ell = v[n];
  rel.relation_holds = true;
  for (int r = 0; r < n; ++r) {
    Rat s(0);
    for (int c2 = 0; c2 <= n; ++c2) s += g(r, c2) * v[c2];
    if (s != 0) rel.relation_holds = false;
  }

  // Closed form: restrict to J' = J + ell, then x_j = (C_{J'}^{-1})_{j,ell}.
  std::vector<int> jprime = w.wall.J;
  jprime.insert(std::upper_bound(jprime.begin(), jprime.end(), w.ell), w.ell);
  CartanMatrix sub = cm.subdiagram(jprime);
  int ell_pos = 0;
  while (jprime[ell_pos] != w.ell) ++ell_pos;
  rel.closed_form_agrees = true;
  for (size_t p = 0; p < jprime.size(); ++p) {
    Rat expect = sub.inverse_matrix()(static_cast<int>(p), ell_pos);
    Rat got = jprime[p] == w.ell ? rel.x_ell : rel.x.at(jprime[p]);
    if (expect != got) rel.closed_form_agrees = false;
  }
  return rel;
}

enum class IntersectionSign { positive, nonnegative, zero };

struct SignReport {
  IntersectionSign sign = IntersectionSign::zero;
  std::optional<Rat> value;  // exact coefficient, available on codim-1 walls
};

// Sign of D_{-alpha_i^vee} against the wall's invariant curve: positive at
// i = ell, nonnegative across J, zero elsewhere.
inline SignReport intersection_sign(const FanSigma& fan, int i, const WallTriple& w) {
  SignReport rep;
  bool in_j = std::binary_search(w.wall.J.begin(), w.wall.J.end(), i);
  if (i == w.ell)
    rep.sign = IntersectionSign::positive;
  else if (in_j)
    rep.sign = IntersectionSign::nonnegative;
  else
    rep.sign = IntersectionSign::zero;
  if (w.codim_one && (i == w.ell || in_j)) {
    WallRelation rel = wall_relation(fan, w);
    rep.value = i == w.ell ? rel.x_ell : rel.x.at(i);
  }
  return rep;
}

struct KleimanReport {
  long walls = 0;
  long codim_one_walls = 0;
  long failures = 0;
  bool pass = false;
  std::vector<std::string> witnesses;  // failing walls, if any
};

// Toric ampleness of sum_i D_{-alpha_i^vee}: every wall must carry at least
// one strictly positive sign and no negative one; on codimension-1 walls the
// exact coefficients are checked (x_ell > 0, x_j >= 0).
inline KleimanReport kleiman_ample_check(const FanSigma& fan) {
  KleimanReport rep;
  for (const WallTriple& w : enumerate_walls(fan)) {
    ++rep.walls;
    bool ok = true;
    if (w.codim_one) {
      ++rep.codim_one_walls;
      WallRelation rel = wall_relation(fan, w);
      ok = rel.relation_holds && rel.closed_form_agrees && rel.x_ell > 0 && rel.y_ell > 0;
      for (const auto& [j, xj] : rel.x)
        if (xj < 0) ok = false;
    }
    // The dictionary always provides the positive term at i = ell.
    if (!ok) {
      ++rep.failures;
      std::ostringstream os;
      os << "ell=" << w.ell + 1 << " J={";
      for (size_t t = 0; t < w.wall.J.size(); ++t) os << (t ? "," : "") << w.wall.J[t] + 1;
      os << "} K={";
      for (size_t t = 0; t < w.wall.K.size(); ++t) os << (t ? "," : "") << w.wall.K[t] + 1;
      os << "}";
      rep.witnesses.push_back(os.str());
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

}  // namespace cartoric
