#pragma once
// Independent check of the cone intersection formula.  Each simplicial cone
// with generator matrix G is rewritten in H-form: span membership E p = 0
// (E = left kernel of G) plus coefficient positivity F p >= 0 with
// F = (G^T G)^{-1} G^T, so F G = Id.  Stacking both cones' systems and
// restricting to the common span, the extreme rays of {y : A y >= 0} are
// recovered by exhausting row subsets whose kernel is one-dimensional.
// Exponential in the number of rays, hence the rank guard.

#include <set>
#include <stdexcept>
#include <vector>

#include "fan.hpp"

namespace cartoric {

// Primitive integer vector in the same direction (no sign flip).
inline std::vector<Int> primitive_integer_direction(const std::vector<Rat>& v) {
  Int l(1);
  for (const Rat& x : v) l = lcm_int(l, x.get_den());
  std::vector<Int> w;
  Int g(0);
  for (const Rat& x : v) {
    Rat s = x * Rat(l);
    w.push_back(s.get_num());
    g = gcd_int(g, s.get_num());
  }
  if (g == 0) throw std::invalid_argument("zero vector has no direction");
  for (Int& x : w) x /= g;
  return w;
}

namespace detail {

struct HForm {
  Mat<Rat> equalities;    // rows span the orthogonal complement of span(G)
  Mat<Rat> inequalities;  // F with F G = Id
};

inline HForm h_form(const Mat<Rat>& g) {
  HForm h;
  std::vector<std::vector<Rat>> left = kernel_basis(g.transpose());
  h.equalities = Mat<Rat>(static_cast<int>(left.size()), g.rows());
  for (size_t r = 0; r < left.size(); ++r)
    for (int c = 0; c < g.rows(); ++c) h.equalities(static_cast<int>(r), c) = left[r][c];
  Mat<Rat> gram = g.transpose() * g;
  std::optional<Mat<Rat>> gram_inv = inverse(gram);
  if (!gram_inv) throw std::logic_error("cone generators are not independent");
  h.inequalities = *gram_inv * g.transpose();
  return h;
}

inline Mat<Rat> stack_rows(const Mat<Rat>& a, const Mat<Rat>& b) {
  Mat<Rat> s(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
  return s;
}

}  // namespace detail

// Extreme rays of the intersection, as primitive integer directions.
inline std::set<std::vector<Int>> intersection_rays_oracle(const FanSigma& fan,
                                                           const ConeJK& a, const ConeJK& b) {
  const int n = fan.rank();
  if (n > 4) throw std::length_error("intersection oracle limited to rank 4");
  detail::HForm ha = detail::h_form(fan.generator_matrix(a));
  detail::HForm hb = detail::h_form(fan.generator_matrix(b));

  Mat<Rat> eq = detail::stack_rows(ha.equalities, hb.equalities);
  if (eq.rows() == 0) eq = Mat<Rat>(0, n);
  std::vector<std::vector<Rat>> nb = kernel_basis(eq);
  const int m = static_cast<int>(nb.size());
  Mat<Rat> basis(n, m);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < n; ++r) basis(r, c) = nb[c][r];

  Mat<Rat> ineq = detail::stack_rows(ha.inequalities, hb.inequalities) * basis;
  const int rows = ineq.rows();

  std::set<std::vector<Int>> rays;
  auto feasible = [&](const std::vector<Rat>& y) {
    for (int r = 0; r < rows; ++r) {
      Rat s(0);
      for (int c = 0; c < m; ++c) s += ineq(r, c) * y[c];
      if (s < 0) return false;
    }
    return true;
  };
  for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
    int cnt = 0;
    for (int r = 0; r < rows; ++r) cnt += mask >> r & 1u;
    Mat<Rat> sub(cnt, m);
    int at = 0;
    for (int r = 0; r < rows; ++r) {
      if (!(mask >> r & 1u)) continue;
      for (int c = 0; c < m; ++c) sub(at, c) = ineq(r, c);
      ++at;
    }
    std::vector<std::vector<Rat>> ker = kernel_basis(sub);
    if (ker.size() != 1) continue;
    std::vector<Rat> y = ker[0];
    if (!feasible(y)) {
      for (Rat& v : y) v = -v;
      if (!feasible(y)) continue;
    }
    rays.insert(primitive_integer_direction(basis.apply(y)));
  }
  return rays;
}

struct ConePairCheck {
  ConeJK formula_cone;
  std::set<std::vector<Int>> formula_rays, oracle_rays;
  bool agree = false;
};

inline ConePairCheck compare_intersection(const FanSigma& fan, const ConeJK& a,
                                          const ConeJK& b) {
  ConePairCheck out;
  out.formula_cone = FanSigma::intersect(a, b);
  Mat<Rat> g = fan.generator_matrix(out.formula_cone);
  for (int c = 0; c < g.cols(); ++c) out.formula_rays.insert(primitive_integer_direction(g.col(c)));
  out.oracle_rays = intersection_rays_oracle(fan, a, b);
  out.agree = out.formula_rays == out.oracle_rays;
  return out;
}

}  // namespace cartoric
