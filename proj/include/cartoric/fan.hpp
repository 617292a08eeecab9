#pragma once
// Fan built from a finite-type Cartan matrix on the coweight lattice.
// Cones sigma_{J,K} are spanned by {-alpha_j^vee : j in J} and
// {varpi_k^vee : k in K} for disjoint J, K; there are 3^n of them and the
// maximal ones are sigma_J = sigma_{J, I-J}.  All coordinates are in the
// fundamental-coweight basis, where -alpha_j^vee is minus column j of C and
// varpi_k^vee is the unit vector e_k.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "rng.hpp"
#include "snf.hpp"

namespace cartoric {

struct ConeJK {
  std::vector<int> J, K;  // sorted, disjoint
  int dim() const { return static_cast<int>(J.size() + K.size()); }
  bool operator==(const ConeJK& o) const { return J == o.J && K == o.K; }
};

inline std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) s.push_back(i);
  return s;
}

inline std::uint32_t set_to_mask(const std::vector<int>& s) {
  std::uint32_t m = 0;
  for (int i : s) m |= 1u << i;
  return m;
}

struct Ray {
  std::string name;
  std::vector<Rat> coords;
};

class FanSigma {
 public:
  explicit FanSigma(const CartanMatrix& cm) : cm_(cm) {
    const int n = cm_.rank();
    if (n > 30) throw std::length_error("fan enumeration limited to rank 30");
    // Base-3 digit i: 0 = neither, 1 = i in J, 2 = i in K.
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    cones_.reserve(total);
    for (long c = 0; c < total; ++c) {
      ConeJK cone;
      long rest = c;
      for (int i = 0; i < n; ++i) {
        int digit = rest % 3;
        rest /= 3;
        if (digit == 1) cone.J.push_back(i);
        if (digit == 2) cone.K.push_back(i);
      }
      cones_.push_back(std::move(cone));
    }
    max_inv_.resize(1u << n);
    for (std::uint32_t jmask = 0; jmask < (1u << n); ++jmask) {
      Mat<Rat> g = generator_matrix(maximal_cone(jmask));
      std::optional<Mat<Rat>> inv = inverse(g);
      if (!inv) throw std::logic_error("maximal cone generators are not a basis");
      max_inv_[jmask] = *inv;
    }
  }

  const CartanMatrix& cartan() const { return cm_; }
  int rank() const { return cm_.rank(); }
  const std::vector<ConeJK>& cones() const { return cones_; }

  ConeJK maximal_cone(std::uint32_t jmask) const {
    const int n = cm_.rank();
    ConeJK c;
    c.J = mask_to_set(jmask, n);
    c.K = mask_to_set(~jmask & ((1u << n) - 1u), n);
    return c;
  }

  // Rays in a fixed order: -coroot_1..-coroot_n, then coweight_1..coweight_n.
  std::vector<Ray> rays() const {
    std::vector<Ray> rs;
    for (int i = 0; i < cm_.rank(); ++i) {
      std::vector<Rat> v = cm_.matrix().col(i);
      for (Rat& x : v) x = -x;
      rs.push_back({"-coroot_" + std::to_string(i + 1), std::move(v)});
    }
    for (int i = 0; i < cm_.rank(); ++i) {
      std::vector<Rat> e(cm_.rank(), Rat(0));
      e[i] = 1;
      rs.push_back({"coweight_" + std::to_string(i + 1), std::move(e)});
    }
    return rs;
  }

  // Columns: -column_j(C) for j in J ascending, then e_k for k in K ascending.
  Mat<Rat> generator_matrix(const ConeJK& c) const {
    const int n = cm_.rank();
    Mat<Rat> g(n, c.dim());
    int col = 0;
    for (int j : c.J) {
      for (int r = 0; r < n; ++r) g(r, col) = -cm_.matrix()(r, j);
      ++col;
    }
    for (int k : c.K) {
      g(k, col) = 1;
      ++col;
    }
    return g;
  }

  static ConeJK intersect(const ConeJK& a, const ConeJK& b) {
    ConeJK out;
    std::set_intersection(a.J.begin(), a.J.end(), b.J.begin(), b.J.end(),
                          std::back_inserter(out.J));
    std::set_intersection(a.K.begin(), a.K.end(), b.K.begin(), b.K.end(),
                          std::back_inserter(out.K));
    return out;
  }

  // sigma_{J,K} is a face of sigma_{J'} iff its rays are among the maximal
  // cone's rays: J subset J' and K disjoint from J'.
  static bool is_face_of_maximal(const ConeJK& c, std::uint32_t jmask) {
    std::uint32_t jm = set_to_mask(c.J), km = set_to_mask(c.K);
    return (jm & ~jmask) == 0 && (km & jmask) == 0;
  }

  std::vector<std::uint32_t> adjacent_maximal_masks(const ConeJK& c) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t jmask = 0; jmask < (1u << cm_.rank()); ++jmask)
      if (is_face_of_maximal(c, jmask)) out.push_back(jmask);
    return out;
  }

  // Exact membership: generators are linearly independent, so the coefficient
  // vector is unique when it exists.
  bool contains(const ConeJK& c, const std::vector<Rat>& p) const {
    if (c.dim() == cm_.rank()) {
      std::uint32_t jmask = set_to_mask(c.J);
      if (set_to_mask(c.K) == (~jmask & ((1u << cm_.rank()) - 1u))) {
        for (const Rat& x : max_inv_[jmask].apply(p))
          if (x < 0) return false;
        return true;
      }
    }
    Mat<Rat> g = generator_matrix(c);
    std::optional<std::vector<Rat>> x = solve(g, p);
    if (!x) return false;
    if (g.apply(*x) != p) return false;
    for (const Rat& xi : *x)
      if (xi < 0) return false;
    return true;
  }

  std::optional<std::uint32_t> covering_maximal_mask(const std::vector<Rat>& p,
                                                     long excluded_jmask = -1) const {
    for (std::uint32_t jmask = 0; jmask < (1u << cm_.rank()); ++jmask) {
      if (static_cast<long>(jmask) == excluded_jmask) continue;
      bool inside = true;
      for (const Rat& x : max_inv_[jmask].apply(p))
        if (x < 0) {
          inside = false;
          break;
        }
      if (inside) return jmask;
    }
    return std::nullopt;
  }

  std::vector<Int> f_vector() const {
    std::vector<Int> f(cm_.rank() + 1, Int(0));
    for (const ConeJK& c : cones_) f[c.dim()] += 1;
    return f;
  }

  // h via P(t) = sum_d f_d (t-1)^{n-d}; h_k is the coefficient of t^{n-k}.
  std::vector<Int> h_vector() const {
    const int n = cm_.rank();
    std::vector<Int> f = f_vector();
    std::vector<Int> p(n + 1, Int(0));
    for (int d = 0; d <= n; ++d) {
      int m = n - d;
      std::vector<Int> binom(m + 1);  // (t-1)^m = sum_t C(m,t) t^t (-1)^{m-t}
      binom[0] = 1;
      for (int t = 1; t <= m; ++t) binom[t] = binom[t - 1] * (m - t + 1) / t;
      for (int t = 0; t <= m; ++t) {
        Int term = f[d] * binom[t];
        if ((m - t) % 2) term = -term;
        p[t] += term;
      }
    }
    std::vector<Int> h(n + 1);
    for (int k = 0; k <= n; ++k) h[k] = p[n - k];
    return h;
  }

  // Lattice index of the generators inside the saturation of their span.
  Int multiplicity(const ConeJK& c) const {
    Mat<Int> g(cm_.rank(), c.dim());
    Mat<Rat> gq = generator_matrix(c);
    for (int i = 0; i < gq.rows(); ++i)
      for (int j = 0; j < gq.cols(); ++j) g(i, j) = gq(i, j).get_num();
    Int m = 1;
    for (const Int& d : smith_normal_form(g).divisors) m *= d;
    return m;
  }

  // Minimal ray sets spanning no cone, by exhaustion over ray subsets.
  // Rays indexed 0..n-1 (-coroot_i) and n..2n-1 (coweight_i).
  std::vector<std::vector<int>> primitive_collections() const {
    const int n = cm_.rank();
    if (n > 4) throw std::length_error("primitive collection search limited to rank 4");
    auto spans_cone = [n](std::uint32_t rays) {
      std::uint32_t roots = rays & ((1u << n) - 1u), weights = rays >> n;
      return (roots & weights) == 0;  // sigma_{roots,weights} is then a cone
    };
    std::vector<std::vector<int>> out;
    for (std::uint32_t s = 1; s < (1u << (2 * n)); ++s) {
      if (spans_cone(s)) continue;
      bool minimal = true;
      for (int b = 0; b < 2 * n && minimal; ++b)
        if ((s >> b & 1u) && !spans_cone(s & ~(1u << b))) minimal = false;
      if (!minimal) continue;
      std::vector<int> set;
      for (int b = 0; b < 2 * n; ++b)
        if (s >> b & 1u) set.push_back(b);
      out.push_back(std::move(set));
    }
    return out;
  }

 private:
  CartanMatrix cm_;
  std::vector<ConeJK> cones_;
  std::vector<Mat<Rat>> max_inv_;  // indexed by J mask
};

struct CoverageReport {
  long samples = 0;
  long covered = 0;
  bool pass = false;
};

// Completeness by sampling: every point must land in some maximal cone.
// excluded_jmask >= 0 removes one maximal cone, the control that must fail.
inline CoverageReport sample_coverage(const FanSigma& fan, long samples, std::uint64_t seed,
                                      long excluded_jmask = -1) {
  CoverageReport rep;
  rep.samples = samples;
  SeededRng rng(seed);
  for (long s = 0; s < samples; ++s) {
    std::vector<Rat> p = rng.rational_vector(fan.rank());
    if (fan.covering_maximal_mask(p, excluded_jmask)) ++rep.covered;
  }
  rep.pass = rep.covered == rep.samples;
  return rep;
}

// Points of the quotient in homogeneous coordinates: x_i on the -coroot_i
// divisor, y_i on the coweight_i divisor; (x_i, y_i) = (0,0) is excluded.
struct QuotientPoint {
  std::vector<Rat> x, y;
};

inline bool is_valid_cox_point(const QuotientPoint& p) {
  if (p.x.size() != p.y.size()) return false;
  for (size_t i = 0; i < p.x.size(); ++i)
    if (p.x[i] == 0 && p.y[i] == 0) return false;
  return true;
}

// Torus-fixed point of the maximal cone sigma_J: coordinates vanish exactly
// on the cone's own rays, so x_i = 0 iff i in J and y_i = 0 iff i not in J.
inline QuotientPoint fixed_point(int n, const std::vector<int>& J) {
  QuotientPoint p;
  p.x.assign(n, Rat(1));
  p.y.assign(n, Rat(0));
  for (int j : J) {
    p.x.at(j) = 0;
    p.y.at(j) = 1;
  }
  return p;
}

// The quotient torus acts by x_i -> t(varpi_i) x_i, y_i -> t(alpha_i) y_i.
// Writing s_i = t(varpi_i), the y-coordinates scale by prod_j s_j^{c[i][j]}.
// Two valid points are equal in the quotient iff the zero patterns agree and
// the forced/free s system is solvable over the complex units, which holds
// iff every integer left-kernel vector of the free exponent matrix sends the
// residual ratios to 1.
inline bool point_equal_mod_T(const CartanMatrix& cm, const QuotientPoint& p,
                              const QuotientPoint& q) {
  const int n = cm.rank();
  if (!is_valid_cox_point(p) || !is_valid_cox_point(q))
    throw std::invalid_argument("point lies in the excluded locus");
  for (int i = 0; i < n; ++i)
    if ((p.x[i] == 0) != (q.x[i] == 0) || (p.y[i] == 0) != (q.y[i] == 0)) return false;

  std::vector<int> free_idx;
  std::vector<Rat> s(n, Rat(1));
  for (int i = 0; i < n; ++i) {
    if (p.x[i] == 0)
      free_idx.push_back(i);
    else
      s[i] = q.x[i] / p.x[i];
  }
  std::vector<int> rows;
  std::vector<Rat> residual;
  for (int k = 0; k < n; ++k) {
    if (p.y[k] == 0) continue;
    Rat r = q.y[k] / p.y[k];
    for (int j = 0; j < n; ++j) {
      if (p.x[j] == 0) continue;
      r *= pow_rat(s[j], -cm.entry(k, j));
    }
    rows.push_back(k);
    residual.push_back(r);
  }
  Mat<Int> e(static_cast<int>(rows.size()), static_cast<int>(free_idx.size()));
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = 0; b < free_idx.size(); ++b) e(a, b) = cm.entry(rows[a], free_idx[b]);
  for (const std::vector<Int>& z : left_kernel_int(e)) {
    Rat prod(1);
    for (size_t a = 0; a < rows.size(); ++a) prod *= pow_rat(residual[a], z[a].get_si());
    if (prod != 1) return false;
  }
  return true;
}

}  // namespace cartoric
