#pragma once
// Special linear model: SL_{n+1} matrices over exact rationals, the
// strictly-below-subdiagonal membership test for the Peterson variety,
// section values (leading principal minors and adjoint coefficients),
// the map psi into quotient points, signed permutation representatives,
// Kostant's product formula by Bruhat factorization, and the circle
// equivariance laws.  Everything is exact except the optional Newton
// sampler for SL4, which lives in the CLI.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "fan.hpp"
#include "jet.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace cartoric {

// e = sum_k E_{k,k+1}.
template <typename T>
Mat<T> principal_nilpotent(int m) {
  Mat<T> e(m, m);
  for (int k = 0; k + 1 < m; ++k) e(k, k + 1) = T(1);
  return e;
}

template <typename T>
Mat<T> conjugate_nilpotent(const Mat<T>& g) {
  auto inv = inverse(g);
  if (!inv) throw std::invalid_argument("conjugate_nilpotent: singular matrix");
  return *inv * principal_nilpotent<T>(g.rows()) * g;
}

// Leading principal i x i minor, 1 <= i <= m.
template <typename T>
T leading_minor(const Mat<T>& g, int i) {
  std::vector<int> idx(i);
  for (int k = 0; k < i; ++k) idx[k] = k;
  return det(g.submatrix(idx, idx));
}

// -M_{i+1,i} in 1-based indexing, M = g^{-1} e g.
template <typename T>
T q_alpha_from(const Mat<T>& m, int i) {
  return T(0) - m(i, i - 1);
}

// Membership: nothing strictly below the subdiagonal.
template <typename T>
bool strictly_below_subdiagonal_zero(const Mat<T>& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int s = 0; s + 1 < r; ++s)
      if (ScalarTraits<T>::nonzero(m(r, s))) return false;
  return true;
}

class PetersonPoint {
 public:
  explicit PetersonPoint(Mat<Rat> g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols() || g_.rows() < 2)
      throw std::invalid_argument("PetersonPoint: need a square matrix of size >= 2");
    if (det(g_) != 1) throw std::invalid_argument("PetersonPoint: determinant must be 1");
    m_ = conjugate_nilpotent(g_);
  }

  int rank() const { return g_.rows() - 1; }
  const Mat<Rat>& g() const { return g_; }
  const Mat<Rat>& conjugated() const { return m_; }

  bool in_peterson() const { return strictly_below_subdiagonal_zero(m_); }

  // g in U^- B iff elimination never needs a pivot swap.
  bool in_big_cell() const {
    for (int i = 1; i <= g_.rows(); ++i)
      if (leading_minor(g_, i) == 0) return false;
    return true;
  }

  Rat delta(int i) const { return leading_minor(g_, i); }
  Rat q(int i) const { return q_alpha_from(m_, i); }

 private:
  Mat<Rat> g_, m_;
};

// x = minors, y = adjoint coefficients; simultaneous vanishing at one index
// would contradict the section pair being basepoint-free, so it is a hard
// failure rather than a bad sample.
inline QuotientPoint psi(const PetersonPoint& p) {
  if (!p.in_peterson()) throw std::invalid_argument("psi: point is not in the Peterson variety");
  QuotientPoint out;
  for (int i = 1; i <= p.rank(); ++i) {
    out.x.push_back(p.delta(i));
    out.y.push_back(p.q(i));
  }
  if (!is_valid_cox_point(out))
    throw std::logic_error("psi: delta and q vanish simultaneously at one index");
  return out;
}

// Signed reverse permutation: entry (j, m+1-j) = sigma (-1)^{j-1} with
// sigma = +1 for odd m and -1 for even m.  This has determinant 1 and makes
// every q_i equal to 1, fixing the sign convention once.
inline Mat<Rat> w0_dot(int m) {
  Mat<Rat> w(m, m);
  int sigma = m % 2 ? 1 : -1;
  for (int j = 1; j <= m; ++j) w(j - 1, m - j) = Rat(sigma * ((j - 1) % 2 ? -1 : 1));
  return w;
}

// Block diagonal: each maximal run of consecutive indices in J (0-based
// simple roots, sorted) contributes a signed reverse block one larger than
// the run; everything else is the identity.
inline Mat<Rat> wJ_dot(int n, const std::vector<int>& J) {
  Mat<Rat> w = Mat<Rat>::identity(n + 1);
  size_t t = 0;
  while (t < J.size()) {
    size_t u = t;
    while (u + 1 < J.size() && J[u + 1] == J[u] + 1) ++u;
    int start = J[t];
    int len = J[u] - J[t] + 2;
    Mat<Rat> blk = w0_dot(len);
    for (int r = 0; r < len; ++r)
      for (int c = 0; c < len; ++c) w(start + r, start + c) = blk(r, c);
    t = u + 1;
  }
  return w;
}

struct CellSample {
  std::vector<Rat> params;  // SL2: (t); SL3: (a, c)
  PetersonPoint point;
};

// Exact points of the big-cell part of the Peterson variety.  SL2 is the
// full lower unipotent line; SL3 solves the one membership equation, which
// is linear in the (3,1) entry: b = a^2 c / (a + c), valid off a + c = 0.
inline std::vector<CellSample> sample_peterson_cell(int n, int count, std::uint64_t seed) {
  if (n != 1 && n != 2)
    throw std::invalid_argument("exact cell sampling is implemented for ranks 1 and 2");
  SeededRng rng(seed);
  std::vector<CellSample> out;
  for (int s = 0; s < count; ++s) {
    if (n == 1) {
      Rat t = rng.rational(1000, 50);
      Mat<Rat> u = Mat<Rat>::identity(2);
      u(1, 0) = t;
      out.push_back({{t}, PetersonPoint(std::move(u))});
    } else {
      Rat a, c;
      int tries = 0;
      do {
        if (++tries > 1000) throw std::runtime_error("cell sampling: rejection bound exhausted");
        a = rng.rational(1000, 50);
        c = rng.rational(1000, 50);
      } while (a + c == 0);
      Rat b = a * a * c / (a + c);
      Mat<Rat> u = Mat<Rat>::identity(3);
      u(1, 0) = a;
      u(2, 0) = b;
      u(2, 1) = c;
      out.push_back({{a, c}, PetersonPoint(std::move(u))});
    }
  }
  return out;
}

struct LUnitLower {
  bool ok = false;
  Mat<Rat> lower, upper;  // h = lower * upper, lower unit, no pivoting
};

inline LUnitLower lu_unit_lower(const Mat<Rat>& h) {
  const int m = h.rows();
  LUnitLower r;
  r.lower = Mat<Rat>::identity(m);
  r.upper = h;
  for (int c = 0; c < m; ++c) {
    if (r.upper(c, c) == 0) return r;
    for (int i = c + 1; i < m; ++i) {
      if (r.upper(i, c) == 0) continue;
      Rat f = r.upper(i, c) / r.upper(c, c);
      r.lower(i, c) = f;
      for (int j = c; j < m; ++j) r.upper(i, j) -= f * r.upper(c, j);
    }
  }
  r.ok = true;
  return r;
}

enum class KostantStatus { skipped, verified, mismatch };

struct KostantReport {
  KostantStatus status = KostantStatus::skipped;
  std::vector<Rat> delta_prime;  // minors of the U w0 B representative
};

// gB = w0 u^- B with w0^{-1} g = u^- b; the representative in U w0 B is then
// w0 u^-, whose minors delta' satisfy q_i(g) = prod_j (delta'_j)^{-c_{i,j}}.
// Points outside U w0 B (zero pivot) and the codimension-one locus where some
// delta' vanishes are skipped; a computed product that disagrees is a
// falsification, never a skip.
inline KostantReport kostant_check(const PetersonPoint& p) {
  const int m = p.g().rows(), n = p.rank();
  KostantReport rep;
  Mat<Rat> w0 = w0_dot(m);
  auto w0inv = inverse(w0);
  LUnitLower lu = lu_unit_lower(*w0inv * p.g());
  if (!lu.ok) return rep;
  Mat<Rat> uw0 = w0 * lu.lower;
  rep.delta_prime.resize(n);
  for (int j = 1; j <= n; ++j) {
    rep.delta_prime[j - 1] = leading_minor(uw0, j);
    if (rep.delta_prime[j - 1] == 0) return rep;
  }
  CartanMatrix cm("A" + std::to_string(n));
  bool all = true;
  for (int i = 0; i < n; ++i) {
    Rat prod(1);
    for (int j = 0; j < n; ++j) prod *= pow_rat(rep.delta_prime[j], -cm.entry(i, j));
    if (prod != p.q(i + 1)) all = false;
  }
  rep.status = all ? KostantStatus::verified : KostantStatus::mismatch;
  return rep;
}

// diag(z^{a_k}) with a_k = m + 1 - 2k: integer exponents, common difference
// -2, sum 0.  The product of the first i entries is z^{i(m-i)} and every
// simple root evaluates to z^2.
inline Mat<Rat> gamma_s(int m, const Rat& z) {
  if (z == 0) throw std::invalid_argument("gamma_s: z must be nonzero");
  Mat<Rat> g(m, m);
  for (int k = 1; k <= m; ++k) g(k - 1, k - 1) = pow_rat(z, m + 1 - 2 * k);
  return g;
}

// Right action of upper triangular b: minors pick up the product of the
// first i diagonal entries.  Holds for every g.
inline bool delta_right_law(const Mat<Rat>& g, const Mat<Rat>& b, int i) {
  Rat lam(1);
  for (int k = 0; k < i; ++k) lam *= b(k, k);
  return leading_minor(g * b, i) == lam * leading_minor(g, i);
}

// q_i(gb) = (b_ii / b_{i+1,i+1}) q_i(g); needs g in the Peterson variety.
inline bool q_right_law(const Mat<Rat>& g, const Mat<Rat>& b, int i) {
  Rat alpha = b(i - 1, i - 1) / b(i, i);
  return q_alpha_from(conjugate_nilpotent(g * b), i) ==
         alpha * q_alpha_from(conjugate_nilpotent(g), i);
}

// q_i(gamma g) = z^{-2} q_i(g) for every g.
inline bool q_left_scaling_law(const Mat<Rat>& g, const Rat& z, int i) {
  Mat<Rat> gz = gamma_s(g.rows(), z);
  return q_alpha_from(conjugate_nilpotent(gz * g), i) ==
         pow_rat(z, -2) * q_alpha_from(conjugate_nilpotent(g), i);
}

struct EquivarianceReport {
  bool delta_law = false;
  bool q_law = false;
  bool translate_law = false;
  bool pass = false;
};

// Left translation by gamma(z) scales delta_i by z^{i(m-i)} and q_i by
// z^{-2}; on the quotient the image point moves by the torus, concretely
// psi(gamma g) is T-equivalent to (x unchanged; z^{-4} y), realized by
// s_i = z^{i(m-i)} since each Cartan row pairs to exactly 2 against those
// exponents.
inline EquivarianceReport equivariance_check(const PetersonPoint& p, const Rat& z) {
  const int m = p.g().rows(), n = p.rank();
  EquivarianceReport rep;
  PetersonPoint moved(gamma_s(m, z) * p.g());
  rep.delta_law = rep.q_law = true;
  for (int i = 1; i <= n; ++i) {
    if (moved.delta(i) != pow_rat(z, i * (m - i)) * p.delta(i)) rep.delta_law = false;
    if (moved.q(i) != pow_rat(z, -2) * p.q(i)) rep.q_law = false;
  }
  QuotientPoint from = psi(p), to = psi(moved);
  QuotientPoint translate = from;
  for (Rat& y : translate.y) y *= pow_rat(z, -4);
  CartanMatrix cm("A" + std::to_string(n));
  rep.translate_law = point_equal_mod_T(cm, to, translate);
  rep.pass = rep.delta_law && rep.q_law && rep.translate_law;
  return rep;
}

// psi(wJ_dot) must be the torus-fixed point whose coordinates vanish exactly
// on the rays of sigma_J.
inline bool fixed_point_image_check(int n, const std::vector<int>& J) {
  PetersonPoint p(wJ_dot(n, J));
  if (!p.in_peterson()) return false;
  CartanMatrix cm("A" + std::to_string(n));
  return point_equal_mod_T(cm, psi(p), fixed_point(n, J));
}

struct JacobianReport {
  int samples = 0;
  int witnesses = 0;  // samples where the rank equals the rank of the group
  bool inconclusive = true;
};

// Rank of the differential of (q_1..q_n) in the free cell parameters at
// random points, with derivatives carried through the exact pipeline by dual
// numbers.  One full-rank witness settles generic independence.
inline JacobianReport jacobian_rank_check(int n, int count, std::uint64_t seed) {
  if (n != 1 && n != 2)
    throw std::invalid_argument("jacobian check is implemented for ranks 1 and 2");
  SeededRng rng(seed);
  JacobianReport rep;
  for (int s = 0; s < count; ++s) {
    if (n == 1) {
      Jet<1> t = Jet<1>::variable(rng.rational(1000, 50), 0);
      Mat<Jet<1>> u = Mat<Jet<1>>::identity(2);
      u(1, 0) = t;
      Jet<1> q = q_alpha_from(conjugate_nilpotent(u), 1);
      ++rep.samples;
      if (q.d[0] != 0) ++rep.witnesses;
    } else {
      Rat av = rng.rational(1000, 50), cv = rng.rational(1000, 50);
      if (av + cv == 0) continue;  // pole of the chart
      Jet<2> a = Jet<2>::variable(av, 0), c = Jet<2>::variable(cv, 1);
      Jet<2> b = a * a * c / (a + c);
      Mat<Jet<2>> u = Mat<Jet<2>>::identity(3);
      u(1, 0) = a;
      u(2, 0) = b;
      u(2, 1) = c;
      Mat<Jet<2>> m = conjugate_nilpotent(u);
      Mat<Rat> jac(2, 2);
      for (int i = 1; i <= 2; ++i) {
        Jet<2> q = q_alpha_from(m, i);
        jac(i - 1, 0) = q.d[0];
        jac(i - 1, 1) = q.d[1];
      }
      ++rep.samples;
      if (rank(jac) == 2) ++rep.witnesses;
    }
  }
  rep.inconclusive = rep.witnesses == 0;
  return rep;
}

// Univariate helpers (ascending coefficients) for the exploratory fiber count.
inline std::vector<Rat> upoly_trim(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int upoly_degree(const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; }

inline std::vector<Rat> upoly_derivative(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * p[k]);
  return upoly_trim(std::move(d));
}

inline std::vector<Rat> upoly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  a = upoly_trim(std::move(a));
  if (b.empty()) throw std::invalid_argument("upoly_mod: zero divisor");
  while (a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a = upoly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

inline std::vector<Rat> upoly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = upoly_trim(std::move(a));
  b = upoly_trim(std::move(b));
  while (!b.empty()) {
    std::vector<Rat> r = upoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& x : a) x /= lead;
  }
  return a;
}

// Distinct complex roots = degree of the squarefree part.
inline int upoly_distinct_roots(const std::vector<Rat>& p) {
  std::vector<Rat> q = upoly_trim(p);
  if (q.empty()) throw std::invalid_argument("upoly_distinct_roots: zero polynomial");
  std::vector<Rat> g = upoly_gcd(q, upoly_derivative(q));
  return upoly_degree(q) - upoly_degree(g);
}

struct FiberProbe {
  int equation_degree = 0;
  int distinct_solutions = 0;
  long reference_count = 0;  // (n+1)^n, printed for comparison only
};

// Solve q = const over the big cell: rank 1 gives t^2 = q1; rank 2
// eliminates c and leaves (a^3 - q1 a)^3 - q1^2 q2 a^3 = 0.
inline FiberProbe fiber_probe(int n, const Rat& q1, const Rat& q2) {
  FiberProbe fp;
  long ref = 1;
  for (int k = 0; k < n; ++k) ref *= n + 1;
  fp.reference_count = ref;
  if (n == 1) {
    std::vector<Rat> p{-q1, Rat(0), Rat(1)};
    fp.equation_degree = 2;
    fp.distinct_solutions = upoly_distinct_roots(p);
  } else if (n == 2) {
    if (q1 == 0) throw std::invalid_argument("fiber_probe: q1 must be nonzero in rank 2");
    std::vector<Rat> p(10, Rat(0));
    p[9] = 1;
    p[7] = Rat(-3) * q1;
    p[5] = Rat(3) * q1 * q1;
    p[3] = -(q1 * q1 * q1 + q1 * q1 * q2);
    fp.equation_degree = 9;
    fp.distinct_solutions = upoly_distinct_roots(p);
  } else {
    throw std::invalid_argument("fiber probe is implemented for ranks 1 and 2");
  }
  return fp;
}

}  // namespace cartoric
