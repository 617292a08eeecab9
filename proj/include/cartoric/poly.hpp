#pragma once
// Exact multivariate polynomials over Q with graded lexicographic order.
// Variable 0 is the largest; ties in total degree break lexicographically.
// Enough Groebner machinery for zero-dimensional homogeneous quotients:
// Buchberger with the coprime-pair criterion, full normal forms, reduced
// bases with monic leading terms.

#include <map>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cartoric {

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline bool graded_lex_greater(const Mono& a, const Mono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const { return graded_lex_greater(a, b); }
};

struct Poly {
  std::map<Mono, Rat, MonoGreater> terms;  // begin() is the leading term

  bool is_zero() const { return terms.empty(); }
  const Mono& leading_mono() const {
    if (terms.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms.begin()->first;
  }
  const Rat& leading_coeff() const {
    if (terms.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms.begin()->second;
  }
  int degree() const { return terms.empty() ? -1 : mono_degree(terms.begin()->first); }
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

inline void poly_add_term(Poly& p, const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = p.terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

inline Poly poly_const(int nvars, const Rat& c) {
  Poly p;
  poly_add_term(p, Mono(nvars, 0), c);
  return p;
}

inline Poly poly_var(int nvars, int i) {
  Poly p;
  Mono m(nvars, 0);
  m.at(i) = 1;
  poly_add_term(p, m, Rat(1));
  return p;
}

inline Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms) poly_add_term(r, m, c);
  return r;
}

inline Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms) poly_add_term(r, m, -c);
  return r;
}

inline Poly operator*(const Rat& c, const Poly& p) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : p.terms) r.terms.emplace(m, c * k);
  return r;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

inline Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) poly_add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_quotient(const Mono& b, const Mono& a) {
  Mono m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = b[i] - a[i];
  return m;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] > b[i] ? a[i] : b[i];
  return m;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Full reduction: every term of the result avoids all leading monomials.
inline Poly normal_form(Poly p, const std::vector<Poly>& basis) {
  Poly rem;
  while (!p.is_zero()) {
    bool reduced = false;
    const Mono lead = p.leading_mono();
    const Rat coeff = p.leading_coeff();
    for (const Poly& g : basis) {
      if (g.is_zero() || !mono_divides(g.leading_mono(), lead)) continue;
      Mono q = mono_quotient(lead, g.leading_mono());
      Rat f = coeff / g.leading_coeff();
      for (const auto& [m, c] : g.terms) poly_add_term(p, mono_mul(q, m), -f * c);
      reduced = true;
      break;
    }
    if (!reduced) {
      poly_add_term(rem, lead, coeff);
      p.terms.erase(p.terms.begin());
    }
  }
  return rem;
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  Mono l = mono_lcm(f.leading_mono(), g.leading_mono());
  Poly a, b;
  poly_add_term(a, mono_quotient(l, f.leading_mono()), Rat(1) / f.leading_coeff());
  poly_add_term(b, mono_quotient(l, g.leading_mono()), Rat(1) / g.leading_coeff());
  return a * f - b * g;
}

// Reduced Groebner basis: pairwise-reduced, monic leading coefficients,
// deterministic processing order.
inline std::vector<Poly> groebner_basis(std::vector<Poly> gens) {
  std::vector<Poly> g;
  for (Poly& p : gens)
    if (!p.is_zero()) g.push_back(std::move(p));
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  for (size_t at = 0; at < pairs.size(); ++at) {
    auto [i, j] = pairs[at];
    if (mono_coprime(g[i].leading_mono(), g[j].leading_mono())) continue;
    Poly r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    for (size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
    g.push_back(std::move(r));
  }
  // Minimalize, then fully reduce each element against the others.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(g[j].leading_mono(), g[i].leading_mono())) continue;
      if (g[j].leading_mono() == g[i].leading_mono() && j > i) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normal_form(minimal[i], others);
    reduced[i] = Rat(1) / r.leading_coeff() * r;
  }
  return reduced;
}

inline void enumerate_monomials(int nvars, int degree, Mono& cur, int at,
                                std::vector<Mono>& out) {
  if (at == nvars - 1) {
    cur[at] = degree;
    out.push_back(cur);
    cur[at] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[at] = e;
    enumerate_monomials(nvars, degree - e, cur, at + 1, out);
  }
  cur[at] = 0;
}

// All monomials of the given total degree, descending graded-lex.
inline std::vector<Mono> monomials_of_degree(int nvars, int degree) {
  std::vector<Mono> out;
  Mono cur(nvars, 0);
  if (nvars == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  enumerate_monomials(nvars, degree, cur, 0, out);
  return out;
}

}  // namespace cartoric
