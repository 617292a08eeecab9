#pragma once
// The three presentations of the rational cohomology ring and the degree-2
// localization bookkeeping.
//
//   R_xy = Q[Y_1..Y_n, X_1..X_n] / (X_i Y_i, Y_i - sum_j c_{i,j} X_j)
//   R_x  = Q[X_1..X_n] / (X_i sum_j c_{i,j} X_j)
//
// Y variables precede X in the order so the linear relations eliminate them.
// Degrees are variable degrees; cohomological degree is twice that.
// Graded dimensions are computed twice, by Groebner standard monomials and
// by per-degree row reduction straight from the relations; both must agree
// and match the fan's h-vector.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fan.hpp"
#include "poly.hpp"
#include "weyl.hpp"

namespace cartoric {

class GradedQuotientRing {
 public:
  GradedQuotientRing(std::vector<std::string> names, std::vector<Poly> relations)
      : names_(std::move(names)), relations_(std::move(relations)) {
    for (const Poly& r : relations_) {
      if (r.is_zero()) throw std::invalid_argument("zero relation");
      int d = r.degree();
      for (const auto& [m, c] : r.terms)
        if (mono_degree(m) != d) throw std::invalid_argument("relations must be homogeneous");
    }
    gb_ = groebner_basis(relations_);
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Poly>& groebner() const { return gb_; }
  Poly var(int i) const { return poly_var(nvars(), i); }
  Poly normal_form(const Poly& p) const { return cartoric::normal_form(p, gb_); }

  // Monomials untouched by any Groebner leading term.
  std::vector<Int> dims_by_standard_monomials(int top_degree) const {
    std::vector<Int> dims;
    for (int d = 0; d <= top_degree; ++d) {
      Int count(0);
      for (const Mono& m : monomials_of_degree(nvars(), d)) {
        bool standard = true;
        for (const Poly& g : gb_)
          if (mono_divides(g.leading_mono(), m)) {
            standard = false;
            break;
          }
        if (standard) count += 1;
      }
      dims.push_back(count);
    }
    return dims;
  }

  // Rank of {m * r} per degree, straight from the relations; no Groebner
  // data.  Degree-1 relations are first solved by plain row reduction and
  // substituted into the rest, shrinking the variable count before the
  // per-degree ranks.
  std::vector<Int> dims_by_row_reduction(int top_degree) const {
    std::vector<Poly> linear, higher;
    for (const Poly& r : relations_) (r.degree() == 1 ? linear : higher).push_back(r);

    Mat<Rat> lin(static_cast<int>(linear.size()), nvars());
    for (size_t r = 0; r < linear.size(); ++r)
      for (const auto& [mono, coeff] : linear[r].terms)
        for (int v = 0; v < nvars(); ++v)
          if (mono[v] == 1) lin(static_cast<int>(r), v) = coeff;
    std::vector<int> pivots = rref(lin);
    std::vector<bool> is_pivot(nvars(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_vars;
    for (int v = 0; v < nvars(); ++v)
      if (!is_pivot[v]) free_vars.push_back(v);
    const int nfree = static_cast<int>(free_vars.size());

    // Image of each original variable in the free subring.
    std::vector<Poly> image(nvars());
    for (int t = 0; t < nfree; ++t) image[free_vars[t]] = poly_var(nfree, t);
    for (size_t r = 0; r < pivots.size(); ++r) {
      Poly p;
      for (int t = 0; t < nfree; ++t)
        p = p - lin(static_cast<int>(r), free_vars[t]) * poly_var(nfree, t);
      image[pivots[r]] = std::move(p);
    }
    std::vector<Poly> reduced;
    for (const Poly& h : higher) {
      Poly out;
      for (const auto& [mono, coeff] : h.terms) {
        Poly term = poly_const(nfree, coeff);
        for (int v = 0; v < nvars(); ++v)
          for (int e = 0; e < mono[v]; ++e) term = term * image[v];
        out = out + term;
      }
      if (!out.is_zero()) reduced.push_back(std::move(out));
    }

    std::vector<Int> dims;
    for (int d = 0; d <= top_degree; ++d) {
      std::vector<Mono> basis = monomials_of_degree(nfree, d);
      std::map<Mono, int, MonoGreater> col;
      for (size_t c = 0; c < basis.size(); ++c) col[basis[c]] = static_cast<int>(c);
      std::vector<Poly> rows;
      for (const Poly& r : reduced) {
        int md = d - r.degree();
        if (md < 0) continue;
        for (const Mono& m : monomials_of_degree(nfree, md)) {
          Poly p;
          for (const auto& [mono, coeff] : r.terms) poly_add_term(p, mono_mul(m, mono), coeff);
          rows.push_back(std::move(p));
        }
      }
      Mat<Rat> a(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
      for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [mono, coeff] : rows[r].terms) a(static_cast<int>(r), col.at(mono)) = coeff;
      dims.push_back(Int(static_cast<long>(basis.size()) - rank(a)));
    }
    return dims;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Poly> relations_;
  std::vector<Poly> gb_;
};

// Q[Y,X]/(X_i Y_i, Y_i - sum_j c_{i,j} X_j); variable i is Y_{i+1}, variable
// n+i is X_{i+1}.
inline GradedQuotientRing presentation_xy(const CartanMatrix& cm) {
  const int n = cm.rank();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  std::vector<Poly> rels;
  for (int i = 0; i < n; ++i) {
    Poly xy;
    Mono m(2 * n, 0);
    m[i] = 1;
    m[n + i] = 1;
    poly_add_term(xy, m, Rat(1));
    rels.push_back(xy);
  }
  for (int i = 0; i < n; ++i) {
    Poly lin = poly_var(2 * n, i);
    for (int j = 0; j < n; ++j)
      lin = lin - cm.matrix()(i, j) * poly_var(2 * n, n + j);
    rels.push_back(lin);
  }
  return GradedQuotientRing(std::move(names), std::move(rels));
}

inline Poly cartan_linear_form(const CartanMatrix& cm, int i) {
  const int n = cm.rank();
  Poly a;
  for (int j = 0; j < n; ++j) a = a + cm.matrix()(i, j) * poly_var(n, j);
  return a;
}

// Q[X]/(X_i sum_j c_{i,j} X_j).
inline GradedQuotientRing presentation_x(const CartanMatrix& cm) {
  const int n = cm.rank();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  std::vector<Poly> rels;
  for (int i = 0; i < n; ++i) rels.push_back(poly_var(n, i) * cartan_linear_form(cm, i));
  return GradedQuotientRing(std::move(names), std::move(rels));
}

struct GradedDimensions {
  std::vector<Int> by_groebner, by_rows;
  bool routes_agree = false;
  Int total = 0;
};

inline GradedDimensions graded_dimensions(const GradedQuotientRing& r, int top_degree) {
  GradedDimensions g;
  g.by_groebner = r.dims_by_standard_monomials(top_degree);
  g.by_rows = r.dims_by_row_reduction(top_degree);
  g.routes_agree = g.by_groebner == g.by_rows;
  for (const Int& d : g.by_groebner) g.total += d;
  return g;
}

// Substitute Y_i -> sum_j c_{i,j} X_j, sending R_xy polynomials into R_x.
inline Poly substitute_y(const CartanMatrix& cm, const Poly& p) {
  const int n = cm.rank();
  Poly out;
  for (const auto& [mono, coeff] : p.terms) {
    Poly term = poly_const(n, coeff);
    for (int i = 0; i < n; ++i) {
      Poly factor = cartan_linear_form(cm, i);
      for (int e = 0; e < mono[i]; ++e) term = term * factor;
    }
    for (int i = 0; i < n; ++i) {
      Mono xs(n, 0);
      xs[i] = mono[n + i];
      Poly xpart;
      poly_add_term(xpart, xs, Rat(1));
      term = term * xpart;
    }
    out = out + term;
  }
  return out;
}

struct EliminationReport {
  bool dims_agree = false;
  bool relations_map_to_zero = false;
  std::vector<Int> dims_xy, dims_x;
  bool pass = false;
};

inline EliminationReport eliminate_y(const CartanMatrix& cm, const GradedQuotientRing& rxy,
                                     const GradedQuotientRing& rx) {
  const int n = cm.rank();
  EliminationReport rep;
  rep.dims_xy = graded_dimensions(rxy, n).by_groebner;
  rep.dims_x = graded_dimensions(rx, n).by_groebner;
  rep.dims_agree = rep.dims_xy == rep.dims_x;
  rep.relations_map_to_zero = true;
  for (const Poly& r : rxy.relations())
    if (!rx.normal_form(substitute_y(cm, r)).is_zero()) rep.relations_map_to_zero = false;
  rep.pass = rep.dims_agree && rep.relations_map_to_zero;
  return rep;
}

// Euler-class vanishing: X_i times its Cartan linear form dies in R_x.
inline bool vanishing_check(const GradedQuotientRing& rx, const CartanMatrix& cm, int i) {
  return rx.normal_form(poly_var(cm.rank(), i) * cartan_linear_form(cm, i)).is_zero();
}

// Restriction of the ray's divisor class to the fixed point of sigma_J,
// in simple-root coordinates.  Rays 0..n-1 are -coroot_(r+1), rays n..2n-1
// are coweight_(r-n+1).  Zero when the divisor misses the fixed point; the
// dual-basis row of the generator matrix inverse otherwise (rows of G^{-1}
// pair against coweight coordinates, which is the simple-root pairing).
inline std::vector<Rat> equivariant_restriction(const FanSigma& fan, const std::vector<int>& J,
                                                int ray_index) {
  const int n = fan.rank();
  if (ray_index < 0 || ray_index >= 2 * n) throw std::out_of_range("not a ray of the fan");
  ConeJK sigma = fan.maximal_cone(set_to_mask(J));
  int pos = -1;
  if (ray_index < n) {
    for (size_t t = 0; t < sigma.J.size(); ++t)
      if (sigma.J[t] == ray_index) pos = static_cast<int>(t);
  } else {
    for (size_t t = 0; t < sigma.K.size(); ++t)
      if (sigma.K[t] == ray_index - n) pos = static_cast<int>(sigma.J.size() + t);
  }
  if (pos < 0) return std::vector<Rat>(n, Rat(0));
  std::optional<Mat<Rat>> inv = inverse(fan.generator_matrix(sigma));
  if (!inv) throw std::logic_error("maximal cone generators are not a basis");
  return inv->row(pos);
}

struct MnConstants {
  Rat m, n;
  bool consistent = false;
  long equations_checked = 0;
};

// Constants in the fixed-point comparison of the two circle-equivariant
// classes.  The restriction of the coweight_i divisor class at sigma_J pushes
// to -2 * (coordinate sum) on the circle side; the line-bundle side
// contributes -height(w_J alpha_i).  Solving at J = empty and J = full gives
// (m, n) = (1, -1); every other J must then agree.  jI_factor scales the
// J = full line-bundle value and exists as a negative control (any value
// other than 1 breaks the web at rank >= 2).
inline MnConstants solve_mn_constants(const FanSigma& fan, const WeylGroup& weyl, int i,
                                      const Rat& jI_factor = Rat(1)) {
  const int n = fan.rank();
  auto restriction_sum = [&](const std::vector<int>& J) {
    Rat s(0);
    for (const Rat& a : equivariant_restriction(fan, J, n + i)) s += a;
    return s;
  };
  auto height_wj_alpha = [&](const std::vector<int>& J) {
    int wj = weyl.longest_element(J);
    return WeylGroup::height(weyl.act_on_root_coords(wj, weyl.simple_root_coords(i)));
  };

  MnConstants out;
  // J = full: 0 = jI_factor * (-height(w_I alpha_i)) + n_i.
  std::vector<int> full(n);
  for (int t = 0; t < n; ++t) full[t] = t;
  out.n = jI_factor * height_wj_alpha(full);
  // J = empty: m_i * (-2 * S_i(empty)) = -height(alpha_i) + n_i.
  Rat s0 = restriction_sum({});
  if (s0 == 0) throw std::logic_error("degenerate restriction at the empty cone");
  out.m = (Rat(-1) + out.n) / (Rat(-2) * s0);

  out.consistent = true;
  for (std::uint32_t jmask = 0; jmask < (1u << n); ++jmask) {
    std::vector<int> J = mask_to_set(jmask, n);
    bool i_in_j = (jmask >> i) & 1u;
    Rat lhs = i_in_j ? Rat(0) : out.m * Rat(-2) * restriction_sum(J);
    Rat jfac = jmask == (1u << n) - 1 ? jI_factor : Rat(1);
    Rat rhs = jfac * (-height_wj_alpha(J)) + out.n;
    if (lhs != rhs) out.consistent = false;
    ++out.equations_checked;
  }
  return out;
}

struct DictionaryEntry {
  int index = 0;  // 1-based in reports
  std::string x_alias, y_alias;
  std::string toric_relation, weight_relation;
  bool webs_match = false;
};

inline std::string format_linear_combo(const std::vector<Rat>& coeffs, const std::string& sym) {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    Rat c = coeffs[j];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = c < 0 ? Rat(-c) : c;
    if (a != 1) os << to_string(a) << "*";
    os << sym << j + 1;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// Alias table between the toric divisor classes and the line-bundle classes;
// the linear web Y_i = sum_j c_{i,j} X_j must match alpha_i = sum c_{i,j}
// varpi_j read off the Cartan rows.
inline std::vector<DictionaryEntry> degree2_dictionary(const CartanMatrix& cm) {
  const int n = cm.rank();
  std::vector<DictionaryEntry> out;
  GradedQuotientRing rxy = presentation_xy(cm);
  for (int i = 0; i < n; ++i) {
    DictionaryEntry e;
    e.index = i + 1;
    e.x_alias = "X" + std::to_string(i + 1) + " = class of the -coroot_" +
                std::to_string(i + 1) + " divisor = c1 of the coweight_" +
                std::to_string(i + 1) + " line bundle";
    e.y_alias = "Y" + std::to_string(i + 1) + " = class of the coweight_" +
                std::to_string(i + 1) + " divisor = c1 of the root_" + std::to_string(i + 1) +
                " line bundle";
    // Linear relation n + i of the xy presentation is Y_i - sum_j c X_j.
    const Poly& rel = rxy.relations()[n + i];
    std::vector<Rat> toric(n, Rat(0));
    bool shape_ok = true;
    for (const auto& [mono, coeff] : rel.terms) {
      if (mono_degree(mono) != 1) shape_ok = false;
      for (int v = 0; v < 2 * n; ++v) {
        if (mono[v] != 1) continue;
        if (v == i) {
          if (coeff != 1) shape_ok = false;
        } else if (v >= n) {
          toric[v - n] = -coeff;
        } else {
          shape_ok = false;
        }
      }
    }
    std::vector<Rat> weight = cm.root_in_weight_coords(i).coords;
    e.toric_relation = "Y" + std::to_string(i + 1) + " = " + format_linear_combo(toric, "X");
    e.weight_relation =
        "alpha_" + std::to_string(i + 1) + " = " + format_linear_combo(weight, "varpi_");
    e.webs_match = shape_ok && toric == weight;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace cartoric
