#pragma once
// Finite-type Cartan matrices, the four lattice bases, exact pairings, and
// the Smith-normal-form verification of the Cox exact sequence
// 0 -> Lambda_r -> Z^{2I} -> Lambda -> 0.
//
// Basis dictionary (all exact, n = rank):
//   alpha_i  = sum_j c[i][j] varpi_j          (row i of C)
//   alpha_i^vee = sum_j c[j][i] varpi_j^vee   (column i of C)
//   <alpha_i, varpi_j^vee> = <varpi_i, alpha_j^vee> = delta_ij
//   <alpha_i, alpha_j^vee> = c[i][j]

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "snf.hpp"

namespace cartoric {

enum class WBasis { SimpleRoot, FundamentalWeight, SimpleCoroot, FundamentalCoweight };

inline bool weight_side(WBasis b) {
  return b == WBasis::SimpleRoot || b == WBasis::FundamentalWeight;
}

struct LatticeVector {
  WBasis basis;
  std::vector<Rat> coords;
};

class CartanMatrix {
 public:
  explicit CartanMatrix(const std::string& type_spec)
      : CartanMatrix(parse_type_spec(type_spec)) {}

  explicit CartanMatrix(const std::vector<SimpleType>& components)
      : CartanMatrix(format_type_spec(components), cartan_table(components)) {
    components_ = components;
  }

  // Direct construction (sub-diagrams, tests); validates the finite-type invariants.
  CartanMatrix(std::string label, Mat<Rat> c) : label_(std::move(label)), c_(std::move(c)) {
    validate();
    inv_ = c_.rows() > 0 ? *inverse(c_) : Mat<Rat>(0, 0);
  }

  int rank() const { return c_.rows(); }
  const std::string& type() const { return label_; }
  const std::vector<SimpleType>& components() const { return components_; }
  const Mat<Rat>& matrix() const { return c_; }
  const Mat<Rat>& inverse_matrix() const { return inv_; }

  long entry(int i, int j) const {
    check_index(i);
    check_index(j);
    return c_(i, j).get_num().get_si();
  }

  Int determinant() const { return det(c_).get_num(); }

  CartanMatrix subdiagram(const std::vector<int>& J) const {
    for (int j : J) check_index(j);
    std::vector<int> idx = J;
    std::ostringstream os;
    os << label_ << "|J={";
    for (size_t t = 0; t < idx.size(); ++t) os << (t ? "," : "") << idx[t];
    os << "}";
    return CartanMatrix(os.str(), c_.submatrix(idx, idx));
  }

  // (exact inverse, all-entries-nonnegative flag).
  std::pair<Mat<Rat>, bool> inverse_nonneg() const {
    bool ok = true;
    for (int i = 0; i < inv_.rows() && ok; ++i)
      for (int j = 0; j < inv_.cols(); ++j)
        if (inv_(i, j) < 0) {
          ok = false;
          break;
        }
    return {inv_, ok};
  }

  // -alpha_i^vee has coordinates -column(i); alpha_i^vee has +column(i).
  LatticeVector coroot_in_coweight_coords(int i) const {
    check_index(i);
    return {WBasis::FundamentalCoweight, c_.col(i)};
  }

  LatticeVector root_in_weight_coords(int i) const {
    check_index(i);
    return {WBasis::FundamentalWeight, c_.row(i)};
  }

  LatticeVector unit(WBasis b, int i) const {
    check_index(i);
    std::vector<Rat> v(rank(), Rat(0));
    v[i] = 1;
    return {b, v};
  }

  // Weight side -> simple-root coords; coweight side -> coweight coords.
  // In that pair of bases the pairing is the plain dot product.
  std::vector<Rat> to_simple_root_coords(const LatticeVector& w) const {
    check_len(w);
    if (!weight_side(w.basis)) throw std::invalid_argument("expected a weight-side vector");
    if (w.basis == WBasis::SimpleRoot) return w.coords;
    return inv_.transpose().apply(w.coords);  // varpi_i = sum_j (C^-1)_{i,j} alpha_j
  }

  std::vector<Rat> to_coweight_coords(const LatticeVector& v) const {
    check_len(v);
    if (weight_side(v.basis)) throw std::invalid_argument("expected a coweight-side vector");
    if (v.basis == WBasis::FundamentalCoweight) return v.coords;
    return c_.apply(v.coords);  // alpha_i^vee = sum_j c[j][i] varpi_j^vee
  }

  Rat pair(const LatticeVector& w, const LatticeVector& v) const {
    if (!weight_side(w.basis) || weight_side(v.basis))
      throw std::invalid_argument("pair: need one weight-side and one coweight-side vector");
    return dot(to_simple_root_coords(w), to_coweight_coords(v));
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("Cartan index out of range");
  }
  void check_len(const LatticeVector& v) const {
    if (static_cast<int>(v.coords.size()) != rank())
      throw std::invalid_argument("LatticeVector length mismatch");
  }

  void validate() const {
    if (c_.rows() != c_.cols()) throw std::invalid_argument("Cartan matrix must be square");
    for (int i = 0; i < c_.rows(); ++i)
      for (int j = 0; j < c_.cols(); ++j) {
        const Rat& x = c_(i, j);
        if (!is_integer(x)) throw std::invalid_argument("Cartan entries must be integers");
        if (i == j && x != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        if (i != j && x > 0) throw std::invalid_argument("Cartan off-diagonal must be <= 0");
        if (i != j && (x == 0) != (c_(j, i) == 0))
          throw std::invalid_argument("Cartan zero pattern must be symmetric");
      }
    // Finite type: positive leading principal minors.
    for (int k = 1; k <= c_.rows(); ++k) {
      std::vector<int> idx(k);
      for (int t = 0; t < k; ++t) idx[t] = t;
      if (det(c_.submatrix(idx, idx)) <= 0)
        throw std::invalid_argument("Cartan matrix is not of finite type");
    }
  }

  std::string label_;
  Mat<Rat> c_;
  Mat<Rat> inv_;
  std::vector<SimpleType> components_;
};

// Cox exact sequence report. First map alpha_i |-> sum_j <alpha_i,-alpha_j^vee> e_j
// + sum_j <alpha_i,varpi_j^vee> e_{n+j}, i.e. the 2n x n matrix [-C^T; Id].
// Second map e_i |-> varpi_i, e_{n+i} |-> alpha_i, i.e. the n x 2n matrix [Id | C^T].
struct CoxSequenceReport {
  bool composite_zero = false;
  bool first_injective = false;       // rank n, all elementary divisors 1
  bool second_surjective = false;     // rank n, all elementary divisors 1
  bool kernel_equals_image = false;   // every kernel generator of the second map
                                      // is an integral combination of first-map columns
  std::vector<Int> divisors_first, divisors_second;
  int rank_first = 0, rank_second = 0;
  bool pass = false;
};

inline CoxSequenceReport verify_cox_sequence(const CartanMatrix& cm) {
  const int n = cm.rank();
  Mat<Int> m1(2 * n, n), m2(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m1(j, i) = -cm.entry(i, j);
      m2(j, n + i) = cm.entry(i, j);
    }
  for (int i = 0; i < n; ++i) {
    m1(n + i, i) = 1;
    m2(i, i) = 1;
  }

  CoxSequenceReport rep;
  Mat<Int> comp = m2 * m1;
  rep.composite_zero = comp.is_zero();

  SmithResult s1 = smith_normal_form(m1);
  SmithResult s2 = smith_normal_form(m2);
  rep.rank_first = s1.rank;
  rep.rank_second = s2.rank;
  rep.divisors_first = s1.divisors;
  rep.divisors_second = s2.divisors;
  auto all_one = [](const std::vector<Int>& ds) {
    for (const Int& d : ds)
      if (d != 1) return false;
    return true;
  };
  rep.first_injective = (s1.rank == n) && all_one(s1.divisors);
  rep.second_surjective = (s2.rank == n) && all_one(s2.divisors);

  // Independent exactness check at Z^{2I}: solve m1 x = k over Q for each
  // Z-kernel generator k of m2 and demand an integral solution.
  rep.kernel_equals_image = true;
  Mat<Rat> m1q(2 * n, n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < n; ++j) m1q(i, j) = Rat(m1(i, j));
  for (const std::vector<Int>& k : right_kernel_int(m2)) {
    std::vector<Rat> kq(k.begin(), k.end());
    std::optional<std::vector<Rat>> x = solve(m1q, kq);
    if (!x) {
      rep.kernel_equals_image = false;
      break;
    }
    for (const Rat& xi : *x)
      if (!is_integer(xi)) {
        rep.kernel_equals_image = false;
        break;
      }
    if (!rep.kernel_equals_image) break;
  }

  rep.pass = rep.composite_zero && rep.first_injective && rep.second_surjective &&
             rep.kernel_equals_image;
  return rep;
}

}  // namespace cartoric
