#pragma once
// Weyl group by breadth-first closure of the simple reflections acting on
// simple-root coordinates.  First visit happens at minimal word length, so the
// stored word of every element is reduced and its length is the BFS level.
//
//   s_i(alpha_j) = alpha_j - c[j][i] alpha_i, i.e. S_i = Id - e_i col_i(C)^T.
//
// Construction refuses groups larger than max_order (default 51840, the E6
// order); callers that only need the order use weyl_order_formula instead.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cartan.hpp"

namespace cartoric {

class WeylGroup {
 public:
  explicit WeylGroup(const CartanMatrix& cm, Int max_order = Int(51840)) : cm_(cm) {
    if (!cm.components().empty() && weyl_order_formula(cm.components()) > max_order)
      throw std::length_error("Weyl group order exceeds the generation bound");
    const int n = cm_.rank();
    gens_.reserve(n);
    for (int i = 0; i < n; ++i) {
      Mat<Rat> s(n, n);
      for (int k = 0; k < n; ++k) s(k, k) = 1;
      for (int j = 0; j < n; ++j) s(i, j) -= cm_.matrix()(j, i);
      gens_.push_back(s);
    }

    Mat<Rat> id(n, n);
    for (int k = 0; k < n; ++k) id(k, k) = 1;
    push_element(id, {});
    for (size_t head = 0; head < mats_.size(); ++head) {
      for (int i = 0; i < n; ++i) {
        Mat<Rat> m = mats_[head] * gens_[i];
        if (index_.count(key(m))) continue;
        std::vector<int> w = words_[head];
        w.push_back(i);
        push_element(m, std::move(w));
        if (Int(static_cast<long>(mats_.size())) > max_order)
          throw std::length_error("Weyl group order exceeds the generation bound");
      }
    }
    build_roots();
  }

  int size() const { return static_cast<int>(mats_.size()); }
  int rank() const { return cm_.rank(); }
  const CartanMatrix& cartan() const { return cm_; }
  int identity() const { return 0; }
  const Mat<Rat>& matrix(int w) const { return mats_.at(w); }
  const std::vector<int>& word(int w) const { return words_.at(w); }
  int length(int w) const { return static_cast<int>(words_.at(w).size()); }

  int index_of(const Mat<Rat>& m) const {
    auto it = index_.find(key(m));
    if (it == index_.end()) throw std::invalid_argument("matrix is not a Weyl element");
    return it->second;
  }

  int mult_generator(int w, int i) const { return index_of(mats_.at(w) * gens_.at(i)); }
  int product(int a, int b) const { return index_of(mats_.at(a) * mats_.at(b)); }

  int inverse(int w) const {
    int cur = 0;
    const std::vector<int>& wd = words_.at(w);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) cur = mult_generator(cur, *it);
    return cur;
  }

  std::vector<Rat> act_on_root_coords(int w, const std::vector<Rat>& a) const {
    return mats_.at(w).apply(a);
  }

  // Longest element of the parabolic subgroup generated by {s_j : j in J}.
  int longest_element(const std::vector<int>& J) const {
    std::vector<int> found{0};
    std::map<std::vector<long>, int> seen;
    seen[key(mats_[0])] = 0;
    int best = 0;
    for (size_t head = 0; head < found.size(); ++head) {
      for (int j : J) {
        int nxt = mult_generator(found[head], j);
        if (seen.emplace(key(mats_[nxt]), nxt).second) {
          found.push_back(nxt);
          if (length(nxt) > length(best)) best = nxt;
        }
      }
    }
    for (int w : found)
      if (w != best && length(w) == length(best))
        throw std::logic_error("parabolic longest element is not unique");
    return best;
  }

  int longest_element() const {
    std::vector<int> all(rank());
    for (int i = 0; i < rank(); ++i) all[i] = i;
    return longest_element(all);
  }

  // All roots: closure of the simple roots under the simple reflections.
  const std::vector<std::vector<Rat>>& roots() const { return roots_; }

  int positive_root_count() const {
    int c = 0;
    for (const auto& r : roots_)
      if (is_positive_root(r)) ++c;
    return c;
  }

  static bool is_positive_root(const std::vector<Rat>& a) {
    for (const Rat& x : a)
      if (x < 0) return false;
    return true;
  }

  static Rat height(const std::vector<Rat>& a) {
    Rat h(0);
    for (const Rat& x : a) h += x;
    return h;
  }

  // w >= s_i in Bruhat order iff w moves the fundamental weight varpi_i.
  bool bruhat_geq_simple(int w, int i) const {
    std::vector<Rat> varpi = cm_.inverse_matrix().row(i);
    return act_on_root_coords(w, varpi) != varpi;
  }

  // i |-> i* with alpha_{i*} = -w_0(alpha_i).
  std::vector<int> star_involution() const {
    int w0 = longest_element();
    std::vector<int> star(rank(), -1);
    for (int i = 0; i < rank(); ++i) {
      std::vector<Rat> b = act_on_root_coords(w0, simple_root_coords(i));
      for (Rat& x : b) x = -x;
      for (int j = 0; j < rank(); ++j)
        if (b == simple_root_coords(j)) star[i] = j;
      if (star[i] < 0) throw std::logic_error("-w_0 does not permute the simple roots");
    }
    return star;
  }

  std::vector<Rat> simple_root_coords(int i) const {
    std::vector<Rat> a(rank(), Rat(0));
    a.at(i) = 1;
    return a;
  }

 private:
  static std::vector<long> key(const Mat<Rat>& m) {
    std::vector<long> k;
    k.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) k.push_back(m(i, j).get_num().get_si());
    return k;
  }

  void push_element(Mat<Rat> m, std::vector<int> w) {
    index_[key(m)] = static_cast<int>(mats_.size());
    mats_.push_back(std::move(m));
    words_.push_back(std::move(w));
  }

  void build_roots() {
    std::map<std::vector<long>, int> seen;
    auto vkey = [](const std::vector<Rat>& v) {
      std::vector<long> k;
      k.reserve(v.size());
      for (const Rat& x : v) k.push_back(x.get_num().get_si());
      return k;
    };
    for (int i = 0; i < rank(); ++i) {
      std::vector<Rat> a = simple_root_coords(i);
      if (seen.emplace(vkey(a), 1).second) roots_.push_back(a);
    }
    for (size_t head = 0; head < roots_.size(); ++head) {
      for (int i = 0; i < rank(); ++i) {
        std::vector<Rat> b = gens_[i].apply(roots_[head]);
        if (seen.emplace(vkey(b), 1).second) roots_.push_back(b);
      }
    }
  }

  CartanMatrix cm_;
  std::vector<Mat<Rat>> gens_;
  std::vector<Mat<Rat>> mats_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<long>, int> index_;
  std::vector<std::vector<Rat>> roots_;
};

// Simple reflection on fundamental-weight coordinates: p |-> p - p_k row_k(C).
inline std::vector<Rat> reflect_weight_coords(const CartanMatrix& cm, int k,
                                              std::vector<Rat> p) {
  Rat pk = p.at(k);
  for (int j = 0; j < cm.rank(); ++j) p[j] -= pk * cm.matrix()(k, j);
  return p;
}

// The two independently computed index sets behind the fixed-point zero loci
// of the i-th section pair.  Bruhat route: J such that the parabolic longest
// element w_J lies above s_i.  Root route: J such that no simple root is sent
// to -alpha_i by w_J^{-1}.  They must partition the power set of I.
inline std::vector<std::vector<int>> zero_locus_bruhat_route(const WeylGroup& w, int i) {
  const int n = w.rank();
  std::vector<std::vector<int>> out;
  for (std::uint32_t jmask = 0; jmask < (1u << n); ++jmask) {
    std::vector<int> J;
    for (int t = 0; t < n; ++t)
      if (jmask >> t & 1u) J.push_back(t);
    if (w.bruhat_geq_simple(w.longest_element(J), i)) out.push_back(std::move(J));
  }
  return out;
}

inline std::vector<std::vector<int>> zero_locus_root_route(const WeylGroup& w, int i) {
  const int n = w.rank();
  std::vector<Rat> target(n, Rat(0));
  target[i] = -1;
  std::vector<std::vector<int>> out;
  for (std::uint32_t jmask = 0; jmask < (1u << n); ++jmask) {
    std::vector<int> J;
    for (int t = 0; t < n; ++t)
      if (jmask >> t & 1u) J.push_back(t);
    int winv = w.inverse(w.longest_element(J));
    bool hits = false;
    for (int k = 0; k < n && !hits; ++k)
      if (w.act_on_root_coords(winv, w.simple_root_coords(k)) == target) hits = true;
    if (!hits) out.push_back(std::move(J));
  }
  return out;
}

}  // namespace cartoric
