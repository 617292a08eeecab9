#pragma once
// Small dense matrices over an exact field (or doubles/jets for the one
// numeric path). Elimination uses exact first-nonzero pivoting unless the
// scalar provides a magnitude (floating point).

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace cartoric {

// Customization point: pivot viability and (for floats) pivot preference.
template <typename T>
struct ScalarTraits {
  static bool nonzero(const T& x) { return !(x == T(0)); }
  // true if cand is a strictly better pivot than best; exact types keep the
  // first viable pivot for determinism.
  static bool better(const T& /*cand*/, const T& /*best*/) { return false; }
};

template <>
struct ScalarTraits<double> {
  static bool nonzero(double x) { return x != 0.0; }
  static bool better(double c, double b) { return std::fabs(c) > std::fabs(b); }
};

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative size");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[idx(i, j)]; }
  const T& operator()(int i, int j) const { return a_[idx(i, j)]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: size mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (!ScalarTraits<T>::nonzero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: size mismatch");
    Mat r = *this;
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] += o.a_[t];
    return r;
  }

  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: size mismatch");
    Mat r = *this;
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] -= o.a_[t];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<T> row(int i) const {
    std::vector<T> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  std::vector<T> col(int j) const {
    std::vector<T> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_col(int j, const std::vector<T>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat: apply size");
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Mat r(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    return r;
  }

  bool is_zero() const {
    for (const T& x : a_)
      if (ScalarTraits<T>::nonzero(x)) return false;
    return true;
  }

 private:
  size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat: index");
    return static_cast<size_t>(i) * cols_ + j;
  }

  int rows_, cols_;
  std::vector<T> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
template <typename T>
std::vector<int> rref(Mat<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!ScalarTraits<T>::nonzero(m(i, c))) continue;
      if (p < 0 || ScalarTraits<T>::better(m(i, c), m(p, c))) p = i;
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || !ScalarTraits<T>::nonzero(m(i, c))) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
int rank(Mat<T> m) {
  return static_cast<int>(rref(m).size());
}

template <typename T>
T det(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  T d(1);
  for (int c = 0; c < m.cols(); ++c) {
    int p = -1;
    for (int i = c; i < m.rows(); ++i) {
      if (!ScalarTraits<T>::nonzero(m(i, c))) continue;
      if (p < 0 || ScalarTraits<T>::better(m(i, c), m(p, c))) p = i;
    }
    if (p < 0) return T(0);
    if (p != c) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(c, j));
      d = T(0) - d;
    }
    d = d * m(c, c);
    T inv = T(1) / m(c, c);
    for (int i = c + 1; i < m.rows(); ++i) {
      if (!ScalarTraits<T>::nonzero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <typename T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  if (n == 0) return Mat<T>(0, 0);
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<T> r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

// Particular solution of A x = b with free variables set to 0.
template <typename T>
std::optional<std::vector<T>> solve(const Mat<T>& a, const std::vector<T>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  Mat<T> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;  // inconsistent
  std::vector<T> x(a.cols(), T(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), a.cols());
  return x;
}

// Basis of the right null space {x : A x = 0}; deterministic order by free column.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Mat<T>& a) {
  Mat<T> m = a;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[f] = T(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = T(0) - m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  T s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cartoric
