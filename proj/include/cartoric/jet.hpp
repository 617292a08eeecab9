#pragma once
// Forward-mode dual numbers with N partials. Pushing Jet entries through the
// exact matrix pipeline differentiates it without symbolic algebra; pivoting
// decisions look only at the value part.

#include <array>
#include <stdexcept>

#include "matrix.hpp"
#include "rational.hpp"

namespace cartoric {

template <int N, typename T = Rat>
struct Jet {
  T v = T(0);
  std::array<T, N> d{};

  Jet() { d.fill(T(0)); }
  Jet(const T& value) : v(value) { d.fill(T(0)); }
  Jet(int value) : v(value) { d.fill(T(0)); }

  static Jet variable(const T& value, int k) {
    Jet j(value);
    j.d.at(k) = T(1);
    return j;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (int k = 0; k < N; ++k) d[k] += o.d[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (int k = 0; k < N; ++k) d[k] -= o.d[k];
    return *this;
  }
  Jet operator+(const Jet& o) const {
    Jet r = *this;
    r += o;
    return r;
  }
  Jet operator-(const Jet& o) const {
    Jet r = *this;
    r -= o;
    return r;
  }
  Jet operator*(const Jet& o) const {
    Jet r;
    r.v = v * o.v;
    for (int k = 0; k < N; ++k) r.d[k] = v * o.d[k] + d[k] * o.v;
    return r;
  }
  Jet operator/(const Jet& o) const {
    if (!(o.v != T(0))) throw std::domain_error("Jet: division by zero value");
    Jet r;
    r.v = v / o.v;
    for (int k = 0; k < N; ++k) r.d[k] = (d[k] - r.v * o.d[k]) / o.v;
    return r;
  }
  bool operator==(const Jet& o) const { return v == o.v && d == o.d; }
};

template <int N, typename T>
struct ScalarTraits<Jet<N, T>> {
  static bool nonzero(const Jet<N, T>& x) { return ScalarTraits<T>::nonzero(x.v); }
  static bool better(const Jet<N, T>& c, const Jet<N, T>& b) {
    return ScalarTraits<T>::better(c.v, b.v);
  }
};

}  // namespace cartoric
