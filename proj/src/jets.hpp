#pragma once

// Truncated multivariate Taylor arithmetic in 4 variables: the differentiation
// engine under all curvature computation. Dense degree-graded storage.

#include <array>
#include <type_traits>
#include <vector>

#include "scalars.hpp"

namespace nsvsi {

inline constexpr int kJetVars = 4;
inline constexpr int kMaxJetOrder = 8;

// Static per-order tables: multi-index enumeration (graded lexicographic),
// rank lookup, and the full product-rank table.
class JetLayout {
 public:
  int order = 0;
  int count = 0;
  std::vector<std::array<std::uint8_t, 4>> exps;  // rank -> exponents
  std::vector<int> degree_of;                     // rank -> total degree
  std::vector<int> deg_end;     // degree d -> one past the last rank of degree d
  std::vector<int> prod;        // count*count: rank of exps[i]+exps[j], -1 if above order
  std::vector<int> rank_index;  // packed exponents -> rank

  static const JetLayout& of(int order);

  int rank_of(int e0, int e1, int e2, int e3) const {
    return rank_index[static_cast<std::size_t>(((e0 * 16 + e1) * 16 + e2) * 16 + e3)];
  }
  int prod_rank(int i, int j) const { return prod[static_cast<std::size_t>(i) * count + j]; }
};

template <class T>
class Jet {
 public:
  Jet() : order_(0), c_(1) {}
  explicit Jet(int order) : order_(order), c_(JetLayout::of(order).count) {}

  static Jet constant(int order, T v) {
    Jet j(order);
    j.c_[0] = std::move(v);
    return j;
  }
  // value + d(axis); the seed for a chart coordinate
  static Jet variable(int order, int axis, T v) {
    Jet j(order);
    j.c_[0] = std::move(v);
    if (order >= 1) j.c_[1 + axis] = scalar_traits<T>::one();
    return j;
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(c_.size()); }
  const T& operator[](int r) const { return c_[static_cast<std::size_t>(r)]; }
  T& operator[](int r) { return c_[static_cast<std::size_t>(r)]; }
  const T& value() const { return c_[0]; }

  // coefficient by explicit exponents (0 if above order)
  const T& coeff(int e0, int e1, int e2, int e3) const {
    static const T zero = scalar_traits<T>::zero();
    if (e0 + e1 + e2 + e3 > order_) return zero;
    return c_[static_cast<std::size_t>(JetLayout::of(order_).rank_of(e0, e1, e2, e3))];
  }

  bool operator==(const Jet& o) const { return order_ == o.order_ && c_ == o.c_; }

 private:
  int order_;
  std::vector<T> c_;
};

namespace detail {
inline void require_same_order(int a, int b) {
  if (a != b) fail(ErrorKind::OrderMismatch, "jet order mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace detail

template <class T>
Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
  detail::require_same_order(a.order(), b.order());
  Jet<T> r(a.order());
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
  detail::require_same_order(a.order(), b.order());
  Jet<T> r(a.order());
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& a) {
  Jet<T> r(a.order());
  for (int i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

template <class T>
Jet<T> scale(const Jet<T>& a, const std::type_identity_t<T>& c) {
  Jet<T> r(a.order());
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

template <class T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  detail::require_same_order(a.order(), b.order());
  const JetLayout& L = JetLayout::of(a.order());
  Jet<T> r(a.order());
  for (int i = 0; i < L.count; ++i) {
    if (scalar_traits<T>::is_zero(a[i])) continue;
    const int jmax = L.deg_end[L.order - L.degree_of[i]];
    for (int j = 0; j < jmax; ++j) {
      if (scalar_traits<T>::is_zero(b[j])) continue;
      r[L.prod_rank(i, j)] += a[i] * b[j];
    }
  }
  return r;
}

template <class T>
Jet<T> truncate(const Jet<T>& a, int new_order) {
  if (new_order > a.order()) fail(ErrorKind::OrderMismatch, "truncate: target order exceeds source");
  const JetLayout& L = JetLayout::of(a.order());
  Jet<T> r(new_order);
  const int n = JetLayout::of(new_order).count;
  for (int i = 0; i < n; ++i) r[i] = a[i];  // graded order: prefixes agree
  (void)L;
  return r;
}

// d/d(axis): order drops by one
template <class T>
Jet<T> partial(const Jet<T>& a, int axis) {
  if (a.order() < 1) fail(ErrorKind::InsufficientOrder, "partial of order-0 jet");
  const JetLayout& Lr = JetLayout::of(a.order() - 1);
  const JetLayout& La = JetLayout::of(a.order());
  Jet<T> r(a.order() - 1);
  for (int i = 0; i < Lr.count; ++i) {
    auto e = Lr.exps[static_cast<std::size_t>(i)];
    int m = e[static_cast<std::size_t>(axis)];
    e[static_cast<std::size_t>(axis)] = static_cast<std::uint8_t>(m + 1);
    const int src = La.rank_of(e[0], e[1], e[2], e[3]);
    r[i] = a[src] * scalar_traits<T>::from_ratio(m + 1, 1);
  }
  return r;
}

// sum_k coeffs[k] * (a - a0)^k, Horner on jets; coeffs.size() == order+1
template <class T>
Jet<T> compose_series(const Jet<T>& a, const std::vector<T>& coeffs) {
  const int R = a.order();
  Jet<T> n = a;
  n[0] = scalar_traits<T>::zero();
  Jet<T> r = Jet<T>::constant(R, coeffs[static_cast<std::size_t>(R)]);
  for (int k = R - 1; k >= 0; --k) {
    r = r * n;
    r[0] += coeffs[static_cast<std::size_t>(k)];
  }
  return r;
}

template <class T>
Jet<T> inverse(const Jet<T>& b) {
  if (scalar_traits<T>::is_zero(b.value()))
    fail(ErrorKind::DivisionByZero, "jet division by zero constant term");
  const int R = b.order();
  // 1/(c(1+u)) = (1/c) sum (-u)^k
  std::vector<T> coeffs(static_cast<std::size_t>(R) + 1);
  T inv_c = scalar_traits<T>::one() / b.value();
  T acc = inv_c;
  for (int k = 0; k <= R; ++k) {
    coeffs[static_cast<std::size_t>(k)] = acc;
    acc = -acc * inv_c;
  }
  return compose_series(b, coeffs);
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
  return a * inverse(b);
}

template <class T>
Jet<T> pow_int(const Jet<T>& a, long long p) {
  const int R = a.order();
  if (p == 0) return Jet<T>::constant(R, scalar_traits<T>::one());
  Jet<T> base = p < 0 ? inverse(a) : a;
  long long n = p < 0 ? -p : p;
  Jet<T> r = Jet<T>::constant(R, scalar_traits<T>::one());
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Jet<double> jet_exp(const Jet<double>& a);
Jet<double> jet_ln(const Jet<double>& a);
Jet<double> jet_pow(const Jet<double>& a, long long pnum, long long pden);
Jet<Rational> jet_exp(const Jet<Rational>& a);
Jet<Rational> jet_ln(const Jet<Rational>& a);
Jet<Rational> jet_pow(const Jet<Rational>& a, long long pnum, long long pden);

}  // namespace nsvsi
