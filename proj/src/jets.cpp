#include "jets.hpp"

#include <memory>
#include <mutex>

namespace nsvsi {

namespace {

std::unique_ptr<JetLayout> build_layout(int order) {
  auto L = std::make_unique<JetLayout>();
  L->order = order;
  L->deg_end.assign(static_cast<std::size_t>(order) + 1, 0);
  for (int d = 0; d <= order; ++d) {
    for (int e0 = d; e0 >= 0; --e0)
      for (int e1 = d - e0; e1 >= 0; --e1)
        for (int e2 = d - e0 - e1; e2 >= 0; --e2) {
          int e3 = d - e0 - e1 - e2;
          L->exps.push_back({static_cast<std::uint8_t>(e0), static_cast<std::uint8_t>(e1),
                             static_cast<std::uint8_t>(e2), static_cast<std::uint8_t>(e3)});
          L->degree_of.push_back(d);
        }
    L->deg_end[static_cast<std::size_t>(d)] = static_cast<int>(L->exps.size());
  }
  L->count = static_cast<int>(L->exps.size());
  L->rank_index.assign(16 * 16 * 16 * 16, -1);
  for (int r = 0; r < L->count; ++r) {
    const auto& e = L->exps[static_cast<std::size_t>(r)];
    L->rank_index[static_cast<std::size_t>(((e[0] * 16 + e[1]) * 16 + e[2]) * 16 + e[3])] = r;
  }
  L->prod.assign(static_cast<std::size_t>(L->count) * L->count, -1);
  for (int i = 0; i < L->count; ++i)
    for (int j = 0; j < L->count; ++j) {
      const auto& a = L->exps[static_cast<std::size_t>(i)];
      const auto& b = L->exps[static_cast<std::size_t>(j)];
      if (L->degree_of[i] + L->degree_of[j] > order) continue;
      L->prod[static_cast<std::size_t>(i) * L->count + j] =
          L->rank_of(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]);
    }
  return L;
}

}  // namespace

const JetLayout& JetLayout::of(int order) {
  if (order < 0 || order > kMaxJetOrder)
    fail(ErrorKind::OrderMismatch, "jet order out of range: " + std::to_string(order));
  static std::unique_ptr<JetLayout> cache[kMaxJetOrder + 1];
  static std::once_flag flags[kMaxJetOrder + 1];
  std::call_once(flags[order], [&] { cache[order] = build_layout(order); });
  return *cache[order];
}

Jet<double> jet_exp(const Jet<double>& a) {
  const int R = a.order();
  std::vector<double> coeffs(static_cast<std::size_t>(R) + 1);
  double c = std::exp(a.value());
  for (int k = 0; k <= R; ++k) {
    coeffs[static_cast<std::size_t>(k)] = c;
    c /= (k + 1);
  }
  return compose_series(a, coeffs);
}

Jet<double> jet_ln(const Jet<double>& a) {
  if (!(a.value() > 0.0)) fail(ErrorKind::Domain, "ln of non-positive constant term");
  const int R = a.order();
  std::vector<double> coeffs(static_cast<std::size_t>(R) + 1);
  coeffs[0] = std::log(a.value());
  double inv_c = 1.0 / a.value();
  double p = inv_c;
  for (int k = 1; k <= R; ++k) {
    coeffs[static_cast<std::size_t>(k)] = (k % 2 ? p : -p) / k;
    p *= inv_c;
  }
  return compose_series(a, coeffs);
}

Jet<double> jet_pow(const Jet<double>& a, long long pnum, long long pden) {
  if (pden == 1) return pow_int(a, pnum);
  if (!(a.value() > 0.0))
    fail(ErrorKind::Domain, "non-integer power of non-positive constant term");
  const int R = a.order();
  const double alpha = static_cast<double>(pnum) / static_cast<double>(pden);
  std::vector<double> coeffs(static_cast<std::size_t>(R) + 1);
  double c = std::pow(a.value(), alpha);
  double inv = 1.0 / a.value();
  double binom = 1.0;
  for (int k = 0; k <= R; ++k) {
    coeffs[static_cast<std::size_t>(k)] = c * binom;
    binom *= (alpha - k) * inv / (k + 1);
  }
  return compose_series(a, coeffs);
}

Jet<Rational> jet_exp(const Jet<Rational>&) {
  fail(ErrorKind::RationalTranscendental, "exp is not available in rational mode");
}

Jet<Rational> jet_ln(const Jet<Rational>&) {
  fail(ErrorKind::RationalTranscendental, "ln is not available in rational mode");
}

Jet<Rational> jet_pow(const Jet<Rational>& a, long long pnum, long long pden) {
  if (pden != 1)
    fail(ErrorKind::RationalTranscendental, "non-integer power is not available in rational mode");
  return pow_int(a, pnum);
}

}  // namespace nsvsi
