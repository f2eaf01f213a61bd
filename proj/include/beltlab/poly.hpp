#pragma once

#include <utility>
#include <vector>

#include "beltlab/matrix.hpp"

namespace beltlab {

// Dense univariate polynomial over the rationals, ascending coefficients.
// The empty vector is the zero polynomial; otherwise back() != 0.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_scale(Poly p, const Rat& c) {
  for (auto& x : p) x *= c;
  poly_trim(p);
  return p;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  return poly_add(a, poly_scale(b, Rat(-1)));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  require_internal(!den.empty(), "polynomial division by zero");
  if (num.size() < den.size()) return {Poly{}, std::move(num)};
  Poly q(num.size() - den.size() + 1, Rat(0));
  const Rat lead = den.back();
  for (size_t k = q.size(); k-- > 0;) {
    if (num.size() < den.size() + k || num[den.size() - 1 + k] == 0) continue;
    const Rat f = num[den.size() - 1 + k] / lead;
    q[k] = f;
    for (size_t i = 0; i < den.size(); ++i) num[i + k] -= f * den[i];
  }
  poly_trim(num);
  poly_trim(q);
  return {std::move(q), std::move(num)};
}

inline Poly poly_monic(Poly p) {
  poly_trim(p);
  if (p.empty()) return p;
  const Rat lead = p.back();
  if (lead != 1)
    for (auto& c : p) c /= lead;
  return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
  poly_trim(d);
  return d;
}

inline bool poly_squarefree(const Poly& p) {
  if (p.size() <= 2) return true;
  return poly_degree(poly_gcd(p, poly_derivative(p))) == 0;
}

inline Poly squarefree_part(const Poly& p) {
  const Poly g = poly_gcd(p, poly_derivative(p));
  if (poly_degree(g) <= 0) return poly_monic(p);
  auto [q, r] = poly_divmod(p, g);
  require_internal(r.empty(), "squarefree part division not exact");
  return poly_monic(std::move(q));
}

inline Poly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  require_internal(xs.size() == ys.size() && !xs.empty(), "interpolation input size");
  Poly master{Rat(1)};
  for (const Rat& x : xs) master = poly_mul(master, Poly{-x, Rat(1)});
  Poly result;
  for (size_t i = 0; i < xs.size(); ++i) {
    auto [basis, rem] = poly_divmod(master, Poly{-xs[i], Rat(1)});
    require_internal(rem.empty(), "interpolation node division not exact");
    const Rat denom = poly_eval(basis, xs[i]);
    require_internal(denom != 0, "repeated interpolation node");
    result = poly_add(result, poly_scale(std::move(basis), ys[i] / denom));
  }
  return result;
}

// Monic polynomial of degree deg(p)*deg(q) whose roots are all pairwise
// products of roots of p and q: the resultant Res_x(p(x), x^deg(q) q(t/x)),
// evaluated pointwise via Sylvester determinants and interpolated. Both
// inputs must be monic of degree >= 1.
inline Poly root_product_resultant(const Poly& p, const Poly& q) {
  const int dp = poly_degree(p), dq = poly_degree(q);
  require_internal(dp >= 1 && dq >= 1, "root product needs degrees >= 1");
  require_internal(p.back() == 1 && q.back() == 1, "root product needs monic inputs");
  const int deg = dp * dq;
  std::vector<Rat> xs, ys;
  xs.reserve(deg + 1);
  ys.reserve(deg + 1);
  for (int t = 0; t <= deg; ++t) {
    const Rat t0(t);
    // g(x) = sum_i q_i t0^i x^(dq-i); declared x-degree dq even if the top
    // coefficient vanishes, which keeps the Sylvester determinant equal to
    // the true resultant because p is monic.
    Poly g(dq + 1, Rat(0));
    Rat tp(1);
    for (int i = 0; i <= dq; ++i) {
      g[dq - i] = q[i] * tp;
      tp *= t0;
    }
    const int n = dp + dq;
    Mat syl(n, Vec(n, Rat(0)));
    for (int r = 0; r < dq; ++r)
      for (int s = 0; s <= dp; ++s) syl[r][r + s] = p[dp - s];
    for (int r = 0; r < dp; ++r)
      for (int s = 0; s <= dq; ++s) syl[dq + r][r + s] = g[dq - s];
    xs.push_back(t0);
    ys.push_back(det_bareiss(syl));
  }
  Poly result = poly_monic(lagrange_interpolate(xs, ys));
  require_internal(poly_degree(result) == deg, "resultant degree mismatch");
  return result;
}

}  // namespace beltlab
