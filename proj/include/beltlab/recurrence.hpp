#pragma once

#include <vector>

#include "beltlab/matrix.hpp"
#include "beltlab/poly.hpp"

namespace beltlab {

struct RationalSequence {
  std::vector<Rat> values;  // non-empty
  long offset = 0;          // time of values[0]
};

// K x K Toeplitz determinant with entries a_{ell+i-j} (i, j 1-based),
// evaluated by fraction-free elimination.
inline Rat toeplitz_det(const RationalSequence& seq, long ell, int K) {
  require(K >= 1, Errc::bad_input, "Toeplitz size must be >= 1");
  require(!seq.values.empty(), Errc::bad_input, "empty sequence");
  const long lo = ell + 1 - K, hi = ell + K - 1;
  const long end = seq.offset + static_cast<long>(seq.values.size()) - 1;
  require(lo >= seq.offset && hi <= end, Errc::index_out_of_window,
          "Toeplitz window [" + std::to_string(lo) + ", " + std::to_string(hi) +
              "] outside sequence window");
  Mat m(K, Vec(K));
  for (int i = 1; i <= K; ++i)
    for (int j = 1; j <= K; ++j)
      m[i - 1][j - 1] = seq.values[static_cast<size_t>(ell + i - j - seq.offset)];
  return det_bareiss(m);
}

enum class RecurrenceStatus { found, none_up_to, insufficient_data };

inline const char* status_name(RecurrenceStatus s) {
  switch (s) {
    case RecurrenceStatus::found: return "found";
    case RecurrenceStatus::none_up_to: return "none_up_to";
    case RecurrenceStatus::insufficient_data: return "insufficient_data";
  }
  return "?";
}

// A verdict from a finite window: when found, a_n = sum c_i a_{n-i} holds for
// every n in [verified_from, verified_to]. Evidence, not a proof about the
// bi-infinite orbit.
struct RecurrenceReport {
  RecurrenceStatus status = RecurrenceStatus::insufficient_data;
  int order = 0;
  std::vector<Rat> coefficients;  // c_1 .. c_order
  long verified_from = 0;
  long verified_to = -1;
  int k_max = 0;
};

// Smallest k <= k_max whose k x k solve block yields coefficients that
// reproduce the whole window exactly. Window must hold at least 2*k_max + 4
// terms, otherwise the verdict is insufficient_data. A singular solve block
// still yields a candidate (free variables zero); verification decides.
inline RecurrenceReport minimal_order(const RationalSequence& seq, int k_max) {
  require(k_max >= 1, Errc::bad_input, "k_max must be >= 1");
  RecurrenceReport rep;
  rep.k_max = k_max;
  const auto& a = seq.values;
  const long L = static_cast<long>(a.size());
  if (L < 2L * k_max + 4) {
    rep.status = RecurrenceStatus::insufficient_data;
    return rep;
  }
  for (int k = 1; k <= k_max; ++k) {
    Mat m(k, Vec(k));
    Vec rhs(k);
    for (int r = 0; r < k; ++r) {
      for (int i = 1; i <= k; ++i) m[r][i - 1] = a[static_cast<size_t>(k + r - i)];
      rhs[r] = a[static_cast<size_t>(k + r)];
    }
    auto c = solve_any(m, rhs);
    if (!c) continue;
    bool ok = true;
    for (long n = k; n < L && ok; ++n) {
      Rat acc(0);
      for (int i = 1; i <= k; ++i) acc += (*c)[i - 1] * a[static_cast<size_t>(n - i)];
      ok = acc == a[static_cast<size_t>(n)];
    }
    if (ok) {
      rep.status = RecurrenceStatus::found;
      rep.order = k;
      rep.coefficients = std::move(*c);
      rep.verified_from = seq.offset + k;
      rep.verified_to = seq.offset + L - 1;
      return rep;
    }
  }
  rep.status = RecurrenceStatus::none_up_to;
  return rep;
}

// Monic characteristic polynomial t^k - c_1 t^{k-1} - ... - c_k.
struct CharPoly {
  Poly coeffs;  // ascending, monic

  int degree() const { return poly_degree(coeffs); }
};

inline CharPoly char_poly_from_recurrence(const std::vector<Rat>& c) {
  const size_t k = c.size();
  Poly p(k + 1);
  p[k] = 1;
  for (size_t i = 1; i <= k; ++i) p[k - i] = -c[i - 1];
  return {std::move(p)};
}

inline CharPoly char_poly(const RecurrenceReport& rep) {
  require(rep.status == RecurrenceStatus::found, Errc::bad_input,
          "no recurrence was found");
  return char_poly_from_recurrence(rep.coefficients);
}

inline std::vector<Rat> recurrence_from_char_poly(const CharPoly& p) {
  const int k = p.degree();
  require(k >= 1 && p.coeffs[k] == 1, Errc::bad_input, "not a monic polynomial");
  std::vector<Rat> c(k);
  for (int i = 1; i <= k; ++i) c[i - 1] = -p.coeffs[k - i];
  return c;
}

enum class CombineMode { sum, product };

// Characteristic polynomial satisfied by term-wise sums (P*Q) or term-wise
// products (roots x_i * y_j via the resultant). When both inputs are
// squarefree all solutions are plain exponentials, so coinciding root
// products collapse and the squarefree part of the resultant suffices.
inline CharPoly combine(const CharPoly& p, const CharPoly& q, CombineMode mode) {
  require(p.degree() >= 1 && q.degree() >= 1, Errc::degenerate_input,
          "combine needs degrees >= 1");
  require(p.coeffs.back() == 1 && q.coeffs.back() == 1, Errc::degenerate_input,
          "combine needs monic polynomials");
  if (mode == CombineMode::sum) return {poly_mul(p.coeffs, q.coeffs)};
  Poly r = root_product_resultant(p.coeffs, q.coeffs);
  if (poly_squarefree(p.coeffs) && poly_squarefree(q.coeffs)) r = squarefree_part(r);
  return {poly_monic(std::move(r))};
}

// Continues a_n = sum c_i a_{n-i} to `count` terms from the given prefix.
inline std::vector<Rat> extend_sequence(const std::vector<Rat>& coeffs,
                                        std::vector<Rat> a, size_t count) {
  require(a.size() >= coeffs.size(), Errc::bad_input,
          "need at least order-many initial terms");
  while (a.size() < count) {
    Rat next(0);
    for (size_t i = 1; i <= coeffs.size(); ++i)
      next += coeffs[i - 1] * a[a.size() - i];
    a.push_back(next);
  }
  return a;
}

inline bool satisfies_recurrence(const std::vector<Rat>& a,
                                 const std::vector<Rat>& coeffs) {
  for (size_t n = coeffs.size(); n < a.size(); ++n) {
    Rat acc(0);
    for (size_t i = 1; i <= coeffs.size(); ++i) acc += coeffs[i - 1] * a[n - i];
    if (acc != a[n]) return false;
  }
  return true;
}

}  // namespace beltlab
