#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "beltlab/belt.hpp"
#include "beltlab/dynkin.hpp"
#include "beltlab/matrix.hpp"
#include "beltlab/recurrence.hpp"

namespace beltlab {

// Exact realization of the annulus seed: n + n vectors in dimension m+1 and a
// determinant-1 matrix A, with v_{i+n} = A v_i and w_{i+n} = A w_i extending
// the index sets to all integers.
struct AnnulusData {
  int m = 1;
  int n = 1;
  std::vector<Vec> v;  // v_1 .. v_n
  std::vector<Vec> w;  // w_1 .. w_n
  Mat a;
  Mat a_inv;
};

inline AnnulusData make_annulus_data(int m, int n, std::vector<Vec> v,
                                     std::vector<Vec> w, Mat a) {
  require(m >= 1 && n >= 1, Errc::bad_input, "m and n must be >= 1");
  require(static_cast<int>(v.size()) == n && static_cast<int>(w.size()) == n,
          Errc::bad_input, "need n vectors of each kind");
  for (const auto& col : v)
    require(static_cast<int>(col.size()) == m + 1, Errc::bad_input, "vector dimension");
  for (const auto& col : w)
    require(static_cast<int>(col.size()) == m + 1, Errc::bad_input, "vector dimension");
  require(static_cast<int>(a.size()) == m + 1, Errc::bad_input, "matrix dimension");
  require(det_bareiss(a) == 1, Errc::bad_input, "matrix determinant must be exactly 1");
  auto inv = invert(a);
  require_internal(inv.has_value(), "determinant-1 matrix must be invertible");
  return AnnulusData{m, n, std::move(v), std::move(w), std::move(a), std::move(*inv)};
}

// Levi-Civita slot pattern X_{i,j}^{alpha,beta}: columns v_i..v_{i+alpha-1}
// then w_j, w_{j-1}, .., w_{j-beta+1}, with alpha + beta = m+1. alpha = m+1
// and alpha = 0 are the frozen kinds X_i^{m+1,0} and X_j^{0,m+1}.
struct VariableIndex {
  long i = 0;
  long j = 0;
  int alpha = 0;
  int beta = 0;
};

enum class AnnulusKind { v, w };

inline Vec extended_vector(const AnnulusData& d, AnnulusKind kind, long index) {
  const long n = d.n;
  // floor division so that the base index lands in [1, n]
  long k = (index - 1 >= 0) ? (index - 1) / n : -((-(index - 1) + n - 1) / n);
  long base = index - k * n;
  require_internal(base >= 1 && base <= n, "base index out of range");
  Vec out = (kind == AnnulusKind::v) ? d.v[base - 1] : d.w[base - 1];
  for (; k > 0; --k) out = mat_vec(d.a, out);
  for (; k < 0; ++k) out = mat_vec(d.a_inv, out);
  return out;
}

inline Rat plucker_variable(const AnnulusData& d, const VariableIndex& idx) {
  const int dim = d.m + 1;
  require(idx.alpha >= 0 && idx.alpha <= dim && idx.alpha + idx.beta == dim,
          Errc::bad_input, "need alpha + beta = m + 1");
  Mat cols;
  cols.reserve(dim);
  for (int t = 0; t < idx.alpha; ++t) cols.push_back(extended_vector(d, AnnulusKind::v, idx.i + t));
  for (int t = 0; t < idx.beta; ++t) cols.push_back(extended_vector(d, AnnulusKind::w, idx.j - t));
  Mat square(dim, Vec(dim));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) square[r][c] = cols[c][r];
  return det_bareiss(std::move(square));
}

// The three-term determinant identity behind every belt exchange:
//   X_{i+1,j} X_{i,j+1} = X_{i,j}^{a+1,b-1} X_{i+1,j+1}^{a-1,b+1}
//                       + X_{i,j} X_{i+1,j+1},
// with the alpha = m+1 / alpha = 0 factors read as the frozen variables.
inline bool check_exchange(const AnnulusData& d, long i, long j, int alpha, int beta) {
  require(alpha >= 1 && alpha <= d.m && alpha + beta == d.m + 1, Errc::bad_input,
          "need 1 <= alpha <= m and alpha + beta = m + 1");
  const Rat lhs = plucker_variable(d, {i + 1, j, alpha, beta}) *
                  plucker_variable(d, {i, j + 1, alpha, beta});
  const Rat rhs = plucker_variable(d, {i, j, alpha + 1, beta - 1}) *
                      plucker_variable(d, {i + 1, j + 1, alpha - 1, beta + 1}) +
                  plucker_variable(d, {i, j, alpha, beta}) *
                      plucker_variable(d, {i + 1, j + 1, alpha, beta});
  return lhs == rhs;
}

// The initial annulus seed. Mutable part: the box product A_m x A~_{2n-1}
// whose vertex (a0, c0) sits on triangulation diagonal d and level alpha via
// the shear alpha = a0 + 1, d = c0 - alpha (mod 2n), d in [1, 2n]. Diagonal
// d = 2i carries X_{i,i}, diagonal d = 2i-1 carries X_{i,i-1}; odd diagonals
// are the black class. Frozen vertices X_i^{m+1,0} and X_i^{0,m+1} attach on
// the same exchange-monomial side as the level-changing neighbours, which is
// what the exchange identity forces (frozen-frozen arrows are irrelevant and
// omitted).
struct AnnulusSeed {
  Seed seed;
  std::vector<Color> coloring;
  std::vector<VariableIndex> index_map;  // one entry per vertex, frozen included
  int mutable_count = 0;
};

inline AnnulusSeed build_initial_seed(const AnnulusData& d) {
  const int m = d.m, n = d.n;
  const DynkinSpec left{DynkinFamily::A, m};
  const DynkinSpec right{DynkinFamily::A_affine, 2 * n - 1};
  Quiver box = box_product(left, right);
  const int mutable_count = box.vertex_count;  // 2nm
  require_internal(mutable_count == 2 * n * m, "box product vertex count");

  const int total = mutable_count + 2 * n;
  Quiver q;
  q.vertex_count = total;
  q.b.assign(total, std::vector<std::int64_t>(total, 0));
  q.frozen.assign(total, false);
  q.labels.resize(total);
  for (int u = 0; u < mutable_count; ++u) {
    q.labels[u] = box.labels[u];
    for (int v2 = 0; v2 < mutable_count; ++v2) q.b[u][v2] = box.b[u][v2];
  }
  auto fv_id = [&](long i) {
    long base = ((i - 1) % n + n) % n;  // into 0..n-1
    return mutable_count + static_cast<int>(base);
  };
  auto fw_id = [&](long j) {
    long base = ((j - 1) % n + n) % n;
    return mutable_count + n + static_cast<int>(base);
  };
  for (int i = 1; i <= n; ++i) {
    q.frozen[fv_id(i)] = true;
    q.frozen[fw_id(i)] = true;
    q.labels[fv_id(i)] = "v" + std::to_string(i);
    q.labels[fw_id(i)] = "w" + std::to_string(i);
  }

  std::vector<VariableIndex> index_map(total);
  std::vector<Color> coloring(total, Color::white);
  const auto box_colors = belt_coloring(box);

  for (int u = 0; u < mutable_count; ++u) {
    const auto [a0, c0] = box.product->coords[u];
    const int alpha = a0 + 1;
    int diag = static_cast<int>(((c0 - alpha) % (2 * n) + 2 * n) % (2 * n));
    if (diag == 0) diag = 2 * n;
    const long vi = (diag + 1) / 2;  // ceil(d/2)
    const long wj = diag / 2;        // floor(d/2)
    index_map[u] = {vi, wj, alpha, m + 1 - alpha};
    coloring[u] = box_colors[u];
    require_internal((diag % 2 == 1) == (coloring[u] == Color::black),
                     "odd diagonals must be the black class");
    // Frozen factors of the level-changing exchange monomial.
    const bool out = coloring[u] == Color::black;
    if (alpha == m) {
      const int f = fv_id(wj);
      q.b[u][f] += out ? 1 : -1;
      q.b[f][u] -= out ? 1 : -1;
    }
    if (alpha == 1) {
      const int f = fw_id(vi);
      q.b[u][f] += out ? 1 : -1;
      q.b[f][u] -= out ? 1 : -1;
    }
  }
  q.check_invariants();

  Seed seed;
  seed.quiver = std::move(q);
  seed.values.resize(total);
  for (int u = 0; u < mutable_count; ++u) {
    seed.values[u] = plucker_variable(d, index_map[u]);
    require(seed.values[u] != 0, Errc::degenerate,
            "initial seed variable vanished at vertex " + std::to_string(u));
  }
  for (int i = 1; i <= n; ++i) {
    index_map[fv_id(i)] = {i, 0, m + 1, 0};
    index_map[fw_id(i)] = {0, i, 0, m + 1};
    seed.values[fv_id(i)] = plucker_variable(d, index_map[fv_id(i)]);
    seed.values[fw_id(i)] = plucker_variable(d, index_map[fw_id(i)]);
    require(seed.values[fv_id(i)] != 0 && seed.values[fw_id(i)] != 0, Errc::degenerate,
            "frozen variable vanished");
  }
  return AnnulusSeed{std::move(seed), std::move(coloring), std::move(index_map),
                     mutable_count};
}

struct BeltCheck {
  long k = 0;
  bool ok = false;
  int first_bad_vertex = -1;
};

struct BeltVerifyReport {
  bool ok = true;
  std::vector<BeltCheck> checks;
};

// After k steps the vertex that started at X_{i,j} must hold exactly the
// determinant X_{i-k,j+k}; k = n is the double Dehn twist.
inline BeltVerifyReport verify_belt(const AnnulusData& d, int k_max) {
  const AnnulusSeed init = build_initial_seed(d);
  BeltState state = make_belt_state(init.seed, init.coloring);
  BeltVerifyReport report;
  for (int k = 1; k <= k_max; ++k) {
    state = step(std::move(state));
    BeltCheck check{k, true, -1};
    for (int u = 0; u < init.mutable_count && check.ok; ++u) {
      const VariableIndex& idx = init.index_map[u];
      const Rat expect =
          plucker_variable(d, {idx.i - k, idx.j + k, idx.alpha, idx.beta});
      if (state.seed.values[u] != expect) {
        check.ok = false;
        check.first_bad_vertex = u;
        report.ok = false;
      }
    }
    report.checks.push_back(check);
  }
  return report;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

struct OrderBoundRow {
  int vertex = 0;
  VariableIndex idx;
  int j = 0;
  long bound = 0;
  RecurrenceStatus status = RecurrenceStatus::insufficient_data;
  int detected = 0;
  bool within = false;
  bool equality = false;
};

struct OrderBoundReport {
  std::vector<OrderBoundRow> rows;
  bool all_within = true;
};

// Traces every mutable vertex for a window of 2*k_max + 4 terms and compares
// the detected minimal order against n * C(m+1, j) with j = min(alpha, beta).
inline OrderBoundReport order_bound_report(const AnnulusData& d, int k_max) {
  const AnnulusSeed init = build_initial_seed(d);
  long max_bound = 0;
  std::vector<long> bounds(init.mutable_count);
  for (int u = 0; u < init.mutable_count; ++u) {
    const int j = std::min(init.index_map[u].alpha, init.index_map[u].beta);
    bounds[u] = d.n * binomial(d.m + 1, j);
    max_bound = std::max(max_bound, bounds[u]);
  }
  require(k_max >= max_bound, Errc::insufficient_data,
          "k_max below the largest order bound " + std::to_string(max_bound));

  const long window = 2L * k_max + 4;
  std::vector<int> watch(init.mutable_count);
  for (int u = 0; u < init.mutable_count; ++u) watch[u] = u;
  const Trace trace =
      evolve(make_belt_state(init.seed, init.coloring), window - 1, 0, watch);

  OrderBoundReport report;
  for (int u = 0; u < init.mutable_count; ++u) {
    OrderBoundRow row;
    row.vertex = u;
    row.idx = init.index_map[u];
    row.j = std::min(row.idx.alpha, row.idx.beta);
    row.bound = bounds[u];
    const RationalSequence seq{trace.values[u], trace.t_min};
    const RecurrenceReport rep = minimal_order(seq, static_cast<int>(row.bound));
    row.status = rep.status;
    row.detected = rep.order;
    row.within = rep.status == RecurrenceStatus::found;
    row.equality = row.within && rep.order == row.bound;
    if (!row.within) report.all_within = false;
    report.rows.push_back(row);
  }
  return report;
}

// Generic data supplier: vector entries are random rationals in [1, 20] and A
// is a product of 2(m+1) elementary shears, so det A = 1 exactly. Retries
// until the initial seed is non-degenerate.
inline AnnulusData random_annulus_data(int m, int n, std::uint64_t seed) {
  require(m >= 1 && n >= 1, Errc::bad_input, "m and n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(1, 4), times20(1, 20), small(1, 5),
      sden(1, 3), coin(0, 1);
  auto entry = [&]() {
    const long q = den(rng);
    std::uniform_int_distribution<long> num(q, 20 * q);
    return make_rat(num(rng), q);
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> v(n, Vec(m + 1)), w(n, Vec(m + 1));
    for (auto& col : v)
      for (auto& x : col) x = entry();
    for (auto& col : w)
      for (auto& x : col) x = entry();
    Mat a = identity_matrix(m + 1);
    std::uniform_int_distribution<int> pos(0, m);
    for (int t = 0; t < 2 * (m + 1); ++t) {
      int r = pos(rng), c = pos(rng);
      if (r == c) c = (c + 1) % (m + 1);
      Mat shear = identity_matrix(m + 1);
      Rat val = make_rat(small(rng), sden(rng));
      if (coin(rng)) val = -val;
      shear[r][c] = val;
      a = mat_mul(a, shear);
    }
    require_internal(det_bareiss(a) == 1, "shear product must have determinant 1");
    AnnulusData data = make_annulus_data(m, n, std::move(v), std::move(w), std::move(a));
    try {
      build_initial_seed(data);
      return data;
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate) throw;
    }
  }
  fail(Errc::genericity_failure, "no generic data after 64 attempts");
}

}  // namespace beltlab
