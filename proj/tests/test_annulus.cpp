#include <doctest.h>

#include <random>

#include "beltlab/annulus.hpp"

using namespace beltlab;

namespace {

AnnulusData small_data(int m, int n, std::uint64_t seed = 17) {
  return random_annulus_data(m, n, seed);
}

}  // namespace

TEST_CASE("extended vectors: stored range, A-shifts and round trips") {
  const AnnulusData d = small_data(2, 2);
  for (int i = 1; i <= d.n; ++i)
    CHECK(extended_vector(d, AnnulusKind::v, i) == d.v[i - 1]);
  CHECK(extended_vector(d, AnnulusKind::v, d.n + 1) == mat_vec(d.a, d.v[0]));
  CHECK(extended_vector(d, AnnulusKind::w, d.n + 2) == mat_vec(d.a, d.w[1]));
  // v_{1-n} = A^{-1} v_1
  CHECK(extended_vector(d, AnnulusKind::v, 1 - d.n) == mat_vec(d.a_inv, d.v[0]));
  // round trip: shifting down then up is the identity
  for (long i : {-3L, 0L, 1L, 5L}) {
    const Vec down = extended_vector(d, AnnulusKind::w, i - d.n);
    CHECK(mat_vec(d.a, down) == extended_vector(d, AnnulusKind::w, i));
  }
}

TEST_CASE("plucker variables for m = n = 2 match their column lists") {
  const AnnulusData d = small_data(2, 2);
  // X_{3,2}^{2,1} = <A v_1, A v_2, w_2>
  Mat cols{mat_vec(d.a, d.v[0]), mat_vec(d.a, d.v[1]), d.w[1]};
  Mat square(3, Vec(3));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) square[r][c] = cols[c][r];
  CHECK(plucker_variable(d, {3, 2, 2, 1}) == det_bareiss(square));
}

TEST_CASE("plucker variables are invariant under shifting both indices by n") {
  const AnnulusData d = small_data(2, 2);
  for (long i = -1; i <= 2; ++i)
    for (long j = -1; j <= 2; ++j)
      for (int alpha = 0; alpha <= d.m + 1; ++alpha) {
        const VariableIndex idx{i, j, alpha, d.m + 1 - alpha};
        const VariableIndex shifted{i + d.n, j + d.n, alpha, d.m + 1 - alpha};
        CHECK(plucker_variable(d, idx) == plucker_variable(d, shifted));
      }
}

TEST_CASE("a repeated column kills the determinant") {
  // with A = I and n = 1 the extension rule gives v_2 = v_1, so any alpha >= 2
  // slot pattern repeats a column
  const AnnulusData d = make_annulus_data(
      1, 1, {{Rat(2), Rat(3)}}, {{Rat(5), Rat(7)}}, identity_matrix(2));
  CHECK(plucker_variable(d, {1, 0, 2, 0}) == 0);
  CHECK(plucker_variable(d, {0, 1, 0, 2}) == 0);
  CHECK(plucker_variable(d, {1, 1, 1, 1}) != 0);
}

TEST_CASE("exchange identity holds exactly") {
  // smallest case by hand-checkable 2x2 determinants
  const AnnulusData tiny = small_data(1, 1);
  for (long i = -2; i <= 2; ++i)
    for (long j = -2; j <= 2; ++j) CHECK(check_exchange(tiny, i, j, 1, 1));

  std::mt19937_64 rng(5150);
  for (auto [m, n] : {std::pair{1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    const AnnulusData d = small_data(m, n, 23);
    std::uniform_int_distribution<long> idx(-2, 3 * n + 2);
    std::uniform_int_distribution<int> al(1, m);
    for (int trial = 0; trial < 100; ++trial) {
      const int alpha = al(rng);
      CHECK(check_exchange(d, idx(rng), idx(rng), alpha, m + 1 - alpha));
    }
  }

  // degenerate data: the identity is polynomial, so it still holds
  AnnulusData deg = small_data(2, 2, 29);
  deg.v[1] = deg.v[0];
  for (int alpha = 1; alpha <= 2; ++alpha)
    CHECK(check_exchange(deg, 1, 1, alpha, 3 - alpha));
}

TEST_CASE("initial seed counts and planted values") {
  const AnnulusData d = small_data(2, 2);
  const AnnulusSeed init = build_initial_seed(d);
  CHECK(init.mutable_count == 2 * d.n * d.m);
  CHECK(init.seed.quiver.vertex_count == 2 * d.n * d.m + 2 * d.n);
  int frozen = 0;
  for (int v = 0; v < init.seed.quiver.vertex_count; ++v)
    frozen += init.seed.quiver.frozen[v];
  CHECK(frozen == 2 * d.n);
  for (int u = 0; u < init.seed.quiver.vertex_count; ++u)
    CHECK(init.seed.values[u] == plucker_variable(d, init.index_map[u]));

  const AnnulusData tiny = small_data(1, 1);
  const AnnulusSeed tiny_seed = build_initial_seed(tiny);
  CHECK(tiny_seed.mutable_count == 2);
  CHECK(tiny_seed.seed.quiver.vertex_count == 4);
}

TEST_CASE("mutating X_{i+1,j} yields exactly X_{i,j+1}") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    const AnnulusData d = small_data(m, n, 31);
    const AnnulusSeed init = build_initial_seed(d);
    for (int u = 0; u < init.mutable_count; ++u) {
      if (init.coloring[u] != Color::black) continue;
      const VariableIndex& idx = init.index_map[u];
      const Seed mutated = mutate_seed(init.seed, u);
      CHECK(mutated.values[u] ==
            plucker_variable(d, {idx.i - 1, idx.j + 1, idx.alpha, idx.beta}));
    }
  }
}

TEST_CASE("belt evolution matches the predicted determinants; Dehn twist at k = n") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    const AnnulusData d = small_data(m, n, 37);
    const BeltVerifyReport rep = verify_belt(d, 2 * n);
    CHECK(rep.ok);
    CHECK(static_cast<int>(rep.checks.size()) == 2 * n);
    // the k = n check is the double Dehn twist identity
    CHECK(rep.checks[static_cast<size_t>(n - 1)].ok);
  }
}

TEST_CASE("order bounds: detected <= n * C(m+1, j)") {
  const AnnulusData d31 = small_data(3, 1, 1);
  const OrderBoundReport rep31 = order_bound_report(d31, 6);
  CHECK(rep31.all_within);
  for (const auto& row : rep31.rows) {
    if (row.j == 1) {
      CHECK(row.bound == 4);
      CHECK(row.detected == 4);
    } else {
      CHECK(row.j == 2);
      CHECK(row.bound == 6);
      CHECK(row.detected <= 6);
    }
  }

  // m = 1 forces j = 1 and the bound 2n
  const AnnulusData d12 = small_data(1, 2, 2);
  const OrderBoundReport rep12 = order_bound_report(d12, 4);
  CHECK(rep12.all_within);
  for (const auto& row : rep12.rows) {
    CHECK(row.bound == 2 * d12.n);
    CHECK(row.detected == 2 * d12.n);
  }

  CHECK_THROWS_WITH_AS(static_cast<void>(order_bound_report(d31, 2)),
                       doctest::Contains("InsufficientData"), Error);
}

TEST_CASE("random data is reproducible and has determinant one") {
  const AnnulusData a = random_annulus_data(2, 2, 99);
  const AnnulusData b = random_annulus_data(2, 2, 99);
  CHECK(a.v == b.v);
  CHECK(a.w == b.w);
  CHECK(a.a == b.a);
  CHECK(det_bareiss(a.a) == 1);
  const AnnulusData c = random_annulus_data(2, 2, 100);
  CHECK(a.v != c.v);
}

TEST_CASE("binomial helper") {
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}
