#pragma once

// Shared generators for the randomized property tests. Fixed seeds keep the
// suite deterministic.

#include <random>
#include <vector>

#include "beltlab/belt.hpp"
#include "beltlab/quiver.hpp"

namespace testsupport {

using namespace beltlab;

inline Quiver random_test_quiver(std::mt19937_64& rng, int n, int max_mult = 2,
                                 int frozen_count = 0) {
  Quiver q = make_quiver(n, {});
  std::uniform_int_distribution<int> entry(-max_mult, max_mult);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int e = entry(rng);
      q.b[u][v] = e;
      q.b[v][u] = -e;
    }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < frozen_count; ++k) q.frozen[pick(rng)] = true;
  return q;
}

inline std::vector<Rat> random_positive_seed_values(std::mt19937_64& rng, int n,
                                                    long hi = 9) {
  std::vector<Rat> vals(n);
  for (auto& v : vals) v = random_rational(rng, 1, hi, 1, hi);
  return vals;
}

inline int random_mutable_vertex(std::mt19937_64& rng, const Quiver& q) {
  std::vector<int> ids;
  for (int v = 0; v < q.vertex_count; ++v)
    if (q.is_mutable(v)) ids.push_back(v);
  std::uniform_int_distribution<size_t> pick(0, ids.size() - 1);
  return ids[pick(rng)];
}

inline DynkinSpec random_finite_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> which(0, 3);
  switch (which(rng)) {
    case 0: return {DynkinFamily::A, 1};
    case 1: return {DynkinFamily::A, 2};
    case 2: return {DynkinFamily::A, 3};
    default: return {DynkinFamily::D, 4};
  }
}

}  // namespace testsupport
