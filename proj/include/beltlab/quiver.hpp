#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beltlab/rational.hpp"

namespace beltlab {

// Metadata kept on quivers built as box products: factor coordinates and the
// factor colour class of each coordinate, per product vertex. Needed by the
// belt colouring and by the per-vertex recurrence-order bounds.
struct ProductMeta {
  int left_count = 0;
  int right_count = 0;
  std::string left_name;   // e.g. "A3"
  std::string right_name;  // e.g. "A~1"
  std::vector<std::array<int, 2>> coords;  // vertex -> (q, q')
  std::vector<std::array<int, 2>> colors;  // vertex -> (class of q, class of q')
};

// Skew-symmetric exchange matrix form: b[u][v] > 0 means b[u][v] arrows
// u -> v. Directed 2-cycles cancel, so b encodes the quiver exactly and the
// drawn-graph form is recovered as max(b, 0).
struct Quiver {
  int vertex_count = 0;
  std::vector<std::vector<std::int64_t>> b;
  std::vector<bool> frozen;
  std::vector<std::string> labels;
  std::optional<ProductMeta> product;

  bool vertex_ok(int v) const { return v >= 0 && v < vertex_count; }
  bool is_mutable(int v) const { return vertex_ok(v) && !frozen[v]; }
  std::int64_t arrows(int u, int v) const { return b[u][v] > 0 ? b[u][v] : 0; }

  bool same_arrows(const Quiver& other) const {
    return vertex_count == other.vertex_count && b == other.b;
  }

  void check_invariants() const {
    require_internal(static_cast<int>(b.size()) == vertex_count, "b row count");
    require_internal(static_cast<int>(frozen.size()) == vertex_count, "frozen size");
    for (int u = 0; u < vertex_count; ++u) {
      require_internal(static_cast<int>(b[u].size()) == vertex_count, "b column count");
      require_internal(b[u][u] == 0, "loop in exchange matrix");
      for (int v = 0; v < u; ++v)
        require_internal(b[u][v] == -b[v][u], "exchange matrix not skew-symmetric");
    }
  }
};

inline Quiver make_quiver(int vertex_count,
                          const std::vector<std::array<int, 3>>& arrows,
                          const std::vector<int>& frozen_ids = {}) {
  require(vertex_count >= 0, Errc::bad_input, "negative vertex count");
  Quiver q;
  q.vertex_count = vertex_count;
  q.b.assign(vertex_count, std::vector<std::int64_t>(vertex_count, 0));
  q.frozen.assign(vertex_count, false);
  q.labels.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) q.labels[v] = "x" + std::to_string(v + 1);
  for (const auto& [u, v, mult] : arrows) {
    require(q.vertex_ok(u) && q.vertex_ok(v), Errc::bad_input, "arrow endpoint out of range");
    require(u != v, Errc::bad_input, "loops are not allowed");
    require(mult >= 1, Errc::bad_input, "arrow multiplicity must be >= 1");
    require(q.b[u][v] == 0 && q.b[v][u] == 0, Errc::bad_input,
            "vertex pair listed twice in arrow list");
    q.b[u][v] = mult;
    q.b[v][u] = -mult;
  }
  for (int f : frozen_ids) {
    require(q.vertex_ok(f), Errc::bad_input, "frozen id out of range");
    q.frozen[f] = true;
  }
  q.check_invariants();
  return q;
}

inline Quiver mutate_quiver(const Quiver& q, int z) {
  require(q.vertex_ok(z), Errc::bad_vertex,
          "vertex " + std::to_string(z) + " out of range");
  require(!q.frozen[z], Errc::frozen_vertex,
          "vertex " + std::to_string(z) + " is frozen");
  Quiver r = q;
  const auto& b = q.b;
  const int n = q.vertex_count;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == z || v == z) {
        r.b[u][v] = -b[u][v];
      } else if (b[u][z] > 0 && b[z][v] > 0) {
        r.b[u][v] = b[u][v] + b[u][z] * b[z][v];
      } else if (b[u][z] < 0 && b[z][v] < 0) {
        r.b[u][v] = b[u][v] - b[u][z] * b[z][v];
      }
    }
  r.check_invariants();
  return r;
}

// One variable per vertex. Values must be nonzero to mutate; positivity is a
// property of the data, not an invariant of the type.
struct Seed {
  Quiver quiver;
  std::vector<Rat> values;
};

// prod_{y->z} y^mult + prod_{z->y} y^mult, multiplicities as exponents.
inline Rat exchange_numerator(const Seed& s, int z) {
  Rat in(1), out(1);
  const auto& b = s.quiver.b;
  for (int u = 0; u < s.quiver.vertex_count; ++u) {
    if (b[u][z] > 0) in *= rat_pow(s.values[u], static_cast<unsigned long>(b[u][z]));
    if (b[z][u] > 0) out *= rat_pow(s.values[u], static_cast<unsigned long>(b[z][u]));
  }
  return in + out;
}

inline Seed mutate_seed(const Seed& s, int z) {
  require(static_cast<int>(s.values.size()) == s.quiver.vertex_count, Errc::bad_input,
          "seed value count does not match quiver");
  require(s.quiver.vertex_ok(z), Errc::bad_vertex,
          "vertex " + std::to_string(z) + " out of range");
  require(!s.quiver.frozen[z], Errc::frozen_vertex,
          "vertex " + std::to_string(z) + " is frozen");
  require(s.values[z] != 0, Errc::division_by_zero,
          "value at vertex " + std::to_string(z) + " is zero");
  Seed r;
  r.values = s.values;
  r.values[z] = exchange_numerator(s, z) / s.values[z];
  r.quiver = mutate_quiver(s.quiver, z);
  return r;
}

// Left-to-right composition of mutate_seed; errors carry the word position.
inline Seed mutate_many(Seed s, const std::vector<int>& word) {
  for (size_t k = 0; k < word.size(); ++k) {
    try {
      s = mutate_seed(s, word[k]);
    } catch (const Error& e) {
      fail(e.code(), "at word position " + std::to_string(k) + ": " + e.message());
    }
  }
  return s;
}

}  // namespace beltlab
