#pragma once

#include <optional>
#include <vector>

#include "beltlab/dynkin.hpp"
#include "beltlab/quiver.hpp"

namespace beltlab {

// A seed on the bipartite belt together with the colour schedule and the
// number of full mu_- mu_+ steps applied so far (may be negative). Half-step
// states exist only inside step()/inverse_step().
struct BeltState {
  Seed seed;
  std::vector<Color> coloring;
  long time = 0;
};

inline bool proper_coloring(const Quiver& q, const std::vector<Color>& coloring) {
  if (static_cast<int>(coloring.size()) != q.vertex_count) return false;
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = u + 1; v < q.vertex_count; ++v)
      if (q.b[u][v] != 0 && q.is_mutable(u) && q.is_mutable(v) &&
          coloring[u] == coloring[v])
        return false;
  return true;
}

namespace detail {

inline Quiver mutate_color_class(Quiver q, const std::vector<Color>& coloring, Color c) {
  for (int z = 0; z < q.vertex_count; ++z)
    if (q.is_mutable(z) && coloring[z] == c) q = mutate_quiver(q, z);
  return q;
}

inline std::vector<int> mutable_ids(const Quiver& q) {
  std::vector<int> ids;
  for (int v = 0; v < q.vertex_count; ++v)
    if (q.is_mutable(v)) ids.push_back(v);
  return ids;
}

// Restriction to the mutable vertices; the mutable block of b evolves
// independently of the frozen rows, so this is what recurrence means for
// seeds that carry frozen vertices.
inline Quiver mutable_subquiver(const Quiver& q, const std::vector<int>& ids) {
  Quiver sub;
  sub.vertex_count = static_cast<int>(ids.size());
  sub.b.assign(sub.vertex_count, std::vector<std::int64_t>(sub.vertex_count, 0));
  sub.frozen.assign(sub.vertex_count, false);
  sub.labels.resize(sub.vertex_count);
  for (size_t i = 0; i < ids.size(); ++i) {
    sub.labels[i] = q.labels[ids[i]];
    for (size_t j = 0; j < ids.size(); ++j) sub.b[i][j] = q.b[ids[i]][ids[j]];
  }
  return sub;
}

}  // namespace detail

// True iff mutating all black vertices then all white vertices returns the
// quiver exactly (arrows to frozen vertices included).
inline bool is_recurrent(const Quiver& q, const std::vector<Color>& coloring) {
  require(proper_coloring(q, coloring), Errc::color_clash,
          "an arrow joins two same-coloured vertices");
  Quiver r = detail::mutate_color_class(q, coloring, Color::black);
  r = detail::mutate_color_class(std::move(r), coloring, Color::white);
  return r.same_arrows(q) && r.frozen == q.frozen;
}

inline BeltState make_belt_state(Seed seed, std::vector<Color> coloring) {
  require(static_cast<int>(seed.values.size()) == seed.quiver.vertex_count,
          Errc::bad_input, "seed value count does not match quiver");
  require(proper_coloring(seed.quiver, coloring), Errc::color_clash,
          "an arrow joins two same-coloured mutable vertices");
  const auto ids = detail::mutable_ids(seed.quiver);
  Quiver sub = detail::mutable_subquiver(seed.quiver, ids);
  std::vector<Color> sub_col(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) sub_col[i] = coloring[ids[i]];
  require(is_recurrent(sub, sub_col), Errc::bad_input,
          "quiver is not recurrent under the given colouring");
  return BeltState{std::move(seed), std::move(coloring), 0};
}

inline BeltState belt_from_product(Seed seed) {
  auto coloring = belt_coloring(seed.quiver);
  return make_belt_state(std::move(seed), std::move(coloring));
}

namespace detail {

// Ascending-id order within the class; same-coloured vertices are never
// adjacent, so their mutations commute and this order is just for determinism.
inline void mutate_class_in_place(BeltState& s, Color c) {
  require(proper_coloring(s.seed.quiver, s.coloring), Errc::color_clash,
          "an arrow joins two same-coloured mutable vertices");
  for (int z = 0; z < s.seed.quiver.vertex_count; ++z)
    if (s.seed.quiver.is_mutable(z) && s.coloring[z] == c)
      s.seed = mutate_seed(s.seed, z);
}

}  // namespace detail

inline BeltState mu_plus(BeltState s) {
  detail::mutate_class_in_place(s, Color::black);
  return s;
}

inline BeltState mu_minus(BeltState s) {
  detail::mutate_class_in_place(s, Color::white);
  return s;
}

// One unit of time: mu_+ first, then mu_-.
inline BeltState step(BeltState s) {
  detail::mutate_class_in_place(s, Color::black);
  detail::mutate_class_in_place(s, Color::white);
  s.time += 1;
  return s;
}

inline BeltState inverse_step(BeltState s) {
  detail::mutate_class_in_place(s, Color::white);
  detail::mutate_class_in_place(s, Color::black);
  s.time -= 1;
  return s;
}

// Per-vertex value series over a window of integer times.
struct Trace {
  long t_min = 0;
  std::vector<int> vertices;
  std::vector<std::vector<Rat>> values;  // [watch index][t - t_min]

  long t_max() const {
    return values.empty() ? t_min - 1 : t_min + static_cast<long>(values[0].size()) - 1;
  }

  int row_of(int vertex) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == vertex) return static_cast<int>(i);
    fail(Errc::bad_input, "vertex " + std::to_string(vertex) + " is not traced");
  }

  const Rat& at(int vertex, long t) const {
    const int row = row_of(vertex);
    require(t >= t_min && t <= t_max(), Errc::index_out_of_window,
            "time " + std::to_string(t) + " outside trace window");
    return values[row][static_cast<size_t>(t - t_min)];
  }
};

inline Trace evolve(const BeltState& start, long forward, long backward = 0,
                    std::vector<int> watch = {}) {
  require(forward >= 0 && backward >= 0, Errc::bad_input,
          "forward/backward step counts must be >= 0");
  if (watch.empty())
    for (int v = 0; v < start.seed.quiver.vertex_count; ++v) watch.push_back(v);
  for (int v : watch)
    require(start.seed.quiver.vertex_ok(v), Errc::bad_vertex,
            "watched vertex " + std::to_string(v) + " out of range");

  Trace tr;
  tr.t_min = start.time - backward;
  tr.vertices = watch;
  tr.values.assign(watch.size(), std::vector<Rat>(forward + backward + 1));
  auto record = [&](const BeltState& s) {
    const size_t col = static_cast<size_t>(s.time - tr.t_min);
    for (size_t i = 0; i < watch.size(); ++i)
      tr.values[i][col] = s.seed.values[watch[i]];
  };
  record(start);
  BeltState s = start;
  for (long t = 0; t < backward; ++t) {
    try {
      s = inverse_step(std::move(s));
    } catch (const Error& e) {
      fail(e.code(), "at time " + std::to_string(s.time - 1) + ": " + e.message());
    }
    record(s);
  }
  s = start;
  for (long t = 0; t < forward; ++t) {
    try {
      s = step(std::move(s));
    } catch (const Error& e) {
      fail(e.code(), "at time " + std::to_string(s.time + 1) + ": " + e.message());
    }
    record(s);
  }
  return tr;
}

// Smallest p <= bound with all values and the quiver back at the start.
inline std::optional<long> detect_period(const BeltState& start, long bound) {
  require(bound >= 1, Errc::bad_input, "period bound must be >= 1");
  BeltState s = start;
  for (long p = 1; p <= bound; ++p) {
    s = step(std::move(s));
    if (s.seed.values == start.seed.values && s.seed.quiver.same_arrows(start.seed.quiver))
      return p;
  }
  return std::nullopt;
}

// Orbit of the off-belt variable reached by `word`: a_t is the value at x of
// mutate_many(word) applied to the t-step belt evolution of the start seed.
inline Trace off_belt_trace(const BeltState& start, const std::vector<int>& word,
                            int x, long forward) {
  require(forward >= 0, Errc::bad_input, "forward step count must be >= 0");
  require(start.seed.quiver.vertex_ok(x), Errc::bad_vertex,
          "vertex " + std::to_string(x) + " out of range");
  Trace tr;
  tr.t_min = start.time;
  tr.vertices = {x};
  tr.values.assign(1, std::vector<Rat>(forward + 1));
  BeltState s = start;
  for (long t = 0; t <= forward; ++t) {
    tr.values[0][static_cast<size_t>(t)] = mutate_many(s.seed, word).values[x];
    if (t < forward) s = step(std::move(s));
  }
  return tr;
}

inline std::vector<Rat> all_ones(const Quiver& q) {
  return std::vector<Rat>(q.vertex_count, Rat(1));
}

// Random positive rationals p/q with p, q uniform in [1, 100].
inline std::vector<Rat> random_positive_values(const Quiver& q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rat> vals(q.vertex_count);
  for (auto& v : vals) v = random_rational(rng, 1, 100, 1, 100);
  return vals;
}

}  // namespace beltlab
