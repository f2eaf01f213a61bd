#pragma once

#include <array>
#include <queue>
#include <string>
#include <vector>

#include "beltlab/quiver.hpp"

namespace beltlab {

enum class DynkinFamily { A, D, E, A_affine, D_affine, E_affine };

struct DynkinSpec {
  DynkinFamily family;
  int rank = 0;

  bool affine() const {
    return family == DynkinFamily::A_affine || family == DynkinFamily::D_affine ||
           family == DynkinFamily::E_affine;
  }
};

inline std::string dynkin_string(const DynkinSpec& s) {
  std::string out;
  switch (s.family) {
    case DynkinFamily::A: out = "A"; break;
    case DynkinFamily::D: out = "D"; break;
    case DynkinFamily::E: out = "E"; break;
    case DynkinFamily::A_affine: out = "A~"; break;
    case DynkinFamily::D_affine: out = "D~"; break;
    case DynkinFamily::E_affine: out = "E~"; break;
  }
  return out + std::to_string(s.rank);
}

// "A3", "D4", "E6" and affine "A~1", "D~4", "E~7".
inline DynkinSpec parse_dynkin(const std::string& text) {
  require(!text.empty(), Errc::bad_input, "empty diagram spec");
  size_t pos = 1;
  bool affine = pos < text.size() && text[pos] == '~';
  if (affine) ++pos;
  DynkinFamily family;
  switch (text[0]) {
    case 'A': family = affine ? DynkinFamily::A_affine : DynkinFamily::A; break;
    case 'D': family = affine ? DynkinFamily::D_affine : DynkinFamily::D; break;
    case 'E': family = affine ? DynkinFamily::E_affine : DynkinFamily::E; break;
    default: fail(Errc::bad_input, "unknown diagram family in '" + text + "'");
  }
  require(pos < text.size(), Errc::bad_input, "missing rank in '" + text + "'");
  int rank = 0;
  for (; pos < text.size(); ++pos) {
    require(text[pos] >= '0' && text[pos] <= '9', Errc::bad_input,
            "bad rank in '" + text + "'");
    rank = rank * 10 + (text[pos] - '0');
  }
  return {family, rank};
}

// Undirected bipartite (multi)graph with a fixed 2-colouring; every edge
// joins class 0 to class 1.
struct BipartiteGraph {
  int vertex_count = 0;
  std::vector<std::array<int, 3>> edges;  // {u, v, mult}
  std::vector<int> color;                 // 0 or 1

  void check_invariants() const {
    require_internal(static_cast<int>(color.size()) == vertex_count, "colour count");
    for (const auto& [u, v, mult] : edges) {
      require_internal(u >= 0 && u < vertex_count && v >= 0 && v < vertex_count, "edge range");
      require_internal(mult >= 1, "edge multiplicity");
      require_internal(color[u] != color[v], "edge inside a colour class");
    }
  }
};

namespace detail {

// 2-colour by BFS with vertex 0 (and the first vertex of every component) in
// class 0. Fails on odd cycles.
inline std::vector<int> two_color(int n, const std::vector<std::array<int, 3>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v, mult] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else {
          require(color[v] != color[u], Errc::not_bipartite, "graph has an odd cycle");
        }
      }
    }
  }
  return color;
}

}  // namespace detail

inline BipartiteGraph build_diagram(const DynkinSpec& spec) {
  const int r = spec.rank;
  BipartiteGraph g;
  auto path_edges = [](int from, int to) {
    std::vector<std::array<int, 3>> es;
    for (int i = from; i < to; ++i) es.push_back({i, i + 1, 1});
    return es;
  };
  switch (spec.family) {
    case DynkinFamily::A: {
      require(r >= 1, Errc::bad_rank, "A rank must be >= 1");
      g.vertex_count = r;
      g.edges = path_edges(0, r - 1);
      break;
    }
    case DynkinFamily::D: {
      require(r >= 4, Errc::bad_rank, "D rank must be >= 4");
      g.vertex_count = r;
      g.edges = path_edges(0, r - 3);
      g.edges.push_back({r - 3, r - 2, 1});
      g.edges.push_back({r - 3, r - 1, 1});
      break;
    }
    case DynkinFamily::E: {
      require(r >= 6 && r <= 8, Errc::bad_rank, "E rank must be 6, 7 or 8");
      g.vertex_count = r;
      g.edges = path_edges(0, r - 2);
      g.edges.push_back({2, r - 1, 1});
      break;
    }
    case DynkinFamily::A_affine: {
      require(r >= 1, Errc::bad_rank, "A~ rank must be >= 1");
      require(r % 2 == 1, Errc::not_bipartite,
              "A~ with an even rank is an odd cycle");
      if (r == 1) {
        g.vertex_count = 2;
        g.edges = {{0, 1, 2}};
      } else {
        g.vertex_count = r + 1;
        g.edges = path_edges(0, r);
        g.edges.push_back({r, 0, 1});
      }
      break;
    }
    case DynkinFamily::D_affine: {
      require(r >= 4, Errc::bad_rank, "D~ rank must be >= 4");
      g.vertex_count = r + 1;
      g.edges = {{0, 2, 1}, {1, 2, 1}};
      for (int i = 2; i < r - 2; ++i) g.edges.push_back({i, i + 1, 1});
      g.edges.push_back({r - 2, r - 1, 1});
      g.edges.push_back({r - 2, r, 1});
      break;
    }
    case DynkinFamily::E_affine: {
      require(r >= 6 && r <= 8, Errc::bad_rank, "E~ rank must be 6, 7 or 8");
      g.vertex_count = r + 1;
      if (r == 6) {
        // three legs of length 2 from the centre
        g.edges = {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 5, 1}, {5, 6, 1}};
      } else if (r == 7) {
        g.edges = path_edges(0, 6);
        g.edges.push_back({3, 7, 1});
      } else {
        g.edges = path_edges(0, 7);
        g.edges.push_back({2, 8, 1});
      }
      break;
    }
  }
  g.color = detail::two_color(g.vertex_count, g.edges);
  g.check_invariants();
  return g;
}

inline int coxeter_number(const DynkinSpec& spec) {
  switch (spec.family) {
    case DynkinFamily::A:
      require(spec.rank >= 1, Errc::bad_rank, "A rank must be >= 1");
      return spec.rank + 1;
    case DynkinFamily::D:
      require(spec.rank >= 4, Errc::bad_rank, "D rank must be >= 4");
      return 2 * spec.rank - 2;
    case DynkinFamily::E:
      switch (spec.rank) {
        case 6: return 12;
        case 7: return 18;
        case 8: return 30;
        default: fail(Errc::bad_rank, "E rank must be 6, 7 or 8");
      }
    default:
      fail(Errc::affine_unsupported, "Coxeter number applies to finite families only");
  }
}

// Box product of two bipartite graphs. Vertex (q, q') has id q' * |g| + q.
// The four orientation phases: (0,0)->(1,0)->(1,1)->(0,1)->(0,0), where the
// pair denotes the factor colour classes.
inline Quiver box_product(const BipartiteGraph& g, const BipartiteGraph& h,
                          const std::string& left_name = "",
                          const std::string& right_name = "") {
  g.check_invariants();
  h.check_invariants();
  const int gl = g.vertex_count, hr = h.vertex_count;
  auto id = [gl](int q, int qp) { return qp * gl + q; };
  std::vector<std::array<int, 3>> arrows;
  // Edges of g, one copy per vertex of h. Going from class 0 to class 1 of g
  // when the h-coordinate is in class 0, reversed otherwise.
  for (const auto& [a, b2, mult] : g.edges) {
    const int a0 = g.color[a] == 0 ? a : b2;
    const int a1 = g.color[a] == 0 ? b2 : a;
    for (int qp = 0; qp < hr; ++qp) {
      if (h.color[qp] == 0)
        arrows.push_back({id(a0, qp), id(a1, qp), mult});
      else
        arrows.push_back({id(a1, qp), id(a0, qp), mult});
    }
  }
  // Edges of h, one copy per vertex of g.
  for (const auto& [c, d, mult] : h.edges) {
    const int c0 = h.color[c] == 0 ? c : d;
    const int c1 = h.color[c] == 0 ? d : c;
    for (int q = 0; q < gl; ++q) {
      if (g.color[q] == 1)
        arrows.push_back({id(q, c0), id(q, c1), mult});
      else
        arrows.push_back({id(q, c1), id(q, c0), mult});
    }
  }
  Quiver out = make_quiver(gl * hr, arrows);
  ProductMeta meta;
  meta.left_count = gl;
  meta.right_count = hr;
  meta.left_name = left_name;
  meta.right_name = right_name;
  meta.coords.resize(out.vertex_count);
  meta.colors.resize(out.vertex_count);
  for (int q = 0; q < gl; ++q)
    for (int qp = 0; qp < hr; ++qp) {
      meta.coords[id(q, qp)] = {q, qp};
      meta.colors[id(q, qp)] = {g.color[q], h.color[qp]};
    }
  out.product = std::move(meta);
  return out;
}

inline Quiver box_product(const DynkinSpec& left, const DynkinSpec& right) {
  return box_product(build_diagram(left), build_diagram(right),
                     dynkin_string(left), dynkin_string(right));
}

enum class Color { black, white };

// Black on classes (0,0) and (1,1), white on the rest.
inline std::vector<Color> belt_coloring(const Quiver& q) {
  require(q.product.has_value(), Errc::missing_metadata,
          "quiver carries no box-product metadata; supply a colouring explicitly");
  std::vector<Color> out(q.vertex_count);
  for (int v = 0; v < q.vertex_count; ++v)
    out[v] = q.product->colors[v][0] == q.product->colors[v][1] ? Color::black
                                                                : Color::white;
  return out;
}

}  // namespace beltlab
