#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "beltlab/belt.hpp"
#include "beltlab/dynkin.hpp"
#include "beltlab/quiver.hpp"

namespace beltlab {

using json = nlohmann::json;

// Quiver JSON: {"vertices":[{"id":0,"frozen":false,"label":"x1"},...],
//               "arrows":[[u,v,mult],...]}
// with mult >= 1 and no pair listed in both directions. Optional extensions
// written by this tool and tolerated on read: per-vertex "color" and
// "factor", top-level "product" metadata, and "values" for seeds.
struct QuiverDocument {
  Quiver quiver;
  std::optional<std::vector<Rat>> values;
  std::optional<std::vector<Color>> coloring;
};

inline json quiver_to_json(const QuiverDocument& doc) {
  const Quiver& q = doc.quiver;
  json vertices = json::array();
  for (int v = 0; v < q.vertex_count; ++v) {
    json vert{{"id", v}, {"frozen", static_cast<bool>(q.frozen[v])}, {"label", q.labels[v]}};
    if (doc.coloring)
      vert["color"] = (*doc.coloring)[v] == Color::black ? "black" : "white";
    if (q.product) vert["factor"] = q.product->coords[v];
    vertices.push_back(std::move(vert));
  }
  json arrows = json::array();
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = 0; v < q.vertex_count; ++v)
      if (q.b[u][v] > 0) arrows.push_back({u, v, q.b[u][v]});
  json out{{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
  if (q.product) {
    out["product"] = {{"left", q.product->left_name},
                      {"right", q.product->right_name},
                      {"left_count", q.product->left_count},
                      {"right_count", q.product->right_count}};
    json colors = json::array();
    for (const auto& c : q.product->colors) colors.push_back(c);
    out["product"]["factor_colors"] = std::move(colors);
  }
  if (doc.values) {
    json vals = json::array();
    for (const auto& r : *doc.values) vals.push_back(rat_string(r));
    out["values"] = std::move(vals);
  }
  return out;
}

inline QuiverDocument quiver_from_json(const json& in) {
  require(in.contains("vertices") && in["vertices"].is_array(), Errc::bad_input,
          "missing vertices array");
  const auto& vertices = in["vertices"];
  const int n = static_cast<int>(vertices.size());
  std::vector<std::string> labels(n);
  std::vector<int> frozen_ids;
  std::vector<Color> colors(n, Color::black);
  bool any_color = false;
  std::vector<bool> seen(n, false);
  for (const auto& vert : vertices) {
    require(vert.contains("id") && vert["id"].is_number_integer(), Errc::bad_input,
            "vertex without integer id");
    const int id = vert["id"].get<int>();
    require(id >= 0 && id < n, Errc::bad_input, "vertex ids must be 0..n-1");
    require(!seen[id], Errc::bad_input, "duplicate vertex id");
    seen[id] = true;
    if (vert.contains("frozen") && vert["frozen"].get<bool>()) frozen_ids.push_back(id);
    labels[id] = vert.value("label", "x" + std::to_string(id + 1));
    if (vert.contains("color")) {
      any_color = true;
      const std::string c = vert["color"].get<std::string>();
      require(c == "black" || c == "white", Errc::bad_input, "vertex color must be black or white");
      colors[id] = c == "black" ? Color::black : Color::white;
    }
  }
  std::vector<std::array<int, 3>> arrows;
  if (in.contains("arrows")) {
    for (const auto& arr : in["arrows"]) {
      require(arr.is_array() && arr.size() == 3, Errc::bad_input,
              "arrows must be [u, v, mult] triples");
      arrows.push_back({arr[0].get<int>(), arr[1].get<int>(), arr[2].get<int>()});
    }
  }
  QuiverDocument doc;
  doc.quiver = make_quiver(n, arrows, frozen_ids);
  doc.quiver.labels = std::move(labels);
  if (in.contains("product")) {
    const auto& prod = in["product"];
    ProductMeta meta;
    meta.left_name = prod.value("left", "");
    meta.right_name = prod.value("right", "");
    meta.left_count = prod.value("left_count", 0);
    meta.right_count = prod.value("right_count", 0);
    meta.coords.resize(n);
    meta.colors.resize(n);
    for (const auto& vert : vertices) {
      const int id = vert["id"].get<int>();
      if (vert.contains("factor")) {
        meta.coords[id] = {vert["factor"][0].get<int>(), vert["factor"][1].get<int>()};
      }
    }
    if (prod.contains("factor_colors")) {
      const auto& fc = prod["factor_colors"];
      require(static_cast<int>(fc.size()) == n, Errc::bad_input, "factor_colors size");
      for (int v = 0; v < n; ++v) meta.colors[v] = {fc[v][0].get<int>(), fc[v][1].get<int>()};
    }
    doc.quiver.product = std::move(meta);
  }
  if (any_color) doc.coloring = std::move(colors);
  if (in.contains("values")) {
    const auto& vals = in["values"];
    require(static_cast<int>(vals.size()) == n, Errc::bad_input,
            "values length must equal vertex count");
    std::vector<Rat> values(n);
    for (int v = 0; v < n; ++v) values[v] = parse_rational(vals[v].get<std::string>());
    doc.values = std::move(values);
  }
  return doc;
}

// Fallback when a quiver arrives without colors: 2-colour the underlying
// graph with vertex 0 black. For connected box products this matches the
// canonical belt colouring.
inline std::vector<Color> bipartition_coloring(const Quiver& q) {
  std::vector<std::array<int, 3>> edges;
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = u + 1; v < q.vertex_count; ++v)
      if (q.b[u][v] != 0) edges.push_back({u, v, 1});
  const auto classes = detail::two_color(q.vertex_count, edges);
  std::vector<Color> coloring(q.vertex_count);
  for (int v = 0; v < q.vertex_count; ++v)
    coloring[v] = classes[v] == 0 ? Color::black : Color::white;
  return coloring;
}

// Trace CSV: header "time,vertex,value", rows ordered by time then vertex,
// values as decimal-free rational strings.
inline std::string trace_to_csv(const Trace& trace) {
  std::ostringstream out;
  out << "time,vertex,value\n";
  for (long t = trace.t_min; t <= trace.t_max(); ++t)
    for (size_t i = 0; i < trace.vertices.size(); ++i)
      out << t << ',' << trace.vertices[i] << ','
          << rat_string(trace.values[i][static_cast<size_t>(t - trace.t_min)]) << '\n';
  return out.str();
}

inline Trace trace_from_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), Errc::bad_input, "empty trace file");
  struct Cell {
    long t;
    int vertex;
    Rat value;
  };
  std::vector<Cell> cells;
  long t_min = 0, t_max = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string t_str, v_str, val_str;
    require(static_cast<bool>(std::getline(row, t_str, ',')) &&
                static_cast<bool>(std::getline(row, v_str, ',')) &&
                static_cast<bool>(std::getline(row, val_str)),
            Errc::bad_input, "bad trace row: " + line);
    Cell cell{std::stol(t_str), std::stoi(v_str), parse_rational(val_str)};
    if (first || cell.t < t_min) t_min = cell.t;
    if (first || cell.t > t_max) t_max = cell.t;
    first = false;
    cells.push_back(std::move(cell));
  }
  require(!cells.empty(), Errc::bad_input, "trace has no rows");
  Trace trace;
  trace.t_min = t_min;
  const size_t width = static_cast<size_t>(t_max - t_min + 1);
  for (const auto& cell : cells) {
    int row = -1;
    for (size_t i = 0; i < trace.vertices.size(); ++i)
      if (trace.vertices[i] == cell.vertex) row = static_cast<int>(i);
    if (row < 0) {
      trace.vertices.push_back(cell.vertex);
      trace.values.emplace_back(width);
      row = static_cast<int>(trace.vertices.size()) - 1;
    }
    trace.values[row][static_cast<size_t>(cell.t - t_min)] = cell.value;
  }
  return trace;
}

}  // namespace beltlab
