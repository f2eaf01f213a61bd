#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beltlab/belt.hpp"
#include "beltlab/quiver.hpp"
#include "beltlab/simplex.hpp"

namespace beltlab {

// Vertex labellings nu > 0 with 2 nu(z) >= max(in-sum, out-sum), where the
// sums count arrow multiplicities. Strict: both inequalities strict. Plain:
// equality at the max only where in-sum != out-sum. Weak: just the
// inequalities.
struct LabellingProblem {
  Quiver quiver;
};

inline LabellingProblem make_labelling_problem(Quiver q) {
  require(q.vertex_count >= 1, Errc::bad_input, "labelling needs at least one vertex");
  for (int v = 0; v < q.vertex_count; ++v)
    require(!q.frozen[v], Errc::bad_input, "labelling problems take no frozen vertices");
  return {std::move(q)};
}

enum class TightStatus { slack, tight_in, tight_out };

inline const char* tight_name(TightStatus t) {
  switch (t) {
    case TightStatus::slack: return "slack";
    case TightStatus::tight_in: return "tight-in";
    case TightStatus::tight_out: return "tight-out";
  }
  return "?";
}

enum class LabellingClass { Strict, PlainOnly, WeakOnly, None };

inline const char* class_name(LabellingClass c) {
  switch (c) {
    case LabellingClass::Strict: return "Strict";
    case LabellingClass::PlainOnly: return "PlainOnly";
    case LabellingClass::WeakOnly: return "WeakOnly";
    case LabellingClass::None: return "None";
  }
  return "?";
}

namespace detail {

inline Rat in_sum(const Quiver& q, const std::vector<Rat>& nu, int z) {
  Rat s(0);
  for (int u = 0; u < q.vertex_count; ++u)
    if (q.b[u][z] > 0) s += Rat(static_cast<long>(q.b[u][z])) * nu[u];
  return s;
}

inline Rat out_sum(const Quiver& q, const std::vector<Rat>& nu, int z) {
  Rat s(0);
  for (int u = 0; u < q.vertex_count; ++u)
    if (q.b[z][u] > 0) s += Rat(static_cast<long>(q.b[z][u])) * nu[u];
  return s;
}

// Linear form 2 nu_z - in_sum(z) (resp. out) as a coefficient row over the
// variables (nu_0..nu_{V-1}, s).
inline Vec margin_row(const Quiver& q, int z, bool incoming) {
  const int V = q.vertex_count;
  Vec row(V + 1, Rat(0));
  row[z] += 2;
  for (int u = 0; u < V; ++u) {
    const auto mult = incoming ? q.b[u][z] : q.b[z][u];
    if (mult > 0) row[u] -= static_cast<long>(mult);
  }
  return row;
}

inline Vec in_minus_out_row(const Quiver& q, int z) {
  const int V = q.vertex_count;
  Vec row(V + 1, Rat(0));
  for (int u = 0; u < V; ++u) {
    if (q.b[u][z] > 0) row[u] += static_cast<long>(q.b[u][z]);
    if (q.b[z][u] > 0) row[u] -= static_cast<long>(q.b[z][u]);
  }
  return row;
}

struct LabellingLp {
  int nvars;  // V labels plus the slack variable s (last)
  std::vector<LpRow> rows;

  explicit LabellingLp(const Quiver& q) : nvars(q.vertex_count + 1) {
    // sum nu = 1 and nu_z >= s for all z.
    Vec total(nvars, Rat(0));
    for (int v = 0; v < q.vertex_count; ++v) total[v] = 1;
    rows.push_back({total, Rel::eq, Rat(1)});
    for (int z = 0; z < q.vertex_count; ++z) {
      Vec row(nvars, Rat(0));
      row[z] = 1;
      row[nvars - 1] = -1;
      rows.push_back({row, Rel::ge, Rat(0)});
    }
  }

  void add(Vec row, Rel rel) { rows.push_back({std::move(row), rel, Rat(0)}); }
};

inline std::optional<std::vector<Rat>> maximize_slack(const Quiver& q, LabellingLp lp) {
  Vec objective(lp.nvars, Rat(0));
  objective[lp.nvars - 1] = 1;
  const LpSolution sol = solve_lp(lp.nvars, std::move(lp.rows), objective);
  if (sol.status != LpStatus::optimal || sol.value <= 0) return std::nullopt;
  return std::vector<Rat>(sol.x.begin(), sol.x.begin() + q.vertex_count);
}

}  // namespace detail

// Direct exact evaluation of the defining inequalities; independent of the
// LP route that produced the certificate.
inline bool verify_weak(const Quiver& q, const std::vector<Rat>& nu) {
  if (static_cast<int>(nu.size()) != q.vertex_count) return false;
  for (int z = 0; z < q.vertex_count; ++z) {
    if (nu[z] <= 0) return false;
    const Rat twice = 2 * nu[z];
    if (twice < detail::in_sum(q, nu, z) || twice < detail::out_sum(q, nu, z))
      return false;
  }
  return true;
}

inline bool verify_strict(const Quiver& q, const std::vector<Rat>& nu) {
  if (static_cast<int>(nu.size()) != q.vertex_count) return false;
  for (int z = 0; z < q.vertex_count; ++z) {
    if (nu[z] <= 0) return false;
    const Rat twice = 2 * nu[z];
    if (twice <= detail::in_sum(q, nu, z) || twice <= detail::out_sum(q, nu, z))
      return false;
  }
  return true;
}

inline bool verify_plain(const Quiver& q, const std::vector<Rat>& nu) {
  if (!verify_weak(q, nu)) return false;
  for (int z = 0; z < q.vertex_count; ++z) {
    const Rat in = detail::in_sum(q, nu, z);
    const Rat out = detail::out_sum(q, nu, z);
    const Rat mx = in > out ? in : out;
    if (2 * nu[z] == mx && in == out) return false;
  }
  return true;
}

// maximize eps subject to 2 nu(z) - in >= 2 eps, 2 nu(z) - out >= 2 eps,
// nu(z) >= eps, sum nu = 1; labels returned iff eps* > 0.
inline std::optional<std::vector<Rat>> find_strict(const LabellingProblem& p) {
  const Quiver& q = p.quiver;
  detail::LabellingLp lp(q);
  const int s = lp.nvars - 1;
  for (int z = 0; z < q.vertex_count; ++z) {
    for (bool incoming : {true, false}) {
      Vec row = detail::margin_row(q, z, incoming);
      row[s] = -2;
      lp.add(std::move(row), Rel::ge);
    }
  }
  auto labels = detail::maximize_slack(q, std::move(lp));
  if (labels) require_internal(verify_strict(q, *labels), "strict certificate failed re-verification");
  return labels;
}

// Weak inequalities without slack; delta only enforces positivity of nu.
inline std::optional<std::vector<Rat>> find_weak(const LabellingProblem& p) {
  const Quiver& q = p.quiver;
  detail::LabellingLp lp(q);
  for (int z = 0; z < q.vertex_count; ++z) {
    lp.add(detail::margin_row(q, z, true), Rel::ge);
    lp.add(detail::margin_row(q, z, false), Rel::ge);
  }
  auto labels = detail::maximize_slack(q, std::move(lp));
  if (labels) require_internal(verify_weak(q, *labels), "weak certificate failed re-verification");
  return labels;
}

struct PlainCertificate {
  std::vector<Rat> labels;
  std::vector<TightStatus> pattern;
};

namespace detail {

// Pattern LP: assigned vertices carry their exact status constraints with a
// shared strictness slack, unassigned ones keep the weak inequalities (which
// every status implies), so a non-positive optimum prunes the whole subtree.
inline bool pattern_lp(const Quiver& q, const std::vector<int>& status, int assigned,
                       std::vector<Rat>* labels_out) {
  LabellingLp lp(q);
  const int s = lp.nvars - 1;
  for (int z = 0; z < q.vertex_count; ++z) {
    if (z >= assigned) {
      lp.add(margin_row(q, z, true), Rel::ge);
      lp.add(margin_row(q, z, false), Rel::ge);
      continue;
    }
    switch (static_cast<TightStatus>(status[z])) {
      case TightStatus::slack: {
        for (bool incoming : {true, false}) {
          Vec row = margin_row(q, z, incoming);
          row[s] = -2;
          lp.add(std::move(row), Rel::ge);
        }
        break;
      }
      case TightStatus::tight_in: {
        lp.add(margin_row(q, z, true), Rel::eq);
        Vec row = in_minus_out_row(q, z);
        row[s] = -1;
        lp.add(std::move(row), Rel::ge);
        break;
      }
      case TightStatus::tight_out: {
        lp.add(margin_row(q, z, false), Rel::eq);
        Vec row = in_minus_out_row(q, z);
        for (auto& c : row) c = -c;
        row[s] = -1;
        lp.add(std::move(row), Rel::ge);
        break;
      }
    }
  }
  auto labels = maximize_slack(q, std::move(lp));
  if (!labels) return false;
  if (labels_out) *labels_out = std::move(*labels);
  return true;
}

inline std::optional<PlainCertificate> plain_dfs(const Quiver& q, std::vector<int>& status,
                                                 int pos) {
  const int V = q.vertex_count;
  for (int st = 0; st < 3; ++st) {
    status[pos] = st;
    std::vector<Rat> labels;
    if (!pattern_lp(q, status, pos + 1, pos + 1 == V ? &labels : nullptr)) continue;
    if (pos + 1 == V) {
      PlainCertificate cert;
      cert.labels = std::move(labels);
      cert.pattern.resize(V);
      for (int z = 0; z < V; ++z) cert.pattern[z] = static_cast<TightStatus>(status[z]);
      return cert;
    }
    if (auto cert = plain_dfs(q, status, pos + 1)) return cert;
  }
  return std::nullopt;
}

}  // namespace detail

// Strict short-circuit, then depth-first enumeration of per-vertex statuses
// in {slack, tight-in, tight-out} order; the first feasible pattern with a
// positive strictness slack wins. Capped at 16 vertices (3^|Q| patterns).
inline std::optional<PlainCertificate> find_plain(const LabellingProblem& p) {
  const Quiver& q = p.quiver;
  require(q.vertex_count <= 16, Errc::too_large,
          "plain labelling search is capped at 16 vertices");
  if (auto strict = find_strict(p)) {
    PlainCertificate cert;
    cert.labels = std::move(*strict);
    cert.pattern.assign(q.vertex_count, TightStatus::slack);
    return cert;
  }
  std::vector<int> status(q.vertex_count, 0);
  auto cert = detail::plain_dfs(q, status, 0);
  if (cert) require_internal(verify_plain(q, cert->labels), "plain certificate failed re-verification");
  return cert;
}

struct LabellingResult {
  LabellingClass classification = LabellingClass::None;
  std::optional<std::vector<Rat>> labels;
  std::optional<std::vector<TightStatus>> tight_pattern;
  // Whether the quiver is recurrent under its bipartition (the classification
  // conjectures only apply when it is); absent when the underlying graph is
  // not 2-colourable.
  std::optional<bool> recurrent;
};

namespace detail {

inline std::optional<bool> recurrence_check(const Quiver& q) {
  std::vector<std::array<int, 3>> edges;
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = u + 1; v < q.vertex_count; ++v)
      if (q.b[u][v] != 0) edges.push_back({u, v, 1});
  try {
    const auto classes = two_color(q.vertex_count, edges);
    std::vector<Color> coloring(q.vertex_count);
    for (int v = 0; v < q.vertex_count; ++v)
      coloring[v] = classes[v] == 0 ? Color::black : Color::white;
    return is_recurrent(q, coloring);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline LabellingResult classify(const LabellingProblem& p) {
  LabellingResult res;
  res.recurrent = detail::recurrence_check(p.quiver);
  if (auto strict = find_strict(p)) {
    res.classification = LabellingClass::Strict;
    res.labels = std::move(*strict);
    res.tight_pattern = std::vector<TightStatus>(p.quiver.vertex_count, TightStatus::slack);
    return res;
  }
  if (auto plain = find_plain(p)) {
    res.classification = LabellingClass::PlainOnly;
    res.labels = std::move(plain->labels);
    res.tight_pattern = std::move(plain->pattern);
    return res;
  }
  if (auto weak = find_weak(p)) {
    res.classification = LabellingClass::WeakOnly;
    res.labels = std::move(*weak);
    return res;
  }
  res.classification = LabellingClass::None;
  return res;
}

}  // namespace beltlab
