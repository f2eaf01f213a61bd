#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "beltlab/belt.hpp"
#include "beltlab/dynkin.hpp"
#include "beltlab/json_io.hpp"
#include "beltlab/labelling.hpp"
#include "beltlab/recurrence.hpp"

namespace beltlab {

struct CensusSpec {
  DynkinSpec left;
  DynkinSpec right;
};

inline CensusSpec parse_census_spec(const std::string& text) {
  const auto x = text.find('x');
  require(x != std::string::npos, Errc::bad_input,
          "census spec must look like A2xA~1, got '" + text + "'");
  return {parse_dynkin(text.substr(0, x)), parse_dynkin(text.substr(x + 1))};
}

enum class CensusValues { all_ones, random_seeded };

struct CensusOptions {
  long steps = 24;
  int k_max = 8;
  CensusValues values = CensusValues::all_ones;
  std::uint64_t seed = 1;
};

struct CensusRow {
  std::string spec;
  std::string error;  // nonempty when the row failed; the run continues
  std::string classification;
  std::optional<bool> recurrent;
  std::optional<long> period;
  std::vector<int> orders;  // distinct detected minimal orders, ascending
  bool growth_flag = false;
};

// Superlinear log-growth heuristic: for a linearizable orbit the per-step
// slope of log2 |a_t| stabilizes, for the doubly exponential orbits it keeps
// climbing. Integer bit lengths only; diagnostics, not a certificate.
inline bool superlinear_growth(const std::vector<Rat>& orbit) {
  const long T = static_cast<long>(orbit.size()) - 1;
  if (T < 5) return false;
  const long early = bit_length(orbit[2]) - bit_length(orbit[1]);
  const long late = bit_length(orbit[T]) - bit_length(orbit[T - 1]);
  return late - early >= std::max(8L, T / 2);
}

inline CensusRow census_row(const CensusSpec& spec, const CensusOptions& opt) {
  CensusRow row;
  row.spec = dynkin_string(spec.left) + "x" + dynkin_string(spec.right);
  try {
    Quiver quiver = box_product(spec.left, spec.right);
    const LabellingResult label = classify(make_labelling_problem(quiver));
    row.classification = class_name(label.classification);
    row.recurrent = label.recurrent;

    Seed seed;
    seed.values = opt.values == CensusValues::all_ones
                      ? all_ones(quiver)
                      : random_positive_values(quiver, opt.seed);
    seed.quiver = std::move(quiver);
    const BeltState state = belt_from_product(std::move(seed));
    row.period = detect_period(state, opt.steps);

    const Trace trace = evolve(state, opt.steps);
    for (size_t i = 0; i < trace.vertices.size(); ++i) {
      const RationalSequence seq{trace.values[i], trace.t_min};
      const RecurrenceReport rep = minimal_order(seq, opt.k_max);
      if (rep.status == RecurrenceStatus::found &&
          std::find(row.orders.begin(), row.orders.end(), rep.order) == row.orders.end())
        row.orders.push_back(rep.order);
      if (superlinear_growth(trace.values[i])) row.growth_flag = true;
    }
    std::sort(row.orders.begin(), row.orders.end());
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

// Each row is an isolated pure computation; rows run in a worker pool and the
// output order is the input order, so identical configs give identical output.
inline std::vector<CensusRow> run_census(const std::vector<CensusSpec>& specs,
                                         const CensusOptions& opt) {
  std::vector<std::future<CensusRow>> futures;
  futures.reserve(specs.size());
  for (const auto& spec : specs)
    futures.push_back(std::async(std::launch::async,
                                 [spec, opt] { return census_row(spec, opt); }));
  std::vector<CensusRow> rows;
  rows.reserve(specs.size());
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "spec,classification,recurrent,period,orders,growth_flag,error\n";
  for (const auto& row : rows) {
    out << row.spec << ',' << row.classification << ',';
    if (row.recurrent) out << (*row.recurrent ? "yes" : "no");
    out << ',';
    if (row.period) out << *row.period;
    out << ',';
    for (size_t i = 0; i < row.orders.size(); ++i)
      out << (i ? ";" : "") << row.orders[i];
    out << ',' << (row.growth_flag ? 1 : 0) << ',' << row.error << '\n';
  }
  return out.str();
}

inline json census_to_json(const std::vector<CensusRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r{{"spec", row.spec},
           {"classification", row.classification},
           {"orders", row.orders},
           {"growth_flag", row.growth_flag}};
    r["period"] = row.period ? json(*row.period) : json(nullptr);
    r["recurrent"] = row.recurrent ? json(*row.recurrent) : json(nullptr);
    if (!row.error.empty()) r["error"] = row.error;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace beltlab
