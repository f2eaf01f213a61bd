// Command-line front end: catalog construction, box products, belt evolution,
// recurrence detection, labelling classification, census sweeps and annulus
// verification, all over exact rationals.
//
// Exit codes: 0 success, 2 validation error, 3 internal assertion failure.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "beltlab/annulus.hpp"
#include "beltlab/census.hpp"
#include "beltlab/json_io.hpp"
#include "beltlab/labelling.hpp"

namespace {

using namespace beltlab;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  require(static_cast<bool>(out), Errc::bad_input, "cannot open output file " + path);
  out << text;
}

QuiverDocument load_quiver(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Errc::bad_input, "cannot open quiver file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::bad_input, "bad JSON in " + path + ": " + e.what());
  }
  return quiver_from_json(j);
}

// "all-ones" or "random:SEED"
std::vector<Rat> initial_values(const Quiver& q, const std::string& spec) {
  if (spec == "all-ones") return all_ones(q);
  if (spec.rfind("random:", 0) == 0) {
    const std::string seed_text = spec.substr(7);
    try {
      return random_positive_values(q, std::stoull(seed_text));
    } catch (const std::exception&) {
      fail(Errc::bad_input, "bad random seed '" + seed_text + "'");
    }
  }
  fail(Errc::bad_input, "--values must be all-ones or random:SEED, got '" + spec + "'");
}

BeltState belt_state_from(const QuiverDocument& doc, const std::string& values_spec) {
  Seed seed;
  seed.quiver = doc.quiver;
  seed.values = initial_values(doc.quiver, values_spec);
  std::vector<Color> coloring;
  if (doc.coloring)
    coloring = *doc.coloring;
  else if (doc.quiver.product)
    coloring = belt_coloring(doc.quiver);
  else
    coloring = bipartition_coloring(doc.quiver);
  return make_belt_state(std::move(seed), std::move(coloring));
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      ids.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(Errc::bad_input, "bad vertex id '" + item + "'");
    }
  }
  return ids;
}

// Diagrams emitted as quivers with edges oriented from colour class 0 to 1.
json diagram_json(const DynkinSpec& spec) {
  const BipartiteGraph g = build_diagram(spec);
  std::vector<std::array<int, 3>> arrows;
  for (const auto& [u, v, mult] : g.edges)
    arrows.push_back(g.color[u] == 0 ? std::array<int, 3>{u, v, mult}
                                     : std::array<int, 3>{v, u, mult});
  QuiverDocument doc;
  doc.quiver = make_quiver(g.vertex_count, arrows);
  return quiver_to_json(doc);
}

json labelling_json(const LabellingResult& res, const std::string& mode, bool found,
                    const std::optional<std::vector<Rat>>& labels,
                    const std::optional<std::vector<TightStatus>>& pattern) {
  json out{{"mode", mode}, {"found", found}};
  if (labels) {
    json ls = json::array();
    for (const auto& r : *labels) ls.push_back(rat_string(r));
    out["labels"] = std::move(ls);
  }
  if (pattern) {
    json ps = json::array();
    for (const auto& t : *pattern) ps.push_back(tight_name(t));
    out["tight_pattern"] = std::move(ps);
  }
  out["classification"] = class_name(res.classification);
  out["recurrent"] = res.recurrent ? json(*res.recurrent) : json(nullptr);
  return out;
}

long order_bound_for(const Quiver& q, int vertex) {
  if (!q.product) return 0;
  const DynkinSpec left = parse_dynkin(q.product->left_name);
  const DynkinSpec right = parse_dynkin(q.product->right_name);
  if (left.family != DynkinFamily::A || right.family != DynkinFamily::A_affine)
    return 0;
  const int m = left.rank;
  const int n = (right.rank + 1) / 2;
  const int a0 = q.product->coords[vertex][0];
  const int j = std::min(a0 + 1, m - a0);
  return n * binomial(m + 1, j);
}

struct Cli {
  // catalog / product
  std::string catalog_spec, product_left, product_right;
  // shared
  std::string quiver_path, out_path, values_spec = "all-ones", format = "csv";
  long steps = 0, bound = 0;
  int k_max = 8;
  std::string watch_text;
  // linearize
  std::string trace_path;
  // label
  std::string label_mode = "classify";
  // census
  std::vector<std::string> census_specs;
  std::uint64_t census_seed = 1;
  // annulus
  int ann_m = 1, ann_n = 1, ann_kmax = 0, exchange_samples = 100;
  std::uint64_t ann_seed = 1;
};

int run_catalog(const Cli& cli) {
  write_output(cli.out_path, diagram_json(parse_dynkin(cli.catalog_spec)).dump(2));
  return 0;
}

int run_product(const Cli& cli) {
  const DynkinSpec left = parse_dynkin(cli.product_left);
  const DynkinSpec right = parse_dynkin(cli.product_right);
  QuiverDocument doc;
  doc.quiver = box_product(left, right);
  doc.coloring = belt_coloring(doc.quiver);
  write_output(cli.out_path, quiver_to_json(doc).dump(2));
  return 0;
}

int run_evolve(const Cli& cli) {
  const QuiverDocument doc = load_quiver(cli.quiver_path);
  const BeltState state = belt_state_from(doc, cli.values_spec);
  std::vector<int> watch;
  if (!cli.watch_text.empty()) watch = parse_id_list(cli.watch_text);
  const Trace trace = evolve(state, cli.steps, 0, watch);
  write_output(cli.out_path, trace_to_csv(trace));
  return 0;
}

int run_period(const Cli& cli) {
  const QuiverDocument doc = load_quiver(cli.quiver_path);
  const BeltState state = belt_state_from(doc, cli.values_spec);
  const auto period = detect_period(state, cli.bound);
  json out{{"bound", cli.bound}, {"period", period ? json(*period) : json(nullptr)}};
  write_output(cli.out_path, out.dump(2));
  return 0;
}

int run_linearize(const Cli& cli) {
  std::ifstream in(cli.trace_path);
  require(static_cast<bool>(in), Errc::bad_input, "cannot open trace file " + cli.trace_path);
  const Trace trace = trace_from_csv(in);
  std::optional<QuiverDocument> doc;
  if (!cli.quiver_path.empty()) doc = load_quiver(cli.quiver_path);
  json rows = json::array();
  for (size_t i = 0; i < trace.vertices.size(); ++i) {
    const RationalSequence seq{trace.values[i], trace.t_min};
    const RecurrenceReport rep = minimal_order(seq, cli.k_max);
    json row{{"vertex", trace.vertices[i]}, {"status", status_name(rep.status)}, {"kmax", cli.k_max}};
    if (rep.status == RecurrenceStatus::found) {
      row["order"] = rep.order;
      json coeffs = json::array();
      for (const auto& c : rep.coefficients) coeffs.push_back(rat_string(c));
      row["coefficients"] = std::move(coeffs);
      row["verified_from"] = rep.verified_from;
      row["verified_to"] = rep.verified_to;
    }
    if (doc) {
      const long bound = order_bound_for(doc->quiver, trace.vertices[i]);
      if (bound > 0) row["bound"] = bound;
    }
    rows.push_back(std::move(row));
  }
  write_output(cli.out_path, json{{"rows", std::move(rows)}}.dump(2));
  return 0;
}

int run_label(const Cli& cli) {
  const QuiverDocument doc = load_quiver(cli.quiver_path);
  const LabellingProblem problem = make_labelling_problem(doc.quiver);
  const LabellingResult res = classify(problem);
  json out;
  if (cli.label_mode == "classify") {
    out = labelling_json(res, "classify", res.classification != LabellingClass::None,
                         res.labels, res.tight_pattern);
  } else if (cli.label_mode == "strict") {
    auto labels = find_strict(problem);
    out = labelling_json(res, "strict", labels.has_value(), labels, std::nullopt);
  } else if (cli.label_mode == "plain") {
    auto cert = find_plain(problem);
    out = labelling_json(res, "plain", cert.has_value(),
                         cert ? std::optional(cert->labels) : std::nullopt,
                         cert ? std::optional(cert->pattern) : std::nullopt);
  } else if (cli.label_mode == "weak") {
    auto labels = find_weak(problem);
    out = labelling_json(res, "weak", labels.has_value(), labels, std::nullopt);
  } else {
    fail(Errc::bad_input, "--mode must be classify, strict, plain or weak");
  }
  write_output(cli.out_path, out.dump(2));
  return 0;
}

int run_census(const Cli& cli) {
  std::vector<CensusSpec> specs;
  for (const auto& text : cli.census_specs) specs.push_back(parse_census_spec(text));
  CensusOptions opt;
  opt.steps = cli.steps > 0 ? cli.steps : 24;
  opt.k_max = cli.k_max;
  opt.seed = cli.census_seed;
  opt.values = cli.values_spec == "all-ones" ? CensusValues::all_ones : CensusValues::random_seeded;
  if (opt.values == CensusValues::random_seeded) {
    require(cli.values_spec.rfind("random:", 0) == 0, Errc::bad_input,
            "--values must be all-ones or random:SEED");
    opt.seed = std::stoull(cli.values_spec.substr(7));
  }
  const auto rows = run_census(specs, opt);
  if (cli.out_path.empty()) {
    write_output("", cli.format == "json" ? census_to_json(rows).dump(2) : census_csv(rows));
  } else {
    write_output(cli.out_path + ".csv", census_csv(rows));
    write_output(cli.out_path + ".json", census_to_json(rows).dump(2));
  }
  return 0;
}

int run_annulus(const Cli& cli) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
  };
  const int m = cli.ann_m, n = cli.ann_n;
  const int k_max = cli.ann_kmax > 0 ? cli.ann_kmax : 2 * n;
  json checks = json::array();
  bool all_pass = true;

  auto t0 = clock::now();
  const AnnulusData data = random_annulus_data(m, n, cli.ann_seed);
  checks.push_back({{"name", "generic_data"}, {"pass", true}, {"ms", ms_since(t0)}});

  t0 = clock::now();
  std::mt19937_64 rng(cli.ann_seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<long> pick_i(-2, 3 * n + 2);
  std::uniform_int_distribution<int> pick_alpha(1, m);
  bool exchange_ok = true;
  for (int s = 0; s < cli.exchange_samples && exchange_ok; ++s) {
    const int alpha = pick_alpha(rng);
    exchange_ok = check_exchange(data, pick_i(rng), pick_i(rng), alpha, m + 1 - alpha);
  }
  all_pass = all_pass && exchange_ok;
  checks.push_back({{"name", "exchange_random"},
                    {"samples", cli.exchange_samples},
                    {"pass", exchange_ok},
                    {"ms", ms_since(t0)}});

  t0 = clock::now();
  const BeltVerifyReport belt = verify_belt(data, k_max);
  for (const auto& check : belt.checks) {
    std::string name = "belt_step_" + std::to_string(check.k);
    if (check.k == n) name = "dehn_twist_step_" + std::to_string(check.k);
    checks.push_back({{"name", name}, {"pass", check.ok}, {"ms", 0}});
    all_pass = all_pass && check.ok;
  }
  checks.back()["ms"] = ms_since(t0);

  t0 = clock::now();
  long max_bound = 0;
  {
    const AnnulusSeed init = build_initial_seed(data);
    for (int u = 0; u < init.mutable_count; ++u) {
      const int j = std::min(init.index_map[u].alpha, init.index_map[u].beta);
      max_bound = std::max(max_bound, static_cast<long>(n) * binomial(m + 1, j));
    }
  }
  const OrderBoundReport orders = order_bound_report(data, static_cast<int>(max_bound));
  all_pass = all_pass && orders.all_within;
  json order_rows = json::array();
  for (const auto& row : orders.rows) {
    order_rows.push_back({{"vertex", row.vertex},
                          {"alpha", row.idx.alpha},
                          {"beta", row.idx.beta},
                          {"j", row.j},
                          {"bound", row.bound},
                          {"status", status_name(row.status)},
                          {"detected", row.detected},
                          {"within", row.within},
                          {"equality", row.equality}});
  }
  checks.push_back({{"name", "order_bounds"}, {"pass", orders.all_within}, {"ms", ms_since(t0)}});

  json out{{"m", m},       {"n", n},           {"seed", cli.ann_seed},
           {"kmax", k_max}, {"checks", checks}, {"orders", order_rows},
           {"pass", all_pass}};
  write_output(cli.out_path, out.dump(2));
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace beltlab;
  CLI::App app{"exact laboratory for bipartite cluster dynamics"};
  app.require_subcommand(1);
  Cli cli;

  auto* catalog = app.add_subcommand("catalog", "emit a Dynkin diagram as quiver JSON");
  catalog->add_option("spec", cli.catalog_spec, "diagram, e.g. A3 or A~1")->required();
  catalog->add_option("--out", cli.out_path, "output file (default stdout)");

  auto* product = app.add_subcommand("product", "emit a box product quiver as JSON");
  product->add_option("left", cli.product_left, "left diagram, e.g. A3")->required();
  product->add_option("right", cli.product_right, "right diagram, e.g. A~1")->required();
  product->add_option("--out", cli.out_path, "output file (default stdout)");

  auto* evolve_cmd = app.add_subcommand("evolve", "run the belt and write a trace CSV");
  evolve_cmd->add_option("--quiver", cli.quiver_path, "quiver JSON file")->required();
  evolve_cmd->add_option("--steps", cli.steps, "forward steps")->required()
      ->check(CLI::NonNegativeNumber);
  evolve_cmd->add_option("--watch", cli.watch_text, "comma-separated vertex ids (default all)");
  evolve_cmd->add_option("--values", cli.values_spec, "all-ones or random:SEED");
  evolve_cmd->add_option("--out", cli.out_path, "trace CSV file (default stdout)");

  auto* period = app.add_subcommand("period", "detect the belt period");
  period->add_option("--quiver", cli.quiver_path, "quiver JSON file")->required();
  period->add_option("--bound", cli.bound, "largest period to try")->required()
      ->check(CLI::PositiveNumber);
  period->add_option("--values", cli.values_spec, "all-ones or random:SEED");
  period->add_option("--out", cli.out_path, "output JSON file (default stdout)");

  auto* linearize = app.add_subcommand("linearize", "detect minimal linear recurrences in a trace");
  linearize->add_option("--trace", cli.trace_path, "trace CSV file")->required();
  linearize->add_option("--kmax", cli.k_max, "largest order to try")->check(CLI::PositiveNumber);
  linearize->add_option("--quiver", cli.quiver_path, "quiver JSON (adds order bounds when box metadata is present)");
  linearize->add_option("--report,--out", cli.out_path, "report JSON file (default stdout)");

  auto* label = app.add_subcommand("label", "subadditive labelling search / classification");
  label->add_option("--quiver", cli.quiver_path, "quiver JSON file")->required();
  label->add_option("--mode", cli.label_mode, "classify, strict, plain or weak");
  label->add_option("--out", cli.out_path, "result JSON file (default stdout)");

  auto* census = app.add_subcommand("census", "classification/period/order sweep over box products");
  census->add_option("specs", cli.census_specs, "box product specs, e.g. A2xA2 A3xA~1")->required();
  census->add_option("--steps", cli.steps, "belt steps per row");
  census->add_option("--kmax", cli.k_max, "largest recurrence order to try");
  census->add_option("--values", cli.values_spec, "all-ones or random:SEED");
  census->add_option("--out", cli.out_path, "basename; writes BASE.csv and BASE.json");
  census->add_option("--format", cli.format, "stdout format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* annulus = app.add_subcommand("annulus-verify", "determinant-identity and order-bound checks");
  annulus->add_option("--m", cli.ann_m, "dimension parameter m >= 1")->required()
      ->check(CLI::PositiveNumber);
  annulus->add_option("--n", cli.ann_n, "marked points per boundary, n >= 1")->required()
      ->check(CLI::PositiveNumber);
  annulus->add_option("--seed", cli.ann_seed, "data generator seed");
  annulus->add_option("--kmax", cli.ann_kmax, "belt steps to verify (default 2n)");
  annulus->add_option("--samples", cli.exchange_samples, "random exchange checks");
  annulus->add_option("--out", cli.out_path, "report JSON file (default stdout)");

  try {
    app.parse(argc, argv);
    if (catalog->parsed()) return run_catalog(cli);
    if (product->parsed()) return run_product(cli);
    if (evolve_cmd->parsed()) return run_evolve(cli);
    if (period->parsed()) return run_period(cli);
    if (linearize->parsed()) return run_linearize(cli);
    if (label->parsed()) return run_label(cli);
    if (census->parsed()) return run_census(cli);
    if (annulus->parsed()) return run_annulus(cli);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
