#include <doctest.h>

#include <sstream>

#include "beltlab/census.hpp"
#include "beltlab/json_io.hpp"

using namespace beltlab;

TEST_CASE("quiver JSON round-trips structure, colours, values and metadata") {
  QuiverDocument doc;
  doc.quiver = box_product(DynkinSpec{DynkinFamily::A, 3},
                           DynkinSpec{DynkinFamily::A_affine, 1});
  doc.coloring = belt_coloring(doc.quiver);
  doc.values = std::vector<Rat>{make_rat(1, 2), Rat(3), Rat(1), make_rat(7, 5),
                                Rat(2),        Rat(9)};
  const json j = quiver_to_json(doc);
  const QuiverDocument back = quiver_from_json(j);
  CHECK(back.quiver.same_arrows(doc.quiver));
  CHECK(back.quiver.frozen == doc.quiver.frozen);
  CHECK(back.quiver.labels == doc.quiver.labels);
  REQUIRE(back.coloring.has_value());
  CHECK(*back.coloring == *doc.coloring);
  REQUIRE(back.values.has_value());
  CHECK(*back.values == *doc.values);
  REQUIRE(back.quiver.product.has_value());
  CHECK(back.quiver.product->left_name == "A3");
  CHECK(back.quiver.product->colors == doc.quiver.product->colors);
  CHECK(back.quiver.product->coords == doc.quiver.product->coords);
}

TEST_CASE("quiver JSON validation") {
  json bad = {{"vertices", json::array({{{"id", 0}}, {{"id", 1}}})},
              {"arrows", json::array({json::array({0, 1, 1}), json::array({1, 0, 1})})}};
  CHECK_THROWS_WITH_AS(static_cast<void>(quiver_from_json(bad)),
                       doctest::Contains("twice"), Error);
  json zero_mult = {{"vertices", json::array({{{"id", 0}}, {{"id", 1}}})},
                    {"arrows", json::array({json::array({0, 1, 0})})}};
  CHECK_THROWS_AS(static_cast<void>(quiver_from_json(zero_mult)), Error);
}

TEST_CASE("trace CSV round-trips") {
  Quiver q = box_product(DynkinSpec{DynkinFamily::A, 2}, DynkinSpec{DynkinFamily::A, 2});
  const Trace tr = evolve(belt_from_product({q, all_ones(q)}), 4, 2, {0, 3});
  const std::string csv = trace_to_csv(tr);
  std::istringstream in(csv);
  const Trace back = trace_from_csv(in);
  CHECK(back.t_min == tr.t_min);
  CHECK(back.vertices == tr.vertices);
  CHECK(back.values == tr.values);
}

TEST_CASE("rational parsing accepts p, -p and p/q only") {
  CHECK(parse_rational("22") == 22);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("4/6") == make_rat(2, 3));
  CHECK(parse_rational(" 3/4 ") == make_rat(3, 4));
  CHECK_THROWS_AS(static_cast<void>(parse_rational("1.5")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_rational("1/0")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_rational("")), Error);
  CHECK(rat_string(make_rat(-10, 4)) == "-5/2");
  CHECK(rat_string(Rat(7)) == "7");
}

TEST_CASE("census rows reproduce the headline systems") {
  CensusOptions opt;
  const std::vector<CensusSpec> specs{
      parse_census_spec("A2xA2"), parse_census_spec("A3xA~1"),
      parse_census_spec("A~1xA~1"), parse_census_spec("A2xA~2")};
  const auto rows = run_census(specs, opt);
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].classification == "Strict");
  CHECK(rows[0].period == 3);
  CHECK_FALSE(rows[0].growth_flag);

  CHECK(rows[1].classification == "PlainOnly");
  CHECK_FALSE(rows[1].period.has_value());
  CHECK(rows[1].orders == std::vector<int>{4, 5});  // all-ones: x2/x5 drop to 5
  CHECK_FALSE(rows[1].growth_flag);

  CHECK(rows[2].classification == "WeakOnly");
  CHECK_FALSE(rows[2].period.has_value());
  CHECK(rows[2].orders.empty());
  CHECK(rows[2].growth_flag);

  // a bad spec is recorded as a row error, the run continues
  CHECK_FALSE(rows[3].error.empty());
}

TEST_CASE("census orders for random values match the generic bounds") {
  CensusOptions opt;
  opt.values = CensusValues::random_seeded;
  opt.seed = 44;
  const auto rows = run_census({parse_census_spec("A3xA~1")}, opt);
  CHECK(rows[0].orders == std::vector<int>{4, 6});
}

TEST_CASE("identical census configs produce byte-identical output") {
  CensusOptions opt;
  opt.values = CensusValues::random_seeded;
  opt.seed = 7;
  const std::vector<CensusSpec> specs{parse_census_spec("A2xA2"),
                                      parse_census_spec("A3xA~1"),
                                      parse_census_spec("A~1xA~1")};
  const auto rows1 = run_census(specs, opt);
  const auto rows2 = run_census(specs, opt);
  CHECK(census_csv(rows1) == census_csv(rows2));
  CHECK(census_to_json(rows1).dump(2) == census_to_json(rows2).dump(2));
}

TEST_CASE("bipartition fallback colouring matches the canonical belt colouring") {
  const Quiver q = box_product(DynkinSpec{DynkinFamily::A, 3},
                               DynkinSpec{DynkinFamily::A_affine, 1});
  CHECK(bipartition_coloring(q) == belt_coloring(q));
}
