#include <doctest.h>

#include <algorithm>
#include <random>

#include "beltlab/belt.hpp"
#include "support.hpp"

using namespace beltlab;
using namespace testsupport;

namespace {

BeltState product_state(const DynkinSpec& left, const DynkinSpec& right,
                        std::vector<Rat> values = {}) {
  Quiver q = box_product(left, right);
  Seed s;
  s.values = values.empty() ? all_ones(q) : std::move(values);
  s.quiver = std::move(q);
  return belt_from_product(std::move(s));
}

std::vector<Rat> class_values(const BeltState& s, Color c) {
  std::vector<Rat> out;
  for (int v = 0; v < s.seed.quiver.vertex_count; ++v)
    if (s.coloring[v] == c) out.push_back(s.seed.values[v]);
  return out;
}

bool all_equal_to(const std::vector<Rat>& vals, long x) {
  return std::all_of(vals.begin(), vals.end(), [&](const Rat& v) { return v == x; });
}

}  // namespace

TEST_CASE("A2 x A2 belt: half step, step values and period 3") {
  BeltState s = product_state({DynkinFamily::A, 2}, {DynkinFamily::A, 2});
  const BeltState after_plus = mu_plus(s);
  CHECK(all_equal_to(class_values(after_plus, Color::black), 2));
  CHECK(all_equal_to(class_values(after_plus, Color::white), 1));

  // mu_+ is an involution on seeds
  const BeltState twice = mu_plus(after_plus);
  CHECK(twice.seed.values == s.seed.values);
  CHECK(twice.seed.quiver.same_arrows(s.seed.quiver));

  BeltState t1 = step(s);
  CHECK(all_equal_to(class_values(t1, Color::black), 2));
  CHECK(all_equal_to(class_values(t1, Color::white), 4));
  BeltState t2 = step(t1);
  CHECK(all_equal_to(class_values(t2, Color::black), 4));
  CHECK(all_equal_to(class_values(t2, Color::white), 2));
  BeltState t3 = step(t2);
  CHECK(all_equal_to(class_values(t3, Color::black), 1));
  CHECK(all_equal_to(class_values(t3, Color::white), 1));

  CHECK(detect_period(s, 10) == 3);
}

TEST_CASE("either half-step reverses all arrows on a box product") {
  BeltState s = product_state({DynkinFamily::A, 3}, {DynkinFamily::A_affine, 1});
  const auto& b0 = s.seed.quiver.b;
  for (const BeltState& half : {mu_plus(s), mu_minus(s)})
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) CHECK(half.seed.quiver.b[u][v] == -b0[u][v]);
  // and a full step restores the quiver
  CHECK(step(s).seed.quiver.same_arrows(s.seed.quiver));
}

TEST_CASE("step and inverse_step are mutually inverse") {
  std::mt19937_64 rng(31);
  BeltState s = product_state({DynkinFamily::A, 3}, {DynkinFamily::A_affine, 1},
                              random_positive_seed_values(rng, 6, 20));
  const BeltState round = inverse_step(step(s));
  CHECK(round.seed.values == s.seed.values);
  CHECK(round.time == s.time);
  const BeltState round2 = step(inverse_step(s));
  CHECK(round2.seed.values == s.seed.values);
}

TEST_CASE("mutation order within a colour class does not matter") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    BeltState s = product_state({DynkinFamily::A, 3}, {DynkinFamily::A, 2},
                                random_positive_seed_values(rng, 6, 12));
    std::vector<int> blacks;
    for (int v = 0; v < 6; ++v)
      if (s.coloring[v] == Color::black) blacks.push_back(v);
    std::shuffle(blacks.begin(), blacks.end(), rng);
    const Seed shuffled = mutate_many(s.seed, blacks);
    const BeltState canonical = mu_plus(s);
    CHECK(shuffled.values == canonical.seed.values);
    CHECK(shuffled.quiver.same_arrows(canonical.seed.quiver));
  }
}

TEST_CASE("the x1 orbit of the A3 x A~1 belt from all ones") {
  BeltState s = product_state({DynkinFamily::A, 3}, {DynkinFamily::A_affine, 1});
  const Trace tr = evolve(s, 8, 0, {0});
  const std::vector<long> expect{1,      2,       22,      377,      7110,
                                 136513, 2629418, 50674318, 976694489};
  for (long t = 0; t <= 8; ++t) CHECK(tr.at(0, t) == expect[static_cast<size_t>(t)]);
}

TEST_CASE("evolve with zero window returns the initial values") {
  BeltState s = product_state({DynkinFamily::A, 2}, {DynkinFamily::A, 2});
  const Trace tr = evolve(s, 0, 0);
  CHECK(tr.t_min == 0);
  CHECK(tr.t_max() == 0);
  for (int v = 0; v < 4; ++v) CHECK(tr.at(v, 0) == 1);
}

TEST_CASE("backward evolution extends the window into negative times") {
  std::mt19937_64 rng(5);
  BeltState s = product_state({DynkinFamily::A, 2}, {DynkinFamily::A, 2},
                              random_positive_seed_values(rng, 4, 30));
  const Trace tr = evolve(s, 3, 3);
  CHECK(tr.t_min == -3);
  CHECK(tr.t_max() == 3);
  // period divides h + h' = 6, so t = -3 and t = 3 agree
  for (int v = 0; v < 4; ++v) CHECK(tr.at(v, -3) == tr.at(v, 3));
  for (int v = 0; v < 4; ++v) CHECK(tr.at(v, 0) == s.seed.values[v]);
}

TEST_CASE("A~1 x A~1 black orbit grows as 2^(k(2k-1))") {
  BeltState s = product_state({DynkinFamily::A_affine, 1}, {DynkinFamily::A_affine, 1});
  REQUIRE(s.coloring[0] == Color::black);
  const Trace tr = evolve(s, 5, 0, {0});
  for (long k = 0; k <= 5; ++k) {
    Rat expect = rat_pow(Rat(2), static_cast<unsigned long>(k * (2 * k - 1)));
    CHECK(tr.at(0, k) == expect);
  }
}

TEST_CASE("detect_period divides h + h' for random values, none for affine products") {
  std::mt19937_64 rng(8);
  const std::vector<DynkinSpec> lefts{{DynkinFamily::A, 1},
                                      {DynkinFamily::A, 2},
                                      {DynkinFamily::A, 3},
                                      {DynkinFamily::D, 4}};
  const std::vector<DynkinSpec> rights{
      {DynkinFamily::A, 1}, {DynkinFamily::A, 2}, {DynkinFamily::A, 3}};
  for (const auto& left : lefts)
    for (const auto& right : rights) {
      const long h = coxeter_number(left) + coxeter_number(right);
      const Quiver q = box_product(left, right);
      BeltState s = product_state(left, right,
                                  random_positive_seed_values(rng, q.vertex_count, 50));
      const auto p = detect_period(s, h);
      REQUIRE(p.has_value());
      CHECK(h % *p == 0);
    }

  BeltState fig2 = product_state({DynkinFamily::A, 3}, {DynkinFamily::A_affine, 1});
  CHECK_FALSE(detect_period(fig2, 50).has_value());
}

TEST_CASE("is_recurrent") {
  const Quiver box = box_product(DynkinSpec{DynkinFamily::A, 3},
                                 DynkinSpec{DynkinFamily::A_affine, 1});
  CHECK(is_recurrent(box, belt_coloring(box)));

  const Quiver lone = make_quiver(1, {});
  CHECK(is_recurrent(lone, {Color::black}));

  // path 1 -> 2 -> 3 with ends black is not recurrent
  const Quiver path = make_quiver(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK_FALSE(is_recurrent(path, {Color::black, Color::white, Color::black}));

  CHECK_THROWS_WITH_AS(
      static_cast<void>(is_recurrent(path, {Color::black, Color::black, Color::white})),
      doctest::Contains("ColorClash"), Error);
}

TEST_CASE("division by zero surfaces the time and vertex") {
  // values (1, -1) force a zero at the first step and a division at the second
  const Quiver q = box_product(DynkinSpec{DynkinFamily::A, 1},
                               DynkinSpec{DynkinFamily::A, 2});
  Seed s{q, {Rat(1), Rat(-1)}};
  BeltState state = make_belt_state(s, belt_coloring(q));
  CHECK_THROWS_WITH_AS(static_cast<void>(evolve(state, 2)), doctest::Contains("at time"),
                       Error);
  try {
    static_cast<void>(evolve(state, 2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
    CHECK(std::string(e.what()).find("vertex") != std::string::npos);
  }
}

TEST_CASE("off-belt traces") {
  std::mt19937_64 rng(9100);
  BeltState s = product_state({DynkinFamily::A, 3}, {DynkinFamily::A_affine, 1},
                              random_positive_seed_values(rng, 6, 7));

  const Trace plain = evolve(s, 6, 0, {0});
  const Trace empty_word = off_belt_trace(s, {}, 0, 6);
  for (long t = 0; t <= 6; ++t) CHECK(empty_word.at(0, t) == plain.at(0, t));

  const Trace zz = off_belt_trace(s, {2, 2}, 0, 6);
  for (long t = 0; t <= 6; ++t) CHECK(zz.at(0, t) == plain.at(0, t));
}

TEST_CASE("belt state construction validates the colouring") {
  const Quiver q = box_product(DynkinSpec{DynkinFamily::A, 2},
                               DynkinSpec{DynkinFamily::A, 2});
  std::vector<Color> bad(4, Color::black);
  CHECK_THROWS_WITH_AS(static_cast<void>(make_belt_state({q, all_ones(q)}, bad)),
                       doctest::Contains("ColorClash"), Error);
}
