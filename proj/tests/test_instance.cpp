#include <doctest.h>

#include <vector>

#include "ordhull/errors.hpp"
#include "ordhull/instance.hpp"

#include "helpers.hpp"

using namespace ordhull;

TEST_CASE("fixture flags") {
  const Instance a = helpers::fix_a();
  CHECK(a.flags().h_monoid);
  CHECK(a.flags().h_group);
  CHECK(a.flags().t_group);
  CHECK(a.flags().t_commutative);
  CHECK(a.flags().free_action);

  const Instance c = helpers::fix_c();
  CHECK(c.flags().h_group);
  CHECK_FALSE(c.flags().free_action);

  const Instance lz = helpers::fix_left_zero();
  CHECK_FALSE(lz.flags().h_monoid);
  CHECK_FALSE(lz.flags().h_group);
  CHECK_FALSE(lz.flags().t_group);
  CHECK_FALSE(lz.flags().t_commutative);
  CHECK_FALSE(lz.flags().free_action);
}

TEST_CASE("weights are cut down to their image") {
  // Z1 -> Z2 only reaches the unit; the stored weight semigroup is trivial.
  Instance inst(helpers::trivial("e"), {"x"}, {0}, helpers::z2("1", "s"), {0},
                helpers::chain3(), {0, 1, 2, 0, 1, 2});
  CHECK(inst.weights().size() == 1);
  CHECK(inst.weight_of(0) == 0);
  CHECK(inst.value_table().size() == 3);
}

TEST_CASE("weight inverses need a group") {
  const Instance a = helpers::fix_a();
  CHECK(a.weight_inverse_of(1) == 1);
  const Instance lz = helpers::fix_left_zero();
  CHECK_THROWS_AS(lz.weight_inverse_of(0), TargetNotGroup);
}

TEST_CASE("completed action fixes adjoined symbols") {
  const Instance an = helpers::fix_a_antichain();
  const CompletedPoset& c = an.completed();
  const int bot = *c.index_of("BOT"), top = *c.index_of("TOP");
  for (int t = 0; t < an.weights().size(); ++t) {
    CHECK(an.act_value(t, bot) == bot);
    CHECK(an.act_value(t, top) == top);
  }
  CHECK(an.act_value(1, *c.index_of("p")) == *c.index_of("q"));
}

TEST_CASE("construction surfaces the failing axiom") {
  // Ax0 violation in the carrier action.
  CHECK_THROWS_AS(Instance(helpers::z2(), {"x", "y"}, {0, 1, 1, 1}, helpers::trivial(), {0, 0},
                           helpers::chain3(), {0, 1, 2}),
                  Ax0Violation);
  // Non-monotone value action.
  CHECK_THROWS_AS(Instance(helpers::z2(), {"x", "y"}, {0, 1, 1, 0}, helpers::z2("1", "s"),
                           {0, 1}, Poset::from_pairs({"s0", "s1"}, {{"s0", "s1"}}),
                           {0, 1, 1, 0}),
                  Ax2Violation);
  // Crown values are not order-complete.
  CHECK_THROWS_AS(Instance(helpers::z2(), {"x", "y"}, {0, 1, 1, 0}, helpers::trivial(), {0, 0},
                           helpers::crown22(), {0, 1, 2, 3}),
                  NotOrderComplete);
  // Weight map must be a homomorphism.
  CHECK_THROWS_AS(Instance(helpers::z2(), {"x", "y"}, {0, 1, 1, 0}, helpers::z2("1", "s"),
                           {1, 0}, helpers::antichain2(), {0, 1, 1, 0}),
                  NotAHomomorphism);
  // Carrier names must be distinct and nonempty.
  CHECK_THROWS_AS(Instance(helpers::z2(), {"x", "x"}, {0, 1, 1, 0}, helpers::trivial(), {0, 0},
                           helpers::chain3(), {0, 1, 2}),
                  ParseError);
}

TEST_CASE("orbit structure accessors") {
  const Instance c = helpers::fix_c();
  const OrbitPartition& co = c.carrier_orbits();
  CHECK(co.reps.size() == 2);
  CHECK(c.carrier_stabilizer(2) == std::vector<int>{0, 1});
  CHECK(c.carrier_stationary() == std::vector<int>{2});

  // Value orbits on the completed diamond: {00}, {01,10}, {11}.
  const OrbitPartition& vo = c.value_orbits();
  CHECK(vo.reps.size() == 3);

  const Instance lz = helpers::fix_left_zero();
  CHECK_THROWS_AS(lz.carrier_orbits(), NotAGroup);
  CHECK_THROWS_AS(lz.value_orbits(), NotAGroup);
}

TEST_CASE("function table validation") {
  const Instance a = helpers::fix_a();
  CHECK_THROWS_AS(a.require_table(helpers::ft({0})), ParseError);       // wrong arity
  CHECK_THROWS_AS(a.require_table(helpers::ft({0, 9})), ParseError);    // out of range
  CHECK_NOTHROW(a.require_table(helpers::ft({1, 1})));
}

TEST_CASE("orbit image check marks stationary values") {
  const Instance a = helpers::fix_a();
  const int lo = *a.completed().index_of("01");
  const int top = *a.completed().index_of("11");
  const OrbitImageCheck chk = orbit_image_check(a, helpers::ft({lo, top}));
  REQUIRE(chk.stationary_value.size() == 2);
  CHECK_FALSE(chk.stationary_value[0]);  // 01 sits in the two-element orbit
  CHECK(chk.stationary_value[1]);        // 11 is fixed
  CHECK(chk.value_orbit_of_point[0] != chk.value_orbit_of_point[1]);
}
