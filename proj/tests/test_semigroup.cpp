#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "ordhull/errors.hpp"
#include "ordhull/rng.hpp"
#include "ordhull/semigroup.hpp"

#include "helpers.hpp"

using namespace ordhull;

TEST_CASE("cayley table basics") {
  const FiniteSemigroup g = helpers::z2();
  CHECK(g.size() == 2);
  CHECK(g.is_monoid());
  CHECK(g.is_group());
  CHECK(g.is_commutative());
  CHECK(g.identity() == 0);
  CHECK(g.inverse(1) == 1);
  CHECK(g.op(1, 1) == 0);
  CHECK(g.index_of("g") == 1);
  CHECK(g.index_of("zz") == std::nullopt);

  const FiniteSemigroup lz = helpers::left_zero2();
  CHECK_FALSE(lz.is_monoid());
  CHECK_FALSE(lz.is_group());
  CHECK_FALSE(lz.is_commutative());
  CHECK_THROWS_AS(lz.inverse(0), NotAGroup);
}

TEST_CASE("associativity is enforced") {
  // a*a=b is fine only if the rest closes associatively; this table does not:
  // (aa)a = ba = a but a(aa) = ab = b.
  CHECK_THROWS_AS(FiniteSemigroup::from_table({"a", "b"}, {1, 1, 0, 0}), NotAssociative);
  CHECK(is_associative({0, 0, 1, 1}, 2));
  CHECK_FALSE(is_associative({1, 1, 0, 0}, 2));
}

TEST_CASE("homomorphism check and image restriction") {
  const FiniteSemigroup z2 = helpers::z2();
  const FiniteSemigroup t = helpers::trivial();
  CHECK(check_homomorphism(z2, t, {0, 0}).ok);
  CHECK(check_homomorphism(z2, z2, {0, 1}).ok);
  CHECK(check_homomorphism(z2, z2, {0, 0}).ok);        // collapse onto the unit
  CHECK_FALSE(check_homomorphism(z2, z2, {1, 0}).ok);  // unit must go to unit

  // Z1 -> Z2 hits only the unit; the image restriction cuts T down to it.
  const FiniteSemigroup z1 = helpers::trivial("e");
  const ImageRestriction restr = restrict_to_image(z1, z2, {0});
  CHECK(restr.image.size() == 1);
  CHECK(restr.map == std::vector<int>{0});
  CHECK(restr.embed == std::vector<int>{0});
}

TEST_CASE("identity adjunction") {
  const FiniteSemigroup lz = helpers::left_zero2();
  const FiniteSemigroup m = adjoin_identity(lz);
  CHECK(m.size() == 3);
  CHECK(m.is_monoid());
  // The original block is untouched.
  CHECK(m.op(0, 1) == 0);

  const FiniteSemigroup z2 = helpers::z2();
  CHECK(adjoin_identity(z2).size() == 2);

  // Left-zero elements are idempotent, so the only landing spot in Z2 is e.
  const AdjoinedHom ah = adjoin_identity(lz, z2, {0, 0});
  CHECK(ah.source.size() == 3);
  CHECK(ah.map.size() == 3);
  CHECK(ah.map.back() == 0);  // fresh unit -> target unit
  CHECK(check_homomorphism(ah.source, z2, ah.map).ok);
  CHECK_THROWS_AS(adjoin_identity(lz, z2, {1, 1}), NotAHomomorphism);
}

TEST_CASE("generation closure") {
  // Z4 as a Cayley table.
  std::vector<int> z4(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) z4[static_cast<std::size_t>(a) * 4 + b] = (a + b) % 4;
  const FiniteSemigroup g = FiniteSemigroup::from_table({"0", "1", "2", "3"}, z4);

  CHECK(generate(g, {1}, false) == std::vector<int>{0, 1, 2, 3});
  CHECK(is_generating(g, {1}, true));
  CHECK_FALSE(is_generating(g, {2}, true));  // {0,2} only
  CHECK(generate(g, {2}, true) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(generate(g, {}, false), EmptyGenerators);
  CHECK_THROWS_AS(generate(helpers::left_zero2(), {0}, true), GroupModeOnNonGroup);
  CHECK(generate(helpers::left_zero2(), {0, 1}, false) == std::vector<int>{0, 1});
}

TEST_CASE("canonical table is relabeling-invariant") {
  // Z2 written with the unit second.
  const std::vector<int> shuffled = {1, 0, 0, 1};  // elements {g, e}
  CHECK(canonical_table(shuffled, 2) == canonical_table({0, 1, 1, 0}, 2));
  CHECK(canonical_table({0, 0, 1, 1}, 2) != canonical_table({0, 1, 1, 0}, 2));
}

TEST_CASE("semigroup enumeration up to isomorphism") {
  CHECK(semigroup_tables(1).size() == 1);
  CHECK(semigroup_tables(2).size() == 5);
  CHECK(semigroup_tables(3).size() == 24);

  // Every emitted table is associative, canonical, and distinct.
  std::set<std::vector<int>> seen;
  for (const auto& t : semigroup_tables(3)) {
    CHECK(is_associative(t, 3));
    CHECK(t == canonical_table(t, 3));
    CHECK(seen.insert(t).second);
  }
}

TEST_CASE("group tables") {
  CHECK(group_tables(1).size() == 1);
  CHECK(group_tables(2).size() == 1);
  CHECK(group_tables(3).size() == 1);
  CHECK(group_tables(4).size() == 2);  // Z4 and the Klein four-group
  for (const auto& t : group_tables(4)) {
    std::vector<std::string> names = {"a", "b", "c", "d"};
    CHECK(FiniteSemigroup::from_table(names, t).is_group());
  }
}

TEST_CASE("seeded sampling is deterministic") {
  Rng r1(99), r2(99);
  const auto a = sample_semigroup_tables(4, 10, r1);
  const auto b = sample_semigroup_tables(4, 10, r2);
  CHECK(a == b);
  CHECK_FALSE(a.empty());
  for (const auto& t : a) CHECK(is_associative(t, 4));
}

TEST_CASE("homomorphism enumeration visits every candidate once") {
  const FiniteSemigroup z2 = helpers::z2();
  std::vector<std::vector<int>> homs;
  enumerate_homomorphisms(z2, 2, [](int a, int b) { return a ^ b; }, std::nullopt,
                          [&](const std::vector<int>& m) {
                            homs.push_back(m);
                            return true;
                          });
  // Unit pins itself: maps are g -> 0 or g -> 1.
  CHECK(homs == std::vector<std::vector<int>>{{0, 0}, {0, 1}});

  // Early stop.
  int count = 0;
  enumerate_homomorphisms(z2, 2, [](int a, int b) { return a ^ b; }, std::nullopt,
                          [&](const std::vector<int>&) {
                            ++count;
                            return false;
                          });
  CHECK(count == 1);

  // Pinning selects a single image.
  std::vector<std::vector<int>> pinned;
  enumerate_homomorphisms(z2, 2, [](int a, int b) { return a ^ b; },
                          std::make_pair(1, 1),
                          [&](const std::vector<int>& m) {
                            pinned.push_back(m);
                            return true;
                          });
  CHECK(pinned == std::vector<std::vector<int>>{{0, 1}});
}
