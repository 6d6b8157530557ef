#include "doctest.h"
#include "oracles.hpp"
#include "schurring/constructions.hpp"
#include "schurring/enumeration.hpp"
#include "schurring/errors.hpp"

using namespace schurring;

TEST_CASE("small catalogs") {
  CHECK(enumerate(1).count_exact == 1);
  CHECK(enumerate(4).count_exact == 3);
  CHECK(enumerate(5).count_exact == 3);
  CHECK(brute_force_enumerate(2).count_exact == 1);
  CHECK(brute_force_enumerate(3).count_exact == 2);
  CHECK(brute_force_enumerate(4).count_exact == 3);
  const auto four = enumerate(4).rings;
  CHECK(std::find(four.begin(), four.end(), SRing::validate(4, {{0}, {2}, {1, 3}})) != four.end());
}

TEST_CASE("catalogs are sorted, unique and valid") {
  for (int n : {6, 8, 12, 16}) {
    const Catalog c = enumerate(n);
    CHECK(std::is_sorted(c.rings.begin(), c.rings.end()));
    CHECK(std::adjacent_find(c.rings.begin(), c.rings.end()) == c.rings.end());
    for (std::size_t i = 1; i < c.rings.size(); ++i) CHECK(c.rings[i - 1].rank() <= c.rings[i].rank());
    for (const SRing& a : c.rings) CHECK(oracle::is_sring(n, a.classes()));
  }
}

TEST_CASE("closure generation matches brute force") {
  for (int n = 1; n <= 10; ++n) {
    const Catalog e = enumerate(n);
    const Catalog b = brute_force_enumerate(n);
    CHECK_MESSAGE(e.rings == b.rings, "n = " << n);
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(enumerate(73), CapExceeded);
  CHECK_THROWS_AS(brute_force_enumerate(14), CapExceeded);
  CHECK(enumerate(80, 100).count_exact > 0);
}

TEST_CASE("multiplier orbits permute the catalog") {
  const Catalog c = enumerate(24);
  for (const SRing& a : c.rings)
    for (int m : units(24)) CHECK(std::binary_search(c.rings.begin(), c.rings.end(), apply_multiplier(a, m)));
  CHECK(c.count_up_to_cayley <= c.count_exact);
}

TEST_CASE("census") {
  const CensusReport r24 = census(24);
  CHECK(r24.total == r24.schurian);
  CHECK(r24.consistent);
  CHECK_FALSE(r24.first_non_schurian);
  const CensusReport r30 = census(30);
  CHECK(r30.non_schurian == 0);
}

TEST_CASE("census at 72 finds a non-schurian ring") {
  Enumerator e;
  const auto& rings = e.rings(72);
  CHECK(std::binary_search(rings.begin(), rings.end(), witness(8, 9).ring));
  const CensusReport r = census(e, 72);
  CHECK(r.non_schurian > 0);
  CHECK(r.consistent);
  REQUIRE(r.first_non_schurian);
  CHECK_FALSE(is_schurian(*r.first_non_schurian).schurian);
}
