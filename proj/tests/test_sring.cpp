#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schurring/constructions.hpp"
#include "schurring/enumeration.hpp"
#include "schurring/errors.hpp"
#include "schurring/sring.hpp"

using namespace schurring;

namespace {

SRing ring(int n, std::vector<BasicSet> classes) { return SRing::validate(n, std::move(classes)); }

ValidationError::Kind failure(int n, std::vector<BasicSet> classes) {
  try {
    SRing::validate(n, std::move(classes));
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a ValidationError");
  return ValidationError::Kind::NotAPartition;
}

const SRing& z4_wreath() {
  static const SRing a = ring(4, {{0}, {2}, {1, 3}});
  return a;
}

const SRing& z8_wreath() {
  static const SRing a = ring(8, {{0}, {4}, {2, 6}, {1, 3, 5, 7}});
  return a;
}

}  // namespace

TEST_CASE("validate accepts S-rings and canonicalizes") {
  const SRing g = ring(4, {{3}, {0}, {2}, {1}});
  CHECK(g.rank() == 4);
  CHECK(g.classes() == std::vector<BasicSet>{{0}, {1}, {2}, {3}});
  CHECK(z4_wreath().rank() == 3);
  CHECK(ring(4, {{3, 1}, {0}, {2}}) == z4_wreath());
  CHECK(ring(1, {{0}}).rank() == 1);
}

TEST_CASE("validate names the violated axiom") {
  using K = ValidationError::Kind;
  CHECK(failure(4, {{0}, {1}, {2, 3}}) == K::NotInverseClosed);
  CHECK(failure(4, {{0}, {1, 2}, {2, 3}}) == K::NotAPartition);
  CHECK(failure(4, {{0}, {1, 3}}) == K::NotAPartition);
  CHECK(failure(4, {{0, 2}, {1, 3}}) == K::ZeroClassNotSingleton);
  CHECK(failure(4, {{0}, {1, 3}, {5}}) == K::NotAPartition);
  CHECK(failure(4, {{0}, {1, 3}, {}}) == K::NotAPartition);
  // Inverse closed but not closed under products.
  CHECK(failure(6, {{0}, {1, 5}, {2, 3, 4}}) == K::NotClosedUnderProduct);
  try {
    SRing::validate(4, {{0}, {1}, {2, 3}});
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("NotInverseClosed") == 0);
  }
}

TEST_CASE("validate agrees with the definition on random inverse-closed partitions") {
  std::mt19937 rng(11);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 11;
    // Random partition of the negation pairs, then split into classes.
    std::vector<int> label(n, -1);
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int x = 1; x < n; ++x) {
      if (label[x] != -1) continue;
      const int c = static_cast<int>(rng() % k);
      label[x] = label[(n - x) % n] = c;
    }
    std::vector<BasicSet> classes{{0}};
    for (int c = 0; c < k; ++c) {
      BasicSet s;
      for (int x = 1; x < n; ++x)
        if (label[x] == c) s.push_back(x);
      if (!s.empty()) classes.push_back(s);
    }
    const bool expect = oracle::is_sring(n, classes);
    bool got = true;
    try {
      SRing::validate(n, classes);
    } catch (const ValidationError&) {
      got = false;
    }
    CHECK(got == expect);
    accepted += expect;
  }
  CHECK(accepted > 20);
}

TEST_CASE("a-groups") {
  CHECK(a_groups(group_ring(12)) == std::vector<int>{1, 2, 3, 4, 6, 12});
  CHECK(a_groups(rank2(6)) == std::vector<int>{1, 6});
  CHECK(a_groups(z4_wreath()) == std::vector<int>{1, 2, 4});
  // {0, 2} meets the class {1, 2, 3} without containing it.
  CHECK_FALSE(is_a_group(rank2(4), 2));
}

TEST_CASE("restriction, quotient and sections") {
  CHECK(restrict(group_ring(12), 4) == group_ring(4));
  CHECK(restrict(z8_wreath(), 4) == z4_wreath());
  CHECK(restrict(z8_wreath(), 8) == z8_wreath());
  CHECK(quotient(group_ring(12), 3) == group_ring(4));
  CHECK(quotient(z8_wreath(), 2) == z4_wreath());
  CHECK(quotient(z8_wreath(), 1) == z8_wreath());
  CHECK(restrict_section(group_ring(12), {6, 2}) == group_ring(3));
  CHECK(restrict_section(z8_wreath(), {4, 2}) == group_ring(2));
  CHECK(restrict_section(z8_wreath(), {8, 1}) == z8_wreath());
  CHECK_THROWS_AS(restrict(rank2(6), 2), NotAnAGroup);
  CHECK_THROWS_AS(quotient(rank2(6), 3), NotAnAGroup);
}

TEST_CASE("radicals and highest classes") {
  CHECK(radical_of_class(z4_wreath(), 0) == 1);
  CHECK(radical_of_class(z4_wreath(), 1) == 2);
  CHECK(radical_of_class(rank2(7), 1) == 1);
  CHECK(highest_classes(group_ring(6)) == std::vector<int>{1, 5});
  CHECK(highest_classes(z4_wreath()) == std::vector<int>{1});
  CHECK(highest_classes(rank2(9)) == std::vector<int>{1});
  CHECK(radical(group_ring(8)).ring_radical == 1);
  CHECK(radical(z4_wreath()).ring_radical == 2);
  CHECK(radical(rank2(6)).ring_radical == 1);
  CHECK(radical(z4_wreath()).well_defined);
}

TEST_CASE("primitive, dense, quasidense") {
  CHECK(is_primitive(rank2(6)));
  CHECK_FALSE(is_primitive(group_ring(4)));
  CHECK(is_primitive(cyclotomic(k_m(7))));
  CHECK_FALSE(is_primitive(group_ring(1)));
  CHECK_FALSE(is_quasidense(rank2(6)));
  CHECK(is_quasidense(group_ring(12)));
  CHECK(is_quasidense(rank2(7)));
  CHECK(is_dense(group_ring(12)));
  CHECK_FALSE(is_dense(rank2(6)));
  CHECK(is_dense(cyclotomic(MultiplierGroup(12, {5, 7}))));
}

TEST_CASE("wreath decompositions") {
  CHECK(wreath_decompositions(z4_wreath()) == std::vector<Section>{{2, 2}});
  CHECK(wreath_decompositions(group_ring(12)).empty());
  CHECK(is_wreath_section(group_ring(12), {12, 1}));
  const SRing w = witness(8, 9).ring;
  const auto dec = wreath_decompositions(w);
  CHECK(std::find(dec.begin(), dec.end(), Section{24, 3}) != dec.end());
}

TEST_CASE("cyclotomic recognition") {
  const auto k = is_cyclotomic(z4_wreath());
  REQUIRE(k);
  CHECK(k->elements() == std::vector<int>{1, 3});
  CHECK_FALSE(is_cyclotomic(rank2(6)));
  REQUIRE(is_cyclotomic(group_ring(9)));
  CHECK(is_cyclotomic(group_ring(9))->elements() == std::vector<int>{1});
}

TEST_CASE("tensor split") {
  CHECK(tensor_split(group_ring(6), 2));
  CHECK_FALSE(tensor_split(ring(6, {{0}, {3}, {1, 4}, {2, 5}}), 2));
  const SRing t = tensor(rank2(2), cyclotomic(k_m(3)));
  CHECK(tensor_split(t, 2));
  CHECK(tensor_split(t, 3));
  CHECK_THROWS_AS(tensor_split(group_ring(12), 2), NotComplementary);
  CHECK_THROWS_AS(tensor_split(ring(6, {{0}, {3}, {1, 2, 4, 5}}), 3), NotComplementary);
}

TEST_CASE("properties over the catalogs up to 30") {
  Enumerator e;
  for (int n = 1; n <= 30; ++n) {
    for (const SRing& a : e.rings(n)) {
      // Canonical form is a fixed point of validation.
      CHECK(SRing::validate(n, a.classes()) == a);
      // Negation is an involution on class indices.
      for (int c = 0; c < a.rank(); ++c) CHECK(a.negation(a.negation(c)) == c);
      const auto groups = a_groups(a);
      for (int d2 : groups)
        for (int d1 : groups) {
          if (d2 % d1) continue;
          CHECK(restrict(restrict(a, d2), d1) == restrict(a, d1));
          CHECK(quotient(quotient(a, d1), d2 / d1) == quotient(a, d2));
        }
      for (int c = 0; c < a.rank(); ++c) {
        const int r = radical_of_class(a, c);
        CHECK(n % r == 0);
        const BasicSet& x = a.basic_set(c);
        for (int g = 0; g < n; ++g) {
          BasicSet shifted;
          for (int v : x) shifted.push_back((v + g) % n);
          std::sort(shifted.begin(), shifted.end());
          CHECK((shifted == x) == (g % (n / r) == 0));
        }
      }
    }
  }
}

TEST_CASE("multipliers fix every circulant S-ring") {
  Enumerator e;
  for (int n : {8, 12, 18, 20}) {
    for (const SRing& a : e.rings(n))
      for (int m : units(n)) CHECK(apply_multiplier(a, m) == a);
  }
}
