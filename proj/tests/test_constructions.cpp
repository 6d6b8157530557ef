#include "doctest.h"
#include "oracles.hpp"
#include "schurring/constructions.hpp"
#include "schurring/enumeration.hpp"
#include "schurring/errors.hpp"

using namespace schurring;

namespace {

SRing cyc_km(int m) { return cyclotomic(k_m(m)); }

// Orbits of a list of multipliers computed directly, as an independent check
// of cyclotomic().
std::vector<BasicSet> orbit_partition(int n, const std::vector<int>& ks) {
  std::vector<BasicSet> out;
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    BasicSet orbit;
    for (int k : ks) {
      const int y = static_cast<int>(static_cast<long long>(x) * k % n);
      if (!seen[y]) seen[y] = true, orbit.push_back(y);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

}  // namespace

TEST_CASE("k_m") {
  CHECK(k_m(5).elements() == std::vector<int>{1, 4});
  CHECK(k_m(12).elements() == std::vector<int>{1, 11});
  CHECK(k_m(3).elements() == std::vector<int>{1, 2});
  CHECK(k_m(2).order() == 1);
  CHECK(k_m(1).order() == 1);
}

TEST_CASE("multiplier groups") {
  CHECK_THROWS_AS(MultiplierGroup(12, {2}), std::invalid_argument);
  CHECK(MultiplierGroup::all_units(12).elements() == std::vector<int>{1, 5, 7, 11});
  CHECK(unit_subgroups(8).size() == 5);    // (Z/8)* is the Klein group
  CHECK(unit_subgroups(7).size() == 4);    // cyclic of order 6
  CHECK(unit_subgroups(5).size() == 3);
  CHECK(crt_product(k_m(4), k_m(3)).elements() == std::vector<int>{1, 5, 7, 11});
}

TEST_CASE("cyclotomic rings") {
  CHECK(cyclotomic(MultiplierGroup::trivial(6)) == group_ring(6));
  CHECK(cyclotomic(MultiplierGroup::all_units(5)) == rank2(5));
  const SRing a = cyclotomic(MultiplierGroup(12, {5, 7}));
  CHECK(a.classes() == std::vector<BasicSet>{{0}, {1, 5, 7, 11}, {2, 10}, {3, 9}, {4, 8}, {6}});
  CHECK(a.rank() == 6);
  CHECK(a.basic_set(a.class_of(1)).size() == 4);
  for (int n = 1; n <= 40; ++n) {
    for (const MultiplierGroup& k : unit_subgroups(n)) {
      const SRing c = cyclotomic(k);
      CHECK(c.classes() == orbit_partition(n, k.elements()));
      CHECK(oracle::is_sring(n, c.classes()));
    }
  }
}

TEST_CASE("rank 2 rings") {
  CHECK(rank2(2).classes() == std::vector<BasicSet>{{0}, {1}});
  CHECK(rank2(4).classes() == std::vector<BasicSet>{{0}, {1, 2, 3}});
  CHECK(rank2(6).rank() == 2);
  CHECK_THROWS(rank2(1));
}

TEST_CASE("tensor products") {
  CHECK(tensor(group_ring(2), group_ring(3)) == group_ring(6));
  CHECK(tensor(rank2(3), rank2(5)).rank() == 4);
  CHECK(tensor(cyc_km(4), cyc_km(3)) == cyclotomic(crt_product(k_m(4), k_m(3))));
  CHECK_THROWS_AS(tensor(group_ring(2), group_ring(4)), NotCoprime);
  Enumerator e;
  for (const SRing& x : e.rings(4))
    for (const SRing& y : e.rings(9)) {
      const SRing t = tensor(x, y);
      CHECK(t.rank() == x.rank() * y.rank());
      CHECK(oracle::is_sring(36, t.classes()));
    }
}

TEST_CASE("generalized wreath products") {
  CHECK(gen_wreath(group_ring(2), group_ring(2), 1).classes() == std::vector<BasicSet>{{0}, {1, 3}, {2}});
  CHECK(gen_wreath(cyc_km(4), cyc_km(4), 2).classes() == std::vector<BasicSet>{{0}, {1, 3, 5, 7}, {2, 6}, {4}});
  CHECK_THROWS_AS(gen_wreath(cyc_km(4), rank2(9), 3), IncompatibleSection);
  // Group ring versus rank 2 on the common Z_4.
  CHECK_THROWS_AS(gen_wreath(group_ring(8), rank2(4), 4), IncompatibleSection);

  // Rank formula and the wreath decomposition of the result, over every
  // compatible pair of catalog rings with small parameters.
  Enumerator e;
  int built = 0;
  for (int n1 : {2, 4, 6}) {
    for (int m = 1; m <= n1; ++m) {
      if (n1 % m) continue;
      for (int n2 : {m * 2, m * 3}) {
        for (const SRing& a1 : e.rings(n1)) {
          if (!is_a_group(a1, n1 / m)) continue;
          for (const SRing& a2 : e.rings(n2)) {
            if (!is_a_group(a2, m) || quotient(a1, n1 / m) != restrict(a2, m)) continue;
            const SRing w = gen_wreath(a1, a2, m);
            const int big_n = n1 * n2 / m;
            CHECK(oracle::is_sring(big_n, w.classes()));
            CHECK(w.rank() == a1.rank() + a2.rank() - restrict(a2, m).rank());
            CHECK(is_wreath_section(w, {n1, n1 / m}));
            if (n1 / m > 1 && n1 < big_n) {
              const auto dec = wreath_decompositions(w);
              CHECK(std::find(dec.begin(), dec.end(), Section{n1, n1 / m}) != dec.end());
            }
            ++built;
          }
        }
      }
    }
  }
  CHECK(built > 50);
}

TEST_CASE("witness factor choice") {
  CHECK(witness_factor(9) == 3);
  CHECK(witness_factor(16) == 4);
  CHECK(witness_factor(15) == 3);
  CHECK(witness_factor(18) == 3);
  CHECK(witness_factor(12) == 3);
  CHECK(witness_factor(8) == 0);
  CHECK(witness_factor(45, true) == 3);
}

TEST_CASE("witness over Z_72 uses the eight branch") {
  const Witness w = witness(8, 9);
  CHECK(w.ring.order() == 72);
  CHECK(oracle::is_sring(72, w.ring.classes()));
  CHECK(w.trace.branch == WitnessTrace::Branch::Eight);
  CHECK(w.trace.a == 4);
  CHECK(w.trace.b == 4);
  CHECK(w.trace.c == 3);
  CHECK(w.trace.d == 3);
  CHECK(w.trace.m12 == 6);
  CHECK(w.trace.m34 == 6);
  CHECK(radical(w.ring).well_defined);
  // Swapping the inputs gives the same ring.
  CHECK(witness(9, 8).ring == w.ring);
}

TEST_CASE("witness branches at 120 and 144") {
  const Witness w120 = witness(8, 15);
  CHECK(w120.ring.order() == 120);
  CHECK(w120.trace.c == 3);
  CHECK(w120.trace.d == 5);
  const Witness w144 = witness(9, 16);
  CHECK(w144.ring.order() == 144);
  CHECK(w144.trace.branch == WitnessTrace::Branch::Generic);
  CHECK(std::vector<int>{w144.trace.a, w144.trace.b, w144.trace.c, w144.trace.d} == std::vector<int>{3, 3, 4, 4});
  CHECK(oracle::is_sring(144, w144.ring.classes()));
}

TEST_CASE("witness rejects bad pairs") {
  CHECK_THROWS_AS(witness(6, 5), std::invalid_argument);
  CHECK_THROWS_AS(witness(9, 12), std::invalid_argument);
  CHECK_THROWS_AS(witness(4, 9), std::invalid_argument);
}

TEST_CASE("witness builds for every valid pair up to 400") {
  int count = 0;
  for (int n1 = 2; n1 <= 40; ++n1)
    for (int n2 = n1 + 1; n1 * n2 <= 400; ++n2) {
      if (std::gcd(n1, n2) != 1 || omega_star(n1) < 2 || omega_star(n2) < 2) continue;
      const Witness w = witness(n1, n2);
      CHECK(w.ring.order() == n1 * n2);
      const auto dec = wreath_decompositions(w.ring);
      CHECK_FALSE(dec.empty());
      CHECK(radical(w.ring).well_defined);
      ++count;
    }
  CHECK(count > 5);
}
