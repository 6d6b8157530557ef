#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schurring/zn_arith.hpp"

using namespace schurring;

TEST_CASE("factorize small and large") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(72).factors == std::vector<PrimePower>{{2, 3}, {3, 2}});
  CHECK(factorize(120).factors == std::vector<PrimePower>{{2, 3}, {3, 1}, {5, 1}});
  // Semiprime with two factors past the trial-division range.
  const u64 p = 1000003, q = 998244353;
  CHECK(factorize(p * q).factors == std::vector<PrimePower>{{p, 1}, {q, 1}});
  CHECK(factorize(9223372036854775783ULL).factors.size() == 1);  // largest prime below 2^63
  for (u64 n = 1; n < 3000; ++n) {
    u64 prod = 1;
    for (auto [pr, e] : factorize(n).factors)
      for (int i = 0; i < e; ++i) prod *= pr;
    CHECK(prod == n);
  }
}

TEST_CASE("omega and omega star") {
  CHECK(omega(1) == 0);
  CHECK(omega(12) == 3);
  CHECK(omega(30) == 3);
  CHECK(omega_star(8) == 2);
  CHECK(omega_star(9) == 2);
  CHECK(omega_star(6) == 1);
  for (u64 n = 1; n < 2000; ++n) {
    CHECK(omega(n) == oracle::big_omega(n));
    CHECK(omega_star(n) == oracle::big_omega_star(n));
  }
}

TEST_CASE("family shapes admit p = 2 and k = 0") {
  CHECK(classify_families(60) == std::vector<Family>{Family::TWO_PQR});
  CHECK(classify_families(72).empty());
  CHECK(classify_families(7) == std::vector<Family>{Family::PK, Family::PQK});
  CHECK(classify_families(1) == std::vector<Family>{Family::PK});
  CHECK(family_tag(Family::TWO_PQK) == "2pq^k");
  for (u64 n = 1; n < 5000; ++n) {
    const auto expect = oracle::families(n);
    const auto got = classify_families(n);
    for (int f = 0; f < 5; ++f) {
      const bool has = std::find(got.begin(), got.end(), static_cast<Family>(f)) != got.end();
      CHECK_MESSAGE(has == expect[f], "n = " << n << " family " << f);
    }
  }
}

TEST_CASE("smallest coprime split") {
  CHECK(find_nonschur_split(72) == std::pair<u64, u64>{8, 9});
  CHECK_FALSE(find_nonschur_split(60));
  CHECK(find_nonschur_split(144) == std::pair<u64, u64>{9, 16});
  CHECK_FALSE(find_nonschur_split(210));
  for (u64 n = 1; n < 5000; ++n) {
    const u64 expect = oracle::smallest_split(n);
    const auto got = find_nonschur_split(n);
    CHECK_MESSAGE((got ? got->first : 0) == expect, "n = " << n);
  }
}

TEST_CASE("classify combines both routes") {
  const auto c71 = classify(71);
  CHECK(c71.schur());
  CHECK(c71.families == std::vector<Family>{Family::PK, Family::PQK});
  const auto c72 = classify(72);
  CHECK_FALSE(c72.schur());
  CHECK(c72.nonschur_split == std::pair<u64, u64>{8, 9});
  const auto c210 = classify(210);
  CHECK(c210.families == std::vector<Family>{Family::TWO_PQR});
}

TEST_CASE("subgroups and projection") {
  CHECK(subgroup_elements(12, 3) == std::vector<int>{0, 4, 8});
  CHECK(subgroup_elements(12, 12).size() == 12);
  CHECK(subgroup_elements(72, 8) == std::vector<int>{0, 9, 18, 27, 36, 45, 54, 63});
  CHECK_THROWS_AS(subgroup_elements(12, 5), std::invalid_argument);
  CHECK(project(12, 4, 7) == 3);
  CHECK(project(72, 9, 70) == 7);
  CHECK(project(6, 6, 5) == 5);
  CHECK_THROWS_AS(project(12, 5, 1), std::invalid_argument);

  for (int n : {12, 30, 72, 97}) {
    for (u64 d : divisors(n)) {
      const auto h = subgroup_elements(n, static_cast<int>(d));
      CHECK(h.size() == d);
      for (int x : h)
        for (int y : h) CHECK(std::binary_search(h.begin(), h.end(), (x + y) % n));
    }
  }

  std::mt19937 rng(7);
  for (int n : {12, 60, 72}) {
    for (u64 m : divisors(n)) {
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int i = 0; i < 1000; ++i) {
        const int x = pick(rng), y = pick(rng);
        const int mm = static_cast<int>(m);
        CHECK((project(n, mm, x) + project(n, mm, y)) % mm == project(n, mm, (x + y) % n));
      }
    }
  }
}

TEST_CASE("units") {
  CHECK(units(1) == std::vector<int>{0});
  CHECK(units(12) == std::vector<int>{1, 5, 7, 11});
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
}
