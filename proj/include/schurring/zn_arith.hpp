#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace schurring {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of n, primes strictly increasing. n = 1 has no factors.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  int distinct_primes() const { return static_cast<int>(factors.size()); }
  int exponent_of(u64 p) const;
};

bool is_prime(u64 n);
Factorization factorize(u64 n);

/// Number of prime factors counted with multiplicity.
int omega(u64 n);
/// omega(n) for odd n, omega(n / 2) for even n.
int omega_star(u64 n);

/// The five shapes of integers n for which Z_n is a Schur group.
enum class Family { PK, PQK, TWO_PQK, PQR, TWO_PQR };

std::string_view family_tag(Family f);

/// Literal shape matching: p^k, pq^k, 2pq^k, pqr, 2pqr with p, q, r distinct
/// primes (2 allowed among them) and k >= 0.
std::vector<Family> classify_families(u64 n);

/// Smallest n1 (n1 < n2, n1 * n2 = n, gcd = 1) with omega_star of both
/// parts at least 2, or nothing when no such coprime split exists.
std::optional<std::pair<u64, u64>> find_nonschur_split(u64 n);

struct Classification {
  u64 n = 1;
  std::vector<Family> families;
  std::optional<std::pair<u64, u64>> nonschur_split;

  bool schur() const { return !families.empty(); }
};

/// Runs both formulations and throws std::logic_error if they disagree.
Classification classify(u64 n);

std::vector<u64> divisors(u64 n);

/// Elements of the subgroup of order d in Z_n (the multiples of n / d).
std::vector<int> subgroup_elements(int n, int d);

/// The canonical projection Z_n -> Z_m, x -> x mod m.
int project(int n, int m, int x);

/// Units of Z_n in ascending order. Z_1 has the single unit 0 == 1.
std::vector<int> units(int n);

inline int mod(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace schurring
