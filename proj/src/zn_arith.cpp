#include "schurring/zn_arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schurring {

namespace {

using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic for all 64-bit inputs with this witness set.
bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (a % n == 0) continue;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. n is odd and composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

constexpr u64 kTrialLimit = 1u << 20;

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

int Factorization::exponent_of(u64 p) const {
  for (const auto& f : factors)
    if (f.prime == p) return f.exponent;
  return 0;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  return miller_rabin(n);
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result{n, {}};
  u64 rest = n;
  auto take = [&](u64 p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) result.factors.push_back({p, e});
  };
  take(2);
  for (u64 p = 3; p * p <= rest && p < kTrialLimit; p += 2) take(p);
  if (rest == 1) return result;
  if (rest < kTrialLimit * kTrialLimit) {
    // Trial division exhausted every factor below sqrt(rest).
    result.factors.push_back({rest, 1});
    return result;
  }
  std::vector<u64> big;
  factor_into(rest, big);
  std::sort(big.begin(), big.end());
  for (std::size_t i = 0; i < big.size();) {
    std::size_t j = i;
    while (j < big.size() && big[j] == big[i]) ++j;
    result.factors.push_back({big[i], static_cast<int>(j - i)});
    i = j;
  }
  return result;
}

int omega(u64 n) {
  int total = 0;
  for (const auto& f : factorize(n).factors) total += f.exponent;
  return total;
}

int omega_star(u64 n) { return n % 2 == 0 ? omega(n / 2) : omega(n); }

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::PK: return "p^k";
    case Family::PQK: return "pq^k";
    case Family::TWO_PQK: return "2pq^k";
    case Family::PQR: return "pqr";
    case Family::TWO_PQR: return "2pqr";
  }
  return "?";
}

namespace {

bool is_prime_power_or_one(const Factorization& f) { return f.factors.size() <= 1; }

// n = p * q^k with p != q primes, k >= 0.
bool matches_pqk(const Factorization& f) {
  const auto& fs = f.factors;
  if (fs.size() == 1) return fs[0].exponent == 1;  // k = 0
  if (fs.size() == 2) return fs[0].exponent == 1 || fs[1].exponent == 1;
  return false;
}

bool matches_pqr(const Factorization& f) {
  return f.factors.size() == 3 &&
         std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& p) { return p.exponent == 1; });
}

}  // namespace

std::vector<Family> classify_families(u64 n) {
  std::vector<Family> out;
  const Factorization f = factorize(n);
  if (is_prime_power_or_one(f)) out.push_back(Family::PK);
  if (matches_pqk(f)) out.push_back(Family::PQK);
  if (n % 2 == 0) {
    const Factorization half = factorize(n / 2);
    if (matches_pqk(half)) out.push_back(Family::TWO_PQK);
  }
  if (matches_pqr(f)) out.push_back(Family::PQR);
  if (n % 2 == 0 && matches_pqr(factorize(n / 2))) out.push_back(Family::TWO_PQR);
  return out;
}

std::optional<std::pair<u64, u64>> find_nonschur_split(u64 n) {
  const Factorization f = factorize(n);
  const std::size_t s = f.factors.size();
  std::optional<std::pair<u64, u64>> best;
  // Every coprime split is a subset of the prime-power blocks.
  for (u64 mask = 0; mask < (u64{1} << s); ++mask) {
    u64 n1 = 1;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (u64{1} << i)) {
        for (int e = 0; e < f.factors[i].exponent; ++e) n1 *= f.factors[i].prime;
      }
    }
    const u64 n2 = n / n1;
    if (n1 >= n2) continue;
    if (omega_star(n1) < 2 || omega_star(n2) < 2) continue;
    if (!best || n1 < best->first) best = std::make_pair(n1, n2);
  }
  return best;
}

Classification classify(u64 n) {
  Classification c{n, classify_families(n), find_nonschur_split(n)};
  if (c.families.empty() == !c.nonschur_split.has_value()) {
    throw std::logic_error("classify: family match and coprime split disagree for n = " + std::to_string(n));
  }
  return c;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> subgroup_elements(int n, int d) {
  if (n <= 0 || d <= 0 || n % d != 0) {
    throw std::invalid_argument("subgroup_elements: " + std::to_string(d) + " does not divide " + std::to_string(n));
  }
  std::vector<int> out(d);
  const int step = n / d;
  for (int i = 0; i < d; ++i) out[i] = i * step;
  return out;
}

int project(int n, int m, int x) {
  if (m <= 0 || n % m != 0) {
    throw std::invalid_argument("project: " + std::to_string(m) + " does not divide " + std::to_string(n));
  }
  return mod(x, m);
}

std::vector<int> units(int n) {
  if (n == 1) return {0};
  std::vector<int> out;
  for (int x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) out.push_back(x);
  return out;
}

}  // namespace schurring
