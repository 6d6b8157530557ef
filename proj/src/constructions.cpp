#include "schurring/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "schurring/zn_arith.hpp"

namespace schurring {

MultiplierGroup k_m(int m) {
  if (m <= 2) return MultiplierGroup::trivial(m);
  return MultiplierGroup(m, {m - 1});
}

MultiplierGroup crt_product(const MultiplierGroup& k1, const MultiplierGroup& k2) {
  const int n1 = k1.modulus(), n2 = k2.modulus();
  if (std::gcd(n1, n2) != 1) throw NotCoprime("crt_product: moduli are not coprime");
  const int n = n1 * n2;
  std::vector<int> elements;
  for (int x : units(n)) {
    if (k1.contains(x % n1) && k2.contains(x % n2)) elements.push_back(x);
  }
  return MultiplierGroup(n, std::move(elements));
}

SRing cyclotomic(const MultiplierGroup& k) { return SRing::validate(k.modulus(), k.orbits()); }

SRing group_ring(int n) {
  std::vector<BasicSet> classes;
  classes.reserve(n);
  for (int x = 0; x < n; ++x) classes.push_back({x});
  return SRing::trusted(n, std::move(classes));
}

SRing rank2(int n) {
  if (n < 2) throw std::invalid_argument("rank2: n must be at least 2");
  BasicSet rest;
  for (int x = 1; x < n; ++x) rest.push_back(x);
  return SRing::trusted(n, {{0}, std::move(rest)});
}

SRing tensor(const SRing& a1, const SRing& a2) {
  const int n1 = a1.order(), n2 = a2.order();
  if (std::gcd(n1, n2) != 1) {
    throw NotCoprime("tensor: orders " + std::to_string(n1) + " and " + std::to_string(n2) + " are not coprime");
  }
  const int n = n1 * n2;
  const int r2 = a2.rank();
  std::vector<BasicSet> classes(static_cast<std::size_t>(a1.rank()) * r2);
  for (int x = 0; x < n; ++x) classes[a1.class_of(x % n1) * r2 + a2.class_of(x % n2)].push_back(x);
  return SRing::validate(n, std::move(classes));
}

SRing gen_wreath(const SRing& a1, const SRing& a2, int m) {
  const int n1 = a1.order(), n2 = a2.order();
  if (m < 1 || n1 % m != 0 || n2 % m != 0) {
    throw IncompatibleSection("gen_wreath: " + std::to_string(m) + " must divide both " + std::to_string(n1) +
                              " and " + std::to_string(n2));
  }
  const int lower = n1 / m;
  if (!is_a_group(a1, lower)) {
    throw IncompatibleSection("gen_wreath: subgroup of order " + std::to_string(lower) + " is not an A1-group");
  }
  if (!is_a_group(a2, m)) {
    throw IncompatibleSection("gen_wreath: subgroup of order " + std::to_string(m) + " is not an A2-group");
  }
  const SRing top = quotient(a1, lower);
  const SRing bottom = restrict(a2, m);
  if (top != bottom) throw IncompatibleSection("gen_wreath: A1 / L and (A2)_m differ as S-rings over Z_" + std::to_string(m));

  const int n = n1 / m * n2;
  const int u_step = n / n1;  // U = multiples of u_step
  const int inside_step = n2 / m;
  std::vector<BasicSet> classes;
  for (const BasicSet& x : a1.classes()) {
    BasicSet y;
    y.reserve(x.size());
    for (int v : x) y.push_back(v * u_step);
    classes.push_back(std::move(y));
  }
  // G/L is Z_{n2} through z -> z mod n2; U/L is its subgroup of order m.
  std::vector<int> outer_index(a2.rank(), -1);
  for (int c = 0; c < a2.rank(); ++c) {
    if (a2.basic_set(c).front() % inside_step == 0) continue;
    outer_index[c] = static_cast<int>(classes.size());
    classes.emplace_back();
  }
  for (int z = 0; z < n; ++z) {
    if (z % u_step == 0) continue;
    const int idx = outer_index[a2.class_of(z % n2)];
    if (idx < 0) throw std::logic_error("gen_wreath: element outside U maps into U/L");
    classes[idx].push_back(z);
  }
  return SRing::validate(n, std::move(classes));
}

int witness_factor(int n, bool require_odd) {
  for (int a = 3; a * 3 <= n; ++a) {
    if (n % a != 0) continue;
    if (require_odd && (a % 2 == 0 || (n / a) % 2 == 0)) continue;
    return a;
  }
  return 0;
}

std::string branch_name(WitnessTrace::Branch b) { return b == WitnessTrace::Branch::Eight ? "eight" : "generic"; }

namespace {

void expect_equal(const SRing& got, const SRing& want, const char* what) {
  if (got != want) throw std::logic_error(std::string("witness: intermediate identity failed: ") + what);
}

}  // namespace

Witness witness(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("witness: orders must be positive");
  if (std::gcd(n1, n2) != 1) {
    throw std::invalid_argument("witness: " + std::to_string(n1) + " and " + std::to_string(n2) + " are not coprime");
  }
  for (int v : {n1, n2}) {
    if (omega_star(static_cast<u64>(v)) < 2) {
      throw std::invalid_argument("witness: omega_star(" + std::to_string(v) + ") = " +
                                  std::to_string(omega_star(static_cast<u64>(v))) + " < 2");
    }
  }

  WitnessTrace t;
  if (n2 == 8) std::swap(n1, n2);
  t.n1 = n1;
  t.n2 = n2;
  if (n1 == 8) {
    t.branch = WitnessTrace::Branch::Eight;
    t.a = t.b = 4;
    t.c = witness_factor(n2, true);
    if (t.c == 0) throw std::logic_error("witness: no odd factorization of " + std::to_string(n2));
    t.m12 = 2 * t.c;
  } else {
    t.a = witness_factor(n1);
    t.c = witness_factor(n2);
    if (t.a == 0 || t.c == 0) throw std::logic_error("witness: no factorization with both parts >= 3");
    t.b = n1 / t.a;
    t.m12 = t.c;
  }
  t.d = n2 / t.c;
  t.m34 = t.branch == WitnessTrace::Branch::Eight ? 2 * t.d : t.d;
  const int a = t.a, b = t.b, c = t.c, d = t.d;

  const SRing a1 = cyclotomic(crt_product(k_m(a), k_m(c)));
  const SRing a2 = cyclotomic(k_m(b * c));
  const SRing a3 = cyclotomic(k_m(a * d));
  const SRing a4 = cyclotomic(k_m(b * d));

  expect_equal(quotient(a1, a1.order() / t.m12), cyclotomic(k_m(t.m12)), "A1 section");
  expect_equal(restrict(a2, t.m12), cyclotomic(k_m(t.m12)), "A2 section");
  expect_equal(quotient(a3, a3.order() / t.m34), cyclotomic(k_m(t.m34)), "A3 section");
  expect_equal(restrict(a4, t.m34), cyclotomic(k_m(t.m34)), "A4 section");

  SRing a12 = a1, a34 = a3;
  try {
    a12 = gen_wreath(a1, a2, t.m12);
    a34 = gen_wreath(a3, a4, t.m34);
  } catch (const IncompatibleSection& e) {
    throw std::logic_error(std::string("witness: ") + e.what());
  }

  const SRing middle = t.branch == WitnessTrace::Branch::Eight
                           ? gen_wreath(cyclotomic(k_m(4)), cyclotomic(k_m(4)), 2)
                           : gen_wreath(cyclotomic(k_m(a)), cyclotomic(k_m(b)), 1);
  expect_equal(quotient(a12, a12.order() / n1), middle, "A12 quotient of order n1");
  expect_equal(restrict(a34, n1), middle, "A34 restriction of order n1");

  try {
    return {gen_wreath(a12, a34, n1), t};
  } catch (const IncompatibleSection& e) {
    throw std::logic_error(std::string("witness: ") + e.what());
  }
}

}  // namespace schurring
