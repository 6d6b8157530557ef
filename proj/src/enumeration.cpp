#include "schurring/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "schurring/constructions.hpp"

namespace schurring {

const std::vector<SRing>& Enumerator::rings(int n) {
  if (n < 1 || n > cap_) {
    throw CapExceeded("enumerate: order " + std::to_string(n) + " is outside 1.." + std::to_string(cap_));
  }
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  std::vector<SRing> built = build(n);
  return memo_.emplace(n, std::move(built)).first->second;
}

std::vector<SRing> Enumerator::build(int n) {
  std::set<SRing> found;
  if (n == 1) {
    found.insert(group_ring(1));
    return {found.begin(), found.end()};
  }
  for (const MultiplierGroup& k : unit_subgroups(n)) found.insert(cyclotomic(k));
  found.insert(rank2(n));

  std::vector<int> divs;
  for (u64 d : divisors(static_cast<u64>(n))) divs.push_back(static_cast<int>(d));

  // Tensor products over coprime splits.
  for (int d1 : divs) {
    const int d2 = n / d1;
    if (d1 <= 1 || d1 >= d2 || std::gcd(d1, d2) != 1) continue;
    const auto& left = rings(d1);
    const auto& right = rings(d2);
    for (const SRing& x : left)
      for (const SRing& y : right) found.insert(tensor(x, y));
  }

  // Proper generalized wreath products: U of order n1 < n, L of order
  // n1 / m > 1, glued along U/L of order m.
  for (int n1 : divs) {
    if (n1 <= 1 || n1 >= n) continue;
    for (int m : divs) {
      if (m >= n1 || n1 % m != 0) continue;
      const int lower = n1 / m;
      const int n2 = n / lower;
      const auto& bottoms = rings(n1);
      const auto& tops = rings(n2);
      std::map<SRing, std::vector<const SRing*>> by_section;
      for (const SRing& a2 : tops)
        if (is_a_group(a2, m)) by_section[restrict(a2, m)].push_back(&a2);
      for (const SRing& a1 : bottoms) {
        if (!is_a_group(a1, lower)) continue;
        const auto it = by_section.find(quotient(a1, lower));
        if (it == by_section.end()) continue;
        for (const SRing* a2 : it->second) found.insert(gen_wreath(a1, *a2, m));
      }
    }
  }
  return {found.begin(), found.end()};
}

Catalog make_catalog(int n, std::vector<SRing> rings) {
  std::sort(rings.begin(), rings.end());
  rings.erase(std::unique(rings.begin(), rings.end()), rings.end());
  Catalog c;
  c.n = n;
  c.count_exact = rings.size();
  c.count_up_to_cayley = count_up_to_cayley(rings);
  c.rings = std::move(rings);
  return c;
}

Catalog enumerate(int n, int cap) {
  Enumerator e(cap);
  return make_catalog(n, e.rings(n));
}

std::size_t count_up_to_cayley(const std::vector<SRing>& rings) {
  if (rings.empty()) return 0;
  const int n = rings.front().order();
  const std::vector<int> us = units(n);
  std::set<SRing> seen;
  std::size_t orbits = 0;
  for (const SRing& a : rings) {
    if (seen.count(a)) continue;
    ++orbits;
    for (int m : us) seen.insert(apply_multiplier(a, m));
  }
  return orbits;
}

Catalog brute_force_enumerate(int n) {
  if (n < 1 || n > kBruteForceCap) {
    throw CapExceeded("brute_force_enumerate: order " + std::to_string(n) + " is outside 1.." +
                      std::to_string(kBruteForceCap));
  }
  std::vector<SRing> out;
  // Restricted-growth assignment of 1..n-1 to classes; neg[c] records the
  // class of -X for class c once any negated pair has been placed.
  std::vector<int> cls(n, -1);
  std::vector<int> neg;
  int classes = 0;

  std::function<void(int)> place = [&](int x) {
    if (x == n) {
      std::vector<BasicSet> parts(classes + 1);
      parts[0] = {0};
      for (int y = 1; y < n; ++y) parts[cls[y] + 1].push_back(y);
      try {
        out.push_back(SRing::validate(n, std::move(parts)));
      } catch (const ValidationError&) {
      }
      return;
    }
    const int nx = (n - x) % n;
    for (int c = 0; c <= classes; ++c) {
      const bool fresh = c == classes;
      if (fresh) neg.push_back(-1);
      const std::vector<int> saved = neg;
      bool ok = true;
      if (nx == x) {
        if (neg[c] == -1) neg[c] = c;
        ok = neg[c] == c;
      } else if (nx < x) {
        const int cn = cls[nx];
        if (neg[c] == -1 && (neg[cn] == -1 || neg[cn] == c)) {
          neg[c] = cn;
          neg[cn] = c;
        }
        ok = neg[c] == cn && neg[cn] == c;
      }
      if (ok) {
        cls[x] = c;
        if (fresh) ++classes;
        place(x + 1);
        if (fresh) --classes;
        cls[x] = -1;
      }
      neg = saved;
      if (fresh) neg.pop_back();
    }
  };
  if (n == 1) {
    out.push_back(SRing::validate(1, {{0}}));
  } else {
    place(1);
  }
  return make_catalog(n, std::move(out));
}

CensusReport census(Enumerator& e, int n, const SearchOptions& opts) {
  CensusReport r;
  r.n = n;
  r.classification = classify(static_cast<u64>(n));
  const std::vector<SRing>& rings = e.rings(n);
  r.total = rings.size();
  for (const SRing& a : rings) {
    try {
      SchurityVerdict v = is_schurian(a, opts);
      if (v.schurian) {
        ++r.schurian;
      } else {
        ++r.non_schurian;
        if (!r.first_non_schurian) {
          r.first_non_schurian = a;
          r.first_verdict = std::move(v);
        }
      }
    } catch (const SearchBudgetExceeded&) {
      ++r.budget_exceeded;
    }
  }
  r.consistent = r.classification.schur() ? (r.non_schurian == 0 && r.budget_exceeded == 0) : r.non_schurian > 0;
  return r;
}

CensusReport census(int n, int cap, const SearchOptions& opts) {
  Enumerator e(cap);
  return census(e, n, opts);
}

}  // namespace schurring
