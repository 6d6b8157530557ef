#include "schurring/multiplier.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "schurring/zn_arith.hpp"

namespace schurring {

MultiplierGroup::MultiplierGroup(int n, std::vector<int> generators) : n_(n) {
  if (n < 1) throw std::invalid_argument("MultiplierGroup: modulus must be positive");
  const int one = 1 % n;
  for (int& g : generators) {
    g = mod(g, n);
    if (std::gcd(g, n) != 1 && n > 1) {
      throw std::invalid_argument("MultiplierGroup: " + std::to_string(g) + " is not a unit mod " + std::to_string(n));
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);

  std::vector<char> seen(n, 0);
  std::vector<int> frontier{one};
  seen[one] = 1;
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    elements_.push_back(x);
    for (int g : generators_) {
      const int y = static_cast<int>(static_cast<long long>(x) * g % n);
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  std::sort(elements_.begin(), elements_.end());
}

MultiplierGroup MultiplierGroup::all_units(int n) { return MultiplierGroup(n, units(n)); }

bool MultiplierGroup::contains(int m) const {
  return std::binary_search(elements_.begin(), elements_.end(), mod(m, n_));
}

std::vector<std::vector<int>> MultiplierGroup::orbits() const {
  std::vector<int> seen(n_, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n_; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (int k : elements_) {
      const int y = static_cast<int>(static_cast<long long>(x) * k % n_);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<MultiplierGroup> unit_subgroups(int n) {
  const std::vector<int> us = units(n);
  std::set<std::vector<int>> seen;
  std::vector<MultiplierGroup> out;
  std::vector<MultiplierGroup> frontier{MultiplierGroup::trivial(n)};
  seen.insert(frontier[0].elements());
  // Each subgroup of a finite group is reached by adjoining elements one at a time.
  while (!frontier.empty()) {
    MultiplierGroup k = std::move(frontier.back());
    frontier.pop_back();
    for (int u : us) {
      if (k.contains(u)) continue;
      std::vector<int> gens = k.generators();
      gens.push_back(u);
      MultiplierGroup bigger(n, std::move(gens));
      if (seen.insert(bigger.elements()).second) frontier.push_back(std::move(bigger));
    }
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(), [](const MultiplierGroup& a, const MultiplierGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace schurring
