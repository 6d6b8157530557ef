#pragma once

#include <vector>

namespace schurring {

/// A subgroup of the unit group of Z_n, acting on Z_n by multiplication.
class MultiplierGroup {
 public:
  /// Closure of the given units. Throws std::invalid_argument on a non-unit.
  MultiplierGroup(int n, std::vector<int> generators);

  static MultiplierGroup trivial(int n) { return MultiplierGroup(n, {}); }
  static MultiplierGroup all_units(int n);

  int modulus() const { return n_; }
  const std::vector<int>& generators() const { return generators_; }
  /// Sorted elements, always containing 1 (0 when n == 1).
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int m) const;

  /// Orbits on Z_n, sorted by minimum element, elements ascending.
  std::vector<std::vector<int>> orbits() const;

  bool operator==(const MultiplierGroup& other) const {
    return n_ == other.n_ && elements_ == other.elements_;
  }

 private:
  int n_;
  std::vector<int> generators_;
  std::vector<int> elements_;
};

/// Every subgroup of units(n), each listed once, sorted by (order, elements).
std::vector<MultiplierGroup> unit_subgroups(int n);

}  // namespace schurring
