#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schurring/permgroup.hpp"
#include "schurring/sring.hpp"

namespace schurring {

struct SearchOptions {
  /// Upper bound on search-tree nodes before SearchBudgetExceeded.
  std::uint64_t node_budget = 100'000'000;
};

/// Node budget from $SCHURRING_BUDGET, or the default of 10^8.
std::uint64_t default_node_budget();
SearchOptions default_search_options();

/// Index of the basic set containing y - x.
inline int color(const SRing& a, int x, int y) {
  const int n = a.order();
  int d = y - x;
  if (d < 0) d += n;
  return a.class_of(d);
}

/// Whether f preserves every color.
bool is_color_automorphism(const SRing& a, const Perm& f);

/// The group of all permutations of Z_n preserving colors.
struct AutomorphismGroup {
  PermGroup group;                     // translations plus stabilizer generators
  std::vector<Perm> stabilizer_generators;  // generate the stabilizer of 0
  std::vector<std::vector<int>> stabilizer_orbits;
  GroupOrder order;
  std::uint64_t nodes = 0;
};

/// Individualization-refinement search. Throws SearchBudgetExceeded.
AutomorphismGroup automorphism_group(const SRing& a, const SearchOptions& opts = default_search_options());

struct SchurityVerdict {
  struct Mismatch {
    std::vector<int> orbit;  // a stabilizer orbit strictly inside a class
    int class_index = 0;
    std::vector<std::vector<int>> split;  // all orbits that make up that class
  };

  bool schurian = false;
  GroupOrder aut_order;
  std::vector<std::vector<int>> stabilizer_orbits;
  std::optional<Mismatch> witness_mismatch;
  std::uint64_t nodes = 0;
};

/// A is schurian iff the 0-stabilizer orbits of its color automorphism group
/// are exactly its basic sets.
SchurityVerdict is_schurian(const SRing& a, const SearchOptions& opts = default_search_options());

/// Whether the translations form a normal subgroup of the automorphism group.
bool is_normal_sring(const SRing& a, const SearchOptions& opts = default_search_options());

/// For a non-schurian A: whether every proper section ring is schurian.
/// Throws NotNonSchurian if A is schurian.
bool minimal_nonschurian_check(const SRing& a, const SearchOptions& opts = default_search_options());

}  // namespace schurring
