#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "schurring/schurity.hpp"
#include "schurring/sring.hpp"
#include "schurring/zn_arith.hpp"

namespace schurring {

/// All S-rings over Z_n known to a generator, canonical and deduplicated.
struct Catalog {
  int n = 1;
  std::vector<SRing> rings;  // sorted by (rank, class list)
  std::size_t count_exact = 0;
  std::size_t count_up_to_cayley = 0;
};

constexpr int kDefaultEnumerationCap = 72;
constexpr int kBruteForceCap = 13;

/// Builds catalogs bottom-up over the divisor lattice and keeps them, so
/// repeated queries for related orders share work.
class Enumerator {
 public:
  explicit Enumerator(int cap = kDefaultEnumerationCap) : cap_(cap) {}

  /// Every S-ring over Z_n: cyclotomic rings and rank-2 rings closed under
  /// tensor products and proper generalized wreath products. Throws
  /// CapExceeded above the cap.
  const std::vector<SRing>& rings(int n);

 private:
  std::vector<SRing> build(int n);

  int cap_;
  std::map<int, std::vector<SRing>> memo_;
};

Catalog enumerate(int n, int cap = kDefaultEnumerationCap);

/// Independent oracle: every inverse-closed partition of Z_n \ {0} that
/// passes validation. Throws CapExceeded for n > 13.
Catalog brute_force_enumerate(int n);

/// Number of orbits of the multiplier action A -> m A on a closed set.
std::size_t count_up_to_cayley(const std::vector<SRing>& rings);

Catalog make_catalog(int n, std::vector<SRing> rings);

struct CensusReport {
  int n = 1;
  Classification classification;
  std::size_t total = 0;
  std::size_t schurian = 0;
  std::size_t non_schurian = 0;
  std::size_t budget_exceeded = 0;
  std::optional<SRing> first_non_schurian;
  std::optional<SchurityVerdict> first_verdict;
  /// Schur orders have no non-schurian ring; other orders have at least one.
  bool consistent = false;
};

CensusReport census(int n, int cap = kDefaultEnumerationCap, const SearchOptions& opts = default_search_options());
CensusReport census(Enumerator& e, int n, const SearchOptions& opts = default_search_options());

}  // namespace schurring
