#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "schurring/errors.hpp"
#include "schurring/multiplier.hpp"

namespace schurring {

using BasicSet = std::vector<int>;

/// An S-ring over the cyclic group Z_n, stored as its partition into basic
/// sets. Instances are always in canonical form (classes sorted by minimum
/// element, elements ascending), which is the equality notion.
class SRing {
 public:
  /// Checks every axiom and returns the canonical ring. Throws
  /// ValidationError naming the first violated axiom.
  static SRing validate(int n, std::vector<BasicSet> classes);
  /// Canonicalizes without checking the axioms. Only for partitions that
  /// are S-rings by construction (images, restrictions, quotients).
  static SRing trusted(int n, std::vector<BasicSet> classes);

  int order() const { return n_; }
  int rank() const { return static_cast<int>(classes_.size()); }
  const std::vector<BasicSet>& classes() const { return classes_; }
  const BasicSet& basic_set(int i) const { return classes_[i]; }
  int class_of(int x) const { return class_of_[x]; }
  const std::vector<int>& class_map() const { return class_of_; }
  /// Index of the class -X for class index i.
  int negation(int i) const { return negation_[i]; }

  bool operator==(const SRing& other) const { return n_ == other.n_ && classes_ == other.classes_; }
  /// Orders by (n, rank, class list).
  std::strong_ordering operator<=>(const SRing& other) const;

 private:
  SRing() = default;

  int n_ = 1;
  std::vector<BasicSet> classes_;
  std::vector<int> class_of_;
  std::vector<int> negation_;
};

/// A section U/L given by the orders of its two A-groups, l | u.
struct Section {
  int u = 1;
  int l = 1;

  int order() const { return u / l; }
  auto operator<=>(const Section&) const = default;
};

struct RadicalReport {
  std::vector<int> per_class_radical;
  int ring_radical = 1;
  bool well_defined = true;
};

/// Orders d | n whose subgroup is a union of basic sets, ascending.
std::vector<int> a_groups(const SRing& a);
bool is_a_group(const SRing& a, int d);

/// Restriction to the A-group of order d, relabelled as Z_d.
SRing restrict(const SRing& a, int d);
/// Quotient by the A-group of order l, relabelled as Z_{n/l}.
SRing quotient(const SRing& a, int l);
SRing restrict_section(const SRing& a, Section s);

/// All A-sections (u, l), l < u, sorted.
std::vector<Section> sections(const SRing& a);

/// Order of {g : g + X = X} for the i-th basic set X.
int radical_of_class(const SRing& a, int i);
/// Indices of the basic sets generating Z_n.
std::vector<int> highest_classes(const SRing& a);
RadicalReport radical(const SRing& a);

bool is_primitive(const SRing& a);
bool is_quasidense(const SRing& a);
bool is_dense(const SRing& a);

/// Proper generalized wreath decompositions: A-sections (u, l) with l > 1,
/// u < n, such that every basic set outside U is a union of L-cosets.
std::vector<Section> wreath_decompositions(const SRing& a);
/// Same test for one section, without the properness filter.
bool is_wreath_section(const SRing& a, Section s);

/// The largest multiplier group fixing every basic set, if its orbits are
/// exactly the basic sets.
std::optional<MultiplierGroup> is_cyclotomic(const SRing& a);

/// Whether A is the tensor product of its restrictions to the subgroups of
/// orders d and n / d. Throws NotComplementary unless d and n / d are
/// coprime and d is an A-group; false when n / d is not an A-group.
bool tensor_split(const SRing& a, int d);

/// The ring m * A for a unit m.
SRing apply_multiplier(const SRing& a, int m);

}  // namespace schurring
