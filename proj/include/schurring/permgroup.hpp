#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace schurring {

/// A permutation of {0, ..., n-1}. Products act left to right:
/// (a * b)[x] == b[a[x]].
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// x -> x + shift mod n.
  static Perm translation(int n, int shift);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Perm operator*(const Perm& b) const;
  Perm inverse() const;
  bool is_identity() const;
  /// Smallest moved point, or -1 for the identity.
  int first_moved() const;

  auto operator<=>(const Perm&) const = default;

 private:
  struct Unchecked {};
  Perm(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// A positive integer kept as its prime factorization, so that orders like
/// 120! stay exact.
class GroupOrder {
 public:
  GroupOrder() = default;
  explicit GroupOrder(std::uint64_t value);

  GroupOrder& operator*=(std::uint64_t value);
  GroupOrder& operator*=(const GroupOrder& other);

  const std::map<std::uint64_t, int>& factors() const { return factors_; }
  /// The value when it fits in 64 bits.
  std::optional<std::uint64_t> value() const;
  bool divisible_by(std::uint64_t d) const;
  /// Decimal when it fits, otherwise "2^a * 3^b * ...".
  std::string str() const;

  bool operator==(const GroupOrder&) const = default;

 private:
  std::map<std::uint64_t, int> factors_;
};

GroupOrder factorial_order(int n);

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  /// base_prefix points come first in the base, in the given order, even
  /// when their basic orbits are trivial.
  StabilizerChain(int degree, const std::vector<Perm>& generators, const std::vector<int>& base_prefix = {});

  int degree() const { return degree_; }
  int length() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& base() const { return base_; }
  /// Generators of the pointwise stabilizer of base[0..level-1]; empty
  /// when level == length().
  const std::vector<Perm>& strong_generators(int level) const;
  const std::vector<int>& basic_orbit(int level) const { return levels_[level].orbit; }
  /// An element mapping base[level] to point, if point is in the orbit.
  const Perm* transversal(int level, int point) const;

  GroupOrder order() const;
  bool contains(const Perm& g) const;
  /// Every element; only sensible for small groups.
  std::vector<Perm> elements() const;

 private:
  struct Level {
    int base_point;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> rep_index;  // point -> index into reps, -1 outside orbit
    std::vector<Perm> reps;
  };

  void rebuild_orbit(int level);
  // Returns the residue and the level where sifting stopped.
  std::pair<Perm, int> strip(Perm g, int from_level) const;

  int degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::vector<Perm> empty_;
};

/// A permutation group given by generators. The stabilizer chain is built
/// on first use and then shared; copies share it too.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  GroupOrder order() const { return chain().order(); }
  bool contains(const Perm& g) const { return chain().contains(g); }

 private:
  struct Lazy;

  int degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<Lazy> lazy_;
};

/// The regular group of right translations of Z_n.
PermGroup translations(int n);
PermGroup symmetric_group(int n);

GroupOrder group_order(const PermGroup& g);

/// Orbits of the group generated by gens, each sorted, sorted by minimum.
std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& gens);

/// Orbits of the stabilizer of x in g.
std::vector<std::vector<int>> point_stabilizer_orbits(const PermGroup& g, int x);

/// Whether every conjugate of a delta generator by one of gens lies in delta.
bool normalizes(const std::vector<Perm>& gens, const PermGroup& delta);

/// Whether delta is normalized by gamma. Throws NotASubgroup if some
/// generator of delta is not in gamma.
bool is_normal_subgroup(const PermGroup& gamma, const PermGroup& delta);

/// The canonical generalized wreath product of delta1 acting on U (the
/// subgroup of order u of Z_n, labelled Z_u) and delta0 acting on G/L
/// (labelled Z_{n/l}). The coset bijections are translations by the
/// smallest coset element. Throws SectionActionMismatch if the two groups
/// induce different actions on U/L, or if U/L is not a section of either.
PermGroup perm_gen_wreath(const PermGroup& delta1, const PermGroup& delta0, int n, int u, int l);

/// The group induced on U/L (labelled Z_{u/l}) by a group acting on Z_u in
/// which the cosets of L (order l) are blocks.
PermGroup section_action_on_subgroup(const PermGroup& delta1, int u, int l);

/// The group induced on U/L by the setwise stabilizer of U/L in a group
/// acting on G/L = Z_{n/l} in which the cosets of U/L are blocks.
PermGroup section_action_on_quotient(const PermGroup& delta0, int n, int u, int l);

}  // namespace schurring
