#pragma once

#include <string>
#include <vector>

#include "schurring/multiplier.hpp"
#include "schurring/sring.hpp"

namespace schurring {

/// The order-2 group generated by -1 mod m; trivial for m <= 2.
MultiplierGroup k_m(int m);

/// Direct product K1 x K2 inside units(n1 * n2) for coprime moduli, via CRT.
MultiplierGroup crt_product(const MultiplierGroup& k1, const MultiplierGroup& k2);

/// Orbit S-ring of a multiplier group.
SRing cyclotomic(const MultiplierGroup& k);

/// The group ring Z[Z_n]: every element is its own basic set.
SRing group_ring(int n);

/// Classes {0} and Z_n \ {0}.
SRing rank2(int n);

/// Tensor product over coprime orders. Classes are CRT products X x Y under
/// x -> (x mod n1, x mod n2). Throws NotCoprime.
SRing tensor(const SRing& a1, const SRing& a2);

/// Generalized wreath product A1 wr_m A2 over Z_{n1 n2 / m}. U is the
/// subgroup of order n1 carrying A1, L the subgroup of order n1 / m, and the
/// classes outside U are full preimages of A2 classes modulo L. Throws
/// IncompatibleSection when A1 / (n1/m) differs from (A2)_m.
SRing gen_wreath(const SRing& a1, const SRing& a2, int m);

/// How a non-schurian witness was assembled.
struct WitnessTrace {
  enum class Branch { Generic, Eight };

  Branch branch = Branch::Generic;
  int n1 = 0;  // after the swap that puts 8 first in the special branch
  int n2 = 0;
  int a = 0, b = 0, c = 0, d = 0;
  int m12 = 0;  // gluing orders of the two inner wreath products
  int m34 = 0;
};

struct Witness {
  SRing ring;
  WitnessTrace trace;
};

/// The non-schurian S-ring over Z_{n1 n2} for coprime n1, n2 with
/// omega_star(n_i) >= 2. Throws std::invalid_argument on a bad pair and
/// std::logic_error if an internal gluing step is incompatible.
Witness witness(int n1, int n2);

/// Smallest a >= 3 dividing n with n / a >= 3 (and both odd when
/// require_odd), or 0 if there is none.
int witness_factor(int n, bool require_odd = false);

std::string branch_name(WitnessTrace::Branch b);

}  // namespace schurring
