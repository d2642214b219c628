#pragma once

// Closed-form class data for the two rational-surface families
//   family 1: C_{4a-9} in CP^2 # (3a+2)(-CP^2)
//   family 2: C_{4a-7} in CP^2 # (3a+4)(-CP^2)
// with the lifted canonical classes, period points and H_1 witnesses used to
// show the blowdowns are exotic. The CLI reads the same data from fixture
// files; these functions are the formula side used for cross-checks and for
// instantiating the templates outside the range where they are valid.

#include <vector>

#include "rbd/lattice.hpp"

namespace rbd {

struct FamilyInstance {
  int family = 1;
  int a = 0;
  long p = 0;
  AmbientLattice lattice;
  /// u_1..u_{p-1}; u_i = e_{12-a+i} - e_{13-a+i} for i <= p-2 and the long class last.
  std::vector<ClassVector> classes;
};

/// Instantiates the family formula at any a >= 3.
///
/// Family 1 places its body at e_{13-a}..e_{3a+2}; for a >= 13 that would
/// start at or below index 0, so the body is anchored at e_1 instead
/// (u_1 = e_1 - e_2) and the lattice is enlarged to n = 4a-10 to hold it; the
/// long class keeps its formula with zero coefficients on the added indices.
/// Family 2 is instantiated literally and needs 13-a >= 1 (a <= 12).
FamilyInstance family_instance(int family, int a);

/// Lifted canonical class: 3h - e_1 - ... - e_n (family 1) or
/// 3h + e_1 + e_2 - e_3 - ... - e_n (family 2).
ClassVector family_canonical_lift(int family, int a);

/// Period point orthogonal to the configuration:
///   family 1: (8a-1)h - 2(a+3)e_1 - (a+3)(e_2 + ... + e_{3a+2})
///   family 2: (8a+1)h + (a+3)(e_1 + e_2) - 2(a+3)e_3 - (a+3)(e_4 + ... + e_{3a+4})
ClassVector family_period_point(int family, int a);

/// delta = e_{12-a} - e_{13-a}.
ClassVector family_h1_witness(int family, int a);

}  // namespace rbd
