#include "rbd/families.hpp"

#include <algorithm>

namespace rbd {

namespace {

void check_family(int family, int a) {
  if (family != 1 && family != 2) throw DomainError("family must be 1 or 2");
  if (a < 3) throw DomainError("family parameter a must be >= 3");
}

std::size_t family_rank_n(int family, int a) { return static_cast<std::size_t>(family == 1 ? 3 * a + 2 : 3 * a + 4); }

}  // namespace

FamilyInstance family_instance(int family, int a) {
  check_family(family, a);
  FamilyInstance inst;
  inst.family = family;
  inst.a = a;
  inst.p = family == 1 ? 4L * a - 9 : 4L * a - 7;
  const std::size_t base_n = family_rank_n(family, a);
  const long body_len = inst.p - 2;

  long start = 13 - a;  // index of the first body coordinate
  std::size_t n = base_n;
  if (start < 1) {
    if (family == 2) throw DomainError("family 2 formula needs a <= 12");
    start = 1;
    n = std::max<std::size_t>(base_n, static_cast<std::size_t>(start + body_len));
  }
  inst.lattice = AmbientLattice{n};

  for (long i = 0; i < body_len; ++i) {
    inst.classes.push_back(ClassVector::e(inst.lattice, start + i) - ClassVector::e(inst.lattice, start + i + 1));
  }

  auto tail = ClassVector::zero(inst.lattice);
  tail[0] = a + 3;
  if (family == 1) {
    // (a+3)h - (a-1)e_1 - 2e_2 - ... - 2e_{3a+1} - e_{3a+2}
    tail[1] = -(a - 1);
    for (std::size_t j = 2; j <= base_n - 1; ++j) tail[j] = -2;
    tail[base_n] = -1;
  } else {
    // (a+3)h + e_1 + e_2 - (a-1)e_3 - 2e_4 - ... - 2e_{3a+3} - e_{3a+4}
    tail[1] = 1;
    tail[2] = 1;
    tail[3] = -(a - 1);
    for (std::size_t j = 4; j <= base_n - 1; ++j) tail[j] = -2;
    tail[base_n] = -1;
  }
  inst.classes.push_back(std::move(tail));
  return inst;
}

ClassVector family_canonical_lift(int family, int a) {
  check_family(family, a);
  const AmbientLattice lattice{family_rank_n(family, a)};
  auto K = ClassVector::zero(lattice);
  K[0] = 3;
  for (std::size_t j = 1; j <= lattice.n; ++j) K[j] = -1;
  if (family == 2) {
    K[1] = 1;
    K[2] = 1;
  }
  return K;
}

ClassVector family_period_point(int family, int a) {
  check_family(family, a);
  const AmbientLattice lattice{family_rank_n(family, a)};
  auto H = ClassVector::zero(lattice);
  const long m = a + 3;
  if (family == 1) {
    H[0] = 8L * a - 1;
    H[1] = -2 * m;
    for (std::size_t j = 2; j <= lattice.n; ++j) H[j] = -m;
  } else {
    H[0] = 8L * a + 1;
    H[1] = m;
    H[2] = m;
    H[3] = -2 * m;
    for (std::size_t j = 4; j <= lattice.n; ++j) H[j] = -m;
  }
  return H;
}

ClassVector family_h1_witness(int family, int a) {
  check_family(family, a);
  if (a > 11) throw DomainError("delta = e_{12-a} - e_{13-a} needs a <= 11");
  const AmbientLattice lattice{family_rank_n(family, a)};
  return ClassVector::e(lattice, static_cast<std::size_t>(12 - a)) -
         ClassVector::e(lattice, static_cast<std::size_t>(13 - a));
}

}  // namespace rbd
