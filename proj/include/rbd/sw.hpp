#pragma once

// Small-perturbation Seiberg-Witten values for b2+ = 1 via wall crossing.
//
// The only value the engine takes as given is the base chamber: for
// R_n = CP^2 # n(-CP^2), SW_{R_n, PD(h)}(K) = 0 for every n >= 0 and every
// characteristic K. Everything else is obtained by crossing walls from PD(h).

#include <optional>
#include <string>
#include <vector>

#include "rbd/blowdown.hpp"
#include "rbd/cp_chain.hpp"
#include "rbd/lattice.hpp"

namespace rbd {

/// A characteristic class K on X (every coefficient odd).
class CharacteristicData {
 public:
  /// Throws DomainError if K is not characteristic, DimensionMismatch if K
  /// is not in X's lattice.
  static CharacteristicData make(ClassVector K, AmbientManifoldData X);

  const ClassVector& K() const noexcept { return K_; }
  const AmbientManifoldData& X() const noexcept { return X_; }
  CharacteristicData negated() const { return CharacteristicData(-K_, X_); }

 private:
  CharacteristicData(ClassVector K, AmbientManifoldData X) : K_(std::move(K)), X_(X) {}
  ClassVector K_;
  AmbientManifoldData X_;
};

/// A period point H with H^2 > 0 and H.h > 0. Only integer representatives
/// are accepted: positive rescaling changes no sign or orthogonality test.
class PeriodPoint {
 public:
  /// Throws PreconditionError naming the failed inequality.
  static PeriodPoint make(ClassVector H);
  /// PD(h).
  static PeriodPoint hyperplane(AmbientLattice lattice);

  const ClassVector& H() const noexcept { return H_; }

 private:
  explicit PeriodPoint(ClassVector H) : H_(std::move(H)) {}
  ClassVector H_;
};

/// d_X(K) = (K^2 - 2e(X) - 3 sigma(X)) / 4. Throws ConsistencyError if the
/// quotient is not an integer.
Integer d_invariant(const CharacteristicData& K);

enum class WallBranch { same_side, positive_to_negative, negative_to_positive };
std::string to_string(WallBranch b);

struct WallCrossing {
  Integer K_dot_from;
  Integer K_dot_to;
  Integer d;
  WallBranch branch = WallBranch::same_side;
  /// Term added to SW_H: 0, (-1)^{d/2} or (-1)^{1+d/2}.
  Integer term;
  Integer value;
};

/// SW_{X,H'}(K) from SW_{X,H}(K). Preconditions (PreconditionError):
/// H^2 > 0, H'^2 > 0, H.H' > 0, K.H != 0, K.H' != 0, d(K) >= 0.
WallCrossing wall_crossing_step(const CharacteristicData& K, const PeriodPoint& from,
                                const PeriodPoint& to, const Integer& sw_at_from);
Integer wall_crossing(const CharacteristicData& K, const PeriodPoint& from, const PeriodPoint& to,
                      const Integer& sw_at_from);

/// K~ lifts a characteristic class of X_(p) when K~.u_i = 0 (i <= p-2) and
/// K~.u_{p-1} = +-p.
struct LiftCertificate {
  bool admissible = false;
  std::vector<Integer> pairings;
};
LiftCertificate lift_admissible(const CharacteristicData& K, const CpConfiguration& cfg);

/// Restriction of K~ to C_p and to its lens-space boundary.
struct RestrictionReport {
  std::vector<Integer> k;
  /// k^T Q^{-1} k.
  Rational restriction_square;
  bool square_ok = false;
  /// Image of k in coker(Q) = Z/p^2 under the Smith-form generator, in [0, p^2).
  Integer residue;
  Integer boundary_order;
  bool divisible_by_p = false;
  /// residue = m p with m in [0, p); only when divisible_by_p.
  std::optional<Integer> m;
  /// m = p - 1 (mod 2). Depends on the choice of generator of Z/p^2.
  std::optional<bool> m_parity_ok;
  std::string convention = "smith-form generator; m parity is convention-dependent";
};
RestrictionReport restriction_conditions(const CharacteristicData& K, const CpConfiguration& cfg);

struct SwCertificate {
  Integer value;
  LiftCertificate lift;
  Integer d;
  /// H.u_i, all zero.
  std::vector<Integer> orthogonality;
  Integer H_square;
  Integer base_value;
  WallCrossing crossing;
  std::int64_t b2_minus_after = 0;
  /// d > 0: the value is still computed, but a nonzero value no longer
  /// certifies exoticness by this argument.
  bool d_positive = false;
};

/// SW_{X_(p)}(K) for the class lifted by K~, computed as
/// wall_crossing(K~, PD(h), H, 0). Requires K~ admissible, H orthogonal to
/// every u_i, H^2 > 0 and b2-(X_(p)) <= 9 (chamber independence).
SwCertificate sw_on_blowdown(const AmbientManifoldData& X, const CpConfiguration& cfg,
                             const CharacteristicData& K, const PeriodPoint& H);

}  // namespace rbd
