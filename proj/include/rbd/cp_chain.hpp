#pragma once

// C_p configurations: ordered classes u_1..u_{p-1} with
//   u_i^2 = -2 (i <= p-2), u_{p-1}^2 = -(p+2),
//   u_i.u_{i+1} = +1, u_i.u_j = 0 for |i-j| >= 2.
// The -(p+2) class is the LAST one. For p = 2 the single class has square -4.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbd/lattice.hpp"

namespace rbd {

enum class ConstraintKind { square, consecutive_pairing, distant_pairing };

std::string to_string(ConstraintKind kind);

/// One violated constraint. Indices are 1-based class positions; for a square
/// constraint i == j.
struct Violation {
  ConstraintKind kind;
  std::size_t i;
  std::size_t j;
  Integer expected;
  Integer actual;
};

struct VerificationReport {
  long p = 0;
  bool passed = false;
  /// Earliest violation in scan order: squares, then consecutive pairings,
  /// then distant pairings (i < j, row-major).
  std::optional<Violation> first_violation;
  /// Every violation, same order.
  std::vector<Violation> violations;
  IntMatrix gram;
};

/// Checks a candidate list against the C_p pattern.
/// Throws ArityError if candidate.size() != p-1, DomainError if p < 2,
/// DimensionMismatch if the classes are not all in one lattice.
VerificationReport verify_cp_configuration(std::span<const ClassVector> candidate, long p);

/// A list of classes that has passed verify_cp_configuration.
class CpConfiguration {
 public:
  /// Throws PreconditionError (with the first violation in the message) if
  /// the classes do not form a C_p configuration.
  static CpConfiguration verified(std::vector<ClassVector> classes, long p);

  long p() const noexcept { return p_; }
  AmbientLattice lattice() const noexcept { return classes_.front().lattice(); }
  std::span<const ClassVector> classes() const noexcept { return classes_; }
  const ClassVector& operator[](std::size_t i) const { return classes_[i]; }
  std::size_t size() const noexcept { return classes_.size(); }
  const ClassVector& long_class() const { return classes_.back(); }

 private:
  CpConfiguration(std::vector<ClassVector> classes, long p) : classes_(std::move(classes)), p_(p) {}

  std::vector<ClassVector> classes_;
  long p_;
};

/// Negative continued fraction [a_1, ..., a_k] of p^2/(p-1), where
/// [a_1, ..., a_k] = a_1 - 1/(a_2 - 1/(... - 1/a_k)).
/// Equals [p+2, 2, ..., 2]: the framings of the C_p plumbing read from the
/// long class, i.e. in the reverse of CpConfiguration order.
std::vector<long> lens_space_cf(long p);

/// Evaluates a negative continued fraction exactly.
Rational evaluate_negative_cf(std::span<const long> terms);

/// Gram matrix of the classes; works on unverified lists.
IntMatrix intersection_matrix(std::span<const ClassVector> classes);
IntMatrix intersection_matrix(const CpConfiguration& cfg);

/// Elementary divisors of the Gram matrix, i.e. the invariant factors of
/// H^2(boundary) = coker(Q). For a C_p configuration this is (1, ..., 1, p^2).
struct BoundaryGroup {
  std::vector<Integer> divisors;
  Integer order;
  /// True when at most one divisor exceeds 1.
  bool cyclic = false;
};
BoundaryGroup boundary_group(const IntMatrix& gram);

/// Reference C_p configuration in CP^2 # 2p(-CP^2):
///   u_i = e_i - e_{i+1} (1 <= i <= p-2), u_{p-1} = e_{p-1} + e_p + ... + e_{2p}.
/// For p = 2 this is the single class e_1 + e_2 + e_3 + e_4.
std::vector<ClassVector> standard_configuration(long p);

}  // namespace rbd
