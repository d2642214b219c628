#pragma once

// Classical invariants of the rational blowdown X_(p) of X = CP^2 # n(-CP^2)
// along a C_p configuration.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbd/cp_chain.hpp"
#include "rbd/lattice.hpp"

namespace rbd {

/// X = CP^2 # n(-CP^2). Every ambient manifold in scope is simply connected.
struct AmbientManifoldData {
  AmbientLattice lattice;
  bool simply_connected = true;

  std::int64_t b2_plus() const noexcept { return 1; }
  std::int64_t b2_minus() const noexcept { return static_cast<std::int64_t>(lattice.n); }
  std::int64_t euler() const noexcept { return 2 + b2_plus() + b2_minus(); }
  std::int64_t signature() const noexcept { return b2_plus() - b2_minus(); }
};

/// Numeric invariants of X_(p).
struct BlowdownInvariants {
  std::int64_t b2_plus = 0;
  std::int64_t b2_minus = 0;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
};

/// b2+ kept, b2- and e drop by p-1, signature rises by p-1.
BlowdownInvariants blowdown_invariants(const AmbientManifoldData& X, const CpConfiguration& cfg);

enum class H1Verdict { trivial, inconclusive };
std::string to_string(H1Verdict v);

/// Certificate for H_1(X_(p); Z) = 0 from a class delta with
///   (1) delta.u_1 = 1 and delta.u_i = 0 for i >= 2, or
///   (2) delta.u_i = 0 for i <= p-2 and gcd(delta.u_{p-1}, p) = 1.
/// Only sufficient conditions exist, so the verdict is never "nontrivial".
struct H1Certificate {
  H1Verdict verdict = H1Verdict::inconclusive;
  /// 1 or 2 when trivial, 0 otherwise.
  int condition = 0;
  std::optional<ClassVector> witness;
  /// delta.u_i for the reported (or supplied) delta.
  std::vector<Integer> pairings;
  /// "supplied", "bounded-search" or "lattice-solve".
  std::string source;
  std::string note;
};

/// Bounds for witness enumeration: coefficients in [-bound, bound] on at most
/// max_support nonzero coordinates, visited by support size, then support
/// (lexicographic), then coefficients in the order 1, -1, 2, -2, ...
struct WitnessSearchOptions {
  long bound = 3;
  std::size_t max_support = 4;
  /// Enumeration nodes before falling back to the exact lattice witness.
  std::uint64_t node_budget = 20'000'000;
};

/// Which of the two sufficient conditions a delta satisfies (0 if neither).
int h1_condition_met(const CpConfiguration& cfg, const ClassVector& delta);

/// With delta supplied, checks it. Otherwise decides by exact integer linear
/// algebra whether any witness exists at all; if so, reports the first one in
/// the bounded enumeration, or the exact solution when none is small.
H1Certificate h1_certificate(const AmbientManifoldData& X, const CpConfiguration& cfg,
                             const std::optional<ClassVector>& delta,
                             const WitnessSearchOptions& options = {});

enum class Parity { odd, even_possible, inconclusive };
std::string to_string(Parity p);

struct ParityResult {
  Parity parity = Parity::inconclusive;
  /// sigma(X_(p)) mod 16 != 0. Forces an odd form when X_(p) is simply
  /// connected (an even form would make it spin, and Rochlin gives 16 | sigma).
  bool signature_criterion = false;
  /// A class orthogonal to every u_i with odd square. It survives into
  /// H_2(X_(p)), so its presence forces an odd form.
  std::optional<ClassVector> odd_witness;
  std::optional<Integer> odd_witness_square;
  /// "candidate", "bounded-search" or "complement-basis".
  std::string witness_source;
  /// Whether the orthogonal complement of the configuration is an odd lattice.
  bool complement_odd = false;
  /// "CP²#kCP̄²" by Freedman, set only for a simply connected odd X_(p) with b2+ = 1.
  std::optional<std::string> homeo_type;
};

/// Name of CP^2 # k(-CP^2) used in reports.
std::string rational_surface_name(std::int64_t k);

/// Parity of the intersection form of X_(p) and, when decidable, its
/// homeomorphism type. `candidates` are tried first as odd witnesses.
ParityResult parity_and_homeo_type(const AmbientManifoldData& X, const CpConfiguration& cfg,
                                   const H1Certificate& h1,
                                   const WitnessSearchOptions& options = {},
                                   std::span<const ClassVector> candidates = {});

/// (h0, h1, h2, h3, h4).
using HandleCounts = std::array<std::int64_t, 5>;

/// Handle decomposition of X_(p) when X has the standard shape in which C_p
/// is attached to a single 0-handle with h2 further 2-handles and h3
/// 3-handles. h1 counts 1-handles of X that survive the blowdown
/// (normally 0). The shape hypothesis is the caller's responsibility.
HandleCounts handle_counts_after_blowdown(std::int64_t h2, std::int64_t h3, std::int64_t h1 = 0);

struct HandleInput {
  std::int64_t h2 = 0;
  std::int64_t h3 = 0;
  std::int64_t h1 = 0;
};

struct BlowdownOptions {
  std::optional<ClassVector> delta;
  WitnessSearchOptions witness;
  std::vector<ClassVector> odd_candidates;
  std::optional<HandleInput> handles;
};

struct BlowdownReport {
  BlowdownInvariants invariants;
  H1Certificate h1;
  ParityResult parity;
  std::optional<std::string> homeo_type;
  std::optional<HandleCounts> handle_counts;
};

BlowdownReport blowdown_report(const AmbientManifoldData& X, const CpConfiguration& cfg,
                               const BlowdownOptions& options = {});

}  // namespace rbd
