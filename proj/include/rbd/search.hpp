#pragma once

// Bounded exhaustive search for C_p configurations with a fixed body
// u_1..u_{p-2} (differences of exceptional classes) and an enumerated tail
// u_{p-1}. Results are lattice-level only: nothing here certifies that a
// configuration is realized by embedded spheres.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbd/lattice.hpp"

namespace rbd {

enum class BodyShape {
  /// u_i = e_{s+i-1} - e_{s+i}, s = body_start (default: body ends at e_N).
  consecutive_differences,
  /// u_i = e_j - e_k for explicitly listed pairs (j, k).
  free_pairs,
};

std::string to_string(BodyShape shape);
BodyShape body_shape_from_string(const std::string& name);

struct SearchTemplate {
  std::size_t N = 0;
  long p = 2;
  BodyShape body_shape = BodyShape::consecutive_differences;
  /// First exceptional index of a consecutive body; 0 places the body so
  /// that it ends at e_N.
  std::size_t body_start = 0;
  std::vector<std::pair<std::size_t, std::size_t>> body_pairs;
  /// Bound on |coefficient| of the tail: one entry for all coordinates, or N+1.
  std::vector<long> tail_bounds{0};
  /// Optional restriction of the tail's h-coefficient (intersected with the bound).
  std::optional<std::pair<long, long>> tail_h_range;
  /// Canonicalize under permutations of exceptional indices the body does
  /// not touch (among indices with equal bound): their tail coefficients are
  /// listed in nondecreasing order.
  bool symmetry_reduction = true;

  /// Throws DomainError when the template is malformed.
  void validate() const;
  long bound(std::size_t coordinate) const;
  std::size_t resolved_body_start() const;
};

/// The fixed classes u_1..u_{p-2}.
std::vector<ClassVector> template_body(const SearchTemplate& tmpl);

/// Candidate count before pruning: product of domain sizes of the tail
/// coordinates not determined by the body equations, with the symmetric
/// block counted as multisets.
long double estimate_search_space(const SearchTemplate& tmpl);

struct SearchOptions {
  long double cap = 1e9L;
  unsigned jobs = 1;
};

struct SearchResult {
  /// Each entry is u_1..u_{p-1}; sorted by tail, lexicographically.
  std::vector<std::vector<ClassVector>> configurations;
  long double estimate = 0;
  std::uint64_t nodes = 0;
};

/// Throws SearchSizeError when the estimate exceeds options.cap.
SearchResult search(const SearchTemplate& tmpl, const SearchOptions& options = {});

enum class ChainFamily { three_chain, four_chain };
std::string to_string(ChainFamily f);
ChainFamily chain_family_from_string(const std::string& name);

/// Template with the Cor-3.3 shape: consecutive body ending at e_N, tail
/// coefficients bounded by a+3, tail h-coefficient in [1, a+3].
///   three_chain: N = 3a+2, p = 4a-9 (body start 13-a, needs a <= 12)
///   four_chain:  N = 4a+2, p = 6a-11 (body start 15-2a, needs a <= 7)
/// The h-coefficient is kept positive because h -> -h is an isometry fixing
/// the body, and a tail with zero h-coefficient leaves PD(h) orthogonal to
/// the whole configuration, where every lift has SW value 0.
SearchTemplate chain_template(int a, ChainFamily family);

struct FamilySearchReport {
  int a = 0;
  ChainFamily family = ChainFamily::three_chain;
  SearchTemplate tmpl;
  SearchResult result;
  std::string label = "homological only (embedding not certified)";
};

/// chain_template + search, restricted to 3 <= a <= 11 (three_chain) or
/// 3 <= a <= 6 (four_chain).
FamilySearchReport search_family_questions(int a, ChainFamily family, const SearchOptions& options = {});

}  // namespace rbd
