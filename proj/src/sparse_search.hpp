#pragma once

// Small-support vector enumeration used by the witness searches.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rbd/blowdown.hpp"
#include "rbd/lattice.hpp"

namespace rbd::detail {

/// A family of acceptable value patterns for the functionals. `exact[r]`
/// pins functional r; unpinned rows are judged by `accept` at the leaf.
struct TargetSet {
  std::vector<std::optional<Integer>> exact;
  std::function<bool(const ClassVector&, std::span<const Integer>)> accept;
};

struct SparseHit {
  ClassVector vector;
  std::size_t target_index;
};

struct SparseSearchStats {
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Walks vectors in the order documented on WitnessSearchOptions and returns
/// the first whose functional values match one of `targets`. Functional r is
/// x -> pairing(x, functionals[r]). A row is checked as soon as no later
/// coordinate can change it, which prunes without losing solutions.
std::optional<SparseHit> first_sparse_vector(AmbientLattice lattice,
                                             std::span<const ClassVector> functionals,
                                             std::span<const TargetSet> targets,
                                             const WitnessSearchOptions& options,
                                             SparseSearchStats& stats);

}  // namespace rbd::detail
