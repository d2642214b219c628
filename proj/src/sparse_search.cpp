#include "sparse_search.hpp"

namespace rbd::detail {

namespace {

class Walker {
 public:
  Walker(AmbientLattice lattice, std::span<const ClassVector> functionals,
         std::span<const TargetSet> targets, const WitnessSearchOptions& options,
         SparseSearchStats& stats)
      : rank_(lattice.rank()),
        targets_(targets),
        options_(options),
        stats_(stats),
        coeff_(rank_),
        values_(functionals.size()),
        last_touch_(functionals.size(), -1),
        columns_(rank_) {
    for (std::size_t r = 0; r < functionals.size(); ++r) {
      for (std::size_t j = 0; j < rank_; ++j) {
        Integer c = j == 0 ? Integer(functionals[r][0]) : Integer(-functionals[r][j]);
        if (c == 0) continue;
        columns_[j].push_back({r, std::move(c)});
        last_touch_[r] = static_cast<long>(j);
      }
    }
    for (long k = 1; k <= options.bound; ++k) {
      ladder_.push_back(k);
      ladder_.push_back(-k);
    }
  }

  std::optional<SparseHit> run() {
    const std::size_t max_support = std::min(options_.max_support, rank_);
    for (std::size_t size = 1; size <= max_support && !hit_ && !stats_.budget_exhausted; ++size) {
      support_size_ = size;
      descend(0, 0);
    }
    return std::move(hit_);
  }

 private:
  struct Entry {
    std::size_t row;
    Integer coeff;
  };

  // Some target set can still be met once coordinates below `freeze` are final.
  bool alive(std::size_t freeze) const {
    for (const auto& t : targets_) {
      bool ok = true;
      for (std::size_t r = 0; r < values_.size() && ok; ++r) {
        if (last_touch_[r] >= static_cast<long>(freeze)) continue;
        if (t.exact[r] && values_[r] != *t.exact[r]) ok = false;
      }
      if (ok) return true;
    }
    return false;
  }

  void leaf() {
    ClassVector v(coeff_);
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      const auto& target = targets_[t];
      bool ok = true;
      for (std::size_t r = 0; r < values_.size() && ok; ++r)
        if (target.exact[r] && values_[r] != *target.exact[r]) ok = false;
      if (ok && (!target.accept || target.accept(v, values_))) {
        hit_ = SparseHit{std::move(v), t};
        return;
      }
    }
  }

  void apply(std::size_t j, long c) {
    for (const auto& e : columns_[j]) values_[e.row] += c * e.coeff;
  }

  void descend(std::size_t start, std::size_t chosen) {
    if (chosen == support_size_) {
      leaf();
      return;
    }
    const std::size_t slots_left = support_size_ - chosen;
    for (std::size_t j = start; j + slots_left <= rank_; ++j) {
      if (!alive(j)) return;
      for (long c : ladder_) {
        if (++stats_.nodes > options_.node_budget) {
          stats_.budget_exhausted = true;
          return;
        }
        coeff_[j] = c;
        apply(j, c);
        descend(j + 1, chosen + 1);
        apply(j, -c);
        coeff_[j] = 0;
        if (hit_ || stats_.budget_exhausted) return;
      }
    }
  }

  std::size_t rank_;
  std::span<const TargetSet> targets_;
  const WitnessSearchOptions& options_;
  SparseSearchStats& stats_;
  std::vector<Integer> coeff_;
  std::vector<Integer> values_;
  std::vector<long> last_touch_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<long> ladder_;
  std::size_t support_size_ = 0;
  std::optional<SparseHit> hit_;
};

}  // namespace

std::optional<SparseHit> first_sparse_vector(AmbientLattice lattice,
                                             std::span<const ClassVector> functionals,
                                             std::span<const TargetSet> targets,
                                             const WitnessSearchOptions& options,
                                             SparseSearchStats& stats) {
  if (options.bound <= 0 || options.max_support == 0) return std::nullopt;
  Walker walker(lattice, functionals, targets, options, stats);
  return walker.run();
}

}  // namespace rbd::detail
