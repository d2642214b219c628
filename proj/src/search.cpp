#include "rbd/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "rbd/cp_chain.hpp"

namespace rbd {

namespace {

// Keeps every intermediate of the int64 kernel far below 2^63.
constexpr long kMaxBound = 1L << 20;
constexpr std::size_t kMaxRank = 1U << 16;

long isqrt(long v) {
  if (v <= 0) return 0;
  long r = static_cast<long>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

struct LinearConstraint {
  std::vector<std::pair<std::size_t, long>> terms;  // (coordinate, coefficient)
  long target = 0;
};

// Static structure of the tail enumeration shared by all workers.
struct Plan {
  std::size_t rank = 0;
  long p = 0;
  std::vector<long> lower;
  std::vector<long> upper;
  std::vector<LinearConstraint> constraints;
  std::vector<std::vector<std::size_t>> forced_by;  // constraints whose last coordinate is j
  std::vector<std::size_t> sym_prev;                // previous coordinate of the same symmetric block
  std::vector<long> suffix_max_sq;
  std::vector<bool> touched;
  static constexpr std::size_t none = static_cast<std::size_t>(-1);
};

Plan make_plan(const SearchTemplate& tmpl) {
  Plan plan;
  plan.rank = tmpl.N + 1;
  plan.p = tmpl.p;
  plan.lower.resize(plan.rank);
  plan.upper.resize(plan.rank);
  for (std::size_t j = 0; j < plan.rank; ++j) {
    plan.lower[j] = -tmpl.bound(j);
    plan.upper[j] = tmpl.bound(j);
  }
  if (tmpl.tail_h_range) {
    plan.lower[0] = std::max(plan.lower[0], tmpl.tail_h_range->first);
    plan.upper[0] = std::min(plan.upper[0], tmpl.tail_h_range->second);
  }

  // Tail t must satisfy t.u_i = 0 (i < p-2) and t.u_{p-2} = 1, where
  // t.u = -sum_j u_j t_j because the body has no h-component.
  auto body = template_body(tmpl);
  std::vector<bool>& touched = plan.touched;
  touched.assign(plan.rank, false);
  plan.forced_by.resize(plan.rank);
  for (std::size_t i = 0; i < body.size(); ++i) {
    LinearConstraint c;
    c.target = i + 1 == body.size() ? 1 : 0;
    std::size_t last = 0;
    for (std::size_t j = 1; j < plan.rank; ++j) {
      if (body[i][j] == 0) continue;
      c.terms.emplace_back(j, -body[i][j].get_si());
      touched[j] = true;
      last = j;
    }
    plan.forced_by[last].push_back(plan.constraints.size());
    plan.constraints.push_back(std::move(c));
  }

  plan.sym_prev.assign(plan.rank, Plan::none);
  if (tmpl.symmetry_reduction) {
    std::map<long, std::size_t> last_in_block;
    for (std::size_t j = 1; j < plan.rank; ++j) {
      if (touched[j]) continue;
      long b = tmpl.bound(j);
      if (auto it = last_in_block.find(b); it != last_in_block.end()) plan.sym_prev[j] = it->second;
      last_in_block[b] = j;
    }
  }

  plan.suffix_max_sq.assign(plan.rank + 1, 0);
  for (std::size_t j = plan.rank; j-- > 1;) {
    long m = std::max(plan.lower[j] * plan.lower[j], plan.upper[j] * plan.upper[j]);
    plan.suffix_max_sq[j] = plan.suffix_max_sq[j + 1] + m;
  }
  return plan;
}

class TailWalker {
 public:
  explicit TailWalker(const Plan& plan) : plan_(plan), tail_(plan.rank) {}

  void run_for_h(long h) {
    tail_[0] = h;
    target_ = h * h + plan_.p + 2;  // sum_{j>=1} t_j^2 = t_h^2 + (p+2)
    descend(1, 0);
  }

  std::vector<std::vector<long>>& found() { return found_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::optional<long> forced_value(std::size_t j) const {
    std::optional<long> value;
    for (std::size_t idx : plan_.forced_by[j]) {
      const auto& c = plan_.constraints[idx];
      long rest = c.target;
      long coeff = 0;
      for (const auto& [k, a] : c.terms) {
        if (k == j) {
          coeff = a;
        } else {
          rest -= a * tail_[k];
        }
      }
      if (rest % coeff != 0) return std::nullopt;
      long v = rest / coeff;
      if (value && *value != v) return std::nullopt;
      value = v;
    }
    return value;
  }

  void descend(std::size_t j, long partial) {
    if (partial > target_) return;
    if (partial + plan_.suffix_max_sq[j] < target_) return;
    if (j == plan_.rank) {
      if (partial == target_) found_.push_back(tail_);
      return;
    }
    if (!plan_.forced_by[j].empty()) {
      ++nodes_;
      auto v = forced_value(j);
      if (!v || *v < plan_.lower[j] || *v > plan_.upper[j]) return;
      tail_[j] = *v;
      descend(j + 1, partial + *v * *v);
      return;
    }
    const long room = isqrt(target_ - partial);
    long lo = std::max(plan_.lower[j], -room);
    long hi = std::min(plan_.upper[j], room);
    if (plan_.sym_prev[j] != Plan::none) lo = std::max(lo, tail_[plan_.sym_prev[j]]);
    for (long v = lo; v <= hi; ++v) {
      ++nodes_;
      tail_[j] = v;
      descend(j + 1, partial + v * v);
    }
  }

  const Plan& plan_;
  std::vector<long> tail_;
  long target_ = 0;
  std::vector<std::vector<long>> found_;
  std::uint64_t nodes_ = 0;
};

long double multiset_count(long double kinds, std::size_t k) {
  // C(kinds + k - 1, k)
  long double c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (kinds + static_cast<long double>(i) - 1) / i;
  return c;
}

}  // namespace

std::string to_string(BodyShape shape) {
  return shape == BodyShape::consecutive_differences ? "consecutive-differences" : "free-pairs";
}

BodyShape body_shape_from_string(const std::string& name) {
  if (name == "consecutive-differences") return BodyShape::consecutive_differences;
  if (name == "free-pairs") return BodyShape::free_pairs;
  throw DomainError("unknown body shape '" + name + "'");
}

std::string to_string(ChainFamily f) { return f == ChainFamily::three_chain ? "3-chain" : "4-chain"; }

ChainFamily chain_family_from_string(const std::string& name) {
  if (name == "3-chain") return ChainFamily::three_chain;
  if (name == "4-chain") return ChainFamily::four_chain;
  throw DomainError("unknown chain family '" + name + "'");
}

long SearchTemplate::bound(std::size_t coordinate) const {
  return tail_bounds.size() == 1 ? tail_bounds[0] : tail_bounds.at(coordinate);
}

std::size_t SearchTemplate::resolved_body_start() const {
  if (body_start != 0) return body_start;
  const std::size_t body_len = p >= 2 ? static_cast<std::size_t>(p - 2) : 0;
  return N >= body_len ? N - body_len : 0;
}

void SearchTemplate::validate() const {
  if (p < 2) throw DomainError("search template needs p >= 2");
  if (N + 1 > kMaxRank) throw DomainError("search template: N too large");
  if (tail_bounds.size() != 1 && tail_bounds.size() != N + 1) {
    throw DomainError("tail_bounds must have 1 or N+1 entries");
  }
  for (long b : tail_bounds)
    if (b < 0 || b > kMaxBound) throw DomainError("tail bounds must lie in [0, 2^20]");
  if (tail_h_range && tail_h_range->first > tail_h_range->second) {
    throw DomainError("tail_h_range is empty");
  }
  const std::size_t body_len = static_cast<std::size_t>(p - 2);
  if (body_shape == BodyShape::consecutive_differences) {
    if (N < static_cast<std::size_t>(p - 1)) throw DomainError("consecutive body needs N >= p-1");
    const std::size_t s = resolved_body_start();
    if (body_len > 0 && (s < 1 || s + body_len > N)) {
      throw DomainError("consecutive body e_" + std::to_string(s) + ".. does not fit in 1.." + std::to_string(N));
    }
  } else {
    if (body_pairs.size() != body_len) {
      throw DomainError("free-pairs body needs exactly p-2 pairs");
    }
    for (const auto& [j, k] : body_pairs)
      if (j < 1 || k < 1 || j > N || k > N || j == k) throw DomainError("free-pairs body has an invalid pair");
    auto body = template_body(*this);
    for (std::size_t i = 0; i < body.size(); ++i)
      for (std::size_t k = i + 1; k < body.size(); ++k) {
        Integer expect = k == i + 1 ? 1 : 0;
        if (pairing(body[i], body[k]) != expect) {
          throw DomainError("free-pairs body is not a linear chain at (u" + std::to_string(i + 1) + ", u" +
                            std::to_string(k + 1) + ")");
        }
      }
  }
}

std::vector<ClassVector> template_body(const SearchTemplate& tmpl) {
  const AmbientLattice lattice{tmpl.N};
  std::vector<ClassVector> body;
  if (tmpl.body_shape == BodyShape::consecutive_differences) {
    const std::size_t s = tmpl.resolved_body_start();
    for (long i = 0; i < tmpl.p - 2; ++i) {
      body.push_back(ClassVector::e(lattice, s + i) - ClassVector::e(lattice, s + i + 1));
    }
  } else {
    for (const auto& [j, k] : tmpl.body_pairs) {
      body.push_back(ClassVector::e(lattice, j) - ClassVector::e(lattice, k));
    }
  }
  return body;
}

long double estimate_search_space(const SearchTemplate& tmpl) {
  tmpl.validate();
  const Plan plan = make_plan(tmpl);
  long double total = std::max<long>(0, plan.upper[0] - plan.lower[0] + 1);
  std::vector<std::size_t> head(plan.rank, Plan::none);
  std::map<std::size_t, std::size_t> block_size;
  for (std::size_t j = 1; j < plan.rank; ++j) {
    if (!plan.forced_by[j].empty()) continue;
    if (plan.sym_prev[j] != Plan::none) {
      head[j] = head[plan.sym_prev[j]];
      ++block_size[head[j]];
    } else if (tmpl.symmetry_reduction && !plan.touched[j]) {
      head[j] = j;
      block_size[j] = 1;
    } else {
      total *= static_cast<long double>(plan.upper[j] - plan.lower[j] + 1);
    }
  }
  for (const auto& [h, k] : block_size) {
    total *= multiset_count(static_cast<long double>(plan.upper[h] - plan.lower[h] + 1), k);
  }
  return total;
}

SearchResult search(const SearchTemplate& tmpl, const SearchOptions& options) {
  tmpl.validate();
  SearchResult result;
  result.estimate = estimate_search_space(tmpl);
  if (result.estimate > options.cap) {
    throw SearchSizeError("search space estimate exceeds the cap", result.estimate);
  }
  const Plan plan = make_plan(tmpl);

  std::vector<long> h_values;
  for (long h = plan.lower[0]; h <= plan.upper[0]; ++h) h_values.push_back(h);
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, std::max<std::size_t>(1, h_values.size())));

  std::vector<TailWalker> walkers(jobs, TailWalker(plan));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < h_values.size(); i += jobs) walkers[w].run_for_h(h_values[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  std::vector<std::vector<long>> tails;
  for (auto& w : walkers) {
    result.nodes += w.nodes();
    for (auto& t : w.found()) tails.push_back(std::move(t));
  }
  std::sort(tails.begin(), tails.end());

  const auto body = template_body(tmpl);
  for (const auto& t : tails) {
    std::vector<Integer> coeffs(t.begin(), t.end());
    std::vector<ClassVector> cfg = body;
    cfg.emplace_back(std::move(coeffs));
    if (!verify_cp_configuration(cfg, tmpl.p).passed) {
      throw ConsistencyError("search produced a configuration that fails verification");
    }
    result.configurations.push_back(std::move(cfg));
  }
  return result;
}

SearchTemplate chain_template(int a, ChainFamily family) {
  SearchTemplate t;
  if (family == ChainFamily::three_chain) {
    t.N = static_cast<std::size_t>(3 * a + 2);
    t.p = 4L * a - 9;
  } else {
    t.N = static_cast<std::size_t>(4 * a + 2);
    t.p = 6L * a - 11;
  }
  if (a < 3) throw DomainError("chain templates need a >= 3");
  t.body_shape = BodyShape::consecutive_differences;
  t.tail_bounds = {a + 3L};
  t.tail_h_range = std::make_pair(1L, a + 3L);
  t.symmetry_reduction = true;
  t.validate();
  return t;
}

FamilySearchReport search_family_questions(int a, ChainFamily family, const SearchOptions& options) {
  const int hi = family == ChainFamily::three_chain ? 11 : 6;
  if (a < 3 || a > hi) {
    throw DomainError(to_string(family) + " family is defined for 3 <= a <= " + std::to_string(hi) +
                      ", got a = " + std::to_string(a));
  }
  FamilySearchReport report;
  report.a = a;
  report.family = family;
  report.tmpl = chain_template(a, family);
  report.result = search(report.tmpl, options);
  return report;
}

}  // namespace rbd
