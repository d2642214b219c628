#include "rbd/cp_chain.hpp"

#include <sstream>

namespace rbd {

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::square:
      return "square";
    case ConstraintKind::consecutive_pairing:
      return "consecutive-pairing";
    case ConstraintKind::distant_pairing:
      return "distant-pairing";
  }
  return "unknown";
}

VerificationReport verify_cp_configuration(std::span<const ClassVector> candidate, long p) {
  if (p < 2) throw DomainError("C_p requires p >= 2, got p = " + std::to_string(p));
  if (candidate.size() != static_cast<std::size_t>(p - 1)) {
    throw ArityError("C_" + std::to_string(p) + " needs " + std::to_string(p - 1) +
                     " classes, got " + std::to_string(candidate.size()));
  }
  for (const auto& c : candidate) {
    if (c.lattice() != candidate.front().lattice()) {
      throw DimensionMismatch("configuration classes live in different lattices");
    }
  }

  VerificationReport report;
  report.p = p;
  report.gram = gram_matrix(candidate);
  const IntMatrix& g = report.gram;
  const std::size_t k = candidate.size();

  auto record = [&](ConstraintKind kind, std::size_t i, std::size_t j, Integer expected) {
    if (g(i, j) == expected) return;
    report.violations.push_back({kind, i + 1, j + 1, std::move(expected), g(i, j)});
  };

  for (std::size_t i = 0; i < k; ++i) record(ConstraintKind::square, i, i, i + 1 == k ? Integer(-(p + 2)) : Integer(-2));
  for (std::size_t i = 0; i + 1 < k; ++i) record(ConstraintKind::consecutive_pairing, i, i + 1, Integer(1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) record(ConstraintKind::distant_pairing, i, j, Integer(0));

  report.passed = report.violations.empty();
  if (!report.passed) report.first_violation = report.violations.front();
  return report;
}

CpConfiguration CpConfiguration::verified(std::vector<ClassVector> classes, long p) {
  auto report = verify_cp_configuration(classes, p);
  if (!report.passed) {
    const Violation& v = *report.first_violation;
    std::ostringstream msg;
    msg << "not a C_" << p << " configuration: " << to_string(v.kind) << " (u" << v.i << ", u" << v.j
        << ") expected " << v.expected.get_str() << " got " << v.actual.get_str();
    throw PreconditionError(msg.str());
  }
  return CpConfiguration(std::move(classes), p);
}

std::vector<long> lens_space_cf(long p) {
  if (p < 2) throw DomainError("lens_space_cf requires p >= 2");
  Rational x(Integer(p) * p, Integer(p - 1));
  x.canonicalize();
  std::vector<long> terms;
  for (;;) {
    Integer ceil_x;
    mpz_cdiv_q(ceil_x.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    terms.push_back(ceil_x.get_si());
    Rational rest = Rational(ceil_x) - x;
    if (rest == 0) break;
    x = 1 / rest;
  }
  return terms;
}

Rational evaluate_negative_cf(std::span<const long> terms) {
  if (terms.empty()) throw DomainError("empty continued fraction");
  Rational value(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    value = Rational(terms[i]) - 1 / value;
  }
  value.canonicalize();
  return value;
}

IntMatrix intersection_matrix(std::span<const ClassVector> classes) { return gram_matrix(classes); }

IntMatrix intersection_matrix(const CpConfiguration& cfg) { return gram_matrix(cfg.classes()); }

BoundaryGroup boundary_group(const IntMatrix& gram) {
  SmithForm snf = smith_normal_form(gram);
  BoundaryGroup group;
  group.divisors = snf.divisors;
  // A rank-deficient Gram matrix has infinite cokernel; report order 0.
  group.order = snf.rank() == gram.rows() ? Integer(1) : Integer(0);
  std::size_t nontrivial = 0;
  if (group.order != 0) {
    for (const auto& d : snf.divisors) {
      group.order *= d;
      if (d != 1) ++nontrivial;
    }
  }
  group.cyclic = group.order != 0 && nontrivial <= 1;
  return group;
}

std::vector<ClassVector> standard_configuration(long p) {
  if (p < 2) throw DomainError("standard_configuration requires p >= 2");
  const AmbientLattice lattice{static_cast<std::size_t>(2 * p)};
  std::vector<ClassVector> classes;
  for (long i = 1; i <= p - 2; ++i) {
    classes.push_back(ClassVector::e(lattice, i) - ClassVector::e(lattice, i + 1));
  }
  auto tail = ClassVector::zero(lattice);
  for (long i = p - 1; i <= 2 * p; ++i) tail[i] = 1;
  classes.push_back(std::move(tail));
  return classes;
}

}  // namespace rbd
