#include "rbd/sw.hpp"

#include <sstream>

namespace rbd {

namespace {

int sign_of(const Integer& x) { return sgn(x); }

// (-1)^k for an integer k.
Integer minus_one_power(const Integer& k) { return mpz_even_p(k.get_mpz_t()) ? Integer(1) : Integer(-1); }

// Exact solution of Q y = k over Q; Q must be nonsingular.
std::vector<Rational> solve_rational(const IntMatrix& Q, const std::vector<Integer>& k) {
  const std::size_t n = Q.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(i, j);
    a[i][n] = k[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw PreconditionError("intersection matrix is singular");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = a[i][n] / a[i][i];
    y[i].canonicalize();
  }
  return y;
}

}  // namespace

CharacteristicData CharacteristicData::make(ClassVector K, AmbientManifoldData X) {
  if (K.lattice() != X.lattice) throw DimensionMismatch("K lives in a different lattice than X");
  if (!is_characteristic(K)) throw DomainError("K = " + K.to_string() + " is not characteristic");
  return CharacteristicData(std::move(K), X);
}

PeriodPoint PeriodPoint::make(ClassVector H) {
  if (square(H) <= 0) throw PreconditionError("period point needs H^2 > 0, got " + square(H).get_str());
  if (H[0] <= 0) throw PreconditionError("period point needs H.h > 0 (positive orientation)");
  return PeriodPoint(std::move(H));
}

PeriodPoint PeriodPoint::hyperplane(AmbientLattice lattice) { return PeriodPoint(ClassVector::h(lattice)); }

Integer d_invariant(const CharacteristicData& K) {
  const auto& X = K.X();
  Integer numerator = square(K.K()) - 2 * X.euler() - 3 * X.signature();
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 4)) {
    throw ConsistencyError("d-invariant numerator " + numerator.get_str() + " is not divisible by 4");
  }
  return numerator / 4;
}

std::string to_string(WallBranch b) {
  switch (b) {
    case WallBranch::same_side:
      return "same-side";
    case WallBranch::positive_to_negative:
      return "positive-to-negative";
    case WallBranch::negative_to_positive:
      return "negative-to-positive";
  }
  return "same-side";
}

WallCrossing wall_crossing_step(const CharacteristicData& K, const PeriodPoint& from,
                                const PeriodPoint& to, const Integer& sw_at_from) {
  const ClassVector& k = K.K();
  if (from.H().lattice() != k.lattice() || to.H().lattice() != k.lattice()) {
    throw DimensionMismatch("period points and K live in different lattices");
  }
  if (pairing(from.H(), to.H()) <= 0) throw PreconditionError("wall crossing needs H.H' > 0");
  WallCrossing w;
  w.K_dot_from = pairing(k, from.H());
  w.K_dot_to = pairing(k, to.H());
  if (w.K_dot_from == 0) throw PreconditionError("wall crossing needs K.H != 0");
  if (w.K_dot_to == 0) throw PreconditionError("wall crossing needs K.H' != 0");
  w.d = d_invariant(K);
  if (w.d < 0) throw PreconditionError("wall crossing needs d(K) >= 0, got " + w.d.get_str());
  if (mpz_odd_p(w.d.get_mpz_t())) throw ConsistencyError("d(K) is odd for a characteristic K");

  const Integer half_d = w.d / 2;
  const int s_from = sign_of(w.K_dot_from);
  const int s_to = sign_of(w.K_dot_to);
  if (s_from == s_to) {
    w.branch = WallBranch::same_side;
    w.term = 0;
  } else if (s_from > 0) {
    w.branch = WallBranch::positive_to_negative;
    w.term = minus_one_power(half_d);
  } else {
    w.branch = WallBranch::negative_to_positive;
    w.term = minus_one_power(half_d + 1);
  }
  w.value = sw_at_from + w.term;
  return w;
}

Integer wall_crossing(const CharacteristicData& K, const PeriodPoint& from, const PeriodPoint& to,
                      const Integer& sw_at_from) {
  return wall_crossing_step(K, from, to, sw_at_from).value;
}

LiftCertificate lift_admissible(const CharacteristicData& K, const CpConfiguration& cfg) {
  if (K.K().lattice() != cfg.lattice()) throw DimensionMismatch("K and configuration lattices differ");
  LiftCertificate cert;
  for (const auto& u : cfg.classes()) cert.pairings.push_back(pairing(K.K(), u));
  bool ok = abs(cert.pairings.back()) == cfg.p();
  for (std::size_t i = 0; i + 1 < cert.pairings.size() && ok; ++i) ok = cert.pairings[i] == 0;
  cert.admissible = ok;
  return cert;
}

RestrictionReport restriction_conditions(const CharacteristicData& K, const CpConfiguration& cfg) {
  if (K.K().lattice() != cfg.lattice()) throw DimensionMismatch("K and configuration lattices differ");
  RestrictionReport r;
  for (const auto& u : cfg.classes()) r.k.push_back(pairing(K.K(), u));
  const IntMatrix Q = intersection_matrix(cfg);

  auto y = solve_rational(Q, r.k);
  r.restriction_square = 0;
  for (std::size_t i = 0; i < y.size(); ++i) r.restriction_square += Rational(r.k[i]) * y[i];
  r.restriction_square.canonicalize();
  r.square_ok = r.restriction_square == Rational(1 - cfg.p());

  SmithForm snf = smith_normal_form(Q);
  if (snf.rank() != Q.rows()) throw PreconditionError("intersection matrix is singular");
  r.boundary_order = 1;
  for (const auto& d : snf.divisors) r.boundary_order *= d;
  const std::size_t last = Q.rows() - 1;
  Integer image;
  for (std::size_t j = 0; j < r.k.size(); ++j) image += snf.U(last, j) * r.k[j];
  const Integer& modulus = snf.divisors[last];
  mpz_fdiv_r(r.residue.get_mpz_t(), image.get_mpz_t(), modulus.get_mpz_t());

  const Integer p(cfg.p());
  r.divisible_by_p = mpz_divisible_p(r.residue.get_mpz_t(), p.get_mpz_t()) != 0;
  if (r.divisible_by_p) {
    r.m = r.residue / p;
    Integer diff = *r.m - (p - 1);
    r.m_parity_ok = mpz_even_p(diff.get_mpz_t()) != 0;
  }
  return r;
}

SwCertificate sw_on_blowdown(const AmbientManifoldData& X, const CpConfiguration& cfg,
                             const CharacteristicData& K, const PeriodPoint& H) {
  if (cfg.lattice() != X.lattice || K.K().lattice() != X.lattice || H.H().lattice() != X.lattice) {
    throw DimensionMismatch("sw_on_blowdown: inputs live in different lattices");
  }
  SwCertificate cert;
  cert.lift = lift_admissible(K, cfg);
  if (!cert.lift.admissible) {
    std::ostringstream msg;
    msg << "K~ is not an admissible lift: pairings with u_i are (";
    for (std::size_t i = 0; i < cert.lift.pairings.size(); ++i)
      msg << (i ? ", " : "") << cert.lift.pairings[i].get_str();
    msg << ")";
    throw PreconditionError(msg.str());
  }
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    cert.orthogonality.push_back(pairing(H.H(), cfg[i]));
    if (cert.orthogonality.back() != 0) {
      throw PreconditionError("H is not orthogonal to the configuration: H.u" + std::to_string(i + 1) +
                              " = " + cert.orthogonality.back().get_str());
    }
  }
  cert.H_square = square(H.H());
  cert.b2_minus_after = blowdown_invariants(X, cfg).b2_minus;
  if (cert.b2_minus_after > 9) {
    throw PreconditionError("b2-(X_(p)) = " + std::to_string(cert.b2_minus_after) +
                            " > 9: the SW value may depend on the chamber");
  }
  cert.d = d_invariant(K);
  cert.d_positive = cert.d > 0;
  cert.base_value = 0;
  cert.crossing = wall_crossing_step(K, PeriodPoint::hyperplane(X.lattice), H, cert.base_value);
  cert.value = cert.crossing.value;
  return cert;
}

}  // namespace rbd
