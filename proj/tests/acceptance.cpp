// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "rbd/blowdown.hpp"
#include "rbd/cp_chain.hpp"
#include "rbd/families.hpp"
#include "rbd/pipeline.hpp"
#include "rbd/search.hpp"
#include "rbd/sw.hpp"

using namespace rbd;
using oracle::V;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

// Time limits in seconds.
constexpr double kAc1PerCase = 0.1;
constexpr double kAc2Total = 1.0;
constexpr double kAc3Total = 1.0;
constexpr double kAc4Total = 1.0;
constexpr double kAc5Total = 10.0;
constexpr double kAc6PerRun = 60.0;
constexpr double kAc7Total = 300.0;
constexpr double kAc8Total = 120.0;

const fs::path kFixtures = RBD_FIXTURES_DIR;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) why << msg;
    ok = ok && cond;
  }
};

std::vector<std::pair<int, int>> nine_cases() {
  std::vector<std::pair<int, int>> out;
  for (int a = 3; a <= 7; ++a) out.emplace_back(1, a);
  for (int a = 3; a <= 6; ++a) out.emplace_back(2, a);
  return out;
}

std::string case_name(int fam, int a) { return "family" + std::to_string(fam) + "/a" + std::to_string(a); }

Fixture fixture(int fam, int a) {
  return load_fixture(kFixtures / ("family" + std::to_string(fam)) / ("a" + std::to_string(a) + ".json"));
}

void ac1(Outcome& o, double& elapsed) {
  double worst = 0;
  for (auto [fam, a] : nine_cases()) {
    const auto f = oracle::family(fam, a);
    const auto classes = oracle::cvs(f.classes);
    const auto t0 = Clock::now();
    const auto rep = verify_cp_configuration(classes, f.p);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    o.require(rep.passed, case_name(fam, a) + " rejected; ");
    o.require(f.p == (fam == 1 ? 4 * a - 9 : 4 * a - 7), "p mismatch; ");
    for (std::size_t i = 0; i < f.classes.size(); ++i)
      for (std::size_t j = 0; j < f.classes.size(); ++j)
        o.require(oracle::dot(f.classes[i], f.classes[j]) == oracle::cp_entry(f.p, i, j) &&
                      rep.gram(i, j) == oracle::dot(f.classes[i], f.classes[j]),
                  case_name(fam, a) + " Gram disagrees with oracle; ");
    o.require(dt < kAc1PerCase, case_name(fam, a) + " too slow; ");
  }
  elapsed = worst;
}

void ac2(Outcome& o, double& elapsed) {
  const auto t0 = Clock::now();
  for (long p = 2; p <= 12; ++p) {
    const auto Q = intersection_matrix(standard_configuration(p));
    const auto bg = boundary_group(Q);
    o.require(abs(determinant(Q)) == p * p, "det p=" + std::to_string(p) + "; ");
    o.require(bg.cyclic && bg.order == p * p, "cokernel p=" + std::to_string(p) + "; ");
    o.require(evaluate_negative_cf(lens_space_cf(p)) == Rational(p * p, p - 1), "cf p=" + std::to_string(p) + "; ");
  }
  elapsed = seconds_since(t0);
  o.require(elapsed < kAc2Total, "too slow; ");
}

void ac3(Outcome& o, double& elapsed) {
  const auto t0 = Clock::now();
  for (auto [fam, a] : nine_cases()) {
    const auto f = oracle::family(fam, a);
    const AmbientManifoldData X{AmbientLattice{f.n}};
    const auto cfg = CpConfiguration::verified(oracle::cvs(f.classes), f.p);
    const auto K = CharacteristicData::make(oracle::cv(f.K), X);
    const auto H = PeriodPoint::make(oracle::cv(f.H));
    const auto pos = sw_on_blowdown(X, cfg, K, H);
    const auto neg = sw_on_blowdown(X, cfg, K.negated(), H);
    const std::string id = case_name(fam, a);
    o.require(pos.value == 1 && neg.value == -1, id + " SW values; ");
    o.require(pos.d == 0 && neg.d == 0, id + " d != 0; ");
    o.require(pos.base_value == 0 && neg.base_value == 0, id + " base chamber value; ");
    o.require(pos.H_square > 0 && pos.H_square == oracle::dot(f.H, f.H), id + " H square; ");
    for (const auto& x : pos.orthogonality) o.require(x == 0, id + " H not orthogonal; ");
    for (const auto& u : f.classes) o.require(oracle::dot(f.H, u) == 0, id + " oracle H.u; ");
    if (fam == 1 && a == 3) o.require(pos.H_square == 25, "H^2 at family1/a3; ");
  }
  elapsed = seconds_since(t0);
  o.require(elapsed < kAc3Total, "too slow; ");
}

HandleCounts stated_tuple(int fam, int a) {
  if (fam == 1) return {1, 0, 14 - a, 2, 1};
  if (a <= 5) return {1, 0, 12 - a, 0, 1};
  return {1, 1, 13 - a, 0, 1};
}

void ac4(Outcome& o, double& elapsed) {
  const auto t0 = Clock::now();
  for (auto [fam, a] : nine_cases()) {
    const auto fx = fixture(fam, a);
    const std::string id = case_name(fam, a);
    const AmbientManifoldData X{AmbientLattice{fx.n}};
    const auto cfg = CpConfiguration::verified(fx.classes, fx.p);
    BlowdownOptions opt;
    opt.delta = oracle::cv(oracle::diff(oracle::unit(fx.n, 12 - a), oracle::unit(fx.n, 13 - a)));
    opt.handles = fx.handles;
    opt.odd_candidates = {fx.H};
    const auto rep = blowdown_report(X, cfg, opt);
    o.require(rep.h1.verdict == H1Verdict::trivial && rep.h1.source == "supplied", id + " H1 witness; ");
    o.require(rep.parity.signature_criterion, id + " signature criterion; ");
    o.require(rep.homeo_type == rational_surface_name(12 - a), id + " homeo type; ");
    o.require(rep.invariants.b2_plus == 1 && rep.invariants.b2_minus == 12 - a, id + " b2; ");
    const bool stated = fam == 2 || a <= 6;
    if (stated) {
      o.require(rep.handle_counts.has_value() && *rep.handle_counts == stated_tuple(fam, a), id + " handle counts; ");
    }
  }
  elapsed = seconds_since(t0);
  o.require(elapsed < kAc4Total, "too slow; ");
}

void ac5(Outcome& o, double& elapsed) {
  const auto t0 = Clock::now();
  for (int a = 12; a <= 14; ++a) {
    const auto inst = family_instance(1, a);
    const auto rep = verify_cp_configuration(inst.classes, inst.p);
    o.require(!rep.passed, "a=" + std::to_string(a) + " passed; ");
    bool reported = false;
    for (const auto& v : rep.violations)
      reported = reported || (v.kind == ConstraintKind::distant_pairing && v.i == 1 &&
                              v.j == static_cast<std::size_t>(inst.p - 1) && v.actual == a - 3);
    o.require(reported, "a=" + std::to_string(a) + " pairing(u1,u_{p-1}) != a-3 not reported; ");
  }
  const auto res = search(chain_template(12, ChainFamily::three_chain));
  o.require(res.configurations.empty(), "a=12 search not empty; ");
  elapsed = seconds_since(t0);
  o.require(elapsed < kAc5Total, "too slow; ");
}

void ac6(Outcome& o, double& elapsed) {
  double worst = 0;
  for (int a = 8; a <= 11; ++a) {
    const auto t0 = Clock::now();
    const auto rep = search_family_questions(a, ChainFamily::three_chain);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    const std::string id = "a=" + std::to_string(a);
    o.require(!rep.result.configurations.empty(), id + " empty; ");
    o.require(rep.label.find("homological only") != std::string::npos, id + " label; ");
    for (const auto& c : rep.result.configurations) {
      std::vector<V> vs;
      for (const auto& u : c) vs.push_back(oracle::to_v(u));
      bool ok = vs.size() == static_cast<std::size_t>(rep.tmpl.p - 1);
      for (std::size_t i = 0; ok && i < vs.size(); ++i)
        for (std::size_t j = 0; ok && j < vs.size(); ++j) ok = oracle::dot(vs[i], vs[j]) == oracle::cp_entry(rep.tmpl.p, i, j);
      o.require(ok, id + " hit fails re-check; ");
    }
    o.require(dt < kAc6PerRun, id + " too slow; ");
  }
  elapsed = worst;
}

// Compact re-run of the property suites at the stated sizes.
void ac7(Outcome& o, double& elapsed) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(0xacc7'0001ULL);
  auto between = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto vec = [&](std::size_t n, long lo, long hi) {
    V v(n + 1);
    for (auto& c : v) c = between(lo, hi);
    return v;
  };

  for (int it = 0; it < 10000; ++it) {
    const std::size_t n = between(0, 12);
    const V x = vec(n, -40, 40), y = vec(n, -40, 40), z = vec(n, -40, 40);
    const long a = between(-7, 7);
    V axy(n + 1);
    for (std::size_t i = 0; i <= n; ++i) axy[i] = a * x[i] + y[i];
    const auto X = oracle::cv(x), Y = oracle::cv(y), Z = oracle::cv(z);
    o.require(pairing(X, Y) == pairing(Y, X) && pairing(X, Y) == oracle::dot(x, y), "pairing symmetry; ");
    o.require(pairing(oracle::cv(axy), Z) == a * pairing(X, Z) + pairing(Y, Z), "pairing linearity; ");
  }

  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = between(0, 10);
    V k = vec(n, -5, 5);
    if (it % 2) for (auto& c : k) c = 2 * c + 1;
    bool basis = true;
    for (std::size_t i = 0; i <= n; ++i) {
      const V e = oracle::unit(n, i);
      basis = basis && (oracle::dot(k, e) - oracle::dot(e, e)) % 2 == 0;
    }
    o.require(is_characteristic(oracle::cv(k)) == basis, "characteristic congruence; ");
  }

  for (int it = 0; it < 1000; ++it) {
    const std::size_t r = between(1, 8), c = between(1, 8);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = between(-10, 10);
    const auto s = smith_normal_form(m);
    bool ok = s.U * m * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    for (std::size_t i = 0; ok && i < r; ++i)
      for (std::size_t j = 0; ok && j < c; ++j) ok = i == j || s.D(i, j) == 0;
    for (std::size_t k = 1; ok && k < s.divisors.size(); ++k) ok = s.divisors[k] % s.divisors[k - 1] == 0;
    o.require(ok, "SNF reconstruction; ");
  }

  for (int done = 0; done < 1000;) {
    const std::size_t n = between(1, 11);
    V k(n + 1);
    for (auto& c : k) c = 2 * between(-2, 1) + 1;
    k[0] = 2 * between(2, 6) + 1;
    const long d = (oracle::dot(k, k) - 9 + static_cast<long>(n)) / 4;
    if (d < 0) continue;
    std::vector<V> Hs;
    bool walls = true;
    for (int i = 0; i < 3; ++i) {
      V h = vec(n, -2, 2);
      h[0] = between(7, 15);
      walls = walls && oracle::dot(k, h) != 0 && oracle::dot(h, h) > 0;
      Hs.push_back(h);
    }
    if (!walls) continue;
    const auto K = CharacteristicData::make(oracle::cv(k), AmbientManifoldData{AmbientLattice{n}});
    const auto P0 = PeriodPoint::make(oracle::cv(Hs[0]));
    const auto P1 = PeriodPoint::make(oracle::cv(Hs[1]));
    const auto P2 = PeriodPoint::make(oracle::cv(Hs[2]));
    const Integer s0 = between(-4, 4);
    const Integer s1 = wall_crossing(K, P0, P1, s0);
    o.require(s1 - s0 == oracle::wall_term(oracle::dot(k, Hs[0]), oracle::dot(k, Hs[1]), d), "wall term; ");
    o.require(wall_crossing(K, P1, P2, s1) == wall_crossing(K, P0, P2, s0), "path additivity; ");
    ++done;
  }

  for (int boxes = 0; boxes < 30;) {
    SearchTemplate t;
    t.N = between(2, 6);
    t.p = between(2, std::min<long>(5, t.N));
    if (t.p > 2) t.body_start = between(1, t.N - t.p + 2);
    std::vector<long> b(t.N + 1);
    long double size = 1;
    for (auto& x : b) {
      x = between(0, 3);
      size *= 2 * x + 1;
    }
    if (size > 1e6L) continue;
    t.tail_bounds = b;
    t.symmetry_reduction = false;
    std::vector<V> body;
    for (const auto& u : template_body(t)) body.push_back(oracle::to_v(u));
    std::vector<V> got;
    for (const auto& c : search(t).configurations) got.push_back(oracle::to_v(c.back()));
    o.require(got == oracle::brute_force_tails(body, t.N, t.p, b, -b[0], b[0]), "search vs brute force; ");
    ++boxes;
  }

  elapsed = seconds_since(t0);
  o.require(elapsed < kAc7Total, "too slow; ");
}

void ac8(Outcome& o, double& elapsed) {
  const auto t0 = Clock::now();
  std::size_t mutants = 0;
  for (int fam : {1, 2}) {
    const auto base = fixture(fam, 3);
    o.require(run_case(base).passed, case_name(fam, 3) + " baseline fails; ");
    auto check = [&](const std::string& what, const std::function<void(Fixture&)>& mutate) {
      Fixture fx = base;
      mutate(fx);
      ++mutants;
      const auto r = run_case(fx);
      o.require(!r.passed, case_name(fam, 3) + " survives mutation of " + what + "; ");
    };
    for (int delta : {-1, 1}) {
      for (std::size_t c = 0; c < base.classes.size(); ++c)
        for (std::size_t j = 0; j <= base.n; ++j)
          check("classes[" + std::to_string(c) + "][" + std::to_string(j) + "]",
                [&](Fixture& fx) { fx.classes[c][j] += delta; });
      for (std::size_t j = 0; j <= base.n; ++j) {
        check("K[" + std::to_string(j) + "]", [&](Fixture& fx) { fx.K[j] += delta; });
        check("H[" + std::to_string(j) + "]", [&](Fixture& fx) { fx.H[j] += delta; });
        check("delta[" + std::to_string(j) + "]", [&](Fixture& fx) { (*fx.delta)[j] += delta; });
      }
    }
  }
  elapsed = seconds_since(t0);
  o.require(mutants > 0, "no mutants; ");
  o.require(elapsed < kAc8Total, "too slow; ");
  std::fprintf(stderr, "AC8: %zu mutants\n", mutants);
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit;
    void (*run)(Outcome&, double&);
  };
  const Criterion criteria[] = {
      {"AC1", "configuration verification, per case", kAc1PerCase, ac1},
      {"AC2", "boundary arithmetic p=2..12", kAc2Total, ac2},
      {"AC3", "SW values of the canonical lifts", kAc3Total, ac3},
      {"AC4", "homeomorphism types and handle counts", kAc4Total, ac4},
      {"AC5", "negative check a=12..14", kAc5Total, ac5},
      {"AC6", "open-range probe a=8..11, per run", kAc6PerRun, ac6},
      {"AC7", "property suites", kAc7Total, ac7},
      {"AC8", "mutation honesty", kAc8Total, ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    double elapsed = 0;
    try {
      c.run(o, elapsed);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s (%.3fs, limit %.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, elapsed, c.limit,
                o.ok ? "" : " ", o.why.str().c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
