#include "rbd/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <thread>

#include "rbd/sw.hpp"

namespace rbd {

namespace {

const char* kStageNames[] = {"verify-config", "blowdown-invariants", "h1-certificate", "parity-homeo",
                             "lift-admissible", "restriction", "d-invariant", "sw", "handles"};

std::optional<ClassVector> optional_class(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return class_from_json(j.at(key));
}

void expect_rank(const ClassVector& v, std::size_t n, const std::string& what) {
  if (v.size() != n + 1) {
    throw DimensionMismatch(what + " has " + std::to_string(v.size()) + " coefficients, expected " +
                            std::to_string(n + 1));
  }
}

struct Failure {
  std::string message;
};

}  // namespace

static Fixture parse_fixture(const Json& j);

Fixture fixture_from_json(const Json& j) {
  try {
    return parse_fixture(j);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("fixture: ") + e.what());
  }
}

static Fixture parse_fixture(const Json& j) {
  if (!j.is_object()) throw DomainError("fixture must be a JSON object");
  Fixture f;
  f.source = j;
  f.fixture_version = j.value("fixture_version", 1);
  f.family = j.at("family").get<int>();
  f.a = j.at("a").get<int>();
  const ConfigFile cfg = config_from_json(j);
  f.p = cfg.p;
  f.n = cfg.n;
  f.classes = cfg.classes;
  f.K = class_from_json(j.at("K"));
  f.H = class_from_json(j.at("H"));
  expect_rank(f.K, f.n, "K");
  expect_rank(f.H, f.n, "H");
  f.delta = optional_class(j, "delta");
  if (f.delta) expect_rank(*f.delta, f.n, "delta");
  f.delta_condition = j.value("delta_condition", 0);
  if (j.contains("handles") && !j.at("handles").is_null()) {
    const Json& h = j.at("handles");
    f.handles = HandleInput{h.at("h2").get<std::int64_t>(), h.at("h3").get<std::int64_t>(),
                            h.value("h1", std::int64_t{0})};
  }
  if (j.contains("expected_handle_counts") && !j.at("expected_handle_counts").is_null()) {
    const auto v = j.at("expected_handle_counts").get<std::vector<std::int64_t>>();
    if (v.size() != 5) throw DomainError("expected_handle_counts needs 5 entries");
    HandleCounts hc{};
    std::copy(v.begin(), v.end(), hc.begin());
    f.expected_handle_counts = hc;
  }
  return f;
}

Fixture load_fixture(const std::filesystem::path& path) { return fixture_from_json(read_json_file(path)); }

std::string to_string(StageStatus s) {
  switch (s) {
    case StageStatus::pass: return "pass";
    case StageStatus::fail: return "fail";
    case StageStatus::skipped: return "skipped";
    case StageStatus::not_run: return "not-run";
  }
  return "?";
}

const std::vector<std::string>& pipeline_stages() {
  static const std::vector<std::string> names(std::begin(kStageNames), std::end(kStageNames));
  return names;
}

CaseReport run_case(const Fixture& fx, const WitnessSearchOptions& witness) {
  CaseReport report;
  report.id = "family" + std::to_string(fx.family) + "/a" + std::to_string(fx.a);
  report.family = fx.family;
  report.a = fx.a;
  report.input = fx.source;
  for (const auto& name : pipeline_stages()) report.stages.push_back(StageResult{name, StageStatus::not_run, {}, nullptr});

  const std::int64_t k_expected = 12 - fx.a;
  const std::string homeo_expected = rational_surface_name(k_expected);
  const AmbientManifoldData X{AmbientLattice{fx.n}};

  std::optional<CpConfiguration> cfg;
  BlowdownInvariants inv;
  H1Certificate h1;
  std::optional<CharacteristicData> K;

  // Each stage fills its certificate and throws Failure (or a library error) to stop the case.
  std::vector<std::function<void(StageResult&)>> stages = {
      [&](StageResult& s) {
        const auto rep = verify_cp_configuration(fx.classes, fx.p);
        s.certificate = to_json(rep);
        if (!rep.passed) {
          const auto& v = *rep.first_violation;
          throw Failure{to_string(v.kind) + " (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") is " +
                        v.actual.get_str() + ", expected " + v.expected.get_str()};
        }
        cfg = CpConfiguration::verified(fx.classes, fx.p);
        const auto bg = boundary_group(intersection_matrix(*cfg));
        s.certificate["boundary_order"] = to_json(bg.order);
        s.certificate["boundary_cyclic"] = bg.cyclic;
      },
      [&](StageResult& s) {
        inv = blowdown_invariants(X, *cfg);
        s.certificate = to_json(inv);
        if (inv.b2_plus != 1 || inv.b2_minus != k_expected) {
          throw Failure{"b2 = (" + std::to_string(inv.b2_plus) + "," + std::to_string(inv.b2_minus) +
                        "), expected (1," + std::to_string(k_expected) + ")"};
        }
      },
      [&](StageResult& s) {
        h1 = h1_certificate(X, *cfg, fx.delta, witness);
        s.certificate = to_json(h1);
        if (h1.verdict != H1Verdict::trivial) throw Failure{"no H_1 witness"};
        if (fx.delta && h1.source != "supplied") throw Failure{"supplied delta does not certify H_1 = 0"};
        if (fx.delta && fx.delta_condition != 0 && h1.condition != fx.delta_condition) {
          throw Failure{"delta satisfies condition " + std::to_string(h1.condition) + ", fixture declares " +
                        std::to_string(fx.delta_condition)};
        }
      },
      [&](StageResult& s) {
        const std::vector<ClassVector> candidates{fx.H};
        const auto par = parity_and_homeo_type(X, *cfg, h1, witness, candidates);
        s.certificate = to_json(par);
        report.homeo_type = par.homeo_type;
        if (!par.homeo_type) throw Failure{"homeomorphism type undetermined (parity " + to_string(par.parity) + ")"};
        if (*par.homeo_type != homeo_expected) throw Failure{"got " + *par.homeo_type + ", expected " + homeo_expected};
      },
      [&](StageResult& s) {
        K = CharacteristicData::make(fx.K, X);
        const auto lift = lift_admissible(*K, *cfg);
        s.certificate = to_json(lift);
        if (!lift.admissible) throw Failure{"K does not lift a characteristic class of the blowdown"};
      },
      [&](StageResult& s) {
        const auto r = restriction_conditions(*K, *cfg);
        s.certificate = to_json(r);
        if (!r.square_ok) throw Failure{"restriction square " + r.restriction_square.get_str() + " != 1-p"};
        if (!r.divisible_by_p) throw Failure{"boundary residue " + r.residue.get_str() + " not divisible by p"};
      },
      [&](StageResult& s) {
        const Integer d = d_invariant(*K);
        s.certificate = Json{{"d", to_json(d)}, {"K_square", to_json(square(K->K()))}};
        if (d != 0) throw Failure{"d = " + d.get_str() + ", expected 0"};
      },
      [&](StageResult& s) {
        const auto H = PeriodPoint::make(fx.H);
        const auto pos = sw_on_blowdown(X, *cfg, *K, H);
        const auto neg = sw_on_blowdown(X, *cfg, K->negated(), H);
        s.certificate = Json{{"K", to_json(pos)}, {"minus_K", to_json(neg)}};
        report.sw_value = pos.value;
        if (abs(pos.value) != 1) throw Failure{"SW(K) = " + pos.value.get_str() + ", expected +-1"};
        if (neg.value != -pos.value) throw Failure{"SW(-K) = " + neg.value.get_str() + " is not -SW(K)"};
      },
      [&](StageResult& s) {
        if (!fx.handles) {
          s.status = StageStatus::skipped;
          s.message = "no handle decomposition supplied";
          return;
        }
        const auto hc = handle_counts_after_blowdown(fx.handles->h2, fx.handles->h3, fx.handles->h1);
        report.handle_counts = hc;
        s.certificate = Json{{"h1", fx.handles->h1},
                             {"h2", fx.handles->h2},
                             {"h3", fx.handles->h3},
                             {"handle_counts", std::vector<std::int64_t>(hc.begin(), hc.end())}};
        if (fx.expected_handle_counts && *fx.expected_handle_counts != hc) throw Failure{"handle counts differ from expected"};
      },
  };

  report.passed = true;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    StageResult& s = report.stages[i];
    s.status = StageStatus::pass;
    try {
      stages[i](s);
    } catch (const Failure& f) {
      s.status = StageStatus::fail;
      s.message = f.message;
    } catch (const Error& e) {
      s.status = StageStatus::fail;
      s.message = e.what();
    }
    if (s.status == StageStatus::fail) {
      report.passed = false;
      report.failed_stage = s.name;
      break;
    }
  }
  return report;
}

Json to_json(const CaseReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json js{{"stage", s.name}, {"status", to_string(s.status)}};
    if (!s.message.empty()) js["message"] = s.message;
    js["certificate"] = s.certificate;
    stages.push_back(std::move(js));
  }
  Json out{{"tool_version", kToolVersion}, {"case", r.id}, {"family", r.family}, {"a", r.a}, {"passed", r.passed}};
  out["failed_stage"] = r.failed_stage ? Json(*r.failed_stage) : Json(nullptr);
  out["homeo_type"] = r.homeo_type ? Json(*r.homeo_type) : Json(nullptr);
  out["sw"] = r.sw_value ? to_json(*r.sw_value) : Json(nullptr);
  out["handle_counts"] =
      r.handle_counts ? Json(std::vector<std::int64_t>(r.handle_counts->begin(), r.handle_counts->end())) : Json(nullptr);
  out["input"] = r.input;
  out["stages"] = std::move(stages);
  return out;
}

void apply_only_filter(const std::string& filter, ReproduceOptions& options) {
  static const std::regex item(R"(\s*(a|family)\s*=\s*(-?\d+)\s*)");
  std::size_t start = 0;
  while (start <= filter.size()) {
    const auto comma = filter.find(',', start);
    const std::string part = filter.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw DomainError("bad --only item '" + part + "' (expected a=N or family=N)");
    const int value = std::stoi(m[2].str());
    if (m[1] == "a") {
      options.only_a = value;
    } else {
      options.only_family = value;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
}

namespace {

void write_json(const std::filesystem::path& path, const Json& j) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace

ReproduceResult reproduce_paper(const ReproduceOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(options.fixtures_dir)) throw DomainError("fixtures directory not found: " + options.fixtures_dir.string());

  std::vector<Fixture> fixtures;
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(options.fixtures_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    Fixture f = load_fixture(path);
    if (options.only_a && f.a != *options.only_a) continue;
    if (options.only_family && f.family != *options.only_family) continue;
    fixtures.push_back(std::move(f));
  }
  if (fixtures.empty()) throw DomainError("no fixture matches in " + options.fixtures_dir.string());
  std::sort(fixtures.begin(), fixtures.end(),
            [](const Fixture& x, const Fixture& y) { return std::tie(x.family, x.a) < std::tie(y.family, y.a); });

  ReproduceResult result;
  result.cases.resize(fixtures.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(fixtures.size())));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < fixtures.size(); i += jobs) result.cases[i] = run_case(fixtures[i]);
      });
    }
  }

  result.all_passed = true;
  Json rows = Json::array();
  for (const auto& c : result.cases) {
    result.all_passed = result.all_passed && c.passed;
    Json row{{"case", c.id}, {"family", c.family}, {"a", c.a}, {"passed", c.passed}};
    row["failed_stage"] = c.failed_stage ? Json(*c.failed_stage) : Json(nullptr);
    row["homeo_type"] = c.homeo_type ? Json(*c.homeo_type) : Json(nullptr);
    row["sw"] = c.sw_value ? to_json(*c.sw_value) : Json(nullptr);
    row["handle_counts"] =
        c.handle_counts ? Json(std::vector<std::int64_t>(c.handle_counts->begin(), c.handle_counts->end())) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  result.summary = Json{{"tool_version", kToolVersion},
                        {"cases", result.cases.size()},
                        {"all_passed", result.all_passed},
                        {"table", std::move(rows)}};

  if (options.out_dir) {
    for (const auto& c : result.cases) write_json(*options.out_dir / (c.id + ".json"), to_json(c));
    write_json(*options.out_dir / "summary.json", result.summary);
  }
  return result;
}

}  // namespace rbd
