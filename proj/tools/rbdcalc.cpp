// rbdcalc: command-line front end.
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage or input error.
// Results go to stdout as JSON; diagnostics go to stderr.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rbd/blowdown.hpp"
#include "rbd/json_io.hpp"
#include "rbd/pipeline.hpp"
#include "rbd/search.hpp"
#include "rbd/sw.hpp"

#ifndef RBD_DEFAULT_FIXTURES
#define RBD_DEFAULT_FIXTURES "fixtures"
#endif

namespace {

using rbd::Json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

// Raised while reading inputs; maps to exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto load(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

Json envelope(const std::string& command, Json input) {
  return Json{{"tool_version", rbd::kToolVersion}, {"command", command}, {"input", std::move(input)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct ConfigInput {
  rbd::ConfigFile file;
  Json echo;
};

ConfigInput read_config(const std::string& path) {
  return load([&] {
    Json j = rbd::read_json_file(path);
    return ConfigInput{rbd::config_from_json(j), j};
  });
}

rbd::ClassVector read_vec(const std::string& arg) {
  return load([&] { return rbd::read_class_argument(arg); });
}

// Verification failure is reported with the full report and exit 1.
std::optional<rbd::CpConfiguration> verified_or_report(const ConfigInput& in, const std::string& command, Json input) {
  auto rep = rbd::verify_cp_configuration(in.file.classes, in.file.p);
  if (rep.passed) return rbd::CpConfiguration::verified(in.file.classes, in.file.p);
  Json out = envelope(command, std::move(input));
  out["verification"] = rbd::to_json(rep);
  out["error"] = "input is not a C_p configuration";
  emit(out);
  std::cerr << "rbdcalc: configuration fails verification\n";
  return std::nullopt;
}

struct VerifyArgs {
  std::string config;
};

int cmd_verify(const VerifyArgs& a) {
  const auto in = read_config(a.config);
  const auto rep = rbd::verify_cp_configuration(in.file.classes, in.file.p);
  Json out = envelope("verify-config", Json{{"config_path", a.config}, {"config", in.echo}});
  out["report"] = rbd::to_json(rep);
  if (rep.passed) {
    const auto bg = rbd::boundary_group(rep.gram);
    out["boundary"] = Json{{"order", rbd::to_json(bg.order)}, {"cyclic", bg.cyclic}, {"divisors", Json::array()}};
    for (const auto& d : bg.divisors) out["boundary"]["divisors"].push_back(rbd::to_json(d));
  }
  emit(out);
  return rep.passed ? kOk : kMathFailure;
}

struct BlowdownArgs {
  std::string config;
  std::string delta;
  std::vector<std::string> odd_witnesses;
  long witness_bound = 3;
  std::size_t max_support = 4;
  std::optional<std::int64_t> h2;
  std::optional<std::int64_t> h3;
  std::int64_t h1 = 0;
};

int cmd_blowdown(const BlowdownArgs& a) {
  const auto in = read_config(a.config);
  rbd::BlowdownOptions opts;
  Json input{{"config_path", a.config}, {"config", in.echo}, {"witness_bound", a.witness_bound},
             {"max_support", a.max_support}};
  if (!a.delta.empty()) {
    opts.delta = read_vec(a.delta);
    input["delta"] = rbd::to_json(*opts.delta);
  }
  for (const auto& w : a.odd_witnesses) opts.odd_candidates.push_back(read_vec(w));
  if (!opts.odd_candidates.empty()) {
    input["odd_witnesses"] = Json::array();
    for (const auto& w : opts.odd_candidates) input["odd_witnesses"].push_back(rbd::to_json(w));
  }
  if (a.h2.has_value() != a.h3.has_value()) throw InputError("--h2 and --h3 must be given together");
  if (a.h2) {
    opts.handles = rbd::HandleInput{*a.h2, *a.h3, a.h1};
    input["handles"] = Json{{"h1", a.h1}, {"h2", *a.h2}, {"h3", *a.h3}};
  }
  opts.witness.bound = a.witness_bound;
  opts.witness.max_support = a.max_support;

  auto cfg = verified_or_report(in, "blowdown", input);
  if (!cfg) return kMathFailure;
  const rbd::AmbientManifoldData X{cfg->lattice()};
  const auto rep = rbd::blowdown_report(X, *cfg, opts);
  Json out = envelope("blowdown", std::move(input));
  out["report"] = rbd::to_json(rep);
  emit(out);
  if (!rep.homeo_type) std::cerr << "rbdcalc: homeomorphism type not determined\n";
  return rep.homeo_type ? kOk : kMathFailure;
}

struct SwArgs {
  std::string config;
  std::string K;
  std::string H;
};

int cmd_sw(const SwArgs& a) {
  const auto in = read_config(a.config);
  const auto K = read_vec(a.K);
  const auto H = read_vec(a.H);
  Json input{{"config_path", a.config}, {"config", in.echo}, {"K", rbd::to_json(K)}, {"H", rbd::to_json(H)}};
  auto cfg = verified_or_report(in, "sw", input);
  if (!cfg) return kMathFailure;
  const rbd::AmbientManifoldData X{cfg->lattice()};
  Json out = envelope("sw", std::move(input));
  try {
    const auto Kd = rbd::CharacteristicData::make(K, X);
    const auto cert = rbd::sw_on_blowdown(X, *cfg, Kd, rbd::PeriodPoint::make(H));
    out["value"] = rbd::to_json(cert.value);
    out["certificate"] = rbd::to_json(cert);
    out["restriction"] = rbd::to_json(rbd::restriction_conditions(Kd, *cfg));
  } catch (const rbd::Error& e) {
    out["error"] = e.what();
    emit(out);
    std::cerr << "rbdcalc: " << e.what() << '\n';
    return kMathFailure;
  }
  emit(out);
  return kOk;
}

struct SearchArgs {
  std::string template_path;
  std::string family;
  int a = 0;
  std::optional<long> tail_bound;
  double cap = 1e9;
  unsigned jobs = 1;
};

int cmd_search(const SearchArgs& a) {
  if (a.template_path.empty() == a.family.empty()) throw InputError("give exactly one of --template or --family");
  rbd::SearchTemplate tmpl;
  Json input;
  std::string label = "homological only (embedding not certified)";
  if (!a.template_path.empty()) {
    input["template_path"] = a.template_path;
    tmpl = load([&] { return rbd::template_from_json(rbd::read_json_file(a.template_path)); });
  } else {
    const auto fam = load([&] { return rbd::chain_family_from_string(a.family); });
    tmpl = load([&] { return rbd::chain_template(a.a, fam); });
    input["family"] = rbd::to_string(fam);
    input["a"] = a.a;
  }
  if (a.tail_bound) {
    tmpl.tail_bounds = {*a.tail_bound};
    load([&] { tmpl.validate(); return 0; });
  }
  input["template"] = rbd::to_json(tmpl);
  input["cap"] = a.cap;
  input["jobs"] = a.jobs;

  const auto t0 = std::chrono::steady_clock::now();
  rbd::SearchResult res;
  try {
    res = rbd::search(tmpl, rbd::SearchOptions{static_cast<long double>(a.cap), a.jobs});
  } catch (const rbd::SearchSizeError& e) {
    Json out = envelope("search", std::move(input));
    out["error"] = e.what();
    out["estimate"] = static_cast<double>(e.estimate());
    std::cout << out.dump() << '\n';
    std::cerr << "rbdcalc: " << e.what() << '\n';
    return kMathFailure;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  for (std::size_t i = 0; i < res.configurations.size(); ++i) {
    const auto& c = res.configurations[i];
    Json classes = Json::array();
    for (const auto& u : c) classes.push_back(rbd::to_json(u));
    std::cout << Json{{"index", i}, {"p", tmpl.p}, {"n", tmpl.N}, {"classes", std::move(classes)},
                      {"long_class", c.back().to_string()}, {"label", label}}
                     .dump()
              << '\n';
  }
  Json summary = envelope("search", std::move(input));
  summary["count"] = res.configurations.size();
  summary["result"] = res.configurations.empty() ? "none within bounds" : "found within bounds";
  summary["label"] = label;
  summary["estimate"] = static_cast<double>(res.estimate);
  summary["nodes"] = res.nodes;
  summary["elapsed_seconds"] = secs;
  std::cout << Json{{"summary", std::move(summary)}}.dump() << '\n';
  return kOk;
}

struct ReproduceArgs {
  std::string fixtures = RBD_DEFAULT_FIXTURES;
  std::string out;
  std::string only;
  unsigned jobs = 1;
};

int cmd_reproduce(const ReproduceArgs& a) {
  rbd::ReproduceOptions opts;
  opts.fixtures_dir = a.fixtures;
  if (!a.out.empty()) opts.out_dir = a.out;
  opts.jobs = a.jobs;
  if (!a.only.empty()) load([&] { rbd::apply_only_filter(a.only, opts); return 0; });
  const auto res = load([&] { return rbd::reproduce_paper(opts); });
  Json out = envelope("reproduce-paper", Json{{"fixtures", a.fixtures}, {"out", a.out}, {"only", a.only}});
  out["summary"] = res.summary;
  emit(out);
  for (const auto& c : res.cases) {
    if (c.passed) continue;
    const auto& stage = *c.failed_stage;
    std::string msg;
    for (const auto& s : c.stages)
      if (s.name == stage) msg = s.message;
    std::cerr << "rbdcalc: " << c.id << " failed at " << stage << ": " << msg << '\n';
  }
  return res.all_passed ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational blowdown calculator for C_p configurations in CP^2 # n(-CP^2)", "rbdcalc"};
  app.set_version_flag("--version", rbd::kToolVersion);
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-config", "Check that a class list forms a C_p configuration");
  verify->add_option("config", va.config, "Configuration JSON file")->required();

  BlowdownArgs ba;
  auto* blow = app.add_subcommand("blowdown", "Invariants, H_1 certificate and homeomorphism type of the blowdown");
  blow->add_option("config", ba.config, "Configuration JSON file")->required();
  blow->add_option("--delta", ba.delta, "H_1 witness (inline JSON array or file)");
  blow->add_option("--witness-bound", ba.witness_bound, "Coefficient bound for witness search")->check(CLI::Range(0L, 1000L));
  blow->add_option("--max-support", ba.max_support, "Support bound for witness search")->check(CLI::Range(1, 64));
  blow->add_option("--odd-witness", ba.odd_witnesses, "Candidate odd class orthogonal to the configuration");
  blow->add_option("--h2", ba.h2, "2-handles of X besides the configuration");
  blow->add_option("--h3", ba.h3, "3-handles of X");
  blow->add_option("--h1", ba.h1, "1-handles of X that survive the blowdown")->check(CLI::NonNegativeNumber);

  SwArgs sa;
  auto* sw = app.add_subcommand("sw", "Seiberg-Witten value on the blowdown via wall crossing");
  sw->add_option("--config", sa.config, "Configuration JSON file")->required();
  sw->add_option("--K", sa.K, "Lifted characteristic class")->required();
  sw->add_option("--H", sa.H, "Period point orthogonal to the configuration")->required();

  SearchArgs sea;
  auto* search = app.add_subcommand("search", "Bounded search for configurations with a fixed body");
  search->add_option("--template", sea.template_path, "Template JSON file");
  search->add_option("--family", sea.family, "Built-in template: 3-chain or 4-chain");
  search->add_option("--a", sea.a, "Family parameter");
  search->add_option("--tail-bound", sea.tail_bound, "Override the tail coefficient bound");
  search->add_option("--cap", sea.cap, "Refuse searches whose estimate exceeds this")->check(CLI::PositiveNumber);
  search->add_option("--jobs", sea.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  ReproduceArgs ra;
  auto* repro = app.add_subcommand("reproduce-paper", "Certify every fixture case and write the report bundle");
  repro->add_option("--fixtures", ra.fixtures, "Fixture directory");
  repro->add_option("--out", ra.out, "Directory for per-case reports and summary.json");
  repro->add_option("--only", ra.only, "Filter such as a=5,family=2");
  repro->add_option("--jobs", ra.jobs, "Cases run in parallel")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*blow) return cmd_blowdown(ba);
    if (*sw) return cmd_sw(sa);
    if (*search) return cmd_search(sea);
    if (*repro) return cmd_reproduce(ra);
  } catch (const InputError& e) {
    std::cerr << "rbdcalc: " << e.what() << '\n';
    return kUsage;
  } catch (const rbd::Error& e) {
    std::cerr << "rbdcalc: " << e.what() << '\n';
    return kMathFailure;
  }
  return kUsage;
}
