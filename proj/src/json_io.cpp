#include "rbd/json_io.hpp"

#include <fstream>

namespace rbd {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw DomainError("not a decimal integer: " + j.dump());
    return x;
  }
  throw DomainError("expected an integer, got " + j.dump());
}

Json to_json(const ClassVector& v) {
  Json arr = Json::array();
  for (const auto& c : v.coeffs()) arr.push_back(to_json(c));
  return arr;
}

ClassVector class_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("a class must be a nonempty JSON array of integers");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return ClassVector(std::move(coeffs));
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Rational& q) { return Json(q.get_str()); }

namespace {

// Schema errors from the JSON library (missing key, wrong type) become DomainError.
template <class F>
auto schema_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

ConfigFile config_from_json(const Json& j) {
  return schema_guard("configuration", [&] {
  if (!j.is_object()) throw DomainError("configuration must be a JSON object");
  ConfigFile cfg;
  cfg.p = j.at("p").get<long>();
  const long n = j.at("n").get<long>();
  if (n < 0) throw DomainError("n must be nonnegative");
  cfg.n = static_cast<std::size_t>(n);
  for (const auto& c : j.at("classes")) {
    auto v = class_from_json(c);
    if (v.size() != cfg.n + 1) {
      throw DimensionMismatch("class " + c.dump() + " has " + std::to_string(v.size()) +
                              " coefficients, expected n+1 = " + std::to_string(cfg.n + 1));
    }
    cfg.classes.push_back(std::move(v));
  }
  return cfg;
  });
}

Json to_json(const ConfigFile& cfg) {
  Json classes = Json::array();
  for (const auto& c : cfg.classes) classes.push_back(to_json(c));
  return Json{{"p", cfg.p}, {"n", cfg.n}, {"classes", std::move(classes)}};
}

Json to_json(const Violation& v) {
  return Json{{"kind", to_string(v.kind)},
              {"i", v.i},
              {"j", v.j},
              {"expected", to_json(v.expected)},
              {"actual", to_json(v.actual)}};
}

Json to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  Json out{{"p", r.p}, {"passed", r.passed}};
  out["first_violation"] = r.first_violation ? to_json(*r.first_violation) : Json(nullptr);
  out["violations"] = std::move(violations);
  out["gram"] = to_json(r.gram);
  return out;
}

Json to_json(const BlowdownInvariants& inv) {
  return Json{{"b2_plus", inv.b2_plus},
              {"b2_minus", inv.b2_minus},
              {"euler", inv.euler},
              {"signature", inv.signature}};
}

namespace {

Json integers(const std::vector<Integer>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

}  // namespace

Json to_json(const H1Certificate& c) {
  Json out{{"verdict", to_string(c.verdict)}, {"condition", c.condition}};
  out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  out["witness_text"] = c.witness ? Json(c.witness->to_string()) : Json(nullptr);
  out["pairings"] = integers(c.pairings);
  out["source"] = c.source;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const ParityResult& r) {
  Json out{{"parity", to_string(r.parity)},
           {"signature_criterion", r.signature_criterion},
           {"complement_odd", r.complement_odd}};
  out["odd_witness"] = r.odd_witness ? to_json(*r.odd_witness) : Json(nullptr);
  out["odd_witness_square"] = r.odd_witness_square ? to_json(*r.odd_witness_square) : Json(nullptr);
  out["witness_source"] = r.witness_source.empty() ? Json(nullptr) : Json(r.witness_source);
  out["homeo_type"] = r.homeo_type ? Json(*r.homeo_type) : Json(nullptr);
  return out;
}

Json to_json(const BlowdownReport& r) {
  Json out = to_json(r.invariants);
  out["h1"] = to_json(r.h1);
  out["h1_verdict"] = to_string(r.h1.verdict);
  out["parity"] = to_json(r.parity);
  out["homeo_type"] = r.homeo_type ? Json(*r.homeo_type) : Json(nullptr);
  if (r.handle_counts) {
    out["handle_counts"] = Json(std::vector<std::int64_t>(r.handle_counts->begin(), r.handle_counts->end()));
  } else {
    out["handle_counts"] = nullptr;
  }
  return out;
}

Json to_json(const LiftCertificate& c) {
  return Json{{"admissible", c.admissible}, {"pairings", integers(c.pairings)}};
}

Json to_json(const WallCrossing& w) {
  return Json{{"K_dot_from", to_json(w.K_dot_from)},
              {"K_dot_to", to_json(w.K_dot_to)},
              {"d", to_json(w.d)},
              {"branch", to_string(w.branch)},
              {"term", to_json(w.term)},
              {"value", to_json(w.value)}};
}

Json to_json(const RestrictionReport& r) {
  Json out{{"k", integers(r.k)},
           {"restriction_square", to_json(r.restriction_square)},
           {"square_ok", r.square_ok},
           {"residue", to_json(r.residue)},
           {"boundary_order", to_json(r.boundary_order)},
           {"divisible_by_p", r.divisible_by_p}};
  out["m"] = r.m ? to_json(*r.m) : Json(nullptr);
  out["m_parity_ok"] = r.m_parity_ok ? Json(*r.m_parity_ok) : Json(nullptr);
  out["convention"] = r.convention;
  return out;
}

Json to_json(const SwCertificate& c) {
  return Json{{"value", to_json(c.value)},
              {"lift", to_json(c.lift)},
              {"d", to_json(c.d)},
              {"d_positive", c.d_positive},
              {"orthogonality", integers(c.orthogonality)},
              {"H_square", to_json(c.H_square)},
              {"base_chamber", "PD(h)"},
              {"base_value", to_json(c.base_value)},
              {"crossing", to_json(c.crossing)},
              {"b2_minus_after", c.b2_minus_after}};
}

SearchTemplate template_from_json(const Json& j) {
  return schema_guard("template", [&] {
  if (!j.is_object()) throw DomainError("template must be a JSON object");
  SearchTemplate t;
  t.N = j.at("N").get<std::size_t>();
  t.p = j.at("p").get<long>();
  t.body_shape = body_shape_from_string(j.value("body_shape", std::string("consecutive-differences")));
  t.body_start = j.value("body_start", std::size_t{0});
  if (j.contains("body_pairs")) {
    for (const auto& pr : j.at("body_pairs")) t.body_pairs.emplace_back(pr.at(0).get<std::size_t>(), pr.at(1).get<std::size_t>());
  }
  const Json& bound = j.at("tail_bound");
  t.tail_bounds.clear();
  if (bound.is_array()) {
    for (const auto& b : bound) t.tail_bounds.push_back(b.get<long>());
  } else {
    t.tail_bounds.push_back(bound.get<long>());
  }
  if (j.contains("tail_h_range") && !j.at("tail_h_range").is_null()) {
    const Json& r = j.at("tail_h_range");
    t.tail_h_range = std::make_pair(r.at(0).get<long>(), r.at(1).get<long>());
  }
  t.symmetry_reduction = j.value("symmetry_reduction", true);
  t.validate();
  return t;
  });
}

Json to_json(const SearchTemplate& t) {
  Json out{{"N", t.N}, {"p", t.p}, {"body_shape", to_string(t.body_shape)}};
  if (t.body_shape == BodyShape::consecutive_differences) {
    out["body_start"] = t.resolved_body_start();
  } else {
    Json pairs = Json::array();
    for (const auto& [a, b] : t.body_pairs) pairs.push_back(Json::array({a, b}));
    out["body_pairs"] = std::move(pairs);
  }
  out["tail_bound"] = t.tail_bounds.size() == 1 ? Json(t.tail_bounds[0]) : Json(t.tail_bounds);
  out["tail_h_range"] = t.tail_h_range ? Json::array({t.tail_h_range->first, t.tail_h_range->second}) : Json(nullptr);
  out["symmetry_reduction"] = t.symmetry_reduction;
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

ClassVector read_class_argument(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && arg[first] == '[') {
    try {
      return class_from_json(Json::parse(arg));
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("malformed class vector: ") + e.what());
    }
  }
  return class_from_json(read_json_file(arg));
}

}  // namespace rbd
