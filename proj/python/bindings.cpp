// Python bindings. Class vectors are lists of Python ints (any size); reports
// come back as plain dicts with the same layout as the CLI's JSON, where
// integers beyond int64 appear as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbd/blowdown.hpp"
#include "rbd/json_io.hpp"
#include "rbd/pipeline.hpp"
#include "rbd/search.hpp"
#include "rbd/sw.hpp"

namespace py = pybind11;

namespace {

rbd::Integer to_integer(const py::handle& obj) {
  if (!py::isinstance<py::int_>(obj)) throw py::type_error("expected an int");
  return rbd::Integer(py::str(obj).cast<std::string>());
}

rbd::ClassVector to_class(const py::handle& obj) {
  std::vector<rbd::Integer> coeffs;
  for (const auto& c : obj) coeffs.push_back(to_integer(c));
  if (coeffs.empty()) throw rbd::DomainError("a class needs at least the h-coefficient");
  return rbd::ClassVector(std::move(coeffs));
}

std::vector<rbd::ClassVector> to_classes(const py::handle& obj) {
  std::vector<rbd::ClassVector> out;
  for (const auto& c : obj) out.push_back(to_class(c));
  return out;
}

py::object to_python(const rbd::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

rbd::Json from_python(const py::handle& obj) {
  return rbd::Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::int_ to_py_int(const rbd::Integer& x) { return py::int_(py::str(x.get_str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice arithmetic for rational blowdowns of CP^2 # n(-CP^2)";
  m.attr("__version__") = rbd::kToolVersion;

  // Translators run newest first, so the base class is registered before its subclasses.
  auto& base = py::register_exception<rbd::Error>(m, "RbdError", PyExc_ValueError);
  py::register_exception<rbd::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<rbd::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<rbd::ArityError>(m, "ArityError", base.ptr());
  py::register_exception<rbd::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<rbd::ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<rbd::SearchSizeError>(m, "SearchSizeError", base.ptr());


  m.def(
      "pairing", [](const py::object& x, const py::object& y) { return to_py_int(rbd::pairing(to_class(x), to_class(y))); },
      py::arg("x"), py::arg("y"), "Intersection pairing on Z^{1,n}: x0*y0 - sum xi*yi.");

  m.def(
      "is_characteristic", [](const py::object& K) { return rbd::is_characteristic(to_class(K)); }, py::arg("K"));

  m.def(
      "smith_normal_form",
      [](const py::object& rows) {
        std::vector<std::vector<rbd::Integer>> data;
        for (const auto& r : rows) {
          auto& row = data.emplace_back();
          for (const auto& c : r) row.push_back(to_integer(c));
        }
        const std::size_t cols = data.empty() ? 0 : data[0].size();
        rbd::IntMatrix mat(data.size(), cols);
        for (std::size_t i = 0; i < data.size(); ++i) {
          if (data[i].size() != cols) throw rbd::DimensionMismatch("ragged matrix");
          for (std::size_t j = 0; j < cols; ++j) mat(i, j) = data[i][j];
        }
        const auto s = rbd::smith_normal_form(mat);
        rbd::Json out{{"D", rbd::to_json(s.D)}, {"U", rbd::to_json(s.U)}, {"V", rbd::to_json(s.V)}};
        out["divisors"] = rbd::Json::array();
        for (const auto& d : s.divisors) out["divisors"].push_back(rbd::to_json(d));
        return to_python(out);
      },
      py::arg("matrix"), "Smith form D = U M V with transforms.");

  m.def("lens_space_cf", &rbd::lens_space_cf, py::arg("p"));

  m.def(
      "verify_config", [](const py::object& classes, long p) {
        return to_python(rbd::to_json(rbd::verify_cp_configuration(to_classes(classes), p)));
      },
      py::arg("classes"), py::arg("p"));

  m.def(
      "boundary_group",
      [](const py::object& classes) {
        const auto bg = rbd::boundary_group(rbd::intersection_matrix(to_classes(classes)));
        rbd::Json out{{"order", rbd::to_json(bg.order)}, {"cyclic", bg.cyclic}, {"divisors", rbd::Json::array()}};
        for (const auto& d : bg.divisors) out["divisors"].push_back(rbd::to_json(d));
        return to_python(out);
      },
      py::arg("classes"));

  m.def(
      "blowdown",
      [](const py::object& classes, long p, const py::object& delta, long witness_bound, const py::object& odd_witnesses,
         std::optional<std::int64_t> h2, std::optional<std::int64_t> h3, std::int64_t h1) {
        const auto cfg = rbd::CpConfiguration::verified(to_classes(classes), p);
        rbd::BlowdownOptions opts;
        if (!delta.is_none()) opts.delta = to_class(delta);
        opts.witness.bound = witness_bound;
        if (!odd_witnesses.is_none()) opts.odd_candidates = to_classes(odd_witnesses);
        if (h2.has_value() != h3.has_value()) throw rbd::DomainError("h2 and h3 must be given together");
        if (h2) opts.handles = rbd::HandleInput{*h2, *h3, h1};
        return to_python(rbd::to_json(rbd::blowdown_report(rbd::AmbientManifoldData{cfg.lattice()}, cfg, opts)));
      },
      py::arg("classes"), py::arg("p"), py::arg("delta") = py::none(), py::arg("witness_bound") = 3,
      py::arg("odd_witnesses") = py::none(), py::arg("h2") = py::none(), py::arg("h3") = py::none(),
      py::arg("h1") = 0);

  m.def(
      "sw",
      [](const py::object& classes, long p, const py::object& K, const py::object& H) {
        const auto cfg = rbd::CpConfiguration::verified(to_classes(classes), p);
        const rbd::AmbientManifoldData X{cfg.lattice()};
        const auto Kd = rbd::CharacteristicData::make(to_class(K), X);
        const auto cert = rbd::sw_on_blowdown(X, cfg, Kd, rbd::PeriodPoint::make(to_class(H)));
        return to_python(rbd::to_json(cert));
      },
      py::arg("classes"), py::arg("p"), py::arg("K"), py::arg("H"),
      "SW value of the blowdown for the class lifted by K, in the chamber of H.");

  m.def(
      "wall_crossing",
      [](const py::object& K, const py::object& H_from, const py::object& H_to, const py::object& sw_at_from) {
        auto Kc = to_class(K);
        const rbd::AmbientManifoldData X{Kc.lattice()};
        const auto Kd = rbd::CharacteristicData::make(std::move(Kc), X);
        return to_py_int(rbd::wall_crossing(Kd, rbd::PeriodPoint::make(to_class(H_from)),
                                            rbd::PeriodPoint::make(to_class(H_to)), to_integer(sw_at_from)));
      },
      py::arg("K"), py::arg("H_from"), py::arg("H_to"), py::arg("sw_at_from"));

  m.def(
      "search",
      [](const py::object& tmpl, double cap, unsigned jobs) {
        const auto t = rbd::template_from_json(from_python(tmpl));
        rbd::SearchResult res;
        {
          py::gil_scoped_release release;
          res = rbd::search(t, rbd::SearchOptions{static_cast<long double>(cap), jobs});
        }
        rbd::Json configs = rbd::Json::array();
        for (const auto& c : res.configurations) {
          rbd::Json classes = rbd::Json::array();
          for (const auto& u : c) classes.push_back(rbd::to_json(u));
          configs.push_back(std::move(classes));
        }
        return to_python(rbd::Json{{"configurations", std::move(configs)},
                                   {"estimate", static_cast<double>(res.estimate)},
                                   {"nodes", res.nodes}});
      },
      py::arg("template"), py::arg("cap") = 1e9, py::arg("jobs") = 1,
      "Bounded search; template uses the same keys as the CLI template file.");

  m.def(
      "chain_template",
      [](int a, const std::string& family) {
        return to_python(rbd::to_json(rbd::chain_template(a, rbd::chain_family_from_string(family))));
      },
      py::arg("a"), py::arg("family") = "3-chain");

  m.def(
      "run_fixture",
      [](const std::string& path) { return to_python(rbd::to_json(rbd::run_case(rbd::load_fixture(path)))); },
      py::arg("path"));

  m.def(
      "reproduce_paper",
      [](const std::string& fixtures, const std::optional<std::string>& out, const std::optional<std::string>& only,
         unsigned jobs) {
        rbd::ReproduceOptions opts;
        opts.fixtures_dir = fixtures;
        if (out) opts.out_dir = *out;
        if (only) rbd::apply_only_filter(*only, opts);
        opts.jobs = jobs;
        rbd::ReproduceResult res;
        {
          py::gil_scoped_release release;
          res = rbd::reproduce_paper(opts);
        }
        return to_python(res.summary);
      },
      py::arg("fixtures"), py::arg("out") = py::none(), py::arg("only") = py::none(), py::arg("jobs") = 1);
}
