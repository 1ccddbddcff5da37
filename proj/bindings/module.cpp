#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "residua/io.hpp"
#include "residua/reports.hpp"

namespace py = pybind11;
using namespace residua;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default: return py::none();
  }
}

Mask mask_from_names(const Poset& p, const std::vector<std::string>& names) {
  Mask m = 0;
  for (const auto& name : names) {
    int i = p.index(name);
    if (i < 0) throw Error(ErrorKind::UnknownElementReference, "'" + name + "'");
    m |= bit(i);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_residua, m) {
  m.doc() = "residuation operators M and R on finite bounded posets";

  py::register_exception<Error>(m, "ResiduaError");

  py::class_<StructuredPoset>(m, "Structure")
      .def_property_readonly("name", [](const StructuredPoset& sp) { return sp.name; })
      .def_property_readonly("elements",
                             [](const StructuredPoset& sp) { return sp.poset.elements; })
      .def_property_readonly("size", [](const StructuredPoset& sp) { return sp.poset.size(); })
      .def("leq",
           [](const StructuredPoset& sp, const std::string& a, const std::string& b) {
             int i = sp.poset.index(a), j = sp.poset.index(b);
             if (i < 0 || j < 0)
               throw Error(ErrorKind::UnknownElementReference, "leq arguments");
             return sp.poset.leq(i, j);
           })
      .def("lower_cone",
           [](const StructuredPoset& sp, const std::vector<std::string>& names) {
             return sp.poset.names(sp.poset.lower(mask_from_names(sp.poset, names)));
           })
      .def("upper_cone",
           [](const StructuredPoset& sp, const std::vector<std::string>& names) {
             return sp.poset.names(sp.poset.upper(mask_from_names(sp.poset, names)));
           })
      .def("prime",
           [](const StructuredPoset& sp, const std::string& name) {
             int i = sp.poset.index(name);
             if (i < 0) throw Error(ErrorKind::UnknownElementReference, "'" + name + "'");
             return sp.poset.elements[sp.op(i)];
           })
      .def("prime_set",
           [](const StructuredPoset& sp, const std::vector<std::string>& names) {
             return sp.poset.names(sp.op.image(mask_from_names(sp.poset, names)));
           })
      .def("to_json", [](const StructuredPoset& sp) { return poset_to_json(sp); })
      .def("__repr__", [](const StructuredPoset& sp) {
        return "<Structure '" + sp.name + "' with " + std::to_string(sp.poset.size()) +
               " elements>";
      });

  m.def("load", [](const std::string& path) { return validate(load_poset_file(path)); },
        py::arg("path"), "load a poset from a JSON file");
  m.def("parse", [](const std::string& text) { return validate(parse_poset_json(text)); },
        py::arg("text"), "parse a poset from JSON text");

  m.def(
      "classify",
      [](const StructuredPoset& sp, int threads) {
        return json_to_py(report_classify(sp, threads).body);
      },
      py::arg("structure"), py::arg("threads") = 1);

  m.def(
      "residuate",
      [](const StructuredPoset& sp, const std::string& scheme, int threads) {
        return json_to_py(report_residuate(sp, scheme_from_name(scheme), threads).body);
      },
      py::arg("structure"), py::arg("scheme") = "cone", py::arg("threads") = 1);

  m.def(
      "tables",
      [](const StructuredPoset& sp, const std::string& scheme) {
        return json_to_py(report_tables(sp, scheme_from_name(scheme)).body);
      },
      py::arg("structure"), py::arg("scheme") = "cone");

  m.def(
      "generalized",
      [](const StructuredPoset& sp, const std::string& direction, const std::string& method,
         int pair_cap, int triple_cap, int threads) {
        GeneralizedOptions opt{direction, method, pair_cap, triple_cap};
        return json_to_py(report_generalized(sp, opt, threads).body);
      },
      py::arg("structure"), py::arg("direction") = "both", py::arg("method") = "both",
      py::arg("pair_cap") = kDefaultPairCap, py::arg("triple_cap") = kDefaultTripleCap,
      py::arg("threads") = 1);

  m.def(
      "enumerate_count",
      [](int size, const std::vector<std::string>& require) {
        return count_structured({size, require, true});
      },
      py::arg("size"), py::arg("require") = std::vector<std::string>{});

  m.def(
      "find_counterexample",
      [](const std::string& claim, int max_size,
         const std::vector<StructuredPoset>& fixtures) -> py::object {
        auto hit = find_counterexample(Claim::parse(claim), max_size, fixtures);
        if (!hit) return py::none();
        return py::cast(*hit);
      },
      py::arg("claim"), py::arg("max_size"),
      py::arg("fixtures") = std::vector<StructuredPoset>{});
}
