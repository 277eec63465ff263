#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cuspkit/affine.hpp"
#include "cuspkit/cli.hpp"
#include "cuspkit/errors.hpp"
#include "cuspkit/gbasis.hpp"
#include "cuspkit/invariants.hpp"
#include "cuspkit/qdata.hpp"
#include "cuspkit/verify.hpp"

namespace py = pybind11;
using namespace cuspkit;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
std::string dump(const nlohmann::json& j) { return j.dump(); }

std::vector<std::vector<int>> coords(const std::vector<RootVec>& roots) {
  std::vector<std::vector<int>> out;
  for (const RootVec& r : roots) out.push_back(r.coords);
  return out;
}

ReducedWord word_or_first(const RootSystem& rs, const std::vector<int>& letters) {
  if (letters.empty()) return enumerate_reduced_words(rs, 1).words.front();
  ReducedWord w;
  w.letters = letters;
  return w;
}

class PyGlobalBasis {
 public:
  PyGlobalBasis(const std::string& type, const std::vector<int>& word, int height_bound)
      : rs_(build_root_system(parse_cartan(type))), gb_(rs_, word_or_first(rs_, word), height_bound) {}

  std::vector<int> word() const { return gb_.pbw().word().letters; }
  std::vector<std::vector<int>> betas() const { return coords(gb_.pbw().sequence().betas); }
  std::string weight_space(const std::vector<int>& mu) const { return dump(gb_.weight_space_json(RootVec(mu))); }
  std::string element(const std::vector<int>& a) const { return dump(gb_.element(PbwExponent(a)).value.to_json()); }
  std::string pbw_monomial(const std::vector<int>& a) const {
    return dump(gb_.pbw().dual_pbw_monomial(PbwExponent(a)).value.to_json());
  }
  std::map<std::string, std::string> expand(const std::string& element_json) const {
    std::map<std::string, std::string> out;
    for (const auto& [a, c] : gb_.expand(ShuffleElt::from_json(nlohmann::json::parse(element_json))))
      out[a.to_string()] = c.to_string();
    return out;
  }
  std::vector<int> label_of(const std::string& element_json) const {
    return gb_.cuspidal_decomposition_window(ShuffleElt::from_json(nlohmann::json::parse(element_json))).a;
  }
  std::string invariants(const std::vector<int>& x, const std::vector<int>& y) const {
    return dump(pair_invariants(gb_, PbwExponent(x), PbwExponent(y)).to_json());
  }

 private:
  RootSystem rs_;
  GlobalBasis gb_;
};

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cuspkit"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_cuspkit, m) {
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<InvariantViolation> violation(m, "InvariantViolation", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvariantViolation& e) {
      py::set_error(violation, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("run", &run, py::arg("args"), "Run the command line tool in-process; returns (exit code, stdout, stderr).");
  m.def("positive_roots", [](const std::string& type) { return coords(build_root_system(parse_cartan(type)).positive_roots()); });
  m.def(
      "reduced_words",
      [](const std::string& type, std::size_t cap) {
        std::vector<std::vector<int>> out;
        for (const ReducedWord& w : enumerate_reduced_words(build_root_system(parse_cartan(type)), cap).words) out.push_back(w.letters);
        return out;
      },
      py::arg("type"), py::arg("cap") = 10000);
  m.def("beta_sequence", [](const std::string& type, const std::vector<int>& word) {
    RootSystem rs = build_root_system(parse_cartan(type));
    return coords(beta_sequence(rs, word_or_first(rs, word)).betas);
  });
  m.def("shuffle", [](const std::string& type, const std::string& x, const std::string& y) {
    return dump(shuffle_mul(parse_cartan(type), ShuffleElt::from_json(nlohmann::json::parse(x)),
                            ShuffleElt::from_json(nlohmann::json::parse(y)))
                    .to_json());
  });
  m.def(
      "ar_quiver",
      [](const std::string& type, const std::string& quiver, int base) {
        CartanDatum c = parse_cartan(type);
        return dump(ar_quiver(QData::with_base(c, DynkinQuiver::parse(c, quiver), base), build_root_system(c)).to_json());
      },
      py::arg("type"), py::arg("quiver"), py::arg("base") = 0);
  m.def("adapted_word", [](const std::string& type, const std::string& quiver) {
    CartanDatum c = parse_cartan(type);
    return adapted_word(build_root_system(c), DynkinQuiver::parse(c, quiver)).letters;
  });
  m.def(
      "cuspidal_line",
      [](const std::string& type, const std::string& quiver, int kmin, int kmax, int base) {
        CartanDatum c = parse_cartan(type);
        RootSystem rs = build_root_system(c);
        DynkinQuiver q = DynkinQuiver::parse(c, quiver);
        return dump(cuspidal_line(QData::with_base(c, q, base), rs, adapted_word(rs, q), kmin, kmax).to_json());
      },
      py::arg("type"), py::arg("quiver"), py::arg("kmin"), py::arg("kmax"), py::arg("base") = 0);
  m.def("bilex_compare", [](const std::string& a, const std::string& b) {
    return std::string(ordering_name(bilex_compare(CuspParam::parse(a), CuspParam::parse(b))));
  });

  py::class_<PyGlobalBasis>(m, "GlobalBasis")
      .def(py::init<const std::string&, const std::vector<int>&, int>(), py::arg("type"),
           py::arg("word") = std::vector<int>{}, py::arg("height_bound") = 6)
      .def_property_readonly("word", &PyGlobalBasis::word)
      .def_property_readonly("betas", &PyGlobalBasis::betas)
      .def("_weight_space", &PyGlobalBasis::weight_space)
      .def("_element", &PyGlobalBasis::element)
      .def("_pbw_monomial", &PyGlobalBasis::pbw_monomial)
      .def("_expand", &PyGlobalBasis::expand)
      .def("_label_of", &PyGlobalBasis::label_of)
      .def("_invariants", &PyGlobalBasis::invariants);
}
