#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "z4kit/codes_db.hpp"
#include "z4kit/designs.hpp"
#include "z4kit/doubling.hpp"
#include "z4kit/error.hpp"
#include "z4kit/extremal.hpp"
#include "z4kit/filter.hpp"
#include "z4kit/gf2.hpp"
#include "z4kit/report_json.hpp"
#include "z4kit/workers.hpp"

namespace py = pybind11;
using namespace z4kit;

namespace {

// Reports cross the boundary as JSON text and come back as plain dicts.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict distribution_dict(const WeightDistribution& w) {
  py::dict d;
  py::object as_int = py::module_::import("builtins").attr("int");
  for (int i = 0; i <= w.n; ++i) {
    if (w.counts[i] != 0) d[py::int_(i)] = as_int(w.counts[i].str());
  }
  return d;
}

WeightDistribution from_dict(const py::dict& d, int n) {
  WeightDistribution w(n);
  for (auto [k, v] : d) {
    const int i = k.cast<int>();
    if (i < 0 || i > n) throw PreconditionError("weight " + std::to_string(i) + " outside 0.." + std::to_string(n));
    w.counts[i] = BigInt(py::str(v).cast<std::string>());
  }
  return w;
}

BinaryCode which_code(const Z4Code& c, const std::string& which) {
  if (which == "residue") return residue_code(c);
  if (which == "torsion") return torsion_code(c);
  throw PreconditionError("which must be 'residue' or 'torsion'");
}

FilterParams params_for(const Z4Code& c, bool generalized) {
  const int n = c.length();
  if (!generalized && (n == 48 || n == 56 || n == 64)) return FilterParams::production(n);
  return FilterParams::generalized(n);
}

}  // namespace

PYBIND11_MODULE(_z4kit, m) {
  m.doc() = "Type II Z4-codes: verification, doubling and candidate filtering";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<GuardError>(m, "GuardError", error.ptr());

  py::class_<Z4Code>(m, "Code")
      .def_property_readonly("n", &Z4Code::length)
      .def_property_readonly("k1", &Z4Code::k1)
      .def_property_readonly("k2", &Z4Code::k2)
      .def_property_readonly("generators",
                             [](const Z4Code& c) {
                               std::vector<std::string> rows;
                               for (const auto& g : c.generators()) rows.push_back(g.digits());
                               return rows;
                             })
      .def("contains", [](const Z4Code& c, const std::string& digits) { return c.contains(Z4Vector::from_digits(digits)); })
      .def("is_self_dual", [](const Z4Code& c) { return is_self_dual(c); })
      .def("is_type_ii", [](const Z4Code& c) { return is_type_ii(c); })
      .def("to_text", [](const Z4Code& c) { return format_z4code(c); })
      .def("__repr__", [](const Z4Code& c) {
        return "<Code n=" + std::to_string(c.length()) + " type 4^" + std::to_string(c.k1()) + " 2^" +
               std::to_string(c.k2()) + ">";
      });

  m.def("parse", [](const std::string& text) { return parse_z4code(text); }, py::arg("text"));
  m.def("load", &load_code, py::arg("where"), "builtin:<name> or a Z4CODE file path");
  m.def("builtin_names", &builtin_names);
  m.def("from_generators", [](int n, const std::vector<std::string>& rows) {
    std::vector<Z4Vector> g;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != n) throw PreconditionError("row length differs from n");
      g.push_back(Z4Vector::from_digits(r));
    }
    return Z4Code::from_generators(n, g);
  }, py::arg("n"), py::arg("rows"));

  m.def("weight_distribution", [](const Z4Code& c, const std::string& which, unsigned workers) {
    WeightDistribution w;
    {
      py::gil_scoped_release release;
      w = weight_distribution(which_code(c, which), std::nullopt, thread_runner(workers)).distribution;
    }
    return distribution_dict(w);
  }, py::arg("code"), py::arg("which") = "residue", py::arg("workers") = 1);

  m.def("macwilliams", [](const py::dict& counts, int n, int k) {
    return distribution_dict(macwilliams_transform(from_dict(counts, n), k));
  }, py::arg("counts"), py::arg("n"), py::arg("k"), "weight distribution of the dual of an [n, k] code");

  m.def("verify_extremal", [](const Z4Code& c, bool generalized, unsigned workers) {
    ExtremalityReport r;
    {
      py::gil_scoped_release release;
      const int n = c.length();
      r = (!generalized && (n == 48 || n == 56 || n == 64)) ? verify_extremal(c, thread_runner(workers))
                                                            : verify_extremal_generalized(c, thread_runner(workers));
    }
    return to_python(to_json(r));
  }, py::arg("code"), py::arg("generalized") = false, py::arg("workers") = 1);

  m.def("min_euclidean_weight", &min_euclidean_weight_bruteforce, py::arg("code"), "full enumeration, small codes");

  m.def("lattice_stats", [](const Z4Code& c) -> py::object {
    auto s = lattice_stats_bruteforce(c);
    if (!s) return py::none();
    return to_python(to_json(*s));
  }, py::arg("code"));

  m.def("double", [](const Z4Code& c, const std::string& set) { return double_code(c, parse_positions(set, c.length())); },
        py::arg("code"), py::arg("set"));

  m.def("check_candidate", [](const Z4Code& c, const std::string& set, bool generalized) {
    return to_python(to_json(check_candidate(c, parse_positions(set, c.length()), params_for(c, generalized))));
  }, py::arg("code"), py::arg("set"), py::arg("generalized") = false);

  m.def("random_search", [](const Z4Code& c, std::uint64_t seed, std::uint64_t attempts, int min_size, int max_size,
                            bool generalized, unsigned workers) {
    SearchResult r;
    {
      py::gil_scoped_release release;
      const CandidateFilter f(c, params_for(c, generalized), thread_runner(workers));
      SearchOptions s;
      s.seed = seed;
      s.attempts = attempts;
      s.min_size = min_size;
      s.max_size = max_size;
      r = random_candidate_search(f, s, thread_runner(workers));
    }
    return to_python(to_json(r));
  }, py::arg("code"), py::arg("seed"), py::arg("attempts"), py::arg("min_size"), py::arg("max_size"),
     py::arg("generalized") = false, py::arg("workers") = 1);

  m.def("design", [](const Z4Code& c, const std::string& which, int weight) {
    Design d;
    {
      py::gil_scoped_release release;
      const auto b = which_code(c, which);
      d = analyze_design(supports_of_weight(b, weight), c.length());
    }
    return to_python(to_json(d));
  }, py::arg("code"), py::arg("which"), py::arg("weight"));
}
