// Python bindings for the core operations: parsing and group arithmetic,
// decomposition certificates, the exact oracle, and the class-metric bounds.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <string>

#include "altwidth/constructions.hpp"
#include "altwidth/error.hpp"
#include "altwidth/metrics.hpp"
#include "altwidth/oracle.hpp"
#include "altwidth/permutation.hpp"

namespace py = pybind11;
using namespace altwidth;

namespace {

const char* reason_name(UnreachableReason r) {
  switch (r) {
    case UnreachableReason::parity: return "parity";
    case UnreachableReason::depth_limit: return "depth_limit";
    case UnreachableReason::exhausted: return "exhausted";
  }
  return "?";
}

UniverseSpec resolve(const Permutation& g, const Permutation& h,
                     std::uint32_t n, std::uint32_t max_depth) {
  UniverseSpec u = n == 0 ? default_universe(g, h) : UniverseSpec{n, 12};
  u.max_depth = max_depth;
  return u;
}

py::dict interval_dict(const BoundsInterval& b) {
  py::dict d;
  d["lower"] = b.lower.to_string();
  d["upper"] = b.upper.to_string();
  d["source"] =
      b.upper_source == UpperSource::certificate ? "certificate" : "formula";
  return d;
}

}  // namespace

PYBIND11_MODULE(_altwidth, m) {
  m.doc() =
      "Bounded conjugation-width decompositions for finite-support even "
      "permutations, with an exact small-universe oracle and class metrics.";

  auto base = py::register_exception<Error>(m, "AltWidthError");
  py::register_exception<ParityObstructionError>(m, "ParityObstructionError",
                                                 base);
  py::register_exception<UnreachableError>(m, "UnreachableError", base);
  py::register_exception<UniverseTooSmallError>(m, "UniverseTooSmallError",
                                                base);

  py::class_<CycleType>(m, "CycleType")
      .def(py::init<>())
      .def(py::init<std::vector<std::uint32_t>>(), py::arg("lengths"))
      .def_static("from_string", &CycleType::from_string, py::arg("text"))
      .def_property_readonly("lengths",
                             [](const CycleType& t) { return t.lengths(); })
      .def("is_identity", &CycleType::is_identity)
      .def("word_length", &CycleType::word_length)
      .def("degree", &CycleType::degree)
      .def("__str__", &CycleType::to_string)
      .def("__repr__",
           [](const CycleType& t) { return "CycleType(" + t.to_string() + ")"; })
      .def("__eq__",
           [](const CycleType& a, const CycleType& b) { return a == b; })
      .def("__lt__", [](const CycleType& a, const CycleType& b) { return a < b; })
      .def("__hash__", [](const CycleType& t) {
        return std::hash<std::string>{}(t.to_string());
      });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<>())
      .def_static(
          "parse",
          [](const std::string& text) { return parse_cycles(text); },
          py::arg("text"),
          "Parse cycle notation, e.g. \"(1 2 3)(4 5)\"; \"()\" is the "
          "identity.")
      .def("apply", &Permutation::apply, py::arg("x"))
      .def("__call__", &Permutation::apply, py::arg("x"))
      .def("__mul__",
           [](const Permutation& a, const Permutation& b) {
             return compose(a, b);
           })
      .def("inverse", [](const Permutation& p) { return inverse(p); })
      .def(
          "conjugate_by",
          [](const Permutation& p, const Permutation& c) {
            return conjugate(p, c);
          },
          py::arg("c"), "c * self * c^-1")
      .def("is_identity", &Permutation::is_identity)
      .def_property_readonly("support",
                             [](const Permutation& p) { return p.support(); })
      .def("max_support", &Permutation::max_support)
      .def("word_length",
           [](const Permutation& p) { return word_length(p); })
      .def("parity",
           [](const Permutation& p) {
             return parity(p) == Parity::even ? "even" : "odd";
           })
      .def("cycle_type", [](const Permutation& p) { return cycle_type(p); })
      .def("__str__", [](const Permutation& p) { return format_cycles(p); })
      .def("__repr__",
           [](const Permutation& p) {
             return "Permutation.parse(\"" + format_cycles(p) + "\")";
           })
      .def("__eq__",
           [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) {
        return std::hash<std::string>{}(format_cycles(p));
      });

  m.def("iota", &iota, py::arg("k"),
        "(1 2)(3 4)...(2k-1 2k): k disjoint transpositions, word length k.");
  m.def("compose", &compose, py::arg("left"), py::arg("right"),
        "x -> left(right(x)): the right factor acts first.");
  m.def("conjugate", &conjugate, py::arg("p"), py::arg("c"));
  m.def("canonical_representative", &canonical_representative, py::arg("type"),
        "Smallest-point representative of the class: cycles packed onto "
        "1..degree, longest first.");

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("target", &Certificate::target)
      .def_readonly("base_type", &Certificate::base_type)
      .def_readonly("factors", &Certificate::factors)
      .def("to_json",
           [](const Certificate& c) { return certificate_to_json(c).dump(2); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return certificate_from_json(nlohmann::json::parse(text));
                  },
                  py::arg("text"))
      .def("__repr__", [](const Certificate& c) {
        return "<Certificate: " + std::to_string(c.factors.size()) +
               " factors of class " + c.base_type.to_string() + ">";
      });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("product_ok", &VerificationReport::product_ok)
      .def_readonly("types_ok", &VerificationReport::types_ok)
      .def_readonly("factor_count", &VerificationReport::factor_count)
      .def_readonly("has_bound", &VerificationReport::has_bound)
      .def_property_readonly(
          "bound",
          [](const VerificationReport& r) { return r.bound.to_string(); })
      .def_readonly("within_bound", &VerificationReport::within_bound)
      .def_readonly("passed", &VerificationReport::pass)
      .def("__bool__", [](const VerificationReport& r) { return r.pass; });

  m.def("decompose", &decompose, py::arg("g"), py::arg("h"),
        "Write even g as a product of at most 4*wl(g)/wl(h) + 4 conjugates "
        "of h.");
  m.def("verify_certificate", &verify_certificate, py::arg("certificate"));

  py::class_<ExactLambda>(m, "ExactLambda")
      .def_readonly("value", &ExactLambda::value)
      .def_property_readonly(
          "reason",
          [](const ExactLambda& e) { return std::string(reason_name(e.reason)); })
      .def_readonly("stabilized", &ExactLambda::stabilized)
      .def_readonly("witness", &ExactLambda::witness)
      .def_property_readonly("universe",
                             [](const ExactLambda& e) {
                               return py::make_tuple(e.universe.n,
                                                     e.universe.max_depth);
                             })
      .def("reachable", &ExactLambda::reachable)
      .def("__repr__", [](const ExactLambda& e) {
        return e.value ? "<ExactLambda value=" + std::to_string(*e.value) + ">"
                       : std::string("<ExactLambda unreachable (") +
                             reason_name(e.reason) + ")>";
      });

  m.def(
      "exact_lambda",
      [](const Permutation& g, const Permutation& h, std::uint32_t universe,
         std::uint32_t max_depth) {
        return exact_lambda(g, h, resolve(g, h, universe, max_depth));
      },
      py::arg("g"), py::arg("h"), py::arg("universe") = 0,
      py::arg("max_depth") = 12,
      "Exact minimum number of class members of h multiplying to g inside "
      "{1..universe}; universe 0 picks a default from the supports.");
  m.def(
      "exact_d",
      [](const Permutation& g, const Permutation& h, std::uint32_t universe,
         std::uint32_t max_depth) {
        return exact_d(g, h, resolve(g, h, universe, max_depth));
      },
      py::arg("g"), py::arg("h"), py::arg("universe") = 0,
      py::arg("max_depth") = 12);
  m.def(
      "class_size",
      [](const CycleType& t, std::uint32_t n) { return class_size(t, n); },
      py::arg("type"), py::arg("n"));
  m.def(
      "class_members",
      [](const CycleType& t, std::uint32_t n) {
        return class_members(t, UniverseSpec{n, 12});
      },
      py::arg("type"), py::arg("n"));

  m.def(
      "psi",
      [](const CycleType& t) { return psi(ClassId(t)); }, py::arg("type"),
      "log word_length: embedding of nontrivial even classes onto the "
      "half-line.");
  m.def(
      "d_bounds",
      [](const CycleType& gt, const CycleType& ht) {
        const DBounds b = d_bounds(ClassId(gt), ClassId(ht));
        py::dict d;
        d["g_from_h"] = interval_dict(b.g_from_h);
        d["h_from_g"] = interval_dict(b.h_from_g);
        d["d_lower"] = b.d_lower;
        d["d_upper"] = b.d_upper;
        return d;
      },
      py::arg("class_g"), py::arg("class_h"),
      "Certified interval around the biinvariant class distance d = log max "
      "of the two directed widths.");
}
