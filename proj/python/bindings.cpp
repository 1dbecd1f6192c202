#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "qseries/congruence.hpp"
#include "qseries/identities.hpp"
#include "qseries/json_io.hpp"
#include "qseries/partitions.hpp"
#include "qseries/series.hpp"
#include "qseries/special_functions.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const auto text = py::str(src).cast<std::string>();
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    const std::string text = v.get_str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace qseries;

// Records cross the boundary as plain dicts with the same keys as the CLI's JSON.
template <class T>
py::object to_python(const T& value) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(json(value).dump());
}

template <class T>
py::list to_python_list(const std::vector<T>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_python(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated q-series arithmetic and mod-5 congruences for 2-color partitions";

  py::register_exception<SeriesError>(m, "SeriesError", PyExc_ValueError);
  py::register_exception<OrderTooSmall>(m, "OrderTooSmall", PyExc_ValueError);

  py::class_<CoefficientRing>(m, "CoefficientRing")
      .def_static("exact", &CoefficientRing::exact)
      .def_static("modulo", &CoefficientRing::modulo, py::arg("m"))
      .def_property_readonly("is_exact", &CoefficientRing::is_exact)
      .def_property_readonly("modulus", &CoefficientRing::modulus)
      .def_property_readonly("name", &CoefficientRing::name)
      .def("__eq__", [](const CoefficientRing& a, const CoefficientRing& b) { return a == b; })
      .def("__repr__", [](const CoefficientRing& r) { return "CoefficientRing(" + r.name() + ")"; });

  py::class_<TruncatedSeries>(m, "TruncatedSeries")
      .def(py::init<CoefficientRing, std::vector<BigInt>>(), py::arg("ring"),
           py::arg("coefficients"))
      .def_property_readonly("ring", &TruncatedSeries::ring)
      .def_property_readonly("order", &TruncatedSeries::order)
      .def("coefficients", &TruncatedSeries::coefficients)
      .def("coeff", &TruncatedSeries::coeff, py::arg("exponent"))
      .def("is_zero", &TruncatedSeries::is_zero)
      .def("__add__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; })
      .def("__sub__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; })
      .def("__mul__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; })
      .def("__neg__", [](const TruncatedSeries& a) { return -a; })
      .def("__pow__", [](const TruncatedSeries& a, std::uint64_t e) { return qseries::pow(a, e); })
      .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
      .def("__repr__", [](const TruncatedSeries& s) { return s.to_string(); });

  m.def("make",
        [](CoefficientRing ring, std::size_t order,
           const std::vector<std::pair<std::size_t, BigInt>>& terms) {
          return make(ring, order, std::span<const std::pair<std::size_t, BigInt>>{terms});
        },
        py::arg("ring"), py::arg("order"), py::arg("terms"));
  m.def("invert", &invert);
  m.def("pow", &qseries::pow);
  m.def("scale", &scale);
  m.def("shift", &shift);
  m.def("truncate", &qseries::truncate);
  m.def("substitute_power", &substitute_power, py::arg("a"), py::arg("k"),
        py::arg("order") = py::none());
  m.def("dissect", &dissect, py::arg("a"), py::arg("m"), py::arg("r"));
  m.def("negate_variable", &negate_variable);
  m.def("reduce_mod", &reduce_mod, py::arg("a"), py::arg("m"));
  m.def("equal_to_order",
        [](const TruncatedSeries& a, const TruncatedSeries& b, std::size_t t) {
          const auto c = equal_to_order(a, b, t);
          return std::make_pair(c.equal, c.first_difference);
        },
        py::arg("a"), py::arg("b"), py::arg("t"));

  m.def("pochhammer", &pochhammer, py::arg("k"), py::arg("ring"), py::arg("order"));
  m.def("pochhammer_progression", &pochhammer_progression, py::arg("offset"), py::arg("step"),
        py::arg("ring"), py::arg("order"));
  m.def("theta_f",
        [](std::uint64_t u, std::uint64_t v, CoefficientRing ring, std::size_t order) {
          return theta_f(ThetaSpec{u, v}, ring, order);
        },
        py::arg("u"), py::arg("v"), py::arg("ring"), py::arg("order"));
  m.def("phi", &phi, py::arg("ring"), py::arg("order"));
  m.def("phi_product", &phi_product, py::arg("ring"), py::arg("order"));
  m.def("jacobi_cube", &jacobi_cube, py::arg("ring"), py::arg("order"));

  m.def("partition_table", [](std::size_t max_n) { return partition_table(max_n).values; },
        py::arg("max_n"));
  m.def("two_color_table",
        [](std::uint64_t k, std::size_t max_n) { return two_color_table(k, max_n).values; },
        py::arg("k"), py::arg("max_n"));

  m.def("verify_family",
        [](std::uint64_t k, std::uint64_t bound, std::uint64_t modulus) {
          return to_python(verify_family(k, bound, modulus));
        },
        py::arg("k"), py::arg("bound"), py::arg("modulus") = 5);
  m.def("characterize_all",
        [](std::uint64_t bound, bool parallel) {
          return to_python_list(characterize_all(bound, parallel));
        },
        py::arg("bound"), py::arg("parallel") = false);
  m.def("verify_strong_5ell",
        [](std::uint64_t ell, std::uint64_t bound) {
          return to_python(verify_strong_5ell(ell, bound));
        },
        py::arg("ell"), py::arg("bound"));
  m.def("delta_alpha", &delta_alpha, py::arg("alpha"));
  m.def("verify_chan_toh",
        [](unsigned alpha, std::uint64_t bound) { return to_python(verify_chan_toh(alpha, bound)); },
        py::arg("alpha"), py::arg("bound"));
  m.def("residue_analysis",
        [](std::uint64_t modulus, std::uint64_t target) {
          return to_python(residue_analysis(modulus, target));
        },
        py::arg("modulus") = 5, py::arg("target") = 4);

  m.def("check_beauty_identity", [](std::size_t n) { return to_python(check_beauty_identity(n)); },
        py::arg("order"));
  m.def("check_jacobi", [](std::size_t n) { return to_python(check_jacobi(n)); },
        py::arg("order"));
  m.def("check_phi_product", [](std::size_t n) { return to_python(check_phi_product(n)); },
        py::arg("order"));
  m.def("check_phi_5dissection",
        [](std::size_t n) { return to_python(check_phi_5dissection(n)); }, py::arg("order"));
  m.def("check_phi_f_identity", [](std::size_t n) { return to_python(check_phi_f_identity(n)); },
        py::arg("order"));
  m.def("check_frobenius_congruence",
        [](std::uint64_t k, std::uint64_t p, std::size_t n) {
          return to_python(check_frobenius_congruence(k, p, n));
        },
        py::arg("k"), py::arg("m"), py::arg("order"));
  m.def("replay_k4_proof",
        [](std::size_t order, bool halt_on_failure, bool parallel) {
          ReplayOptions options;
          options.halt_on_failure = halt_on_failure;
          options.parallel = parallel;
          std::vector<ProofStepResult> steps;
          {
            py::gil_scoped_release release;
            steps = replay_k4_proof(order, options);
          }
          return to_python_list(steps);
        },
        py::arg("order"), py::arg("halt_on_failure") = true, py::arg("parallel") = false);
}
