#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixedwitt/errors.hpp"
#include "mixedwitt/json_io.hpp"

namespace py = pybind11;
using namespace mixedwitt;
using io::json;

namespace {

PyObject* error_type = nullptr;

QuadraticForm form_arg(const NumberField& F, const std::string& text) { return io::form_from_json(F, json(text)); }

MixedElement mixed_arg(const QuaternionAlgebra& A, const std::string& text) {
  return io::mixed_from_json(A, io::parse_json(text));
}

ReferencePolicy references(const QuaternionAlgebra& A, const std::string& spec, std::size_t budget) {
  if (spec.empty()) return {};
  if (spec == "auto") return ReferencePolicy::global(find_reference(A, budget).form);
  if (spec == "local") return ReferencePolicy::local_search(A);
  return ReferencePolicy::single(io::parse_pure_quaternion(A, spec));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signatures, spectra and polarizations of mixed Witt rings of quaternion algebras.";

  error_type = PyErr_NewException("mixedwitt.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(e.what(), std::string(to_string(e.kind())));
      PyErr_SetObject(error_type, args.ptr());
    }
  });

  py::class_<NumberField>(m, "Field")
      .def(py::init([](const std::string& poly) { return NumberField::make(parse_polynomial(poly)); }),
           py::arg("poly") = "t")
      .def_property_readonly("degree", &NumberField::degree)
      .def_property_readonly("polynomial", [](const NumberField& F) { return F.minimal_polynomial().to_string(); })
      .def("orderings",
           [](const NumberField& F) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& P : F.orderings()) out.emplace_back(rational_to_string(P.lo()), rational_to_string(P.hi()));
             return out;
           })
      .def("__repr__", [](const NumberField& F) { return "Field('" + F.minimal_polynomial().to_string() + "')"; });

  py::class_<QuaternionAlgebra>(m, "Algebra")
      .def(py::init([](const NumberField& F, const std::string& a, const std::string& b) {
             return QuaternionAlgebra(FieldElement::parse(F, a), FieldElement::parse(F, b));
           }),
           py::arg("field"), py::arg("a"), py::arg("b"))
      .def_property_readonly("field", &QuaternionAlgebra::field)
      .def_property_readonly("a", [](const QuaternionAlgebra& A) { return A.a().to_string(); })
      .def_property_readonly("b", [](const QuaternionAlgebra& A) { return A.b().to_string(); })
      .def("__repr__", [](const QuaternionAlgebra& A) {
        return "Algebra(" + A.a().to_string() + ", " + A.b().to_string() + ")";
      });

  m.def("signatures",
        [](const NumberField& F, const std::string& form) {
          const QuadraticForm q = form_arg(F, form);
          std::vector<int> out;
          for (const auto& P : F.orderings()) out.push_back(signature(q, P));
          return out;
        },
        py::arg("field"), py::arg("form"));
  m.def("witt_equal",
        [](const std::string& q1, const std::string& q2) {
          const NumberField Q = NumberField::rationals();
          return witt_equal_rational(form_arg(Q, q1), form_arg(Q, q2));
        },
        py::arg("q1"), py::arg("q2"));
  m.def("weakly_equivalent",
        [](const NumberField& F, const std::string& q1, const std::string& q2) {
          return weak_equivalence(form_arg(F, q1), form_arg(F, q2)) == WeakVerdict::EquivalentWeakly;
        },
        py::arg("field"), py::arg("q1"), py::arg("q2"));
  m.def("hilbert_symbol",
        [](const std::string& a, const std::string& b, long p) {
          const Place v = p == 0 ? Place::real() : Place::prime(p);
          const NumberField Q = NumberField::rationals();
          return hilbert_symbol(FieldElement::parse(Q, a).rational_value(), FieldElement::parse(Q, b).rational_value(), v);
        },
        py::arg("a"), py::arg("b"), py::arg("p"));
  m.def("pfister",
        [](const NumberField& F, const std::string& slots) {
          const QuadraticForm q = pfister(F, form_arg(F, slots).entries());
          std::vector<std::string> out;
          for (const auto& e : q.entries()) out.push_back(e.to_string());
          return out;
        },
        py::arg("field"), py::arg("slots"));

  m.def("partition",
        [](const QuaternionAlgebra& A) {
          const OrderingPartition part = partition_orderings(A);
          std::map<std::string, std::vector<std::size_t>> out{{"split", {}}, {"nonsplit", {}}};
          for (const auto& P : part.x_plus) out["split"].push_back(P.index());
          for (const auto& P : part.x_minus) out["nonsplit"].push_back(P.index());
          return out;
        },
        py::arg("algebra"));
  m.def("quat_mul",
        [](const QuaternionAlgebra& A, const std::string& x, const std::string& y) {
          return (io::parse_pure_quaternion(A, x).quaternion() * io::parse_pure_quaternion(A, y).quaternion()).to_string();
        },
        py::arg("algebra"), py::arg("x"), py::arg("y"));
  m.def("symbol_slot",
        [](const QuaternionAlgebra& A, const std::string& z) {
          const PureQuaternion p = io::parse_pure_quaternion(A, z);
          return std::make_pair(pure_square(p).to_string(), symbol_slot(p).to_string());
        },
        py::arg("algebra"), py::arg("z"));

  m.def("_mixed_mul",
        [](const QuaternionAlgebra& A, const std::string& x, const std::string& y) {
          return io::to_json(mixed_mul(mixed_arg(A, x), mixed_arg(A, y))).dump();
        });
  m.def("_rdim2", [](const QuaternionAlgebra& A, const std::string& x) { return rdim2(mixed_arg(A, x)); });
  m.def("_signature_pairs",
        [](const QuaternionAlgebra& A, const std::string& x, const std::string& ref, std::size_t budget) {
          const MixedElement e = mixed_arg(A, x);
          const ReferencePolicy refs = references(A, ref, budget);
          std::vector<std::pair<int, int>> out;
          for (const auto& P : A.field().orderings()) {
            const SignaturePair s = signature_pair(e, P, refs);
            out.emplace_back(s.plus, s.minus);
          }
          return out;
        });
  m.def("_principal_polarization",
        [](const QuaternionAlgebra& A, const std::string& x, const std::string& ref, std::size_t budget) {
          return principal_polarization(mixed_arg(A, x), references(A, ref, budget)).labels();
        });
  m.def("find_reference",
        [](const QuaternionAlgebra& A, std::size_t budget) {
          const ReferenceForm r = find_reference(A, budget);
          std::vector<std::string> out;
          for (const auto& z : r.form.entries()) out.push_back(io::format_pure(z));
          return out;
        },
        py::arg("algebra"), py::arg("budget") = kDefaultReferenceBudget);
  m.def("_spectrum", [](const QuaternionAlgebra& A, const std::vector<long>& primes) {
    std::vector<Integer> ps(primes.begin(), primes.end());
    return io::to_json(spectrum_report(A, ps)).dump();
  });

  m.attr("DEFAULT_BUDGET") = kDefaultReferenceBudget;
}
