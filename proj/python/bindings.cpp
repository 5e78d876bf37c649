#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrpair/arrangement.hpp"
#include "arrpair/definiteness.hpp"
#include "arrpair/errors.hpp"
#include "arrpair/io.hpp"
#include "arrpair/matroid_nerve.hpp"
#include "arrpair/pairing.hpp"

namespace py = pybind11;
using namespace arrpair;

namespace {

// Rationals cross the boundary as strings; the Python wrapper turns them
// into fractions.Fraction.
using StrVector = std::vector<std::string>;
using StrMatrix = std::vector<StrVector>;

QVector to_qvector(const StrVector& v) {
  QVector out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

StrVector to_strings(const QVector& v) {
  StrVector out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

QMatrix to_qmatrix(const StrMatrix& rows) {
  std::vector<QVector> q;
  for (const auto& r : rows) q.push_back(to_qvector(r));
  return QMatrix::from_rows(q);
}

RegionOrder parse_order(const std::string& order) {
  if (order == "lex") return RegionOrder::Lex;
  if (order == "input") return RegionOrder::Input;
  throw ParseError("order must be \"lex\" or \"input\"");
}

std::vector<std::vector<std::size_t>> one_based(const SimplicialComplex& K) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : K.all_faces()) {
    auto idx = s.indices;
    for (auto& i : idx) ++i;
    out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact intersection pairings of bounded regions of rational hyperplane arrangements.";

  // Translators run in reverse registration order, so the subclass wins.
  const auto& base = py::register_exception<Error>(m, "ArrpairError", PyExc_ValueError);
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", base);

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init([](std::size_t ambient_dim, const std::vector<std::pair<StrVector, std::string>>& hyperplanes) {
             std::vector<Hyperplane> hs;
             for (const auto& [normal, offset] : hyperplanes) hs.push_back({to_qvector(normal), parse_rational(offset)});
             return Arrangement(ambient_dim, std::move(hs));
           }),
           py::arg("ambient_dim"), py::arg("hyperplanes"))
      .def_static("from_json", [](const std::string& text) { return parse_arrangement(text); })
      .def_static("load", [](const std::string& path) { return load_arrangement(path); })
      .def("to_json", &serialize_arrangement)
      .def_property_readonly("ambient_dim", &Arrangement::ambient_dim)
      .def("__len__", &Arrangement::size)
      .def("hyperplane", [](const Arrangement& a, std::size_t i) {
        const auto& h = a.hyperplane(i);
        return std::make_pair(to_strings(h.normal), to_string(h.offset));
      })
      .def(py::self == py::self);

  m.def(
      "regions",
      [](const Arrangement& arr, const std::string& order) {
        const auto bc = bounded_complex(arr, parse_order(order));
        std::vector<std::pair<std::string, std::vector<StrVector>>> out;
        for (const auto& r : bc.regions) {
          std::vector<StrVector> vs;
          for (auto id : r.face.vertex_ids) vs.push_back(to_strings(bc.vertices[id].point));
          out.emplace_back(to_string(r.face.signs), std::move(vs));
        }
        return out;
      },
      py::arg("arr"), py::arg("order") = "lex");
  m.def(
      "face_counts",
      [](const Arrangement& arr) {
        const auto bc = bounded_complex(arr);
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k <= arr.ambient_dim(); ++k) out.push_back(bc.face_count(k));
        return out;
      },
      py::arg("arr"));
  m.def(
      "phi_matrix", [](const Arrangement& arr, const std::string& order) {
        return phi_matrix(bounded_complex(arr, parse_order(order)));
      },
      py::arg("arr"), py::arg("order") = "lex");
  m.def(
      "gram_matrix",
      [](const Arrangement& arr, const std::string& order) {
        return gram_matrix(arr, bounded_complex(arr, parse_order(order)));
      },
      py::arg("arr"), py::arg("order") = "lex");
  m.def(
      "psi",
      [](const Arrangement& arr, const std::string& order) {
        const auto bc = bounded_complex(arr, parse_order(order));
        std::vector<std::vector<std::pair<std::vector<std::size_t>, std::string>>> out;
        for (std::size_t i = 0; i < bc.regions.size(); ++i) {
          auto& terms = out.emplace_back();
          const PsiChain chain = psi(arr, bc, i);
          for (const auto& [s, c] : chain.chain.terms()) {
            auto idx = s.indices;
            for (auto& j : idx) ++j;
            terms.emplace_back(std::move(idx), to_string(c));
          }
        }
        return out;
      },
      py::arg("arr"), py::arg("order") = "lex");
  m.def(
      "verify_json", [](const Arrangement& arr, const std::string& order) {
        return report_to_json(verify(arr, parse_order(order))).dump();
      },
      py::arg("arr"), py::arg("order") = "lex");
  m.def(
      "definiteness_json", [](const StrMatrix& S) { return certificate_to_json(definiteness(to_qmatrix(S))).dump(); },
      py::arg("matrix"));
  m.def(
      "gale",
      [](const StrMatrix& A, const std::optional<StrVector>& theta, const std::optional<StrVector>& lift) {
        const QMatrix a = to_qmatrix(A);
        if (lift) {
          const QVector p = to_qvector(*lift);
          if (theta && a * p != to_qvector(*theta)) throw InconsistentSystem("gale: A psi != theta");
          return gale_arrangement_from_lift(a, p);
        }
        if (!theta) throw PreconditionError("gale: theta or psi is required");
        return gale_arrangement(a, to_qvector(*theta));
      },
      py::arg("A"), py::arg("theta") = std::nullopt, py::arg("psi") = std::nullopt);
  m.def("independence_complex", [](const Arrangement& arr) { return one_based(independence_complex(arr)); });
  m.def("nerve_complex", [](const Arrangement& arr) { return one_based(nerve_complex(arr)); });
  m.def("reduced_homology", [](const Arrangement& arr) { return reduced_homology_ranks(independence_complex(arr)); });
  m.def("is_simple", [](const Arrangement& arr) { return is_simple(arr); });
  m.def("is_coloop_free", &is_coloop_free);
  m.def("euler_characteristic", [](const Arrangement& arr) { return bounded_complex(arr).euler_characteristic(); });
}
