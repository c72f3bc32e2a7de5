#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tlg/cli.hpp"
#include "tlg/errors.hpp"
#include "tlg/exactlinalg.hpp"
#include "tlg/lineardata.hpp"
#include "tlg/polyhedra.hpp"

namespace py = pybind11;
using namespace tlg;

namespace {

// Python ints and Fractions cross the boundary through their decimal text.
Int to_int(const py::handle& h) { return Int(py::str(h).cast<std::string>(), 10); }

Rat to_rat(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rat(to_int(h));
  return parse_rat(py::str(h).cast<std::string>());
}

IntMatrix to_matrix(const py::sequence& rows) {
  std::vector<IntVector> out;
  for (auto r : rows) {
    IntVector row;
    for (auto x : r.cast<py::sequence>()) row.push_back(to_int(x));
    out.push_back(std::move(row));
  }
  std::size_t cols = out.empty() ? 0 : out[0].size();
  for (const auto& r : out)
    if (r.size() != cols) throw InputError("ragged matrix");
  return IntMatrix::from_rows(out, cols);
}

RatVector to_rat_vector(const py::sequence& v) {
  RatVector out;
  for (auto x : v) out.push_back(to_rat(x));
  return out;
}

py::int_ py_int(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str(10).c_str(), nullptr, 10));
}

py::object py_rat(const Rat& v) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py_int(v.get_num()), py_int(v.get_den()));
}

py::list py_vector(const IntVector& v) {
  py::list l;
  for (const auto& x : v) l.append(py_int(x));
  return l;
}

py::list py_rat_vector(const RatVector& v) {
  py::list l;
  for (const auto& x : v) l.append(py_rat(x));
  return l;
}

py::list py_matrix(const IntMatrix& m) {
  py::list l;
  for (std::size_t i = 0; i < m.rows(); ++i) l.append(py_vector(m.row(i)));
  return l;
}

Polyhedron to_polyhedron(const py::sequence& normals, const py::sequence& offsets) {
  IntMatrix N = to_matrix(normals);
  RatVector a = to_rat_vector(offsets);
  if (a.size() != N.rows()) throw InputError("one offset per normal is needed");
  return Polyhedron(std::move(N), std::move(a));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact linear algebra, polyhedra and LG duality for toric models";

  auto base = py::register_exception<Error>(m, "TlgError");
  auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<KopaseticError>(m, "KopaseticError", input.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.def("smith_normal_form", [](const py::sequence& C) {
    auto s = smith_normal_form(to_matrix(C));
    py::dict d;
    d["U"] = py_matrix(s.U);
    d["V"] = py_matrix(s.V);
    d["D"] = py_matrix(s.D);
    d["invariant_factors"] = py_vector(s.invariant_factors);
    d["rank"] = s.rank;
    return d;
  }, "U, D, V with U C V = D in Smith form.");

  m.def("hermite_normal_form", [](const py::sequence& C) {
    auto h = hermite_normal_form(to_matrix(C));
    py::dict d;
    d["H"] = py_matrix(h.H);
    d["T"] = py_matrix(h.T);
    d["rank"] = h.rank;
    return d;
  });

  m.def("cokernel", [](const py::sequence& C) {
    auto P = cokernel(to_matrix(C));
    py::dict d;
    d["free_rank"] = P.free_rank;
    d["torsion"] = py_vector(P.torsion);
    d["projection"] = py_matrix(P.projection);
    d["section"] = py_matrix(P.section);
    return d;
  });

  m.def("kernel_basis", [](const py::sequence& C) { return py_matrix(kernel_basis(to_matrix(C))); },
        "Columns spanning the integer kernel.");
  m.def("left_kernel_basis", [](const py::sequence& C) { return py_matrix(left_kernel_basis(to_matrix(C))); });

  m.def("vertices", [](const py::sequence& normals, const py::sequence& offsets) {
    auto V = vertices_and_rays(to_polyhedron(normals, offsets));
    py::dict d;
    py::list pts;
    for (const auto& p : V.generators.points) pts.append(py_rat_vector(p));
    py::list rays;
    for (const auto& r : V.generators.rays) rays.append(py_vector(r));
    d["points"] = pts;
    d["rays"] = rays;
    d["pointed"] = V.pointed;
    return d;
  });

  m.def("facets", [](const py::sequence& normals, const py::sequence& offsets) {
    return facet_rows(to_polyhedron(normals, offsets)).facets;
  });

  m.def("lattice_points", [](const py::sequence& normals, const py::sequence& offsets) {
    py::list l;
    for (const auto& p : lattice_points(to_polyhedron(normals, offsets))) l.append(py_vector(p));
    return l;
  });

  m.def("canonical_form", [](const py::sequence& normals, const py::sequence& offsets) {
    auto F = canonical_form(to_polyhedron(normals, offsets));
    return py::make_tuple(py_matrix(F.normals), py_rat_vector(F.offsets));
  });

  m.def("is_reflexive", [](const py::sequence& normals, const py::sequence& offsets) {
    return is_reflexive(to_polyhedron(normals, offsets));
  });

  m.def("kopasetic_check", [](const py::sequence& C, const py::sequence& alpha) {
    auto r = kopasetic_check(to_matrix(C), to_rat_vector(alpha));
    py::dict d;
    d["verdict"] = r.verdict;
    d["reason"] = to_string(r.reason);
    d["facet_indices"] = r.facet_indices;
    d["facet_matrix"] = py_matrix(r.facet_matrix);
    return d;
  });

  m.def("run_command", [](const std::string& command, const std::string& model_text, const std::string& alpha_prime,
                          const std::string& section, bool numeric, long bound) {
    CommandOptions o{alpha_prime, section, numeric, bound};
    return run_command(command, model_text, o);
  }, py::arg("command"), py::arg("model_text"), py::arg("alpha_prime") = "", py::arg("section") = "",
     py::arg("numeric") = false, py::arg("bound") = -1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    auto r = run_cli(args);
    return py::make_tuple(r.code, r.out, r.err);
  });
}
