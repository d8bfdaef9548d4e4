// Python bindings. Rationals cross the boundary as fractions.Fraction and
// integers as Python ints, so nothing is rounded.

#include "toric_ic/cli.hpp"
#include "toric_ic/error.hpp"
#include "toric_ic/hypersurface.hpp"
#include "toric_ic/ic_stalks.hpp"
#include "toric_ic/io.hpp"
#include "toric_ic/lattice_count.hpp"
#include "toric_ic/prime_cut.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <sstream>

namespace py = pybind11;
using namespace toric;

namespace {

py::object fraction_type() {
    static py::object t = py::module_::import("fractions").attr("Fraction");
    return t;
}

py::object to_py(const Integer& x) { return py::int_(py::str(to_string(x))); }

py::object to_py(const Rat& x) {
    return fraction_type()(to_py(Integer(numerator(x))), to_py(Integer(denominator(x))));
}

template <class T>
py::list to_py_list(const std::vector<T>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const TatePoly& p) { return to_py_list(p.coeffs()); }

py::dict to_py(const EPoly2& e) {
    py::dict out;
    for (const auto& [pq, c] : e.terms()) out[py::make_tuple(pq.first, pq.second)] = to_py(c);
    return out;
}

Rat rat_from(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) throw py::type_error("floats are not exact; use int, Fraction or str");
    return parse_rat(py::str(h).cast<std::string>());
}

Integer int_from(const py::handle& h) {
    if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
    return parse_integer(py::str(h).cast<std::string>());
}

RatVector rat_vector(const py::handle& seq) {
    RatVector out;
    for (auto x : seq) out.push_back(rat_from(x));
    return out;
}

LatticeVector lattice_vector(const py::handle& seq) {
    LatticeVector out;
    for (auto x : seq) out.push_back(int_from(x));
    return out;
}

int dim_of(const py::sequence& rows, int extra) {
    if (py::len(rows) == 0) throw py::value_error("need at least one row");
    return static_cast<int>(py::len(rows[0])) - extra;
}

// A polytope with its face lattice built on first use.
class PyPolytope {
public:
    explicit PyPolytope(Polytope p) : p_(std::move(p)) {}

    const Polytope& get() const { return p_; }
    const FaceLattice& lattice() const {
        if (!lattice_) lattice_ = std::make_shared<FaceLattice>(p_);
        return *lattice_;
    }

private:
    Polytope p_;
    mutable std::shared_ptr<FaceLattice> lattice_;
};

PyPolytope from_vertices(const py::sequence& vertices, const py::sequence& rays) {
    VRep v{dim_of(vertices, 0), {}, {}};
    for (auto x : vertices) v.vertices.push_back(rat_vector(x));
    for (auto r : rays) v.rays.push_back(lattice_vector(r));
    return PyPolytope(Polytope::from_vrep(v));
}

PyPolytope from_inequalities(const py::sequence& rows) {
    const int n = dim_of(rows, 1);
    HRep h{n, {}};
    for (auto row : rows) {
        RatVector r = rat_vector(row);
        if (static_cast<int>(r.size()) != n + 1) throw py::value_error("rows must have equal length");
        const Rat b = r.back();
        r.pop_back();
        h.rows.push_back({std::move(r), b});
    }
    return PyPolytope(Polytope::from_hrep(h));
}

py::dict face_dict(const Face& f) {
    py::dict d;
    d["id"] = f.id;
    d["dim"] = f.dim;
    d["codim"] = f.codim;
    d["vertices"] = f.vertex_ids;
    d["rays"] = f.ray_ids;
    d["facets"] = f.active_set;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Intersection cohomology and Hodge numbers from toric combinatorics";

    // Kept alive for the interpreter's lifetime, like any module-level type.
    static PyObject* toric_error = py::exception<Error>(m, "ToricError", PyExc_ValueError).release().ptr();
    py::register_exception_translator([](std::exception_ptr ep) {
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const Error& e) {
            py::object err = py::reinterpret_borrow<py::object>(toric_error)(e.what());
            std::string code = errc_name(e.code());
            std::replace(code.begin(), code.end(), ' ', '_');
            err.attr("code") = code;
            PyErr_SetObject(toric_error, err.ptr());
        }
    });

    py::class_<PyPolytope>(m, "Polytope")
        .def_static("from_vertices", &from_vertices, py::arg("vertices"), py::arg("rays") = py::list(),
                    "Convex hull of the vertices plus the cone over the integer rays.")
        .def_static("from_inequalities", &from_inequalities, py::arg("rows"),
                    "Rows (a_1, ..., a_n, b) meaning a.x >= b.")
        .def_static(
            "from_file", [](const std::string& path) { return PyPolytope(to_polytope(parse_input(path))); },
            py::arg("path"))
        .def_property_readonly("ambient_dim", [](const PyPolytope& p) { return p.get().ambient_dim(); })
        .def_property_readonly("is_compact", [](const PyPolytope& p) { return p.get().is_compact(); })
        .def_property_readonly("vertices",
                               [](const PyPolytope& p) {
                                   py::list out;
                                   for (const auto& v : p.get().vertices()) out.append(to_py_list(v));
                                   return out;
                               })
        .def_property_readonly("rays",
                               [](const PyPolytope& p) {
                                   py::list out;
                                   for (const auto& r : p.get().rays()) out.append(to_py_list(r));
                                   return out;
                               })
        .def_property_readonly("facets",
                               [](const PyPolytope& p) {
                                   py::list out;
                                   for (const auto& f : p.get().facets())
                                       out.append(py::make_tuple(to_py_list(f.normal), to_py(f.offset)));
                                   return out;
                               })
        .def("f_vector", [](const PyPolytope& p) { return to_py_list(p.lattice().f_vector()); })
        .def("faces",
             [](const PyPolytope& p) {
                 py::list out;
                 for (const auto& f : p.lattice().faces()) out.append(face_dict(f));
                 return out;
             })
        .def("is_prime", [](const PyPolytope& p) { return is_prime(p.get(), p.lattice()); })
        .def("transform",
             [](const PyPolytope& p, const std::vector<std::vector<long>>& u) {
                 IntMatrix mat;
                 for (const auto& row : u) {
                     LatticeVector r;
                     for (long x : row) r.emplace_back(x);
                     mat.push_back(std::move(r));
                 }
                 return PyPolytope(unimodular_image(p.get(), mat));
             },
             py::arg("matrix"), "Image under a unimodular integer matrix.")
        .def("__repr__", [](const PyPolytope& p) {
            std::ostringstream s;
            s << "<Polytope dim=" << p.get().ambient_dim() << " vertices=" << p.get().vertices().size()
              << " rays=" << p.get().rays().size() << " facets=" << p.get().facets().size() << ">";
            return s.str();
        });

    m.def("local_ic_polynomials", [](const PyPolytope& p) {
        py::list out;
        for (const auto& x : local_ic_polynomials(p.lattice())) out.append(to_py(x));
        return out;
    }, "Stalk polynomial coefficients for every face, indexed by face id.");
    m.def("global_ih_class", [](const PyPolytope& p) { return to_py(global_ih_class(p.lattice())); });
    m.def("ih_betti_numbers", [](const PyPolytope& p) { return to_py_list(ih_betti_numbers(p.lattice())); });
    m.def("punctured_cone_classes", [](const PyPolytope& p) {
        const auto c = punctured_cone_classes(p.lattice());
        return py::make_tuple(to_py(c.ih), to_py(c.ihc));
    }, "(ih, ihc) of the cone minus its apex.");
    m.def("decomposition_summands", [](const PyPolytope& p) {
        py::list out;
        for (const auto& e : decomposition_summands(p.lattice()))
            out.append(py::make_tuple(e.degree, to_py(e.rank), e.twist));
        return out;
    }, "(degree, rank, twist) of each point-supported summand.");

    m.def("count_lattice_points", [](const PyPolytope& p) { return to_py(count_lattice_points(p.get())); });
    m.def("count_interior_lattice_points",
          [](const PyPolytope& p) { return to_py(count_interior_lattice_points(p.get())); });
    m.def("skeleton_count", [](const PyPolytope& p) { return to_py(skeleton_count(p.get(), p.lattice())); });
    m.def("ehrhart_polynomial", [](const PyPolytope& p) { return to_py_list(ehrhart_polynomial(p.get()).coeffs()); },
          "Coefficients in ascending powers of k.");

    m.def("geometric_genus", [](const PyPolytope& p) { return to_py(geometric_genus_count(p.get())); });
    m.def("frontier_hodge", [](const PyPolytope& p) {
        py::dict out;
        for (const auto& [q, v] : frontier_hodge(p.get(), p.lattice())) out[py::int_(q)] = to_py(v);
        return out;
    });
    m.def("high_weight_table", [](int n) {
        py::list out;
        for (const auto& e : high_weight_table(n)) out.append(py::make_tuple(e.j, e.p, e.q, to_py(e.value)));
        return out;
    }, py::arg("n"), "(j, p, q, value) entries.");
    m.def("curve_e_polynomial",
          [](const PyPolytope& p, int components) { return to_py(curve_e_polynomial(p.get(), p.lattice(), components)); },
          py::arg("polytope"), py::arg("components") = 1, "{(p, q): coefficient}.");

    m.def("prime_cut", [](const PyPolytope& p, const py::object& epsilon) {
        const auto spec = choose_cut_functionals(p.get(), p.lattice());
        auto r = prime_cut(p.get(), p.lattice(), spec, rat_from(epsilon));
        py::dict out;
        out["epsilon"] = to_py(r.epsilon);
        out["rounds"] = r.rounds;
        out["face_map"] = r.face_map;
        out["multipliers"] = [&] {
            py::list l;
            for (const auto& e : prime_cut_multipliers(r.face_map, p.lattice(), r.lattice)) l.append(to_py(e));
            return l;
        }();
        out["cut"] = PyPolytope(std::move(r.cut));
        return out;
    }, py::arg("polytope"), py::arg("epsilon") = "1/4");

    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line tool; returns (exit code, stdout, stderr).");
}
