#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "molien/cli.hpp"
#include "molien/errors.hpp"
#include "molien/molien.hpp"
#include "molien/oracle.hpp"
#include "molien/partitions.hpp"

namespace py = pybind11;
using namespace molien;

namespace {

py::int_ integer(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(integer(q.get_num()), integer(q.get_den()));
}

// {exponent tuple: Fraction}
py::dict poly_dict(const MultiPoly& p) {
  py::dict out;
  for (const auto& t : p.terms()) out[py::tuple(py::cast(t.exponents))] = fraction(t.coeff);
  return out;
}

py::list factors(const std::vector<BinomialFactor>& den) {
  py::list out;
  for (const auto& f : den) out.append(py::make_tuple(f.var + 1, f.m));
  return out;
}

py::dict series_dict(const RationalSeries& r) {
  py::dict out;
  out["numerator"] = poly_dict(r.numerator);
  out["denominator"] = factors(r.denominator);
  return out;
}

py::list dense_list(const std::vector<dense::Poly>& polys) {
  py::list out;
  for (const auto& p : polys) {
    py::list coeffs;
    for (const auto& c : p) coeffs.append(fraction(c));
    out.append(coeffs);
  }
  return out;
}

Partition partition(const std::vector<int>& parts) { return Partition(parts); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hilbert series of diagonal invariants for G = H x| S_n";

  static py::exception<CapacityError> capacity(m, "CapacityError", PyExc_RuntimeError);
  static py::exception<ConsistencyError> consistency(m, "ConsistencyError",
                                                     PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const CapacityError& e) {
      capacity(e.what());
    } catch (const ConsistencyError& e) {
      consistency(e.what());
    }
  });

  py::class_<GroupSpec>(m, "GroupSpec")
      .def_readonly("modulus", &GroupSpec::modulus)
      .def_readonly("n", &GroupSpec::n)
      .def_readonly("label", &GroupSpec::label)
      .def_property_readonly("family", [](const GroupSpec& g) { return family_name(g.family); })
      .def_property_readonly("order_h", [](const GroupSpec& g) { return integer(g.order_h); })
      .def_property_readonly("order_g", [](const GroupSpec& g) { return integer(g.order_g); })
      .def_property_readonly("elements",
                             [](const GroupSpec& g) {
                               py::list out;
                               for (const auto& e : g.h.elements())
                                 out.append(py::tuple(py::cast(e.components())));
                               return out;
                             })
      .def_property_readonly("orthogonal",
                             [](const GroupSpec& g) {
                               py::list out;
                               const auto perp = orthogonal(g.h);
                               for (const auto& e : perp.elements())
                                 out.append(py::tuple(py::cast(e.components())));
                               return out;
                             })
      .def("__repr__", [](const GroupSpec& g) {
        std::ostringstream s;
        s << "<GroupSpec " << g.label << " N=" << g.modulus << " n=" << g.n
          << " |G|=" << g.order_g.get_str() << ">";
        return s.str();
      });

  m.def("symmetric", [](int n) { return families::symmetric(n); }, py::arg("n"));
  m.def("hyperoctahedral", [](int n) { return families::hyperoctahedral(n); }, py::arg("n"));
  m.def("demihyperoctahedral", [](int n) { return families::demihyperoctahedral(n); },
        py::arg("n"));
  m.def("dihedral", [](int N) { return families::dihedral(N); }, py::arg("N"));
  m.def("g_de_e_n", [](int d, int e, int n) { return families::g_de_e_n(d, e, n); },
        py::arg("d"), py::arg("e"), py::arg("n"));
  m.def("g2_example", [] { return families::g2_example(); });
  m.def("custom",
        [](int N, int n, const std::vector<std::vector<int>>& gens) {
          return families::custom(N, n, gens);
        },
        py::arg("N"), py::arg("n"), py::arg("generators"));

  m.def("partitions_of",
        [](int n) {
          std::vector<std::vector<int>> out;
          for (const auto& p : partitions_of(n)) out.push_back(p.parts());
          return out;
        },
        py::arg("n"));
  m.def("class_size", [](const std::vector<int>& parts) {
    return integer(class_size(partition(parts)));
  });

  m.def("compute_P_alpha",
        [](const GroupSpec& g, const std::vector<int>& alpha, int k) {
          return poly_dict(compute_P_alpha(g, partition(alpha), k));
        },
        py::arg("spec"), py::arg("alpha"), py::arg("k"));
  m.def("compute_R_k",
        [](const GroupSpec& g, int k) { return series_dict(compute_R_k(g, k)); },
        py::arg("spec"), py::arg("k"));
  m.def("compute_Q",
        [](const GroupSpec& g, int k) {
          QResult r = compute_Q(g, k);
          py::dict out = series_dict(r.q);
          out["k"] = r.k;
          out["is_polynomial"] = r.is_polynomial;
          out["rank"] = r.rank ? fraction(*r.rank) : py::object(py::none());
          out["expected_rank"] = integer(r.expected_rank);
          out["is_separable"] =
              r.is_separable ? py::object(py::bool_(*r.is_separable)) : py::object(py::none());
          out["reduced_denominators"] = dense_list(r.reduced_denominators);
          out["text"] = r.is_polynomial ? r.q.numerator.to_string() : r.q.to_string();
          return out;
        },
        py::arg("spec"), py::arg("k"));
  m.def("scaled_limit",
        [](const GroupSpec& g, int k) { return fraction(scaled_limit(g, k)); },
        py::arg("spec"), py::arg("k"));
  m.def("oracle_series",
        [](const GroupSpec& g, int k, std::uint32_t depth) {
          return poly_dict(oracle_series(g, k, depth));
        },
        py::arg("spec"), py::arg("k"), py::arg("depth"));
  m.def("truncated_series",
        [](const GroupSpec& g, int k, std::uint32_t depth) {
          return poly_dict(truncate(compute_R_k(g, k), depth));
        },
        py::arg("spec"), py::arg("k"), py::arg("depth"));
  m.def("invariant_dimension",
        [](const GroupSpec& g, int k, const std::vector<std::uint32_t>& degree) {
          return invariant_dimension(g, k, degree);
        },
        py::arg("spec"), py::arg("k"), py::arg("multidegree"));

  m.def("run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int status = main_entry(args, out, err);
          return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"),
        "Runs the command-line tool; returns (exit status, stdout, stderr).");
}
