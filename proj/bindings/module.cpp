// Python bindings for the main operations: member arithmetic, the slope
// resultant, lattice verification, the disk logarithm, and the sweeps.
#include "hyperflex/bitangent.hpp"
#include "hyperflex/e6.hpp"
#include "hyperflex/family.hpp"
#include "hyperflex/padic.hpp"
#include "hyperflex/stats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hfx;

namespace {

Int to_int(py::handle h) { return Int(py::str(h).cast<std::string>()); }

py::object to_pyint(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_fraction(const Rat& r) {
  return py::module_::import("fractions").attr("Fraction")(r.get_str());
}

Rat to_rat(py::handle h) {
  Rat r(py::str(h).cast<std::string>());
  r.canonicalize();
  return r;
}

FamilyPoint to_member(py::sequence seq) {
  if (seq.size() != 6) throw std::invalid_argument("member needs 6 coordinates");
  FamilyPoint b;
  for (int i = 0; i < 6; ++i) b[i] = to_int(seq[i]);
  return b;
}

py::list series_coeffs(const Series& s) {
  py::list out;
  for (long i = 0; i < s.N; ++i) out.append(to_fraction(s.c[i]));
  return out;
}

}  // namespace

PYBIND11_MODULE(_hyperflex, m) {
  m.doc() = "exact arithmetic for a family of plane quartics with a marked hyperflex";

  m.def("discriminant",
        [](py::sequence b) { return to_pyint(discriminant(to_member(b))); },
        py::arg("b"), "normalized discriminant; vanishes exactly on singular members");

  m.def("is_smooth",
        [](py::sequence b, py::object p) {
          FamilyPoint pt = to_member(b);
          if (p.is_none()) return is_smooth_q(pt);
          FqField K(p.cast<long>());
          return is_smooth_fq(K, pt);
        },
        py::arg("b"), py::arg("p") = py::none(),
        "smoothness over Q (p=None) or of the reduction mod a prime p");

  m.def("point_count",
        [](py::sequence b, long p) {
          FqField K(p);
          return point_count(K, to_member(b));
        },
        py::arg("b"), py::arg("p"), "projective point count over F_p");

  m.def("height_less_than",
        [](py::sequence b, py::object a) { return height_less_than(to_member(b), to_int(a)); },
        py::arg("b"), py::arg("a"));

  m.def("box_count", [](py::object a) { return to_pyint(box_count(to_int(a))); },
        py::arg("a"), "cardinality of the height-< a coefficient box");

  m.def("enumerate_count",
        [](py::object a, bool minimal) {
          return enumerate_family(to_int(a), minimal, {});
        },
        py::arg("a"), py::arg("minimal") = false,
        "stream the height box and count its members");

  m.def("bitangent_resultant",
        [](py::sequence b) {
          bitangent::BitangentResultant r = bitangent::bitangent_resultant(to_member(b));
          py::list prim, monic;
          for (const Int& c : r.primitive) prim.append(to_pyint(c));
          for (const Rat& c : r.monic) monic.append(to_fraction(c));
          py::dict d;
          d["degree"] = r.degree;
          d["coefficients"] = prim;
          d["monic"] = monic;
          return d;
        },
        py::arg("b"), "degree-27 resultant eliminating the bitangent offset");

  m.def("e6_summary", [] {
    e6::E6RootSystem rs = e6::build_root_system();
    const auto& w = e6::weyl_group();
    e6::CoxeterChecks cc = e6::coxeter_checks();
    e6::OrbitSectionReport orb = e6::orbit_and_section_checks();
    py::dict d;
    d["roots"] = rs.roots.size();
    d["weyl_order"] = w.size();
    d["det_one_minus_coxeter"] = to_pyint(cc.det_one_minus);
    d["coxeter_order"] = cc.order;
    d["dual_index"] = to_pyint(e6::dual_index());
    d["fixing_count"] = orb.fixing_count;
    d["transitive_27"] = orb.transitive_27;
    d["transitive_36"] = orb.transitive_36;
    return d;
  });

  m.def("formal_log",
        [](py::sequence b, long p, long N) {
          padic::LogSeries L = padic::formal_log(to_member(b), p, N);
          return py::make_tuple(series_coeffs(L.l1), series_coeffs(L.l2), series_coeffs(L.l3));
        },
        py::arg("b"), py::arg("p") = 2, py::arg("order") = 13,
        "coefficient lists of the three formal logarithm components");

  m.def("rho_log_image",
        [](py::sequence b, long p, long N) {
          padic::RhoLogImage img = padic::rho_log_image(to_member(b), p, N);
          py::list out;
          for (const auto& c : img.image) out.append(py::make_tuple(c[0], c[1], c[2]));
          return out;
        },
        py::arg("b"), py::arg("p") = 2, py::arg("order") = 13,
        "sorted reduced projective image of the logarithm on the open disk");

  m.def("torsion_disk_check",
        [](py::sequence b, long p, long N) {
          return padic::torsion_disk_check(to_member(b), p, N);
        },
        py::arg("b"), py::arg("p") = 2, py::arg("order") = 13,
        "certify that 0 is the only small root of the third logarithm component");

  m.def("sieve_lower_bound",
        [](py::object s, long k) { return to_fraction(padic::sieve_lower_bound(to_rat(s), k)); },
        py::arg("s"), py::arg("k"));

  m.def("chabauty_combine",
        [](py::object S, py::object d7, long maxf7) {
          stats::ChabautyReport c = stats::chabauty_combine(to_rat(S), to_rat(d7), maxf7);
          py::dict d;
          d["selmer_bound"] = to_fraction(c.selmer_bound);
          d["delta_low"] = to_fraction(c.delta_low);
          d["d7"] = to_fraction(c.d7);
          d["majority_low"] = to_fraction(c.majority_low);
          d["max_f7"] = c.max_f7;
          d["point_cap"] = c.point_cap;
          return d;
        },
        py::arg("selmer"), py::arg("d7"), py::arg("maxf7"));

  py::register_exception<padic::ScopeError>(m, "ScopeError");
  py::register_exception<padic::PrecisionError>(m, "PrecisionError");
  py::register_exception<bitangent::DegenerateFamilyMember>(m, "DegenerateFamilyMember");
}
