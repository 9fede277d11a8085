#include "hkg/bwb.hpp"
#include "hkg/chow.hpp"
#include "hkg/hilb2.hpp"
#include "hkg/symcore.hpp"
#include "hkg/trilab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hkg;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.str())); }

py::object to_py(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(Integer(boost::multiprecision::numerator(x))),
                  to_py(Integer(boost::multiprecision::denominator(x))));
}

Integer from_py(const py::int_& x) { return Integer(py::repr(x).cast<std::string>()); }

py::dict polynomial(const RationalPolynomial& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

template <class F>
py::dict configuration(ConfigKind kind, const F& f, std::uint64_t seed) {
  const auto c = build_configuration(kind, f, seed);
  const auto z = z_intersect(c);
  py::list points;
  for (const auto& w : z.points) points.append(w.to_string());
  py::dict d;
  d["field"] = f.name();
  d["line_in_Y"] = line_in_Y(c.sigma, c.v5, c.v7);
  d["line_prime_in_Y"] = line_in_Y(c.sigma, c.v5p, c.v7p);
  d["points"] = points;
  d["positive_dimensional"] = z.positive_dimensional;
  d["point_is_trace_sum"] = z.points.size() == 1 && z.points[0] == z.trace + z.trace_prime;
  d["sigma"] = to_text(c.sigma);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the hkg library";

  m.def("intersection_numbers", [] {
    py::dict d;
    for (const auto& [k, v] : paper_intersection_numbers()) d[py::str(k)] = to_py(v);
    return d;
  });
  m.def("c2_of_Y", [] {
    const auto r = restricted_c2_of_Y();
    py::dict d;
    d["c1^2"] = to_py(r.coeff_c1sq);
    d["c2"] = to_py(r.coeff_c2);
    d["pairing"] = to_py(r.pairing);
    return d;
  });
  m.def("riemann_roch_hilbert", [](const py::int_& chi) { return polynomial(riemann_roch_hilbert(from_py(chi))); },
        py::arg("chi_O"));
  m.def("dual_variety_degree", [](int k, int n) { return to_py(dual_variety_degree(GrassCtx(k, n))); }, py::arg("k"),
        py::arg("n"));
  m.def("k3_model_degree", [] {
    const auto r = k3_model_degree();
    py::dict d;
    d["expected_dimension"] = r.expected_dimension;
    d["degree"] = to_py(r.degree);
    d["calabi_yau"] = r.calabi_yau;
    return d;
  });
  m.def("companion_class_number", [] { return to_py(companion_class_number()); });

  m.def("wedge_plethysm", [](int i, int n, int m) {
    py::list out;
    const auto v = wedge_of_wedge(i, m, n);
    for (const auto& [p, c] : v.terms())
      out.append(py::make_tuple(py::tuple(py::cast(p.parts())), to_py(c)));
    return out;
  }, py::arg("i"), py::arg("n"), py::arg("m") = 3);
  m.def("schur_dimension", [](const std::vector<int>& parts, int n) { return to_py(schur_dimension(Partition(parts), n)); },
        py::arg("partition"), py::arg("n"));

  m.def("koszul_euler", [](int t) { return to_py(koszul_euler(t)); }, py::arg("t"));
  m.def("koszul_hodge_vector", [] {
    py::list out;
    for (const auto& v : koszul_hodge_vector()) out.append(to_py(v));
    return out;
  });
  m.def("griffiths_hodge", [] {
    const auto g = griffiths_hodge_F();
    py::dict d;
    d["h_9_11"] = to_py(g.h_9_11);
    d["h_10_10_van"] = to_py(g.h_10_10_van);
    d["h0_O1"] = to_py(g.h0_O1);
    d["h0_T"] = to_py(g.h0_T);
    return d;
  });
  m.def("vanishing_sweep", [](const std::string& name, std::optional<std::pair<int, int>> range, double budget) {
    const auto s = parse_sweep(name);
    if (!s) throw py::value_error("unknown sweep '" + name + "'");
    const auto r = vanishing_sweep(*s, range, budget);
    py::list findings;
    for (const auto& f : r.findings) {
      py::dict x;
      x["index"] = f.index;
      x["twist"] = f.twist;
      x["degree"] = f.degree;
      x["dimension"] = to_py(f.dimension);
      x["asserted_zero"] = f.asserted_zero;
      findings.append(x);
    }
    py::dict d;
    d["range"] = py::make_tuple(r.lo, r.hi);
    d["covered_hi"] = r.covered_hi;
    d["complete"] = r.complete;
    d["violations"] = r.violations();
    d["findings"] = findings;
    return d;
  }, py::arg("name"), py::arg("range") = py::none(), py::arg("budget_seconds") = 0.0);

  m.def("bb_square", [](const py::int_& a, const py::int_& d) { return to_py(bb_square({from_py(a), from_py(d)})); },
        py::arg("a"), py::arg("d"));
  m.def("polarization_type", [](const py::int_& a, const py::int_& d) {
    const auto t = polarization_type({from_py(a), from_py(d)});
    py::dict out;
    out["d"] = to_py(t.d);
    out["divisibility"] = to_py(t.divisibility);
    out["split"] = t.split;
    return out;
  }, py::arg("a"), py::arg("d"));
  m.def("blowup_numbers", [] {
    py::dict d;
    d["L^4"] = to_py(hilb2_l4());
    d["L^2 c2"] = to_py(hilb2_c2_pairing());
    d["c2"] = hilb2_c2_class().to_string();
    return d;
  });
  m.def("hilb2_hilbert_polynomial", [] { return polynomial(hilb2_hilbert_polynomial()); });

  m.def("configuration", [](const std::string& kind, std::uint32_t prime, std::uint64_t seed) {
    if (kind != "A" && kind != "B") throw py::value_error("kind must be 'A' or 'B'");
    const ConfigKind k = kind == "A" ? ConfigKind::A : ConfigKind::B;
    return prime == 0 ? configuration(k, RationalField{}, seed) : configuration(k, PrimeField(prime), seed);
  }, py::arg("kind"), py::arg("prime"), py::arg("seed"), "prime = 0 selects Q");
  m.def("companions", [](std::uint32_t prime, std::uint64_t seed) {
    const auto inst = companion_instance(PrimeField(prime), seed);
    const auto r = count_companions(inst.sigma, inst.w, inst.w6);
    py::dict d;
    d["count"] = r.count;
    d["spans_w6"] = r.spans_w6;
    d["attempts"] = inst.attempts;
    return d;
  }, py::arg("prime"), py::arg("seed"));
  m.def("scan_singular_points", [](const std::string& text, double budget) {
    const auto any = parse_trivector(text);
    if (!std::holds_alternative<Trivector<PrimeField>>(any)) throw py::value_error("scan needs a trivector over F_p");
    const auto r = scan_singular_points(std::get<Trivector<PrimeField>>(any), budget);
    py::list points;
    for (const auto& w : r.points) points.append(w.to_string());
    py::dict d;
    d["points"] = points;
    d["lines_total"] = r.lines_total;
    d["lines_scanned"] = r.lines_scanned;
    d["complete"] = r.complete;
    return d;
  }, py::arg("sigma"), py::arg("budget_seconds") = 0.0);
  m.def("singular_trivector", [](std::uint32_t prime, std::uint64_t seed) {
    return to_text(singular_trivector(PrimeField(prime), seed));
  }, py::arg("prime"), py::arg("seed"));
  m.def("random_trivector", [](std::uint32_t prime, std::uint64_t seed) {
    return prime == 0 ? to_text(random_trivector(RationalField{}, seed)) : to_text(random_trivector(PrimeField(prime), seed));
  }, py::arg("prime"), py::arg("seed"));
  m.def("normalize_trivector", [](const std::string& text) {
    return std::visit([](const auto& s) { return to_text(s); }, parse_trivector(text));
  }, py::arg("text"));
}
