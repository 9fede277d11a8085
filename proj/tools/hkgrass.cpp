// hkgrass: command-line front end for the hkg library.

#include "hkg/bwb.hpp"
#include "hkg/chow.hpp"
#include "hkg/hilb2.hpp"
#include "hkg/symcore.hpp"
#include "hkg/trilab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hkg;

namespace {

struct Entry {
  std::string label;
  std::optional<std::string> expected;
  std::string computed;
  bool match;
  double elapsed_ms;
};

class Report {
 public:
  explicit Report(bool timing) : timing_(timing) {}

  void add(std::string label, std::optional<std::string> expected, const std::function<std::string()>& compute) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string computed = compute();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool match = !expected || *expected == computed;
    entries_.push_back({std::move(label), std::move(expected), std::move(computed), match, timing_ ? ms : 0.0});
  }
  void info(std::string label, std::string value) { add(std::move(label), std::nullopt, [&] { return value; }); }

  bool ok() const {
    for (const auto& e : entries_)
      if (!e.match) return false;
    return true;
  }

  void print(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json j;
      j["entries"] = nlohmann::ordered_json::array();
      for (const auto& e : entries_) {
        nlohmann::ordered_json x;
        x["label"] = e.label;
        x["expected"] = e.expected ? nlohmann::ordered_json(*e.expected) : nlohmann::ordered_json(nullptr);
        x["computed"] = e.computed;
        x["match"] = e.match;
        x["elapsed_ms"] = timing_ ? e.elapsed_ms : 0;
        j["entries"].push_back(std::move(x));
      }
      j["all_match"] = ok();
      os << j.dump(2) << '\n';
      return;
    }
    std::size_t wl = 5, we = 8, wc = 8;
    for (const auto& e : entries_) {
      wl = std::max(wl, e.label.size());
      we = std::max(we, e.expected ? e.expected->size() : 1);
      wc = std::max(wc, e.computed.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    os << pad("label", wl) << "  " << pad("expected", we) << "  " << pad("computed", wc) << "  match";
    if (timing_) os << "  ms";
    os << '\n';
    for (const auto& e : entries_) {
      os << pad(e.label, wl) << "  " << pad(e.expected.value_or("-"), we) << "  " << pad(e.computed, wc) << "  "
         << (e.expected ? (e.match ? "yes" : "NO") : "-");
      if (timing_) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(1);
        ms << e.elapsed_ms;
        os << "    " << ms.str();
      }
      os << '\n';
    }
    os << (ok() ? "all expected values match\n" : "MISMATCH\n");
  }

 private:
  bool timing_;
  std::vector<Entry> entries_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string c2_string(const RestrictedC2& r) {
  std::ostringstream os;
  os << r.coeff_c1sq << "*c1^2 " << (r.coeff_c2 < 0 ? "- " : "+ ") << abs(r.coeff_c2) << "*c2";
  return os.str();
}

RationalPolynomial chow_hilbert() { return riemann_roch_hilbert(koszul_euler(0)); }

// --- chow ------------------------------------------------------------------

void chow_intersections(Report& r) {
  const auto nums = paper_intersection_numbers();
  const std::vector<std::pair<std::string, std::string>> keys{
      {"c1c3", "330"}, {"c4", "105"}, {"c1^2c2", "825"}, {"c2^2", "477"}, {"c1^4", "1452"}};
  for (const auto& [k, v] : keys) r.add("c20(L3 E) * " + k + " on G(6,10)", v, [&] { return nums.at(k).str(); });
  const auto c2 = restricted_c2_of_Y();
  r.add("c2(T_Y)", "5*c1^2 - 8*c2", [&] { return c2_string(c2); });
  r.add("c2(T_Y) * c1^2 on Y", "660", [&] { return c2.pairing.str(); });
}

void chow_dual_degree(Report& r, int k, int n) {
  const std::optional<std::string> expected = (k == 3 && n == 10) ? std::optional<std::string>("640") : std::nullopt;
  r.add("degree of G(" + std::to_string(k) + "," + std::to_string(n) + ")^*", expected,
        [&] { return dual_variety_degree(GrassCtx(k, n)).str(); });
}

void chow_k3(Report& r) {
  const auto k3 = k3_model_degree();
  r.add("K3 model: expected dimension", "2", [&] { return std::to_string(k3.expected_dimension); });
  r.add("K3 model: Pluecker degree", "22", [&] { return k3.degree.str(); });
  r.add("K3 model: det bundle = c1(T_G(3,7))", "true", [&] { return yes_no(k3.calabi_yau); });
  r.add("c3(L2 E)^3 on G(3,6)", "2", [&] { return companion_class_number().str(); });
}

// --- bwb -------------------------------------------------------------------

void bwb_euler(Report& r, int t) {
  const auto rr = hilb2_hilbert_polynomial()(Rational(t));
  const auto both = koszul_euler_both(t);
  r.add("chi(O_Y(" + std::to_string(t) + ")) by Koszul and Bott", to_string(rr), [&] { return both.with_dual.str(); });
  r.info("sum (-1)^i chi(L^i F (" + std::to_string(t) + ")), undualized", both.without_dual.str());
}

void bwb_hodge(Report& r) {
  const auto v = koszul_hodge_vector();
  const std::array<int, 5> expected{1, 0, 1, 0, 1};
  for (int q = 0; q <= 4; ++q)
    r.add("bound for h^" + std::to_string(q) + "(O_Y)", std::to_string(expected[q]), [&] { return v[q].str(); });
  const auto g = griffiths_hodge_F();
  r.add("h^(9,11)(F_sigma)", "1", [&] { return g.h_9_11.str(); });
  r.add("h^(10,10)_van(F_sigma)", "20", [&] { return g.h_10_10_van.str(); });
  r.add("h^0(G(3,10), O(1))", "120", [&] { return g.h0_O1.str(); });
  r.add("h^0(G(3,10), T)", "99", [&] { return g.h0_T.str(); });
}

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected A..B");
  try {
    return std::make_pair(std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected integers A..B");
  }
}

void bwb_sweep(Report& r, const std::string& name, const std::string& range, double budget) {
  const auto sweep = parse_sweep(name);
  if (!sweep) throw CLI::ValidationError("NAME", "unknown sweep '" + name + "'");
  const auto rep = vanishing_sweep(*sweep, parse_range(range), budget);
  r.info("sweep", sweep_name(rep.sweep));
  r.info("requested range", std::to_string(rep.lo) + ".." + std::to_string(rep.hi));
  r.add("covered range", std::to_string(rep.lo) + ".." + std::to_string(rep.hi),
        [&] { return std::to_string(rep.lo) + ".." + std::to_string(rep.covered_hi); });
  for (const auto& f : rep.findings) {
    std::string label = *sweep == Sweep::OmegaTwists
                            ? "H^" + std::to_string(f.degree) + "(Omega^" + std::to_string(f.index) + "(" +
                                  std::to_string(f.twist) + "))"
                            : "i = " + std::to_string(f.index) + ": H^" + std::to_string(f.degree);
    r.add(label, f.asserted_zero ? std::optional<std::string>("0") : std::nullopt, [&] { return f.dimension.str(); });
  }
  r.add("groups asserted zero but nonzero", "0", [&] { return std::to_string(rep.violations()); });
}

// --- plethysm, hilb2 ---------------------------------------------------------

void plethysm(Report& r, int i, int n, int m) {
  const auto v = wedge_of_wedge(i, m, n);
  for (const auto& [p, c] : v.terms())
    r.info("S" + p.to_string(), c.str() + " x " + schur_dimension(p, n).str());
  r.add("dimension sum", binomial(binomial(n, m).convert_to<long>(), i).str(), [&] { return v.dimension(n).str(); });
}

void hilb2_bb(Report& r, long a, long d) {
  const BBVector x{a, d};
  const bool anchored = a == 10 && d == -33;
  auto exp = [&](const char* s) { return anchored ? std::optional<std::string>(s) : std::nullopt; };
  r.add("q(x)", exp("22"), [&] { return bb_square(x).str(); });
  try {
    const auto t = polarization_type(x);
    r.add("d", exp("11"), [&] { return t.d.str(); });
    r.add("divisibility", exp("2"), [&] { return t.divisibility.str(); });
    r.add("type", exp("nonsplit"), [&] { return std::string(t.split ? "split" : "nonsplit"); });
  } catch (const std::invalid_argument& e) {
    r.add("type", exp("nonsplit"), [&] { return std::string("rejected: ") + e.what(); });
  }
}

void hilb2_blowup(Report& r) {
  r.add("r^*c2(S^[2])", "-3*e^2 + 24*o1 + 24*o2", [&] { return hilb2_c2_class().to_string(); });
  r.add("(10(l1+l2) - 33e)^4", "2904", [&] { return hilb2_l4().str(); });
  r.add("(10(l1+l2) - 33e)^2 c2", "1320", [&] { return hilb2_c2_pairing().str(); });
}

void hilb2_hilbert(Report& r) {
  const std::string expected = "3 + 55/2*k^2 + 121/2*k^4";
  r.add("chi(L^k) on S^[2]", expected, [&] { return hilb2_hilbert_polynomial().to_string(); });
  r.add("chi(O_Y(k)) by Riemann-Roch on Y", expected, [&] { return chow_hilbert().to_string(); });
}

// --- trilab ------------------------------------------------------------------

struct TrilabOpts {
  std::uint32_t prime = 0;  // 0 selects the subcommand default
  bool rational = false;
  std::uint64_t seed = 1;
  std::string write_sigma;
  std::string sigma_file;
  double budget = 0;
};

template <class F>
void maybe_write(const TrilabOpts& o, const Trivector<F>& s) {
  if (o.write_sigma.empty()) return;
  std::ofstream out(o.write_sigma);
  if (!out) throw std::runtime_error("cannot write " + o.write_sigma);
  out << to_text(s);
}

template <class F>
void trilab_config(Report& r, ConfigKind kind, const F& f, const TrilabOpts& o) {
  const auto c = build_configuration(kind, f, o.seed);
  maybe_write(o, c.sigma);
  const bool b = kind == ConfigKind::B;
  r.info("field", f.name());
  r.add("line C in Y_sigma", "true", [&] { return yes_no(line_in_Y(c.sigma, c.v5, c.v7)); });
  r.add("line C' in Y_sigma", "true", [&] { return yes_no(line_in_Y(c.sigma, c.v5p, c.v7p)); });
  r.add("dim V5 meet V5'", b ? "1" : "0", [&] { return std::to_string(c.v5.intersect(c.v5p).dim()); });
  const auto z = z_intersect(c);
  r.add("z_intersect cardinality", b ? "1" : "0", [&] { return std::to_string(z.points.size()); });
  if (b && z.points.size() == 1) {
    r.add("W3 = V50 + V50'", "true", [&] { return yes_no(z.points[0] == z.trace + z.trace_prime); });
    r.add("W3 in F_sigma", "true", [&] { return yes_no(in_F(c.sigma, z.points[0])); });
    r.info("W3", z.points[0].to_string());
  }
}

void trilab_companions(Report& r, const TrilabOpts& o) {
  const PrimeField f(o.prime ? o.prime : 5);
  const auto inst = companion_instance(f, o.seed);
  maybe_write(o, inst.sigma);
  r.info("field", f.name());
  r.info("attempts", std::to_string(inst.attempts));
  const auto rep = count_companions(inst.sigma, inst.w, inst.w6);
  r.add("companions of W6", "2", [&] { return std::to_string(rep.count); });
  r.add("W' + W'' = W6", "true", [&] { return yes_no(rep.spans_w6); });
  r.add("companions over W', W''", "true", [&] {
    std::set<Subspace<PrimeField>> over;
    for (const auto& c : rep.companions) over.insert(c + inst.w);
    return yes_no(over.count(inst.w + inst.w1) && over.count(inst.w + inst.w2));
  });
  r.info("lines scanned", std::to_string(rep.lines_scanned));
}

void trilab_scan(Report& r, const TrilabOpts& o) {
  std::optional<Trivector<PrimeField>> loaded;
  if (!o.sigma_file.empty()) {
    std::ifstream in(o.sigma_file);
    if (!in) throw std::runtime_error("cannot read " + o.sigma_file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto any = parse_trivector(ss.str());
    if (!std::holds_alternative<Trivector<PrimeField>>(any))
      throw std::invalid_argument("scan needs a trivector over F_p");
    loaded = std::get<Trivector<PrimeField>>(any);
  }
  const auto s = loaded ? *loaded : singular_trivector(PrimeField(o.prime ? o.prime : 2), o.seed);
  maybe_write(o, s);
  r.info("field", s.field().name());
  const auto rep = scan_singular_points(s, o.budget);
  r.add("lines covered", std::to_string(rep.lines_total), [&] { return std::to_string(rep.lines_scanned); });
  r.info("singular points", std::to_string(rep.points.size()));
  if (!loaded) {
    const auto w = Subspace<PrimeField>::coordinate(s.field(), 10, {1, 2, 3});
    r.add("<e1,e2,e3> found", "true",
          [&] { return yes_no(std::find(rep.points.begin(), rep.points.end(), w) != rep.points.end()); });
  }
  r.add("every point passes singular_at", "true", [&] {
    for (const auto& p : rep.points)
      if (!singular_at(s, p)) return yes_no(false);
    return yes_no(true);
  });
}

template <class F>
void trilab_g27(Report& r, const F& f, const TrilabOpts& o) {
  const auto s = g27_trivector(f, o.seed);
  maybe_write(o, s);
  const auto v8 = Subspace<F>::coordinate(f, 10, {1, 2, 3, 4, 5, 6, 7, 8});
  const auto x = unit_vector(f, 10, 0);
  r.info("field", f.name());
  r.add("Int_x sigma = 0 on V8", "true", [&] { return yes_no(g27_test(s, v8, x)); });
  r.add("100 sampled W3 with x in W3 in V8 lie in F_sigma", "true", [&] {
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
    for (int k = 0; k < 100; ++k) {
      Vec<F> a = zero_vector(f, 10), b = zero_vector(f, 10);
      for (int i = 0; i < 8; ++i) a[i] = f.random(rng), b[i] = f.random(rng);
      const auto w3 = Subspace<F>::span(f, 10, {x, a, b});
      if (w3.dim() == 3 && !in_F(s, w3)) return yes_no(false);
    }
    return yes_no(true);
  });
  r.add("random sigma passes", "false", [&] { return yes_no(g27_test(random_trivector(f, o.seed), v8, x)); });
}

template <class Fn>
void with_field(const TrilabOpts& o, std::uint32_t fallback, Fn&& fn) {
  if (o.rational) fn(RationalField{});
  else fn(PrimeField(o.prime ? o.prime : fallback));
}

// --- paper-numbers -------------------------------------------------------------

void paper_numbers(Report& r) {
  const auto nums = paper_intersection_numbers();
  r.add("01 c20(L3 E) c1c3", "330", [&] { return nums.at("c1c3").str(); });
  r.add("02 c20(L3 E) c4", "105", [&] { return nums.at("c4").str(); });
  r.add("03 c20(L3 E) c1^2c2", "825", [&] { return nums.at("c1^2c2").str(); });
  r.add("04 c20(L3 E) c2^2", "477", [&] { return nums.at("c2^2").str(); });
  r.add("05 c20(L3 E) c1^4", "1452", [&] { return nums.at("c1^4").str(); });
  r.add("06 c2(T_Y); c2(T_Y) c1^2", "5*c1^2 - 8*c2; 660", [&] {
    const auto c2 = restricted_c2_of_Y();
    return c2_string(c2) + "; " + c2.pairing.str();
  });
  r.add("07 chi(O_Y(k)) = chi(L^k)", "3 + 55/2*k^2 + 121/2*k^4", [&] {
    const auto a = chow_hilbert(), b = hilb2_hilbert_polynomial();
    return a == b ? a.to_string() : a.to_string() + " vs " + b.to_string();
  });
  r.add("08 chi(O_Y(t)), t = 0,1,2", "3, 91, 1081",
        [&] { return join({koszul_euler(0).str(), koszul_euler(1).str(), koszul_euler(2).str()}, ", "); });
  r.add("09 h^q(O_Y) bounds, q = 0..4", "1, 0, 1, 0, 1", [&] {
    std::vector<std::string> xs;
    for (const auto& v : koszul_hodge_vector()) xs.push_back(v.str());
    return join(xs, ", ");
  });
  r.add("10 h^(9,11); h^(10,10)_van of F_sigma", "1; 20", [&] {
    const auto g = griffiths_hodge_F();
    return g.h_9_11.str() + "; " + g.h_10_10_van.str();
  });
  r.add("11 degree of G(3,10)^*", "640", [&] { return dual_variety_degree(GrassCtx(3, 10)).str(); });
  r.add("12 c3(L2 E)^3 on G(3,6); K3 degree", "2; 22",
        [&] { return companion_class_number().str() + "; " + k3_model_degree().degree.str(); });
  r.add("13 q(10h - 33delta); L^4; L^2 c2", "22; 2904; 1320",
        [&] { return bb_square({10, -33}).str() + "; " + hilb2_l4().str() + "; " + hilb2_c2_pairing().str(); });
  r.add("14 #(Z meet Z') in A; in B", "0; 1", [&] {
    const PrimeField f(101);
    return std::to_string(z_intersect(build_configuration(ConfigKind::A, f, 1)).points.size()) + "; " +
           std::to_string(z_intersect(build_configuration(ConfigKind::B, f, 1)).points.size());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus, Borel-Weil-Bott and trivector computations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--timing", timing, "Record elapsed time per entry");

  std::function<void(Report&)> action;

  app.add_subcommand("paper-numbers", "Every quoted value in one report")->callback([&] { action = paper_numbers; });

  auto* chow = app.add_subcommand("chow", "Chow ring computations");
  chow->require_subcommand(1);
  chow->add_subcommand("intersections", "Intersection numbers on G(6,10)")->callback([&] { action = chow_intersections; });
  int dk = 3, dn = 10;
  auto* dual = chow->add_subcommand("dual-degree", "Degree of the dual of G(k,n)");
  dual->add_option("--k", dk)->check(CLI::Range(1, 20));
  dual->add_option("--n", dn)->check(CLI::Range(2, 24));
  dual->callback([&] {
    if (dk >= dn) throw CLI::ValidationError("--k", "need k < n");
    action = [&](Report& r) { chow_dual_degree(r, dk, dn); };
  });
  chow->add_subcommand("k3-degree", "The K3 model on G(3,7)")->callback([&] { action = chow_k3; });

  auto* bwb = app.add_subcommand("bwb", "Borel-Weil-Bott computations");
  bwb->require_subcommand(1);
  int twist = 0;
  auto* euler = bwb->add_subcommand("euler", "chi(O_Y(t)) from the Koszul complex");
  euler->add_option("--twist", twist)->check(CLI::Range(-10, 10));
  euler->callback([&] { action = [&](Report& r) { bwb_euler(r, twist); }; });
  bwb->add_subcommand("hodge-bound", "Hodge bounds for Y and F_sigma")->callback([&] { action = bwb_hodge; });
  std::string sweep_name_arg, range;
  double sweep_budget = 0;
  auto* sweep = bwb->add_subcommand("sweep", "Bott vanishing sweeps");
  sweep->add_option("NAME", sweep_name_arg, "F_tensor_wedge | S6dual_tensor_wedge | omega_twists")->required();
  sweep->add_option("--range", range, "Index range A..B");
  sweep->add_option("--budget-seconds", sweep_budget)->check(CLI::NonNegativeNumber);
  sweep->callback([&] { action = [&](Report& r) { bwb_sweep(r, sweep_name_arg, range, sweep_budget); }; });

  int pi = 2, pn = 6, pm = 3;
  auto* pleth = app.add_subcommand("plethysm", "Lambda^i(Lambda^m C^n)");
  pleth->add_option("--i", pi)->check(CLI::NonNegativeNumber);
  pleth->add_option("--n", pn)->check(CLI::Range(1, 10));
  pleth->add_option("--m", pm)->check(CLI::Range(1, 10));
  pleth->callback([&] { action = [&](Report& r) { plethysm(r, pi, pn, pm); }; });

  auto* hilb = app.add_subcommand("hilb2", "The Hilbert square of a degree 22 K3");
  hilb->require_subcommand(1);
  long ba = 10, bd = -33;
  auto* bb = hilb->add_subcommand("bb", "Beauville-Bogomolov form of a h_S + d delta");
  bb->add_option("--a", ba);
  bb->add_option("--d", bd);
  bb->callback([&] { action = [&](Report& r) { hilb2_bb(r, ba, bd); }; });
  hilb->add_subcommand("blowup", "Intersection numbers on the blown-up square")->callback([&] { action = hilb2_blowup; });
  hilb->add_subcommand("hilbert", "Hilbert polynomial, two ways")->callback([&] { action = hilb2_hilbert; });

  auto* tri = app.add_subcommand("trilab", "Trivector computations over F_p or Q");
  tri->require_subcommand(1);
  TrilabOpts to;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--prime", to.prime, "Field characteristic");
    c->add_option("--seed", to.seed);
    c->add_option("--write-sigma", to.write_sigma, "Write sigma in text format");
  };
  auto* ca = tri->add_subcommand("config-a", "Configuration A");
  auto* cb = tri->add_subcommand("config-b", "Configuration B");
  auto* comp = tri->add_subcommand("companions", "Companion count over F_p");
  auto* scan = tri->add_subcommand("scan", "Singular points of F_sigma over F_p");
  auto* g27 = tri->add_subcommand("g27", "G(2,7) containment test");
  for (auto* c : {ca, cb, comp, scan, g27}) add_common(c);
  for (auto* c : {ca, cb, g27}) c->add_flag("--rational", to.rational, "Work over Q")->excludes("--prime");
  scan->add_option("--sigma", to.sigma_file, "Read sigma from a file");
  scan->add_option("--budget-seconds", to.budget)->check(CLI::NonNegativeNumber);
  ca->callback([&] {
    action = [&](Report& r) { with_field(to, 101, [&](const auto& f) { trilab_config(r, ConfigKind::A, f, to); }); };
  });
  cb->callback([&] {
    action = [&](Report& r) { with_field(to, 101, [&](const auto& f) { trilab_config(r, ConfigKind::B, f, to); }); };
  });
  comp->callback([&] { action = [&](Report& r) { trilab_companions(r, to); }; });
  scan->callback([&] { action = [&](Report& r) { trilab_scan(r, to); }; });
  g27->callback([&] {
    action = [&](Report& r) { with_field(to, 101, [&](const auto& f) { trilab_g27(r, f, to); }); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    if (rc != 0) std::cerr << '\n' << app.help();
    return rc;
  }

  Report report(timing);
  try {
    action(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  report.print(std::cout, format);
  return report.ok() ? 0 : 1;
}
