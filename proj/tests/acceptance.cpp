// Acceptance run: one PASS/FAIL line per criterion, with a wall-clock budget
// for each. Criterion 6 is a known failure; the run exits 0 only if every
// other criterion passes and criterion 6 still fails.

#include "oracles.hpp"

#include "hkg/bwb.hpp"
#include "hkg/chow.hpp"
#include "hkg/hilb2.hpp"
#include "hkg/symcore.hpp"
#include "hkg/trilab.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace hkg;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  double budget_seconds;
  bool known_failure;
  std::function<Outcome()> run;
};

std::string str(const Integer& x) { return x.str(); }

Outcome c1() {
  const auto n = paper_intersection_numbers();
  const std::vector<std::pair<std::string, long>> want{
      {"c1c3", 330}, {"c4", 105}, {"c1^2c2", 825}, {"c2^2", 477}, {"c1^4", 1452}};
  std::string d;
  bool ok = true;
  for (const auto& [k, v] : want) {
    ok = ok && n.at(k) == v;
    d += k + "=" + str(n.at(k)) + " ";
  }
  return {ok, d};
}

Outcome c2() {
  const auto r = restricted_c2_of_Y();
  return {r.coeff_c1sq == 5 && r.coeff_c2 == -8 && r.pairing == 660,
          "c2 = (" + str(r.coeff_c1sq) + ") c1^2 + (" + str(r.coeff_c2) + ") c2, pairing " + str(r.pairing)};
}

RationalPolynomial expected_hilbert() {
  RationalPolynomial p;
  p.set(0, Rational(3));
  p.set(2, Rational(55, 2));
  p.set(4, Rational(121, 2));
  return p;
}

Outcome c3() {
  const auto a = riemann_roch_hilbert(koszul_euler(0));
  const auto b = hilb2_hilbert_polynomial();
  return {a == expected_hilbert() && b == expected_hilbert(), "chow " + a.to_string() + ", hilb2 " + b.to_string()};
}

Outcome c4() {
  bool ok = koszul_euler(0) == 3 && koszul_euler(1) == 91 && koszul_euler(2) == 1081;
  const auto p = hilb2_hilbert_polynomial();
  for (int t = -3; t <= 3; ++t) ok = ok && Rational(koszul_euler(t)) == p(Rational(t));
  return {ok, "chi(O_Y(t)) for t = 0,1,2: " + str(koszul_euler(0)) + ", " + str(koszul_euler(1)) + ", " +
                  str(koszul_euler(2)) + "; t = -3..3 match"};
}

Outcome c5() {
  const auto v = koszul_hodge_vector();
  const std::array<int, 5> want{1, 0, 1, 0, 1};
  std::string d;
  bool ok = true;
  for (int q = 0; q < 5; ++q) {
    ok = ok && v[q] == want[q];
    d += str(v[q]) + (q < 4 ? "," : "");
  }
  return {ok, "(" + d + ")"};
}

Outcome c6() {
  const auto rep = vanishing_sweep(Sweep::OmegaTwists);
  std::string first;
  for (const auto& f : rep.findings)
    if (f.asserted_zero) {
      first = "first H^" + std::to_string(f.degree) + "(Omega^" + std::to_string(f.index) + "(" +
              std::to_string(f.twist) + ")) = " + str(f.dimension);
      break;
    }
  return {rep.complete && rep.violations() == 0,
          std::to_string(rep.violations()) + " nonvanishing groups" + (first.empty() ? "" : "; " + first)};
}

Outcome c7() {
  const auto g = griffiths_hodge_F();
  return {g.h_9_11 == 1 && g.h_10_10_van == 20 && g.h0_O1 == 120 && g.h0_T == 99,
          "{" + str(g.h_9_11) + ", " + str(g.h_10_10_van) + "} from " + str(g.h0_O1) + " and " + str(g.h0_T)};
}

Outcome c8() {
  const auto d = dual_variety_degree(GrassCtx(3, 10));
  return {d == 640, "degree " + str(d)};
}

Outcome c9() {
  const auto c = companion_class_number();
  const auto k3 = k3_model_degree();
  return {c == 2 && k3.degree == 22 && k3.calabi_yau && k3.expected_dimension == 2,
          "c3^3 = " + str(c) + ", K3 degree " + str(k3.degree) + ", det identity " + (k3.calabi_yau ? "holds" : "fails")};
}

Outcome c10() {
  const BBVector h{10, -33};
  const auto t = polarization_type(h);
  return {bb_eval(h, h) == 22 && bb_square(h) == 22 && t.d == 11 && !t.split,
          "q = " + str(bb_square(h)) + ", d = " + str(t.d) + ", " + (t.split ? "split" : "nonsplit")};
}

Outcome c11() {
  using S = BlowupClass;
  const auto want = Integer(24) * S::symbol(S::O1) + Integer(24) * S::symbol(S::O2) -
                    Integer(3) * (S::symbol(S::E) * S::symbol(S::E));
  const auto c2 = hilb2_c2_class();
  return {hilb2_l4() == 2904 && hilb2_c2_pairing() == 1320 && c2 == want,
          "L^4 = " + str(hilb2_l4()) + ", L^2 c2 = " + str(hilb2_c2_pairing()) + ", c2 = " + c2.to_string()};
}

template <class F>
int config_failures(const F& f) {
  int bad = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    for (auto kind : {ConfigKind::A, ConfigKind::B}) {
      const auto c = build_configuration(kind, f, seed);
      const auto z = z_intersect(c);
      bool ok = line_in_Y(c.sigma, c.v5, c.v7) && line_in_Y(c.sigma, c.v5p, c.v7p) && !z.positive_dimensional;
      if (kind == ConfigKind::A) ok = ok && z.points.empty();
      else ok = ok && z.points.size() == 1 && z.points[0] == z.trace + z.trace_prime;
      bad += !ok;
    }
  return bad;
}

Outcome c12() {
  const int a = config_failures(PrimeField(101));
  const int b = config_failures(RationalField{});
  return {a == 0 && b == 0, "failures over F101: " + std::to_string(a) + "/40, over Q: " + std::to_string(b) + "/40"};
}

Outcome c13() {
  const PrimeField f(5);
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto inst = companion_instance(f, seed);
    const auto rep = count_companions(inst.sigma, inst.w, inst.w6);
    good += rep.count == 2 && rep.spans_w6;
  }
  return {good >= 45, std::to_string(good) + "/50 instances with exactly two companions spanning W6 (need 45)"};
}

Outcome c14() {
  int bad = 0, checks = 0;
  // Littlewood-Richardson against monomial expansion.
  std::vector<Partition> parts;
  for (int w = 0; w <= 6; ++w)
    for (auto& p : partitions_of(w)) parts.push_back(p);
  for (const auto& l : parts)
    for (const auto& m : parts) {
      ++checks;
      bad += !(lr_multiply(l, m) == oracle::lr_by_monomials(l, m, std::max(1, l.weight() + m.weight())));
    }
  // Poincare duality.
  for (auto g : {GrassCtx(3, 6), GrassCtx(2, 5)}) {
    const auto& ring = SchubertRing::get(g);
    for (std::size_t i = 0; i < ring.size(); ++i)
      for (std::size_t j = 0; j < ring.size(); ++j) {
        const auto& l = ring.partition(i);
        const auto& m = ring.partition(j);
        if (l.weight() + m.weight() != g.dim()) continue;
        ++checks;
        const Integer v = schubert_integrate(ChowClass::sigma(g, l) * ChowClass::sigma(g, m));
        bad += v != (m == l.box_complement(g.k, g.cols()) ? 1 : 0);
      }
  }
  // Plethysm dimension sums.
  for (int i = 0; i <= 20; ++i) {
    ++checks;
    bad += wedge_plethysm(i, 6).dimension(6) != binomial(20, i);
  }
  // Serre duality.
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> dist(-12, 12);
  const GrassCtx g(3, 10);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> a(g.k), b(g.cols());
    for (int& x : a) x = dist(rng);
    for (int& x : b) x = dist(rng);
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    const WeightVector w(a, b);
    const auto r = bott_resolve(w);
    const auto s = bott_resolve(w.serre_dual());
    ++checks;
    bad += !(r.zero == s.zero && (r.zero || (r.degree + s.degree == g.dim() && r.dimension == s.dimension)));
  }
  return {bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " property checks"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, 120, false, c1}, {2, 130, false, c2}, {3, 10, false, c3},  {4, 600, false, c4},  {5, 600, false, c5},
      {6, 300, true, c6},  {7, 60, false, c7},  {8, 60, false, c8},  {9, 10, false, c9},   {10, 1, false, c10},
      {11, 1, false, c11}, {12, 30, false, c12}, {13, 300, false, c13}, {14, 600, false, c14},
  };
  bool ok = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool within = s <= c.budget_seconds;
    const bool pass = o.ok && within;
    std::printf("criterion %2d %s  %s  [%.2f s, budget %.0f s%s]%s\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(), s,
                c.budget_seconds, within ? "" : ", exceeded", c.known_failure ? "  (known failure)" : "");
    std::fflush(stdout);
    ok = ok && (pass != c.known_failure);
  }
  std::printf(ok ? "acceptance: as expected\n" : "acceptance: UNEXPECTED RESULT\n");
  return ok ? 0 : 1;
}
