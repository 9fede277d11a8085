#include "doctest.h"

#include "hkg/hilb2.hpp"

#include <random>

using namespace hkg;
using B = BlowupClass;

namespace {

const B l1 = B::symbol(B::L1), l2 = B::symbol(B::L2), e = B::symbol(B::E), o1 = B::symbol(B::O1),
        o2 = B::symbol(B::O2);

B mono(int a, int b, int c, int d, int f) {
  B x;
  x.add({a, b, c, d, f}, 1);
  return x;
}

std::vector<B::Exponents> degree4_monomials() {
  std::vector<B::Exponents> out;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 2; ++d)
          for (int f = 0; f <= 2; ++f)
            if (a + b + c + 2 * d + 2 * f == 4) out.push_back({a, b, c, d, f});
  return out;
}

B random_degree4(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-50, 50);
  B x;
  for (const auto& m : degree4_monomials()) x.add(m, coef(rng));
  return x;
}

B swap_factors(const B& x) {
  B out;
  for (const auto& [m, c] : x.terms()) out.add({m[1], m[0], m[2], m[4], m[3]}, c);
  return out;
}

// Lattice U + Z delta with h = u + 11 v, u^2 = v^2 = 0, u.v = 1.
struct Gram {
  std::array<Integer, 3> coords(const BBVector& x) const { return {x.s_part, 11 * x.s_part, x.delta_coeff}; }
  Integer pair(const std::array<Integer, 3>& x, const std::array<Integer, 3>& y) const {
    return x[0] * y[1] + x[1] * y[0] - 2 * x[2] * y[2];
  }
  Integer divisibility(const BBVector& x) const {
    const auto cx = coords(x);
    Integer g = 0;
    for (int i = 0; i < 3; ++i) {
      std::array<Integer, 3> basis{0, 0, 0};
      basis[i] = 1;
      g = boost::multiprecision::gcd(g, abs(pair(cx, basis)));
    }
    return g;
  }
};

}  // namespace

TEST_CASE("blow-up rule table") {
  CHECK(blowup_integrate(l1.pow(2) * l2.pow(2)) == 484);
  CHECK(blowup_integrate(o1 * l2.pow(2)) == 22);
  CHECK(blowup_integrate(o2 * l1.pow(2)) == 22);
  CHECK(blowup_integrate(o1 * o2) == 1);
  CHECK(blowup_integrate(o1 * o1) == 0);
  CHECK(blowup_integrate(l1.pow(4)) == 0);
  CHECK(blowup_integrate(l1.pow(3) * l2) == 0);
  CHECK(blowup_integrate(o1 * l1 * l2) == 0);
  CHECK(blowup_integrate(e.pow(2) * l1 * l2) == -22);
  CHECK(blowup_integrate(e.pow(2) * l1 * l1) == -22);
  CHECK(blowup_integrate(e.pow(2) * l2 * l2) == -22);
  CHECK(blowup_integrate(e.pow(2) * o1) == -1);
  CHECK(blowup_integrate(e.pow(2) * o2) == -1);
  CHECK(blowup_integrate(e.pow(3) * l1) == 0);
  CHECK(blowup_integrate(e.pow(3) * l2) == 0);
  CHECK(blowup_integrate(e.pow(4)) == 24);
}

TEST_CASE("odd powers of e against pulled-back classes vanish") {
  for (const auto& m : degree4_monomials())
    if (m[2] % 2 == 1) {
      CAPTURE(B(mono(m[0], m[1], m[2], m[3], m[4])).to_string());
      CHECK(blowup_integrate(mono(m[0], m[1], m[2], m[3], m[4])) == 0);
    }
}

TEST_CASE("integration rejects other degrees") {
  CHECK_THROWS_AS(blowup_integrate(l1.pow(3)), std::invalid_argument);
  CHECK_THROWS_AS(blowup_integrate(l1.pow(4) + o1), std::invalid_argument);
  CHECK_THROWS_AS(blowup_integrate(B::constant(1)), std::invalid_argument);
  CHECK(blowup_integrate(B()) == 0);
}

TEST_CASE("integration is linear and symmetric in the factors") {
  std::mt19937 rng(7321);
  for (int trial = 0; trial < 200; ++trial) {
    const B x = random_degree4(rng), y = random_degree4(rng);
    const Integer s = std::uniform_int_distribution<int>(-9, 9)(rng);
    CHECK(blowup_integrate(x + s * y) == blowup_integrate(x) + s * blowup_integrate(y));
    CHECK(blowup_integrate(swap_factors(x)) == blowup_integrate(x));
  }
}

TEST_CASE("algebra of classes") {
  const B x = l1 + Integer(2) * e;
  CHECK((x * x) == l1.pow(2) + Integer(4) * l1 * e + Integer(4) * e.pow(2));
  CHECK((x - x) == B());
  const B u = B::constant(1) + Integer(3) * e + o1;
  CHECK((u * u.inverse_truncated(4)).truncated(4) == B::constant(1));
  CHECK_THROWS_AS(e.inverse_truncated(2), std::invalid_argument);
  CHECK(hilb2_polarization().to_string() == "10*l1 + 10*l2 - 33*e");
}

TEST_CASE("second Chern class") {
  const B c2 = hilb2_c2_class();
  CHECK(c2 == Integer(24) * o1 + Integer(24) * o2 - Integer(3) * e.pow(2));
  // The same class via the expanded ratio (1 - 4e^2)(1 + e^2).
  const B alt = (Integer(24) * (o1 + o2) + (B::constant(1) - Integer(4) * e.pow(2)) * (B::constant(1) + e.pow(2)))
                    .degree_part(2);
  CHECK(alt == c2);
}

TEST_CASE("polarization numbers") {
  // L = 10 l - 33 e, l = l1 + l2; l^4 = 6*484, l^2 e^2 = -88, e^4 = 24, odd e terms vanish.
  const Integer l4 = 6 * 484, l2e2 = -88, e4 = 24;
  const Integer oracle = Integer(10000) * l4 + 6 * Integer(100) * 1089 * l2e2 + Integer(33 * 33) * (33 * 33) * e4;
  CHECK(oracle == 2904);
  CHECK(hilb2_l4() == oracle);
  // L^2 c2 = 100 l^2 c2 - 660 l e c2 + 1089 e^2 c2 with l^2 c2 = 24*22*2 + 3*88, e^2 c2 = -48 - 72.
  const Integer pairing = Integer(100) * (24 * 44 + 264) + 1089 * (-48 - 72);
  CHECK(pairing == 1320);
  CHECK(hilb2_c2_pairing() == pairing);
}

TEST_CASE("Hilbert polynomial") {
  const auto p = hilb2_hilbert_polynomial();
  CHECK(p.to_string() == "3 + 55/2*k^2 + 121/2*k^4");
  CHECK(p == riemann_roch_hilbert(3));
  for (int k = -6; k <= 6; ++k) {
    CAPTURE(k);
    const Rational v = p(Rational(k));
    CHECK(denominator(v) == 1);
  }
}

TEST_CASE("Beauville-Bogomolov form") {
  const BBVector h{1, 0}, delta{0, 1};
  CHECK(bb_square(h) == 22);
  CHECK(bb_square(delta) == -2);
  CHECK(bb_eval(h, delta) == 0);
  CHECK(bb_square({10, -33}) == 22);

  const auto t = polarization_type({10, -33});
  CHECK(t.d == 11);
  CHECK(t.divisibility == 2);
  CHECK_FALSE(t.split);
  const auto th = polarization_type(h);
  CHECK(th.d == 11);
  CHECK(th.split);

  CHECK_THROWS_AS(polarization_type(delta), std::invalid_argument);
  CHECK_THROWS_AS(polarization_type({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(polarization_type({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(polarization_type({1, 4}), std::invalid_argument);  // q = 22 - 32
}

TEST_CASE("form properties and divisibility on random vectors") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(-40, 40);
  const Gram g;
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const BBVector x{dist(rng), dist(rng)}, y{dist(rng), dist(rng)}, z{dist(rng), dist(rng)};
    CHECK(bb_eval(x, y) == bb_eval(y, x));
    CHECK(bb_eval(x, y) == g.pair(g.coords(x), g.coords(y)));
    const BBVector yz{y.s_part + z.s_part, y.delta_coeff + z.delta_coeff};
    CHECK(bb_eval(x, yz) == bb_eval(x, y) + bb_eval(x, z));
    const bool primitive = boost::multiprecision::gcd(abs(x.s_part), abs(x.delta_coeff)) == 1;
    if (!primitive || bb_square(x) <= 0) {
      CHECK_THROWS_AS(polarization_type(x), std::invalid_argument);
      continue;
    }
    const auto t = polarization_type(x);
    CHECK(2 * t.d == bb_square(x));
    CHECK(t.divisibility == g.divisibility(x));
    CHECK(t.split == (t.divisibility == 1));
    if (!t.split) CHECK(t.d % 4 == 3);
    ++checked;
  }
  CHECK(checked > 100);
}
