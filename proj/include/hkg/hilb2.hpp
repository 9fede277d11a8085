#pragma once

// The Hilbert square of a K3 surface S of degree 22: the Beauville-Bogomolov
// lattice Z h_S + Z delta, and intersection numbers on the blow-up of S x S
// along the diagonal, which double covers S^[2].

#include "hkg/chow.hpp"
#include "hkg/numeric.hpp"

#include <array>
#include <map>
#include <string>

namespace hkg {

/// Degree h_S^2 of the polarized K3 surface (genus 12).
inline constexpr int kK3Degree = 22;
/// Degree of the quotient map from the blown-up product onto S^[2].
inline constexpr int kDoubleCoverDegree = 2;

/// x = s_part * h_S + delta_coeff * delta in H^2(S^[2]).
struct BBVector {
  Integer s_part;
  Integer delta_coeff;
  friend bool operator==(const BBVector&, const BBVector&) = default;
};

/// q(x, y) = 22 a a' - 2 d d'.
Integer bb_eval(const BBVector& x, const BBVector& y);
inline Integer bb_square(const BBVector& x) { return bb_eval(x, x); }

struct PolarizationType {
  Integer d;         // q(x) = 2d
  Integer divisibility;
  bool split;
};
/// Throws std::invalid_argument if q(x) <= 0 or x is not primitive.
PolarizationType polarization_type(const BBVector& x);

/// Polynomial in l1, l2, e (degree 1) and o1, o2 (degree 2).
class BlowupClass {
 public:
  enum Symbol { L1 = 0, L2 = 1, E = 2, O1 = 3, O2 = 4 };
  using Exponents = std::array<int, 5>;

  BlowupClass() = default;
  static BlowupClass constant(const Integer& c);
  static BlowupClass symbol(Symbol s);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  void add(const Exponents& e, const Integer& c);
  Integer coefficient(const Exponents& e) const;
  static int degree_of(const Exponents& e) { return e[0] + e[1] + e[2] + 2 * e[3] + 2 * e[4]; }
  /// Part of the given degree.
  BlowupClass degree_part(int d) const;
  /// Drops terms of degree > d.
  BlowupClass truncated(int d) const;
  /// 1/x up to degree d; requires constant term 1.
  BlowupClass inverse_truncated(int d) const;
  BlowupClass pow(unsigned k) const;

  BlowupClass& operator+=(const BlowupClass& o);
  BlowupClass& operator-=(const BlowupClass& o);
  friend BlowupClass operator+(BlowupClass a, const BlowupClass& b) { return a += b; }
  friend BlowupClass operator-(BlowupClass a, const BlowupClass& b) { return a -= b; }
  friend BlowupClass operator*(const BlowupClass& a, const BlowupClass& b);
  friend BlowupClass operator*(const Integer& c, const BlowupClass& a);
  friend bool operator==(const BlowupClass&, const BlowupClass&) = default;

  /// "24*o1 + 24*o2 - 3*e^2".
  std::string to_string() const;

 private:
  std::map<Exponents, Integer> terms_;
};

BlowupClass operator*(const BlowupClass& a, const BlowupClass& b);
BlowupClass operator*(const Integer& c, const BlowupClass& a);

/// Degree map on the blown-up product. Throws std::invalid_argument unless
/// every term has degree 4.
Integer blowup_integrate(const BlowupClass& x);

/// Pull-back of c_2 of S^[2] from c(Omega_(SxS)) c(O_E(2E)) / c(O_E(-E)).
BlowupClass hilb2_c2_class();
/// Pull-back of L = 10 h_S - 33 delta: 10(l1 + l2) - 33 e.
BlowupClass hilb2_polarization();
/// Upstairs numbers: L^4 and L^2 c_2.
Integer hilb2_l4();
Integer hilb2_c2_pairing();
/// chi(L^k) on S^[2] by Riemann-Roch for a hyper-Kaehler fourfold, upstairs
/// numbers divided by the cover degree.
RationalPolynomial hilb2_hilbert_polynomial();

}  // namespace hkg
