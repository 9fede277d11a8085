#include "hkg/hilb2.hpp"

#include <boost/integer/common_factor.hpp>

#include <sstream>
#include <stdexcept>

namespace hkg {

namespace {

Integer igcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// Cohomology of S in the basis 1, h, pt with h^2 = 22 pt.
struct K3Class {
  Integer one = 0, h = 0, pt = 0;
  friend K3Class operator*(const K3Class& a, const K3Class& b) {
    return {a.one * b.one, a.one * b.h + a.h * b.one,
            a.one * b.pt + a.pt * b.one + a.h * b.h * kK3Degree};
  }
};

// Chern data of T_S: c1 = 0, c2 = 24 pt.
constexpr int kK3Euler = 24;

// s_j(N) for N = T_S, from s(N) c(N) = 1.
K3Class segre(int j) {
  std::vector<K3Class> s{K3Class{1, 0, 0}};
  const K3Class c1{0, 0, 0}, c2{0, 0, kK3Euler};
  for (int i = 1; i <= j; ++i) {
    K3Class next = c1 * s[i - 1];
    if (i >= 2) {
      const K3Class t = c2 * s[i - 2];
      next.one += t.one;
      next.h += t.h;
      next.pt += t.pt;
    }
    s.push_back(K3Class{-next.one, -next.h, -next.pt});
  }
  return s[j];
}

// Integral over S^2 of a monomial with no e: Kuenneth.
Integer factor_value(int l, int o) {
  if (l == 2 && o == 0) return kK3Degree;
  if (l == 0 && o == 1) return 1;
  return 0;
}

Integer monomial_value(const BlowupClass::Exponents& x) {
  const int l1 = x[0], l2 = x[1], c = x[2], o1 = x[3], o2 = x[4];
  if (c == 0) return factor_value(l1, o1) * factor_value(l2, o2);
  if (c == 1) return 0;
  // e^c alpha = (-1)^(c-1) int_S s_(c-2)(N) alpha|_diagonal.
  K3Class alpha{1, 0, 0};
  for (int i = 0; i < l1 + l2; ++i) alpha = alpha * K3Class{0, 1, 0};
  for (int i = 0; i < o1 + o2; ++i) alpha = alpha * K3Class{0, 0, 1};
  const Integer v = (segre(c - 2) * alpha).pt;
  return (c - 1) % 2 ? Integer(-v) : v;
}

const char* kNames[5] = {"l1", "l2", "e", "o1", "o2"};

}  // namespace

// ---------------------------------------------------------------------------
// Lattice

Integer bb_eval(const BBVector& x, const BBVector& y) {
  return kK3Degree * x.s_part * y.s_part - 2 * x.delta_coeff * y.delta_coeff;
}

PolarizationType polarization_type(const BBVector& x) {
  const Integer q = bb_square(x);
  if (q <= 0) throw std::invalid_argument("polarization_type: q(x) = " + q.str() + " is not positive");
  if (igcd(x.s_part, x.delta_coeff) != 1) throw std::invalid_argument("polarization_type: x is not primitive");
  // h_S is primitive in the unimodular H^2(S), so x.H^2(S) = a Z and x.delta = -2b Z.
  const Integer div = igcd(x.s_part, 2 * x.delta_coeff);
  return PolarizationType{q / 2, div, div == 1};
}

// ---------------------------------------------------------------------------
// BlowupClass

BlowupClass BlowupClass::constant(const Integer& c) {
  BlowupClass x;
  x.add({0, 0, 0, 0, 0}, c);
  return x;
}

BlowupClass BlowupClass::symbol(Symbol s) {
  Exponents e{0, 0, 0, 0, 0};
  e[s] = 1;
  BlowupClass x;
  x.add(e, 1);
  return x;
}

void BlowupClass::add(const Exponents& e, const Integer& c) {
  for (int v : e)
    if (v < 0) throw std::invalid_argument("BlowupClass: negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BlowupClass::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

BlowupClass BlowupClass::degree_part(int d) const {
  BlowupClass out;
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == d) out.add(e, c);
  return out;
}

BlowupClass BlowupClass::truncated(int d) const {
  BlowupClass out;
  for (const auto& [e, c] : terms_)
    if (degree_of(e) <= d) out.add(e, c);
  return out;
}

BlowupClass BlowupClass::inverse_truncated(int d) const {
  if (coefficient({0, 0, 0, 0, 0}) != 1) throw std::invalid_argument("BlowupClass: inverse needs constant term 1");
  const BlowupClass y = *this - constant(1);
  BlowupClass term = constant(1), out = constant(1);
  for (int j = 1; j <= d; ++j) {
    term = (Integer(-1) * (term * y)).truncated(d);
    out += term;
  }
  return out;
}

BlowupClass BlowupClass::pow(unsigned k) const {
  BlowupClass r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

BlowupClass& BlowupClass::operator+=(const BlowupClass& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

BlowupClass& BlowupClass::operator-=(const BlowupClass& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

BlowupClass operator*(const BlowupClass& a, const BlowupClass& b) {
  BlowupClass out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      BlowupClass::Exponents e;
      for (int i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

BlowupClass operator*(const Integer& c, const BlowupClass& a) {
  BlowupClass out;
  for (const auto& [e, v] : a.terms_) out.add(e, c * v);
  return out;
}

std::string BlowupClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Lower degrees first, then by exponent vector.
  for (int d = 0; d <= 64; ++d)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (degree_of(e) != d) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      first = false;
      const Integer a = c < 0 ? Integer(-c) : c;
      bool any = false;
      std::ostringstream mono;
      for (int i = 0; i < 5; ++i) {
        if (e[i] == 0) continue;
        if (any) mono << '*';
        any = true;
        mono << kNames[i];
        if (e[i] > 1) mono << '^' << e[i];
      }
      if (!any) os << a;
      else if (a == 1) os << mono.str();
      else os << a << '*' << mono.str();
    }
  return os.str();
}

Integer blowup_integrate(const BlowupClass& x) {
  Integer total = 0;
  for (const auto& [e, c] : x.terms()) {
    if (BlowupClass::degree_of(e) != 4)
      throw std::invalid_argument("blowup_integrate: term of degree " + std::to_string(BlowupClass::degree_of(e)) +
                                  ", expected 4");
    total += c * monomial_value(e);
  }
  return total;
}

// ---------------------------------------------------------------------------
// S^[2]

BlowupClass hilb2_c2_class() {
  using B = BlowupClass;
  const B one = B::constant(1);
  const B e = B::symbol(B::E);
  // c(Omega_S) = 1 + 24 pt on each factor.
  const B base = (one + Integer(kK3Euler) * B::symbol(B::O1)) * (one + Integer(kK3Euler) * B::symbol(B::O2));
  // c(O_E(aE)) = (1 + a e) / (1 + (a-1) e).
  auto c_oe = [&](int a) { return (one + Integer(a) * e) * (one + Integer(a - 1) * e).inverse_truncated(4); };
  const B total = (base * c_oe(2) * c_oe(-1).inverse_truncated(4)).truncated(4);
  return total.degree_part(2);
}

BlowupClass hilb2_polarization() {
  using B = BlowupClass;
  return Integer(10) * (B::symbol(B::L1) + B::symbol(B::L2)) - Integer(33) * B::symbol(B::E);
}

Integer hilb2_l4() { return blowup_integrate(hilb2_polarization().pow(4)); }

Integer hilb2_c2_pairing() { return blowup_integrate(hilb2_polarization().pow(2) * hilb2_c2_class()); }

RationalPolynomial hilb2_hilbert_polynomial() {
  // h^(0,q) = 1, 0, 1, 0, 1 on a hyper-Kaehler fourfold.
  constexpr int kChiO = 3;
  RationalPolynomial p;
  p.set(0, Rational(kChiO));
  p.set(2, Rational(hilb2_c2_pairing(), kDoubleCoverDegree * 24));
  p.set(4, Rational(hilb2_l4(), kDoubleCoverDegree * 24));
  return p;
}

}  // namespace hkg
