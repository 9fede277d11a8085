#pragma once

// Chow rings of Grassmannians in the Schubert basis, Chern classes of
// bundle expressions built from the tautological bundles, and the
// intersection numbers attached to the trivector fourfold in G(6,10).
//
// Convention: sigma_{(1^i)} = c_i(E) where E = S^* is the dual of the
// tautological subbundle, sigma_{(i)} = c_i(Q), and c_i(S) = (-1)^i c_i(E).

#include "hkg/numeric.hpp"
#include "hkg/symcore.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hkg {

/// G(k,n), the k-planes in an n-dimensional space.
struct GrassCtx {
  int k = 1;
  int n = 2;

  GrassCtx() = default;
  /// Throws std::invalid_argument unless 0 < k < n.
  GrassCtx(int k_, int n_);
  int cols() const { return n - k; }
  int dim() const { return k * (n - k); }
  std::string to_string() const;
  friend bool operator==(const GrassCtx&, const GrassCtx&) = default;
};

/// Basis and multiplication table of A^*(G(k,n)). Shared, immutable once
/// built; obtain through get().
class SchubertRing {
 public:
  static const SchubertRing& get(const GrassCtx& ctx);

  const GrassCtx& ctx() const { return ctx_; }
  std::size_t size() const { return basis_.size(); }
  const Partition& partition(std::size_t i) const { return basis_[i]; }
  /// Index of lambda; throws std::out_of_range if lambda is not in the box.
  std::size_t index(const Partition& lambda) const;
  bool contains(const Partition& lambda) const { return index_.count(lambda) != 0; }
  int degree(std::size_t i) const { return basis_[i].weight(); }
  /// Basis indices of degree d occupy [degree_begin(d), degree_begin(d+1)).
  std::size_t degree_begin(int d) const;
  std::size_t top_index() const { return basis_.size() - 1; }

  /// Nonzero structure constants (index, coefficient) of sigma_i * sigma_j.
  const std::vector<std::pair<std::uint32_t, std::int64_t>>& product(std::size_t i, std::size_t j) const;

 private:
  explicit SchubertRing(const GrassCtx& ctx);

  GrassCtx ctx_;
  std::vector<Partition> basis_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::size_t> degree_begin_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> table_;
};

/// Element of A^*(G(k,n)), possibly inhomogeneous.
class ChowClass {
 public:
  explicit ChowClass(const GrassCtx& ctx);
  static ChowClass zero(const GrassCtx& ctx) { return ChowClass(ctx); }
  static ChowClass one(const GrassCtx& ctx);
  /// sigma_lambda; zero when lambda does not fit the box.
  static ChowClass sigma(const GrassCtx& ctx, const Partition& lambda, const Integer& coeff = 1);

  const GrassCtx& ctx() const { return ctx_; }
  const SchubertRing& ring() const { return *ring_; }
  Integer coefficient(const Partition& lambda) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  void add_term(const Partition& lambda, const Integer& c);

  bool is_zero() const;
  /// True when all nonzero terms share one degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  /// Lowest and highest degree with a nonzero term; -1 for zero.
  int min_degree() const;
  int max_degree() const;
  ChowClass degree_part(int d) const;
  /// Drops every term of degree > d.
  ChowClass truncated(int d) const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  ChowClass& operator*=(const Integer& c);
  /// Exact division of every coefficient; throws std::domain_error otherwise.
  ChowClass& divide_exact(const Integer& c);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator-(ChowClass a) { return a *= Integer(-1); }
  friend ChowClass operator*(ChowClass a, const Integer& c) { return a *= c; }
  friend ChowClass operator*(const Integer& c, ChowClass a) { return a *= c; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

  /// Product truncated above degree d (never forms the dropped terms).
  ChowClass times_truncated(const ChowClass& o, int d) const;
  ChowClass pow(unsigned e) const;

  std::string to_string() const;

 private:
  void check_same(const ChowClass& o) const;

  GrassCtx ctx_;
  const SchubertRing* ring_;
  std::vector<Integer> coeffs_;
};

/// Degree map: the coefficient of the full box. Only the top-degree part of
/// an inhomogeneous class contributes.
Integer schubert_integrate(const ChowClass& x);

/// The three tautological bundles whose Chern classes have closed forms.
enum class Taut { Sub, SubDual, Quot };

/// c_i of a tautological bundle (zero for i outside [0, rank]).
ChowClass taut_chern(const GrassCtx& ctx, Taut which, int i);

/// prod_i c_i(which)^exponents[i-1] in the Schubert basis. Returns the zero
/// class when the degree exceeds dim.
ChowClass giambelli_reduce(const GrassCtx& ctx, Taut which, const std::vector<int>& exponents);

/// Formal bundle on G(k,n) built from S, Q and trivial bundles.
class BundleExpr {
 public:
  enum class Kind { TautSub, TautQuot, Trivial, Dual, Sum, Tensor, Wedge, Sym, Schur, Twist };

  static BundleExpr taut_sub();
  static BundleExpr taut_quot();
  /// E = S^*.
  static BundleExpr taut_sub_dual();
  static BundleExpr trivial(int rank);
  /// O(d) = det(E)^d.
  static BundleExpr line(int d);

  friend BundleExpr dual(const BundleExpr& b);
  friend BundleExpr operator+(const BundleExpr& a, const BundleExpr& b);
  friend BundleExpr operator*(const BundleExpr& a, const BundleExpr& b);
  friend BundleExpr wedge(int p, const BundleExpr& b);
  friend BundleExpr sym(int p, const BundleExpr& b);
  friend BundleExpr schur(const Partition& lambda, const BundleExpr& b);
  friend BundleExpr twist(const BundleExpr& b, int d);

  Kind kind() const;
  /// Exponent of Wedge/Sym, rank of Trivial, degree of Twist.
  int param() const;
  const Partition& shape() const;
  const std::vector<BundleExpr>& children() const;

  Integer rank(const GrassCtx& ctx) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit BundleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

BundleExpr dual(const BundleExpr& b);
BundleExpr operator+(const BundleExpr& a, const BundleExpr& b);
BundleExpr operator*(const BundleExpr& a, const BundleExpr& b);
BundleExpr wedge(int p, const BundleExpr& b);
BundleExpr sym(int p, const BundleExpr& b);
BundleExpr schur(const Partition& lambda, const BundleExpr& b);
BundleExpr twist(const BundleExpr& b, int d);

/// Power sums p_m = sum of m-th powers of the Chern roots, m = 1..degree,
/// together with the rank p_0. Exact integer classes.
struct PowerSums {
  Integer rank;
  std::vector<ChowClass> p;  // p[m-1] is p_m, homogeneous of degree m
};

PowerSums power_sums(const GrassCtx& ctx, const BundleExpr& b, int up_to_degree);

/// Total Chern class sum_{i <= up_to_degree} c_i(b).
ChowClass chern_of_bundle(const GrassCtx& ctx, const BundleExpr& b, int up_to_degree);
/// Total Chern class of T = E (x) Q.
ChowClass tangent_chern(const GrassCtx& ctx, int up_to_degree);

/// Exact polynomial in one variable with rational coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  void set(int exponent, const Rational& c);
  Rational coefficient(int exponent) const;
  const std::map<int, Rational>& terms() const { return terms_; }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Rational operator()(const Rational& x) const;
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
  /// "3 + 55/2*k^2 + 121/2*k^4".
  std::string to_string(const std::string& var = "k") const;

 private:
  std::map<int, Rational> terms_;
};

/// Named integrals over G(6,10) of c_20(Lambda^3 E) times a Chern monomial
/// of E: keys "c1c3", "c4", "c1^2c2", "c2^2", "c1^4".
std::map<std::string, Integer> paper_intersection_numbers();

/// c_2 of the zero locus Y of a section of Lambda^3 E on G(6,10), from
/// c(T_G) = c(T_Y) c(Lambda^3 E).
struct RestrictedC2 {
  ChowClass cls;
  Integer coeff_c1sq;  // in the basis {c1^2, c2} of A^2
  Integer coeff_c2;
  Integer pairing;     // integral of cls * c_20(Lambda^3 E) * c1^2
};
RestrictedC2 restricted_c2_of_Y();

/// chi(O_Y(k)) = chi_O + (c2(T_Y) c1^2 / 24) k^2 + (c1^4 / 24) k^4.
RationalPolynomial riemann_roch_hilbert(const Integer& chi_O);

/// Degree of the dual variety of G(k,n) embedded by h = h_multiple * sigma_1,
/// from the class formula. G(1,2) with h_multiple = 2 is the plane conic.
Integer dual_variety_degree(const GrassCtx& ctx, int h_multiple = 1);

/// Zero locus of a section of O(1) + (Lambda^2 E)^3 on G(3,7).
struct K3ModelReport {
  int expected_dimension;   // dim G(3,7) - rank
  Integer degree;           // Pluecker degree
  ChowClass det_bundle;     // c_1 of the bundle
  ChowClass c1_tangent;     // c_1(T_G(3,7))
  bool calabi_yau;          // det_bundle == c1_tangent
};
K3ModelReport k3_model_degree();

/// Integral of c_3(Lambda^2 E)^3 on G(3,6).
Integer companion_class_number();

}  // namespace hkg
