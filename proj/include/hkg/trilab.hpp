#pragma once

// Alternating trilinear forms sigma on V = F^n (n = 10 by default) over Q or
// F_p: the loci F_sigma in G(3,V) and Y_sigma in G(6,V), singular points of
// F_sigma, the two-line configurations, the affine system attached to a
// singular point, and finite-field enumerations.
//
// Coordinates are 0-based in code and 1-based in text (e_1 .. e_10).

#include "hkg/field.hpp"
#include "hkg/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hkg {

template <class F>
class Trivector {
 public:
  using Elem = typename F::Elem;

  explicit Trivector(const F& f, int n = 10);

  const F& field() const { return f_; }
  int dim() const { return n_; }
  /// Coefficient of e_i^* ^ e_j^* ^ e_k^*, any order, with sign.
  Elem coefficient(int i, int j, int k) const;
  void set(int i, int j, int k, const Elem& value);
  /// Coefficients for i < j < k in lexicographic order.
  const std::vector<Elem>& coefficients() const { return c_; }
  bool is_zero() const;

  Elem eval(const Vec<F>& u, const Vec<F>& v, const Vec<F>& w) const;
  /// The 2-form sigma(u, ., .) as an n x n alternating matrix.
  Mat<F> contract(const Vec<F>& u) const;
  /// The linear form sigma(u, v, .).
  Vec<F> contract(const Vec<F>& u, const Vec<F>& v) const;

  friend bool operator==(const Trivector& a, const Trivector& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t index(int i, int j, int k) const;  // requires i < j < k
  F f_;
  int n_;
  std::vector<Elem> c_;
};

/// Pull-back along the given vectors: coordinate (a,b,c) is sigma(v_a, v_b, v_c).
template <class F>
Trivector<F> restrict(const Trivector<F>& s, const Mat<F>& vectors);
template <class F>
Trivector<F> restrict(const Trivector<F>& s, const Subspace<F>& w);

/// Throw std::invalid_argument on a dimension mismatch.
template <class F>
bool in_F(const Trivector<F>& s, const Subspace<F>& w3);
template <class F>
bool in_Y(const Trivector<F>& s, const Subspace<F>& w6);
/// sigma(w1, w2, v) = 0 for all w1, w2 in W and v in V.
template <class F>
bool singular_at(const Trivector<F>& s, const Subspace<F>& w3);

/// Every W6 with V5 in W6 in V7 lies in Y_sigma.
template <class F>
bool line_in_Y(const Trivector<F>& s, const Subspace<F>& v5, const Subspace<F>& v7);

enum class ConfigKind { A, B };

template <class F>
struct Configuration {
  ConfigKind kind;
  Trivector<F> sigma;
  Subspace<F> v4, v5, v7, v4p, v5p, v7p;
};

/// A: V7 = <e1..e7>, V4 = <e2..e5>, V7' = <e4..e10>, V4' = <e6..e9>,
///    sigma|V7 = e1 e6 e7, sigma|V7' = e4 e5 e10.
/// B: V7 = <e1..e7>, V4 = <e1..e4>, V7' = <e4..e10>, V4' = <e4,e8,e9,e10>,
///    sigma|V7 = sigma|V7' = e5 e6 e7.
/// V5 = V4 + <v>, V5' = V4' + <v'> with v, v' drawn from the seed until
/// V5 and V5' meet in 0 (A) or in V4 and V4' (B). Free coefficients of sigma
/// are drawn from the same seed.
template <class F>
Configuration<F> build_configuration(ConfigKind kind, const F& f, std::uint64_t seed);

template <class F>
struct ZIntersection {
  Subspace<F> trace;        // V5 meet V7'
  Subspace<F> trace_prime;  // V5' meet V7
  std::vector<Subspace<F>> points;
  bool positive_dimensional = false;  // points is then empty
};
/// {W3 in V7 meet V7' : dim(W3 meet V5) >= 2, dim(W3 meet V5') >= 2}.
template <class F>
ZIntersection<F> z_intersect(const Configuration<F>& c);

enum class PhiOutcome { Unique, AffineFamily, Empty };

template <class F>
struct PhiResult {
  PhiOutcome outcome;
  std::optional<Subspace<F>> w6;  // set when Unique
  int family_dimension = -1;      // dimension of the solution set, -1 if empty
  Mat<F> linear_part;             // 18 x 18
  Vec<F> constant;                // 18
  bool zero_is_solution = false;
};

/// Solves for the graphs W6 of u : W' + W'' -> W with sigma|W6 = 0.
/// Unknown u(w'_a) . w_c sits at 3a + c, u(w''_b) . w_c at 9 + 3b + c.
/// Equation (P, b) at 3P + b evaluates on w'_P1, w'_P2, w''_b; equation
/// (Q, a) at 9 + 3Q + a on w''_Q1, w''_Q2, w'_a. Pairs are ordered
/// (0,1), (0,2), (1,2). Preconditions are checked and reported by name.
template <class F>
PhiResult<F> phi_solve(const Trivector<F>& s, const Subspace<F>& w, const Subspace<F>& w1, const Subspace<F>& w2);

/// Linear part of v -> sigma(w_c, w1_P1 + v w1_P1, w1_P2 + v w1_P2) for
/// v : W1 -> W2. Row 3c + P, column 3a + b for v(w1_a) . w2_b.
template <class F>
Mat<F> beta_matrix(const Trivector<F>& s, const Subspace<F>& w, const Subspace<F>& w1, const Subspace<F>& w2);

template <class F>
struct CompanionReport {
  std::uint64_t count = 0;
  std::vector<Subspace<F>> companions;  // at most kMaxStored, sorted
  bool spans_w6 = false;                // count == 2 and W' + W'' = W6
  std::uint64_t lines_scanned = 0;
  static constexpr std::size_t kMaxStored = 1024;
};

/// The F_p-points W' of G(3, W6) with sigma|W (x) L2 W' = 0. Needs a finite
/// field; preconditions are checked.
template <class F>
CompanionReport<F> count_companions(const Trivector<F>& s, const Subspace<F>& w, const Subspace<F>& w6,
                                    unsigned threads = 0);

/// The K3 surface S: W' in G(3, Q) with W + W' in Y_sigma, Q spanned by the
/// coordinate vectors off the pivots of W. Needs a finite field.
template <class F>
std::vector<Subspace<F>> s_points(const Trivector<F>& s, const Subspace<F>& w, unsigned threads = 0);

/// Int_x sigma vanishes on V8.
template <class F>
bool g27_test(const Trivector<F>& s, const Subspace<F>& v8, const Vec<F>& x);

template <class F>
struct ScanReport {
  std::vector<Subspace<F>> points;  // sorted
  std::uint64_t lines_total = 0;
  std::uint64_t lines_scanned = 0;
  bool complete = false;
};

/// Lines of P(V) allowed in a scan; p = 5 is the largest prime under it.
inline constexpr std::uint64_t kMaxScanLines = 2'500'000;

/// All F_p-points of G(3, V) where F_sigma is singular. Rejects fields whose
/// projective space exceeds kMaxScanLines, quoting the cost. A positive
/// budget stops early and reports the coverage.
template <class F>
ScanReport<F> scan_singular_points(const Trivector<F>& s, double budget_seconds = 0, unsigned threads = 0);

// ---------------------------------------------------------------------------
// Seeded constructions

template <class F>
Trivector<F> random_trivector(const F& f, std::uint64_t seed, int n = 10);

/// sigma singular at W = <e1,e2,e3>, otherwise random.
template <class F>
Trivector<F> singular_trivector(const F& f, std::uint64_t seed);

template <class F>
struct CompanionInstance {
  Trivector<F> sigma;
  Subspace<F> w, w1, w2, w6;
  int attempts;
};
/// sigma singular at W = <e1,e2,e3> with W + W', W + W'' in Y_sigma for
/// W' = <e4,e5,e6>, W'' = <e7,e8,e9>, resampled until phi_solve has a unique
/// solution W6. Throws std::runtime_error after max_attempts.
template <class F>
CompanionInstance<F> companion_instance(const F& f, std::uint64_t seed, int max_attempts = 100);

/// sigma with Int_{e1} sigma = 0 on <e1..e8>, otherwise random.
template <class F>
Trivector<F> g27_trivector(const F& f, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Text format: a header line "Q" or "Fp p", an optional "dim n" line, then
// "i j k : value" per nonzero coefficient with 1 <= i < j < k <= n.

template <class F>
std::string to_text(const Trivector<F>& s);

using AnyTrivector = std::variant<Trivector<RationalField>, Trivector<PrimeField>>;
/// Throws std::invalid_argument with the offending line number.
AnyTrivector parse_trivector(const std::string& text);

}  // namespace hkg
