#pragma once

// Borel-Weil-Bott on G(k,n): cohomology of irreducible homogeneous bundles,
// decomposition of bundle expressions into irreducibles, Koszul sums for
// the zero locus of a section of Lambda^3 E on G(6,10), and vanishing sweeps.
//
// A weight (alpha; beta) with alpha in Z^k, beta in Z^(n-k), both weakly
// decreasing, names S^alpha E (x) S^beta Q^*. So O(1) = (1,...,1; 0,...,0),
// E = (1,0,...; 0,...), S = (...,0,-1; 0,...), Q = (0,...; 0,...,0,-1).

#include "hkg/chow.hpp"
#include "hkg/numeric.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hkg {

class WeightVector {
 public:
  /// Throws std::invalid_argument unless both blocks are weakly decreasing.
  WeightVector(std::vector<int> alpha, std::vector<int> beta);
  /// Splits `entries` after the first k.
  WeightVector(const GrassCtx& ctx, const std::vector<int>& entries);
  /// The trivial bundle on ctx.
  static WeightVector trivial(const GrassCtx& ctx);

  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<int>& beta() const { return beta_; }
  GrassCtx ctx() const;
  std::vector<int> entries() const;

  WeightVector dual() const;
  /// Tensor with O(d).
  WeightVector twisted(int d) const;
  /// dual() twisted by the canonical bundle O(-n).
  WeightVector serre_dual() const;
  /// Rank of the bundle.
  Integer rank() const;

  /// "(1,1,1;0,0,0,0,0,0,0)".
  std::string to_string() const;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<int> alpha_;
  std::vector<int> beta_;
};

/// Either zero cohomology, or a single nonzero degree.
struct CohomologyReport {
  bool zero = true;
  int degree = 0;
  Integer dimension = 0;
};

CohomologyReport bott_resolve(const WeightVector& w);

/// Dimensions by degree; only nonzero entries are stored.
using CohomologyTable = std::map<int, Integer>;
Integer euler_characteristic(const CohomologyTable& t);

/// Direct sum of irreducible homogeneous bundles with multiplicities.
class HomogeneousBundle {
 public:
  explicit HomogeneousBundle(const GrassCtx& ctx) : ctx_(ctx) {}
  static HomogeneousBundle irreducible(const WeightVector& w, const Integer& mult = 1);

  const GrassCtx& ctx() const { return ctx_; }
  const std::map<WeightVector, Integer>& terms() const { return terms_; }
  void add(const WeightVector& w, const Integer& mult);
  Integer rank() const;

  HomogeneousBundle& operator+=(const HomogeneousBundle& o);
  HomogeneousBundle dual() const;
  HomogeneousBundle twisted(int d) const;
  friend HomogeneousBundle tensor(const HomogeneousBundle& a, const HomogeneousBundle& b);
  friend bool operator==(const HomogeneousBundle& a, const HomogeneousBundle& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  CohomologyTable cohomology() const;

 private:
  GrassCtx ctx_;
  std::map<WeightVector, Integer> terms_;
};

HomogeneousBundle tensor(const HomogeneousBundle& a, const HomogeneousBundle& b);

/// Splits b into irreducibles. Supported: the atoms; dual, sum, tensor and
/// twist of anything supported; Wedge/Sym/Schur of a tautological atom or
/// its dual, of a trivial bundle, of a line bundle, of a dual, of a twist, of
/// a direct sum (Wedge and Sym only), of a tensor of atoms from the two
/// different blocks (Wedge and Sym only), and Wedge^p(Wedge^m(atom)). Other
/// shapes throw std::invalid_argument naming the node.
HomogeneousBundle decompose(const GrassCtx& ctx, const BundleExpr& b);

CohomologyTable cohomology_of_expr(const GrassCtx& ctx, const BundleExpr& b);

/// F = Lambda^3 E on G(6,10).
BundleExpr koszul_bundle();

struct KoszulEuler {
  int twist;
  Integer with_dual;     // sum (-1)^i chi(Lambda^i F^* (t)), the Koszul complex
  Integer without_dual;  // sum (-1)^i chi(Lambda^i F (t))
};
KoszulEuler koszul_euler_both(int t);
/// chi(O_Y(t)) from the Koszul resolution.
Integer koszul_euler(int t);

/// sum_i h^(q+i)(G, Lambda^i F^*), an upper bound for h^q(O_Y).
Integer koszul_hodge_bound(int q);
std::array<Integer, 5> koszul_hodge_vector();

struct GriffithsHodge {
  Integer h_9_11;
  Integer h_10_10_van;
  Integer h0_O1;  // dim H^0(G(3,10), O(1))
  Integer h0_T;   // dim H^0(G(3,10), T)
};
GriffithsHodge griffiths_hodge_F();

enum class Sweep { FTensorWedge, S6DualTensorWedge, OmegaTwists };
/// "F_tensor_wedge", "S6dual_tensor_wedge", "omega_twists".
std::string sweep_name(Sweep s);
std::optional<Sweep> parse_sweep(const std::string& name);

struct SweepFinding {
  int index;       // i for the Koszul sweeps, j for omega_twists
  int twist;       // k for omega_twists, 0 otherwise
  int degree;
  Integer dimension;
  bool asserted_zero;  // true for a group the vanishing statement covers
};

struct SweepReport {
  Sweep sweep;
  int lo;
  int hi;
  int covered_hi;  // last index fully evaluated, lo - 1 if none
  bool complete;
  std::vector<SweepFinding> findings;  // all nonzero groups, ordered by index
  std::size_t violations() const;
};

/// Default index ranges: i in 1..20, i in 0..20, j in 0..21. A positive
/// budget stops after the first index that crosses it. Indices are evaluated
/// concurrently on `threads` workers; the report order does not depend on it.
SweepReport vanishing_sweep(Sweep sweep, std::optional<std::pair<int, int>> range = std::nullopt,
                            double budget_seconds = 0, unsigned threads = 0);

}  // namespace hkg
