#include "hkg/chow.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkg {

GrassCtx::GrassCtx(int k_, int n_) : k(k_), n(n_) {
  if (k <= 0 || k >= n) throw std::invalid_argument("GrassCtx: need 0 < k < n");
}

std::string GrassCtx::to_string() const {
  return "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

// ---------------------------------------------------------------------------
// SchubertRing

SchubertRing::SchubertRing(const GrassCtx& ctx) : ctx_(ctx) {
  basis_ = partitions_in_box(ctx.k, ctx.cols());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  degree_begin_.assign(ctx.dim() + 2, basis_.size());
  for (std::size_t i = basis_.size(); i-- > 0;) degree_begin_[basis_[i].weight()] = i;
  for (int d = ctx.dim(); d >= 0; --d)
    degree_begin_[d] = std::min(degree_begin_[d], degree_begin_[d + 1]);

  const std::size_t n = basis_.size();
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (basis_[i].weight() + basis_[j].weight() > ctx.dim()) break;
      auto& entry = table_[i * n + j];
      const SchurVector prod = lr_multiply(basis_[i], basis_[j], ctx.k, ctx.cols());
      for (const auto& [nu, c] : prod.terms())
        entry.emplace_back(static_cast<std::uint32_t>(index_.at(nu)), static_cast<std::int64_t>(c));
      std::sort(entry.begin(), entry.end());
      if (i != j) table_[j * n + i] = entry;
    }
  }
}

const SchubertRing& SchubertRing::get(const GrassCtx& ctx) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SchubertRing>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{ctx.k, ctx.n}];
  if (!slot) slot.reset(new SchubertRing(ctx));
  return *slot;
}

std::size_t SchubertRing::index(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end())
    throw std::out_of_range("SchubertRing: " + lambda.to_string() + " not in the box of " + ctx_.to_string());
  return it->second;
}

std::size_t SchubertRing::degree_begin(int d) const {
  if (d <= 0) return 0;
  if (d > ctx_.dim()) return basis_.size();
  return degree_begin_[d];
}

const std::vector<std::pair<std::uint32_t, std::int64_t>>& SchubertRing::product(std::size_t i,
                                                                                 std::size_t j) const {
  return table_[i * basis_.size() + j];
}

// ---------------------------------------------------------------------------
// ChowClass

ChowClass::ChowClass(const GrassCtx& ctx)
    : ctx_(ctx), ring_(&SchubertRing::get(ctx)), coeffs_(ring_->size()) {}

ChowClass ChowClass::one(const GrassCtx& ctx) { return sigma(ctx, Partition{}); }

ChowClass ChowClass::sigma(const GrassCtx& ctx, const Partition& lambda, const Integer& coeff) {
  ChowClass x(ctx);
  if (lambda.fits_in_box(ctx.k, ctx.cols())) x.add_term(lambda, coeff);
  return x;
}

Integer ChowClass::coefficient(const Partition& lambda) const {
  if (!ring_->contains(lambda)) return 0;
  return coeffs_[ring_->index(lambda)];
}

void ChowClass::add_term(const Partition& lambda, const Integer& c) { coeffs_[ring_->index(lambda)] += c; }

bool ChowClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

int ChowClass::min_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return ring_->degree(i);
  return -1;
}

int ChowClass::max_degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != 0) return ring_->degree(i);
  return -1;
}

bool ChowClass::is_homogeneous() const { return min_degree() == max_degree(); }

ChowClass ChowClass::degree_part(int d) const {
  ChowClass out(ctx_);
  if (d < 0 || d > ctx_.dim()) return out;
  for (std::size_t i = ring_->degree_begin(d); i < ring_->degree_begin(d + 1); ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

ChowClass ChowClass::truncated(int d) const {
  ChowClass out = *this;
  for (std::size_t i = ring_->degree_begin(d + 1); i < coeffs_.size(); ++i) out.coeffs_[i] = 0;
  return out;
}

void ChowClass::check_same(const ChowClass& o) const {
  if (!(ctx_ == o.ctx_))
    throw std::invalid_argument("ChowClass: mixing " + ctx_.to_string() + " and " + o.ctx_.to_string());
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ChowClass& ChowClass::divide_exact(const Integer& c) {
  for (auto& x : coeffs_) {
    if (x % c != 0) throw std::domain_error("ChowClass: inexact division by " + c.str());
    x /= c;
  }
  return *this;
}

ChowClass ChowClass::times_truncated(const ChowClass& o, int d) const {
  check_same(o);
  d = std::min(d, ctx_.dim());
  ChowClass out(ctx_);
  const std::size_t end_i = ring_->degree_begin(d + 1);
  Integer prod;
  for (std::size_t i = 0; i < end_i; ++i) {
    if (coeffs_[i] == 0) continue;
    const std::size_t end_j = ring_->degree_begin(d - ring_->degree(i) + 1);
    for (std::size_t j = 0; j < end_j; ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod = coeffs_[i] * o.coeffs_[j];
      for (const auto& [idx, c] : ring_->product(i, j)) out.coeffs_[idx] += prod * c;
    }
  }
  return out;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) { return a.times_truncated(b, a.ctx().dim()); }

ChowClass ChowClass::pow(unsigned e) const {
  ChowClass r = one(ctx_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Integer a = c < 0 ? Integer(-c) : c;
    if (a != 1) os << a << '*';
    os << "s" << ring_->partition(i).to_string();
  }
  return first ? "0" : os.str();
}

Integer schubert_integrate(const ChowClass& x) { return x.coefficients()[x.ring().top_index()]; }

// ---------------------------------------------------------------------------
// Tautological Chern classes

ChowClass taut_chern(const GrassCtx& ctx, Taut which, int i) {
  if (i == 0) return ChowClass::one(ctx);
  switch (which) {
    case Taut::SubDual:
      return ChowClass::sigma(ctx, Partition(std::vector<int>(std::max(i, 0), 1)));
    case Taut::Sub:
      return ChowClass::sigma(ctx, Partition(std::vector<int>(std::max(i, 0), 1)), i % 2 ? -1 : 1);
    case Taut::Quot:
      return i > 0 ? ChowClass::sigma(ctx, Partition{i}) : ChowClass::zero(ctx);
  }
  return ChowClass::zero(ctx);
}

ChowClass giambelli_reduce(const GrassCtx& ctx, Taut which, const std::vector<int>& exponents) {
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("giambelli_reduce: negative exponent");
    degree += static_cast<int>(i + 1) * exponents[i];
  }
  if (degree > ctx.dim()) return ChowClass::zero(ctx);
  ChowClass r = ChowClass::one(ctx);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (int e = 0; e < exponents[i]; ++e) r = r * taut_chern(ctx, which, static_cast<int>(i + 1));
  return r;
}

// ---------------------------------------------------------------------------
// BundleExpr

struct BundleExpr::Node {
  Kind kind;
  int param = 0;
  Partition shape = {};
  std::vector<BundleExpr> children = {};
};

namespace {

void check_positive(int p, const char* what) {
  if (p < 0) throw std::invalid_argument(std::string(what) + ": negative exponent");
}

}  // namespace

BundleExpr BundleExpr::taut_sub() { return BundleExpr(std::make_shared<Node>(Node{Kind::TautSub})); }
BundleExpr BundleExpr::taut_quot() { return BundleExpr(std::make_shared<Node>(Node{Kind::TautQuot})); }
BundleExpr BundleExpr::taut_sub_dual() { return dual(taut_sub()); }
BundleExpr BundleExpr::trivial(int rank) {
  if (rank < 0) throw std::invalid_argument("BundleExpr::trivial: negative rank");
  return BundleExpr(std::make_shared<Node>(Node{Kind::Trivial, rank}));
}
BundleExpr BundleExpr::line(int d) { return twist(trivial(1), d); }

BundleExpr dual(const BundleExpr& b) {
  return BundleExpr(std::make_shared<BundleExpr::Node>(BundleExpr::Node{BundleExpr::Kind::Dual, 0, {}, {b}}));
}
BundleExpr operator+(const BundleExpr& a, const BundleExpr& b) {
  return BundleExpr(std::make_shared<BundleExpr::Node>(BundleExpr::Node{BundleExpr::Kind::Sum, 0, {}, {a, b}}));
}
BundleExpr operator*(const BundleExpr& a, const BundleExpr& b) {
  return BundleExpr(
      std::make_shared<BundleExpr::Node>(BundleExpr::Node{BundleExpr::Kind::Tensor, 0, {}, {a, b}}));
}
BundleExpr wedge(int p, const BundleExpr& b) {
  check_positive(p, "wedge");
  return BundleExpr(std::make_shared<BundleExpr::Node>(BundleExpr::Node{BundleExpr::Kind::Wedge, p, {}, {b}}));
}
BundleExpr sym(int p, const BundleExpr& b) {
  check_positive(p, "sym");
  return BundleExpr(std::make_shared<BundleExpr::Node>(BundleExpr::Node{BundleExpr::Kind::Sym, p, {}, {b}}));
}
BundleExpr schur(const Partition& lambda, const BundleExpr& b) {
  return BundleExpr(
      std::make_shared<BundleExpr::Node>(BundleExpr::Node{BundleExpr::Kind::Schur, 0, lambda, {b}}));
}
BundleExpr twist(const BundleExpr& b, int d) {
  return BundleExpr(std::make_shared<BundleExpr::Node>(BundleExpr::Node{BundleExpr::Kind::Twist, d, {}, {b}}));
}

BundleExpr::Kind BundleExpr::kind() const { return node_->kind; }
int BundleExpr::param() const { return node_->param; }
const Partition& BundleExpr::shape() const { return node_->shape; }
const std::vector<BundleExpr>& BundleExpr::children() const { return node_->children; }

Integer BundleExpr::rank(const GrassCtx& ctx) const {
  switch (kind()) {
    case Kind::TautSub: return ctx.k;
    case Kind::TautQuot: return ctx.cols();
    case Kind::Trivial: return param();
    case Kind::Dual:
    case Kind::Twist: return children()[0].rank(ctx);
    case Kind::Sum: return children()[0].rank(ctx) + children()[1].rank(ctx);
    case Kind::Tensor: return children()[0].rank(ctx) * children()[1].rank(ctx);
    case Kind::Wedge: return binomial(static_cast<long>(children()[0].rank(ctx)), param());
    case Kind::Sym: return binomial(static_cast<long>(children()[0].rank(ctx)) + param() - 1, param());
    case Kind::Schur: return schur_dimension(shape(), static_cast<int>(children()[0].rank(ctx)));
  }
  return 0;
}

std::string BundleExpr::to_string() const {
  switch (kind()) {
    case Kind::TautSub: return "S";
    case Kind::TautQuot: return "Q";
    case Kind::Trivial: return "O^" + std::to_string(param());
    case Kind::Dual:
      if (children()[0].kind() == Kind::TautSub) return "E";
      return "dual(" + children()[0].to_string() + ")";
    case Kind::Sum: return "(" + children()[0].to_string() + " + " + children()[1].to_string() + ")";
    case Kind::Tensor: return "(" + children()[0].to_string() + " x " + children()[1].to_string() + ")";
    case Kind::Wedge: return "Wedge^" + std::to_string(param()) + "(" + children()[0].to_string() + ")";
    case Kind::Sym: return "Sym^" + std::to_string(param()) + "(" + children()[0].to_string() + ")";
    case Kind::Schur: return "S_" + shape().to_string() + "(" + children()[0].to_string() + ")";
    case Kind::Twist: return children()[0].to_string() + "(" + std::to_string(param()) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Power sums of Chern roots. A bundle is represented by (rank, p_1..p_D);
// direct sums add, tensor products follow ch(A x B) = ch(A) ch(B), and
// exterior/symmetric powers come from the Adams operations by Newton's
// identities. Everything stays integral.

namespace {

class PowerSumCalc {
 public:
  PowerSumCalc(const GrassCtx& ctx, int degree) : ctx_(ctx), d_(std::min(degree, ctx.dim())) {}

  PowerSums eval(const BundleExpr& b) {
    using K = BundleExpr::Kind;
    switch (b.kind()) {
      case K::TautSub: {
        PowerSums r = roots_of_e(ctx_.k);
        for (int m = 1; m <= d_; m += 2) r.p[m - 1] *= Integer(-1);
        return r;
      }
      case K::TautQuot: {
        PowerSums r = roots_of_e(ctx_.cols());
        for (int m = 2; m <= d_; m += 2) r.p[m - 1] *= Integer(-1);
        return r;
      }
      case K::Trivial: return constant(b.param());
      case K::Dual: {
        PowerSums r = eval(b.children()[0]);
        for (int m = 1; m <= d_; m += 2) r.p[m - 1] *= Integer(-1);
        return r;
      }
      case K::Sum: return add(eval(b.children()[0]), eval(b.children()[1]));
      case K::Tensor: return tensor(eval(b.children()[0]), eval(b.children()[1]));
      case K::Wedge: return wedge_power(eval(b.children()[0]), b.param());
      case K::Sym: return sym_power(eval(b.children()[0]), b.param());
      case K::Schur: return schur_functor(eval(b.children()[0]), b.shape());
      case K::Twist: {
        PowerSums line = constant(1);
        const ChowClass h = ChowClass::sigma(ctx_, Partition{1}, b.param());
        ChowClass hp = ChowClass::one(ctx_);
        for (int m = 1; m <= d_; ++m) {
          hp = hp * h;
          line.p[m - 1] = hp;
        }
        return tensor(eval(b.children()[0]), line);
      }
    }
    throw std::logic_error("power_sums: unknown node");
  }

 private:
  PowerSums constant(const Integer& r) const {
    return PowerSums{r, std::vector<ChowClass>(d_, ChowClass::zero(ctx_))};
  }

  // p_m of the roots of E: sum over hooks (m-a, 1^a) of (-1)^a sigma_hook.
  PowerSums roots_of_e(const Integer& rank) const {
    PowerSums r = constant(rank);
    for (int m = 1; m <= d_; ++m)
      for (int a = 0; a < m; ++a) {
        std::vector<int> hook(a + 1, 1);
        hook[0] = m - a;
        r.p[m - 1] += ChowClass::sigma(ctx_, Partition(hook), a % 2 ? -1 : 1);
      }
    return r;
  }

  ChowClass p_at(const PowerSums& x, int m) const {
    return m == 0 ? ChowClass::sigma(ctx_, Partition{}, x.rank) : x.p[m - 1];
  }

  PowerSums add(PowerSums a, const PowerSums& b) const {
    a.rank += b.rank;
    for (int m = 0; m < d_; ++m) a.p[m] += b.p[m];
    return a;
  }

  PowerSums tensor(const PowerSums& a, const PowerSums& b) const {
    PowerSums r = constant(a.rank * b.rank);
    for (int m = 1; m <= d_; ++m) {
      ChowClass acc = ChowClass::zero(ctx_);
      for (int j = 0; j <= m; ++j) {
        const ChowClass pa = p_at(a, j);
        const ChowClass pb = p_at(b, m - j);
        if (pa.is_zero() || pb.is_zero()) continue;
        acc += binomial(m, j) * (pa * pb);
      }
      r.p[m - 1] = std::move(acc);
    }
    return r;
  }

  PowerSums adams(PowerSums a, int k) const {
    Integer f = 1;
    for (int m = 1; m <= d_; ++m) {
      f *= k;
      a.p[m - 1] *= f;
    }
    return a;
  }

  void divide(PowerSums& a, int q) const {
    if (a.rank % q != 0) throw std::domain_error("power_sums: inexact rank division");
    a.rank /= q;
    for (auto& c : a.p) c.divide_exact(q);
  }

  // q Lambda^q = sum_{r=1}^q (-1)^(r-1) psi^r (x) Lambda^(q-r).
  PowerSums wedge_power(const PowerSums& a, int q) const {
    std::vector<PowerSums> lam{constant(1)};
    for (int j = 1; j <= q; ++j) {
      PowerSums acc = constant(0);
      for (int r = 1; r <= j; ++r) {
        PowerSums term = tensor(adams(a, r), lam[j - r]);
        if (r % 2 == 0) {
          term.rank = -term.rank;
          for (auto& c : term.p) c *= Integer(-1);
        }
        acc = add(std::move(acc), term);
      }
      divide(acc, j);
      lam.push_back(std::move(acc));
    }
    return lam[q];
  }

  // q Sym^q = sum_{r=1}^q psi^r (x) Sym^(q-r).
  std::vector<PowerSums> sym_powers(const PowerSums& a, int q) const {
    std::vector<PowerSums> h{constant(1)};
    for (int j = 1; j <= q; ++j) {
      PowerSums acc = constant(0);
      for (int r = 1; r <= j; ++r) acc = add(std::move(acc), tensor(adams(a, r), h[j - r]));
      divide(acc, j);
      h.push_back(std::move(acc));
    }
    return h;
  }

  PowerSums sym_power(const PowerSums& a, int q) const { return sym_powers(a, q)[q]; }

  // Jacobi-Trudi: S_lambda = det(Sym^(lambda_i - i + j)).
  PowerSums schur_functor(const PowerSums& a, const Partition& lambda) const {
    const int l = lambda.length();
    if (l == 0) return constant(1);
    const auto h = sym_powers(a, lambda[0] + l - 1);
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    PowerSums total = constant(0);
    do {
      int inversions = 0;
      for (int x = 0; x < l; ++x)
        for (int y = x + 1; y < l; ++y)
          if (perm[x] > perm[y]) ++inversions;
      PowerSums term = constant(1);
      bool vanishes = false;
      for (int i = 0; i < l && !vanishes; ++i) {
        const int idx = lambda[i] - i + perm[i];
        if (idx < 0) vanishes = true;
        else if (idx > 0) term = tensor(term, h[idx]);
      }
      if (vanishes) continue;
      if (inversions % 2) {
        term.rank = -term.rank;
        for (auto& c : term.p) c *= Integer(-1);
      }
      total = add(std::move(total), term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  }

  const GrassCtx& ctx_;
  int d_;
};

}  // namespace

PowerSums power_sums(const GrassCtx& ctx, const BundleExpr& b, int up_to_degree) {
  return PowerSumCalc(ctx, up_to_degree).eval(b);
}

ChowClass chern_of_bundle(const GrassCtx& ctx, const BundleExpr& b, int up_to_degree) {
  const int d = std::min(up_to_degree, ctx.dim());
  const PowerSums ps = power_sums(ctx, b, d);
  // Newton: m c_m = sum_{i=1}^m (-1)^(i-1) p_i c_(m-i).
  std::vector<ChowClass> c{ChowClass::one(ctx)};
  for (int m = 1; m <= d; ++m) {
    ChowClass acc = ChowClass::zero(ctx);
    for (int i = 1; i <= m; ++i) {
      if (ps.p[i - 1].is_zero() || c[m - i].is_zero()) continue;
      ChowClass term = ps.p[i - 1] * c[m - i];
      if (i % 2 == 0) acc -= term;
      else acc += term;
    }
    acc.divide_exact(m);
    c.push_back(std::move(acc));
  }
  ChowClass total = ChowClass::zero(ctx);
  for (const auto& x : c) total += x;
  return total;
}

ChowClass tangent_chern(const GrassCtx& ctx, int up_to_degree) {
  return chern_of_bundle(ctx, BundleExpr::taut_sub_dual() * BundleExpr::taut_quot(), up_to_degree);
}

// ---------------------------------------------------------------------------
// RationalPolynomial

void RationalPolynomial::set(int exponent, const Rational& c) {
  if (exponent < 0) throw std::invalid_argument("RationalPolynomial: negative exponent");
  if (c == 0) terms_.erase(exponent);
  else terms_[exponent] = c;
}

Rational RationalPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational p = 1;
    for (int i = 0; i < it->first; ++i) p *= x;
    r += it->second * p;
  }
  return r;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << '-';
    first = false;
    const Rational a = neg ? Rational(-c) : c;
    if (e == 0) {
      os << hkg::to_string(a);
      continue;
    }
    if (a != 1) os << hkg::to_string(a) << '*';
    os << var;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Numbers on G(6,10), G(3,10), G(3,7), G(3,6)

namespace {

const GrassCtx kG610(6, 10);

// c_20(Lambda^3 E) on G(6,10), computed once.
const ChowClass& class_of_Y() {
  static const ChowClass y =
      chern_of_bundle(kG610, wedge(3, BundleExpr::taut_sub_dual()), 20).degree_part(20);
  return y;
}

ChowClass inverse_truncated(const ChowClass& x, int d) {
  // x = 1 + y; 1/x = sum_j (-y)^j.
  ChowClass y = x - ChowClass::one(x.ctx());
  ChowClass term = ChowClass::one(x.ctx());
  ChowClass out = term;
  for (int j = 1; j <= d; ++j) {
    term = -term.times_truncated(y, d);
    out += term;
  }
  return out;
}

}  // namespace

std::map<std::string, Integer> paper_intersection_numbers() {
  const ChowClass& y = class_of_Y();
  auto c = [](int i) { return taut_chern(kG610, Taut::SubDual, i); };
  std::map<std::string, Integer> out;
  out["c1c3"] = schubert_integrate(y * c(1) * c(3));
  out["c4"] = schubert_integrate(y * c(4));
  out["c1^2c2"] = schubert_integrate(y * c(1) * c(1) * c(2));
  out["c2^2"] = schubert_integrate(y * c(2) * c(2));
  out["c1^4"] = schubert_integrate(y * c(1).pow(4));
  return out;
}

RestrictedC2 restricted_c2_of_Y() {
  const ChowClass cT = tangent_chern(kG610, 2);
  const ChowClass cF = chern_of_bundle(kG610, wedge(3, BundleExpr::taut_sub_dual()), 2);
  const ChowClass cY = cT.times_truncated(inverse_truncated(cF, 2), 2);
  RestrictedC2 r{cY.degree_part(2), 0, 0, 0};
  // sigma_2 = c1^2 - c2 and sigma_11 = c2 for the classes of E.
  const Integer s2 = r.cls.coefficient(Partition{2});
  const Integer s11 = r.cls.coefficient(Partition{1, 1});
  r.coeff_c1sq = s2;
  r.coeff_c2 = s11 - s2;
  const ChowClass h = ChowClass::sigma(kG610, Partition{1});
  r.pairing = schubert_integrate(r.cls * class_of_Y() * h * h);
  return r;
}

RationalPolynomial riemann_roch_hilbert(const Integer& chi_O) {
  const auto numbers = paper_intersection_numbers();
  const RestrictedC2 c2 = restricted_c2_of_Y();
  RationalPolynomial p;
  p.set(0, Rational(chi_O));
  p.set(2, Rational(c2.pairing, 24));
  p.set(4, Rational(numbers.at("c1^4"), 24));
  return p;
}

Integer dual_variety_degree(const GrassCtx& ctx, int h_multiple) {
  const int d = ctx.dim();
  const ChowClass cT = tangent_chern(ctx, d);
  const ChowClass h = ChowClass::sigma(ctx, Partition{1}, h_multiple);
  Integer total = 0;
  ChowClass hp = ChowClass::one(ctx);
  for (int i = 0; i <= d; ++i) {
    const Integer v = schubert_integrate(cT.degree_part(d - i) * hp);
    total += ((d - i) % 2 ? -1 : 1) * Integer(i + 1) * v;
    hp = hp * h;
  }
  return total < 0 ? Integer(-total) : total;
}

K3ModelReport k3_model_degree() {
  const GrassCtx ctx(3, 7);
  const BundleExpr w = wedge(2, BundleExpr::taut_sub_dual());
  const BundleExpr b = BundleExpr::line(1) + w + w + w;
  const int rank = static_cast<int>(b.rank(ctx));
  const ChowClass c = chern_of_bundle(ctx, b, rank);
  const ChowClass h = ChowClass::sigma(ctx, Partition{1});
  K3ModelReport r{ctx.dim() - rank, schubert_integrate(h * h * c.degree_part(rank)), c.degree_part(1),
                  tangent_chern(ctx, 1).degree_part(1), false};
  r.calabi_yau = r.det_bundle == r.c1_tangent;
  return r;
}

Integer companion_class_number() {
  const GrassCtx ctx(3, 6);
  const ChowClass c3 = chern_of_bundle(ctx, wedge(2, BundleExpr::taut_sub_dual()), 3).degree_part(3);
  return schubert_integrate(c3.pow(3));
}

}  // namespace hkg
