#include "hkg/bwb.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hkg {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

std::vector<int> negate_reverse(const std::vector<int>& v) {
  std::vector<int> r(v.rbegin(), v.rend());
  for (int& x : r) x = -x;
  return r;
}

// dim of the GL(r) irreducible with highest weight v (any integers).
Integer gl_dimension(const std::vector<int>& v) {
  if (v.empty()) return 1;
  const int shift = v.back();
  std::vector<int> p(v);
  for (int& x : p) x -= shift;
  return schur_dimension(Partition(p), static_cast<int>(v.size()));
}

// Tensor product of GL(r) irreducibles, by LR after shifting to partitions.
std::vector<std::pair<std::vector<int>, Integer>> gl_tensor(const std::vector<int>& a,
                                                            const std::vector<int>& b) {
  const int r = static_cast<int>(a.size());
  const int sa = a.back(), sb = b.back();
  std::vector<int> pa(a), pb(b);
  for (int& x : pa) x -= sa;
  for (int& x : pb) x -= sb;
  std::vector<std::pair<std::vector<int>, Integer>> out;
  const SchurVector prod = lr_multiply(Partition(pa), Partition(pb), r);
  for (const auto& [nu, c] : prod.terms()) {
    std::vector<int> w(r);
    for (int i = 0; i < r; ++i) w[i] = nu[i] + sa + sb;
    out.emplace_back(std::move(w), c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::vector<int> alpha, std::vector<int> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.empty() || beta_.empty()) throw std::invalid_argument("WeightVector: empty block");
  if (!weakly_decreasing(alpha_) || !weakly_decreasing(beta_))
    throw std::invalid_argument("WeightVector: blocks must be weakly decreasing: " + to_string());
}

WeightVector::WeightVector(const GrassCtx& ctx, const std::vector<int>& entries) {
  if (entries.size() != static_cast<std::size_t>(ctx.n))
    throw std::invalid_argument("WeightVector: expected " + std::to_string(ctx.n) + " entries");
  *this = WeightVector(std::vector<int>(entries.begin(), entries.begin() + ctx.k),
                       std::vector<int>(entries.begin() + ctx.k, entries.end()));
}

WeightVector WeightVector::trivial(const GrassCtx& ctx) {
  return WeightVector(std::vector<int>(ctx.k, 0), std::vector<int>(ctx.cols(), 0));
}

GrassCtx WeightVector::ctx() const {
  return GrassCtx(static_cast<int>(alpha_.size()), static_cast<int>(alpha_.size() + beta_.size()));
}

std::vector<int> WeightVector::entries() const {
  std::vector<int> e(alpha_);
  e.insert(e.end(), beta_.begin(), beta_.end());
  return e;
}

WeightVector WeightVector::dual() const { return WeightVector(negate_reverse(alpha_), negate_reverse(beta_)); }

WeightVector WeightVector::twisted(int d) const {
  std::vector<int> a(alpha_);
  for (int& x : a) x += d;
  return WeightVector(std::move(a), beta_);
}

WeightVector WeightVector::serre_dual() const {
  return dual().twisted(-static_cast<int>(alpha_.size() + beta_.size()));
}

Integer WeightVector::rank() const { return gl_dimension(alpha_) * gl_dimension(beta_); }

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < alpha_.size(); ++i) os << (i ? "," : "") << alpha_[i];
  os << ';';
  for (std::size_t i = 0; i < beta_.size(); ++i) os << (i ? "," : "") << beta_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Bott

CohomologyReport bott_resolve(const WeightVector& w) {
  std::vector<int> v = w.entries();
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) v[i] += n - 1 - i;
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) return {};
      if (v[i] < v[j]) ++inversions;
    }
  std::sort(v.begin(), v.end(), std::greater<>());
  for (int i = 0; i < n; ++i) v[i] -= n - 1 - i;
  return CohomologyReport{false, inversions, gl_dimension(v)};
}

Integer euler_characteristic(const CohomologyTable& t) {
  Integer chi = 0;
  for (const auto& [deg, dim] : t) chi += deg % 2 ? -dim : dim;
  return chi;
}

// ---------------------------------------------------------------------------
// HomogeneousBundle

HomogeneousBundle HomogeneousBundle::irreducible(const WeightVector& w, const Integer& mult) {
  HomogeneousBundle b(w.ctx());
  b.add(w, mult);
  return b;
}

void HomogeneousBundle::add(const WeightVector& w, const Integer& mult) {
  if (w.alpha().size() != static_cast<std::size_t>(ctx_.k) || w.beta().size() != static_cast<std::size_t>(ctx_.cols()))
    throw std::invalid_argument("HomogeneousBundle: weight " + w.to_string() + " not on " + ctx_.to_string());
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer HomogeneousBundle::rank() const {
  Integer r = 0;
  for (const auto& [w, m] : terms_) r += m * w.rank();
  return r;
}

HomogeneousBundle& HomogeneousBundle::operator+=(const HomogeneousBundle& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

HomogeneousBundle HomogeneousBundle::dual() const {
  HomogeneousBundle out(ctx_);
  for (const auto& [w, m] : terms_) out.add(w.dual(), m);
  return out;
}

HomogeneousBundle HomogeneousBundle::twisted(int d) const {
  HomogeneousBundle out(ctx_);
  for (const auto& [w, m] : terms_) out.add(w.twisted(d), m);
  return out;
}

HomogeneousBundle tensor(const HomogeneousBundle& a, const HomogeneousBundle& b) {
  if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("tensor: bundles on different Grassmannians");
  HomogeneousBundle out(a.ctx_);
  for (const auto& [wa, ma] : a.terms_)
    for (const auto& [wb, mb] : b.terms_) {
      const auto alphas = gl_tensor(wa.alpha(), wb.alpha());
      const auto betas = gl_tensor(wa.beta(), wb.beta());
      for (const auto& [al, ca] : alphas)
        for (const auto& [be, cb] : betas) out.add(WeightVector(al, be), ma * mb * ca * cb);
    }
  return out;
}

CohomologyTable HomogeneousBundle::cohomology() const {
  CohomologyTable t;
  for (const auto& [w, m] : terms_) {
    const CohomologyReport r = bott_resolve(w);
    if (!r.zero) t[r.degree] += m * r.dimension;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

using K = BundleExpr::Kind;

struct BlockAtom {
  int block;  // 0: E, 1: Q^*
  bool dual;
};

std::optional<BlockAtom> block_atom(const BundleExpr& b) {
  switch (b.kind()) {
    case K::TautSub: return BlockAtom{0, true};
    case K::TautQuot: return BlockAtom{1, true};
    case K::Dual: {
      auto a = block_atom(b.children()[0]);
      if (a) a->dual = !a->dual;
      return a;
    }
    default: return std::nullopt;
  }
}

class Decomposer {
 public:
  explicit Decomposer(const GrassCtx& ctx) : ctx_(ctx) {}

  HomogeneousBundle run(const BundleExpr& b) {
    switch (b.kind()) {
      case K::TautSub:
      case K::TautQuot: return schur_of_atom(*block_atom(b), Partition{1});
      case K::Trivial: return trivial(b.param());
      case K::Dual: return run(b.children()[0]).dual();
      case K::Sum: {
        HomogeneousBundle out = run(b.children()[0]);
        out += run(b.children()[1]);
        return out;
      }
      case K::Tensor: return tensor(run(b.children()[0]), run(b.children()[1]));
      case K::Twist: return run(b.children()[0]).twisted(b.param());
      case K::Wedge: return wedge(b.param(), b.children()[0], b);
      case K::Sym: return sym(b.param(), b.children()[0], b);
      case K::Schur: return schur_fn(b.shape(), b.children()[0], b);
    }
    throw std::logic_error("decompose: unknown node");
  }

 private:
  [[noreturn]] void unsupported(const BundleExpr& node) const {
    throw std::invalid_argument("decompose: unsupported node " + node.to_string() + " on " + ctx_.to_string());
  }

  HomogeneousBundle trivial(const Integer& copies) const {
    HomogeneousBundle out(ctx_);
    out.add(WeightVector::trivial(ctx_), copies);
    return out;
  }

  int block_rank(int block) const { return block == 0 ? ctx_.k : ctx_.cols(); }

  HomogeneousBundle schur_of_atom(const BlockAtom& a, const Partition& lambda) const {
    HomogeneousBundle out(ctx_);
    const int r = block_rank(a.block);
    if (lambda.length() > r) return out;
    std::vector<int> w(lambda.parts());
    w.resize(r, 0);
    if (a.dual) w = negate_reverse(w);
    std::vector<int> other(block_rank(1 - a.block), 0);
    out.add(a.block == 0 ? WeightVector(w, other) : WeightVector(other, w), 1);
    return out;
  }

  // Rank-one irreducible, if b decomposes to one.
  std::optional<WeightVector> as_line(const BundleExpr& b) {
    const HomogeneousBundle d = run(b);
    if (d.terms().size() != 1) return std::nullopt;
    const auto& [w, m] = *d.terms().begin();
    if (m != 1 || w.rank() != 1) return std::nullopt;
    return w;
  }

  static WeightVector power(const WeightVector& w, int p) {
    std::vector<int> a(w.alpha()), b(w.beta());
    for (int& x : a) x *= p;
    for (int& x : b) x *= p;
    return WeightVector(a, b);
  }

  HomogeneousBundle wedge(int p, const BundleExpr& x, const BundleExpr& node) {
    if (p == 0) return trivial(1);
    if (auto a = block_atom(x)) return schur_of_atom(*a, Partition(std::vector<int>(p, 1)));
    switch (x.kind()) {
      case K::Trivial: return trivial(binomial(x.param(), p));
      case K::Dual: return wedge(p, x.children()[0], node).dual();
      case K::Twist: return wedge(p, x.children()[0], node).twisted(p * x.param());
      case K::Sum: {
        HomogeneousBundle out(ctx_);
        for (int a = 0; a <= p; ++a)
          out += tensor(wedge(a, x.children()[0], node), wedge(p - a, x.children()[1], node));
        return out;
      }
      case K::Tensor: {
        auto a = block_atom(x.children()[0]);
        auto b = block_atom(x.children()[1]);
        if (a && b && a->block != b->block) {
          HomogeneousBundle out(ctx_);
          for (const auto& [l, lt] : cauchy_wedge(p)) out += tensor(schur_of_atom(*a, l), schur_of_atom(*b, lt));
          return out;
        }
        break;
      }
      case K::Wedge: {
        auto a = block_atom(x.children()[0]);
        const int m = x.param();
        const int r = a ? block_rank(a->block) : 0;
        if (a && m <= r) {
          if (Integer(p) > binomial(r, m)) return HomogeneousBundle(ctx_);
          HomogeneousBundle out(ctx_);
          const SchurVector pleth = wedge_of_wedge(p, m, r);
          for (const auto& [mu, c] : pleth.terms()) {
            HomogeneousBundle term = schur_of_atom(*a, mu);
            for (const auto& [w, mult] : term.terms()) out.add(w, mult * c);
          }
          return out;
        }
        break;
      }
      default: break;
    }
    if (auto line = as_line(x)) return p == 1 ? HomogeneousBundle::irreducible(*line) : HomogeneousBundle(ctx_);
    unsupported(node);
  }

  HomogeneousBundle sym(int p, const BundleExpr& x, const BundleExpr& node) {
    if (p == 0) return trivial(1);
    if (auto a = block_atom(x)) return schur_of_atom(*a, Partition{p});
    switch (x.kind()) {
      case K::Trivial: return trivial(binomial(x.param() + p - 1, p));
      case K::Dual: return sym(p, x.children()[0], node).dual();
      case K::Twist: return sym(p, x.children()[0], node).twisted(p * x.param());
      case K::Sum: {
        HomogeneousBundle out(ctx_);
        for (int a = 0; a <= p; ++a)
          out += tensor(sym(a, x.children()[0], node), sym(p - a, x.children()[1], node));
        return out;
      }
      case K::Tensor: {
        auto a = block_atom(x.children()[0]);
        auto b = block_atom(x.children()[1]);
        if (a && b && a->block != b->block) {
          HomogeneousBundle out(ctx_);
          for (const auto& [l, l2] : cauchy_sym(p)) out += tensor(schur_of_atom(*a, l), schur_of_atom(*b, l2));
          return out;
        }
        break;
      }
      default: break;
    }
    if (auto line = as_line(x)) return HomogeneousBundle::irreducible(power(*line, p));
    unsupported(node);
  }

  HomogeneousBundle schur_fn(const Partition& lambda, const BundleExpr& x, const BundleExpr& node) {
    if (lambda.empty()) return trivial(1);
    if (auto a = block_atom(x)) return schur_of_atom(*a, lambda);
    switch (x.kind()) {
      case K::Trivial: return trivial(schur_dimension(lambda, x.param()));
      case K::Dual: return schur_fn(lambda, x.children()[0], node).dual();
      case K::Twist: return schur_fn(lambda, x.children()[0], node).twisted(lambda.weight() * x.param());
      default: break;
    }
    if (auto line = as_line(x))
      return lambda.length() == 1 ? HomogeneousBundle::irreducible(power(*line, lambda.weight()))
                                  : HomogeneousBundle(ctx_);
    unsupported(node);
  }

  const GrassCtx& ctx_;
};

}  // namespace

HomogeneousBundle decompose(const GrassCtx& ctx, const BundleExpr& b) { return Decomposer(ctx).run(b); }

CohomologyTable cohomology_of_expr(const GrassCtx& ctx, const BundleExpr& b) {
  return decompose(ctx, b).cohomology();
}

// ---------------------------------------------------------------------------
// Koszul sums on G(6,10)

namespace {

const GrassCtx& g610() {
  static const GrassCtx g(6, 10);
  return g;
}

constexpr int kRankF = 20;

// Lambda^i F^*, decomposed once per i.
const HomogeneousBundle& wedge_f_dual(int i) {
  static std::mutex mutex;
  static std::map<int, HomogeneousBundle> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(i); it != cache.end()) return it->second;
  }
  HomogeneousBundle b = decompose(g610(), wedge(i, dual(koszul_bundle())));
  std::lock_guard lock(mutex);
  return cache.try_emplace(i, std::move(b)).first->second;
}

}  // namespace

BundleExpr koszul_bundle() { return wedge(3, BundleExpr::taut_sub_dual()); }

KoszulEuler koszul_euler_both(int t) {
  KoszulEuler r{t, 0, 0};
  for (int i = 0; i <= kRankF; ++i) {
    const HomogeneousBundle d = wedge_f_dual(i).twisted(t);
    const HomogeneousBundle p = decompose(g610(), twist(wedge(i, koszul_bundle()), t));
    const Integer sign = i % 2 ? -1 : 1;
    r.with_dual += sign * euler_characteristic(d.cohomology());
    r.without_dual += sign * euler_characteristic(p.cohomology());
  }
  return r;
}

Integer koszul_euler(int t) {
  Integer chi = 0;
  for (int i = 0; i <= kRankF; ++i)
    chi += (i % 2 ? -1 : 1) * euler_characteristic(wedge_f_dual(i).twisted(t).cohomology());
  return chi;
}

Integer koszul_hodge_bound(int q) {
  if (q < 0 || q > 4) throw std::invalid_argument("koszul_hodge_bound: q must be in 0..4");
  Integer total = 0;
  for (int i = 0; i <= kRankF; ++i) {
    const CohomologyTable t = wedge_f_dual(i).cohomology();
    if (auto it = t.find(q + i); it != t.end()) total += it->second;
  }
  return total;
}

std::array<Integer, 5> koszul_hodge_vector() {
  std::array<Integer, 5> v;
  for (int q = 0; q <= 4; ++q) v[q] = koszul_hodge_bound(q);
  return v;
}

GriffithsHodge griffiths_hodge_F() {
  const GrassCtx g(3, 10);
  const BundleExpr E = BundleExpr::taut_sub_dual();
  const BundleExpr Q = BundleExpr::taut_quot();
  auto h0 = [&](const BundleExpr& b) {
    const CohomologyTable t = cohomology_of_expr(g, b);
    auto it = t.find(0);
    return it == t.end() ? Integer(0) : it->second;
  };
  GriffithsHodge r;
  // omega = Lambda^21 Omega, so omega(10) is trivial.
  r.h_9_11 = h0(twist(wedge(g.dim(), dual(E * Q)), 10));
  r.h0_O1 = h0(BundleExpr::line(1));
  r.h0_T = h0(E * Q);
  r.h_10_10_van = (r.h0_O1 - 1) - r.h0_T;
  return r;
}

// ---------------------------------------------------------------------------
// Sweeps

std::string sweep_name(Sweep s) {
  switch (s) {
    case Sweep::FTensorWedge: return "F_tensor_wedge";
    case Sweep::S6DualTensorWedge: return "S6dual_tensor_wedge";
    case Sweep::OmegaTwists: return "omega_twists";
  }
  return "?";
}

std::optional<Sweep> parse_sweep(const std::string& name) {
  for (Sweep s : {Sweep::FTensorWedge, Sweep::S6DualTensorWedge, Sweep::OmegaTwists})
    if (sweep_name(s) == name) return s;
  return std::nullopt;
}

std::size_t SweepReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [](const SweepFinding& f) { return f.asserted_zero; }));
}

namespace {

std::vector<SweepFinding> sweep_index(Sweep s, int index) {
  std::vector<SweepFinding> out;
  auto record = [&](const CohomologyTable& t, int twist, auto asserted) {
    for (const auto& [deg, dim] : t) out.push_back(SweepFinding{index, twist, deg, dim, asserted(deg)});
  };
  switch (s) {
    case Sweep::FTensorWedge: {
      const HomogeneousBundle b = tensor(decompose(g610(), koszul_bundle()), wedge_f_dual(index));
      record(b.cohomology(), 0, [&](int deg) { return index > 0 && deg == index; });
      break;
    }
    case Sweep::S6DualTensorWedge: {
      const HomogeneousBundle b = tensor(decompose(g610(), BundleExpr::taut_sub_dual()), wedge_f_dual(index));
      record(b.cohomology(), 0, [&](int deg) { return deg == index + 1; });
      break;
    }
    case Sweep::OmegaTwists: {
      const GrassCtx g(3, 10);
      const HomogeneousBundle omega =
          decompose(g, wedge(index, dual(BundleExpr::taut_sub_dual() * BundleExpr::taut_quot())));
      for (int k = 1; k <= 10; ++k) record(omega.twisted(k).cohomology(), k, [](int deg) { return deg > 0; });
      break;
    }
  }
  return out;
}

}  // namespace

SweepReport vanishing_sweep(Sweep sweep, std::optional<std::pair<int, int>> range, double budget_seconds,
                            unsigned threads) {
  const int max_index = sweep == Sweep::OmegaTwists ? 21 : kRankF;
  const int min_index = sweep == Sweep::FTensorWedge ? 1 : 0;
  int lo = min_index, hi = max_index;
  if (range) std::tie(lo, hi) = *range;
  if (lo < 0 || hi > max_index || lo > hi)
    throw std::invalid_argument("vanishing_sweep: range must lie in 0.." + std::to_string(max_index));

  const auto start = std::chrono::steady_clock::now();
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::optional<std::vector<SweepFinding>>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};
  auto worker = [&] {
    for (;;) {
      if (out_of_time) return;
      const std::size_t slot = next++;
      if (slot >= count) return;
      results[slot] = sweep_index(sweep, lo + static_cast<int>(slot));
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (budget_seconds > 0 && elapsed > budget_seconds) out_of_time = true;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepReport report{sweep, lo, hi, lo - 1, false, {}};
  for (std::size_t slot = 0; slot < count && results[slot]; ++slot) {
    report.covered_hi = lo + static_cast<int>(slot);
    report.findings.insert(report.findings.end(), results[slot]->begin(), results[slot]->end());
  }
  report.complete = report.covered_hi == hi;
  return report;
}

}  // namespace hkg
