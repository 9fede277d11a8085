#include "hkg/trilab.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace hkg {

namespace {

constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

template <class F>
void require_dim(const Subspace<F>& w, int d, const char* what) {
  if (w.dim() != d)
    throw std::invalid_argument(std::string(what) + ": expected dimension " + std::to_string(d) + ", got " +
                                std::to_string(w.dim()));
}

template <class F>
void require_finite(const char* what) {
  if constexpr (!F::is_finite) throw std::invalid_argument(std::string(what) + ": enumeration needs a finite field");
}

template <class F>
Vec<F> lincomb(const F& f, const Mat<F>& basis, const Vec<F>& coeffs) {
  Vec<F> v = zero_vector(f, static_cast<int>(basis[0].size()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (f.is_zero(coeffs[j])) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(coeffs[j], basis[j][i]));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Finite-field enumeration

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t line_count(std::uint64_t p, int d) { return (upow(p, d) - 1) / (p - 1); }

// Lines of P^(d-1)(F_p) ordered by the position of the leading 1.
Vec<PrimeField> line_from_index(const PrimeField& f, int d, std::uint64_t idx) {
  const std::uint64_t p = f.characteristic();
  Vec<PrimeField> v = zero_vector(f, d);
  for (int lead = 0; lead < d; ++lead) {
    const std::uint64_t block = upow(p, d - 1 - lead);
    if (idx >= block) {
      idx -= block;
      continue;
    }
    v[lead] = 1;
    for (int i = d - 1; i > lead; --i) {
      v[i] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    return v;
  }
  throw std::out_of_range("line index");
}

// Calls fn on every r-dimensional subspace of F_p^m, as an r x m RREF matrix.
void for_each_rref(const PrimeField& f, int m, int r, const std::function<void(const Mat<PrimeField>&)>& fn) {
  const std::uint32_t p = f.characteristic();
  std::vector<int> piv(static_cast<std::size_t>(r));
  std::function<void(int, int)> choose = [&](int i, int start) {
    if (i == r) {
      std::vector<bool> is_piv(static_cast<std::size_t>(m), false);
      for (int c : piv) is_piv[c] = true;
      std::vector<std::pair<int, int>> slots;
      for (int row = 0; row < r; ++row)
        for (int c = piv[row] + 1; c < m; ++c)
          if (!is_piv[c]) slots.emplace_back(row, c);
      Mat<PrimeField> mat(static_cast<std::size_t>(r), zero_vector(f, m));
      for (int row = 0; row < r; ++row) mat[row][piv[row]] = 1;
      std::vector<std::uint32_t> digit(slots.size(), 0);
      while (true) {
        for (std::size_t s = 0; s < slots.size(); ++s) mat[slots[s].first][slots[s].second] = digit[s];
        fn(mat);
        std::size_t s = 0;
        while (s < digit.size() && ++digit[s] == p) digit[s++] = 0;
        if (s == digit.size()) break;
      }
      return;
    }
    for (int c = start; c <= m - (r - i); ++c) {
      piv[i] = c;
      choose(i + 1, c + 1);
    }
  };
  if (r == 0) {
    fn(Mat<PrimeField>{});
    return;
  }
  choose(0, 0);
}

struct ShardResult {
  std::uint64_t processed = 0;
  bool complete = false;
};

// Runs fn(worker, index) for index in [0, total) on a pool. A positive budget
// stops handing out chunks once exceeded.
ShardResult run_sharded(std::uint64_t total, unsigned threads, double budget_seconds,
                        const std::function<void(unsigned, std::uint64_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next{0}, done{0};
  std::atomic<bool> stop{false};
  const auto start = std::chrono::steady_clock::now();
  auto worker = [&](unsigned id) {
    while (!stop.load()) {
      const std::uint64_t lo = next.fetch_add(kChunk);
      if (lo >= total) return;
      const std::uint64_t hi = std::min(total, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) fn(id, i);
      done.fetch_add(hi - lo);
      if (budget_seconds > 0 &&
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget_seconds)
        stop = true;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();
  return {done.load(), done.load() == total};
}

// Basis of a complement of <a> inside the span of k.
Mat<PrimeField> quotient_basis(const PrimeField& f, const Vec<PrimeField>& a, const Mat<PrimeField>& k) {
  Mat<PrimeField> acc{a}, out;
  for (const auto& v : k) {
    acc.push_back(v);
    if (rank(f, acc) == static_cast<int>(acc.size())) out.push_back(v);
    else acc.pop_back();
  }
  return out;
}

// Calls fn(y, z) for one spanning pair of every 3-space <a, y, z> inside
// span(k), given a in span(k).
void for_each_plane_over(const PrimeField& f, const Vec<PrimeField>& a, const Mat<PrimeField>& k,
                         const std::function<void(const Vec<PrimeField>&, const Vec<PrimeField>&)>& fn) {
  const Mat<PrimeField> q = quotient_basis(f, a, k);
  const int m = static_cast<int>(q.size());
  if (m < 2) return;
  for_each_rref(f, m, 2, [&](const Mat<PrimeField>& t) { fn(lincomb(f, q, t[0]), lincomb(f, q, t[1])); });
}

template <class F>
std::vector<Subspace<F>> merge_sets(std::vector<std::set<Subspace<F>>>& parts) {
  std::set<Subspace<F>> all;
  for (auto& s : parts) all.merge(s);
  return {all.begin(), all.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// Trivector

template <class F>
Trivector<F>::Trivector(const F& f, int n) : f_(f), n_(n) {
  if (n < 0) throw std::invalid_argument("Trivector: negative dimension");
  c_.assign(static_cast<std::size_t>(binomial(n, 3)), f.zero());
}

template <class F>
std::size_t Trivector<F>::index(int i, int j, int k) const {
  // Rank of (i,j,k) among increasing triples of {0..n-1}.
  std::size_t r = 0;
  for (int a = 0; a < i; ++a) r += static_cast<std::size_t>((n_ - 1 - a) * (n_ - 2 - a) / 2);
  for (int b = i + 1; b < j; ++b) r += static_cast<std::size_t>(n_ - 1 - b);
  return r + static_cast<std::size_t>(k - j - 1);
}

namespace {
// Sorts (i,j,k) and returns the permutation sign, or 0 on a repeat.
int sort3(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) std::swap(i, j), sign = -sign;
  if (j > k) std::swap(j, k), sign = -sign;
  if (i > j) std::swap(i, j), sign = -sign;
  return (i == j || j == k) ? 0 : sign;
}
}  // namespace

template <class F>
typename F::Elem Trivector<F>::coefficient(int i, int j, int k) const {
  for (int x : {i, j, k})
    if (x < 0 || x >= n_) throw std::out_of_range("Trivector: index out of range");
  const int sign = sort3(i, j, k);
  if (sign == 0) return f_.zero();
  const auto& v = c_[index(i, j, k)];
  return sign > 0 ? v : f_.neg(v);
}

template <class F>
void Trivector<F>::set(int i, int j, int k, const Elem& value) {
  for (int x : {i, j, k})
    if (x < 0 || x >= n_) throw std::out_of_range("Trivector: index out of range");
  const int sign = sort3(i, j, k);
  if (sign == 0) throw std::invalid_argument("Trivector: repeated index");
  c_[index(i, j, k)] = sign > 0 ? value : f_.neg(value);
}

template <class F>
bool Trivector<F>::is_zero() const {
  for (const auto& x : c_)
    if (!f_.is_zero(x)) return false;
  return true;
}

template <class F>
Mat<F> Trivector<F>::contract(const Vec<F>& u) const {
  if (static_cast<int>(u.size()) != n_) throw std::invalid_argument("Trivector: vector length mismatch");
  Mat<F> m(static_cast<std::size_t>(n_), zero_vector(f_, n_));
  std::size_t t = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k, ++t) {
        const auto& c = c_[t];
        if (f_.is_zero(c)) continue;
        if (!f_.is_zero(u[i])) {
          const auto x = f_.mul(c, u[i]);
          m[j][k] = f_.add(m[j][k], x);
          m[k][j] = f_.sub(m[k][j], x);
        }
        if (!f_.is_zero(u[j])) {
          const auto x = f_.mul(c, u[j]);
          m[i][k] = f_.sub(m[i][k], x);
          m[k][i] = f_.add(m[k][i], x);
        }
        if (!f_.is_zero(u[k])) {
          const auto x = f_.mul(c, u[k]);
          m[i][j] = f_.add(m[i][j], x);
          m[j][i] = f_.sub(m[j][i], x);
        }
      }
  return m;
}

template <class F>
Vec<F> Trivector<F>::contract(const Vec<F>& u, const Vec<F>& v) const {
  const Mat<F> m = contract(u);
  Vec<F> out = zero_vector(f_, n_);
  for (int j = 0; j < n_; ++j) {
    if (f_.is_zero(v[j])) continue;
    for (int k = 0; k < n_; ++k) out[k] = f_.add(out[k], f_.mul(v[j], m[j][k]));
  }
  return out;
}

template <class F>
typename F::Elem Trivector<F>::eval(const Vec<F>& u, const Vec<F>& v, const Vec<F>& w) const {
  const Vec<F> l = contract(u, v);
  auto r = f_.zero();
  for (int k = 0; k < n_; ++k) r = f_.add(r, f_.mul(l[k], w[k]));
  return r;
}

// ---------------------------------------------------------------------------
// Loci

template <class F>
Trivector<F> restrict(const Trivector<F>& s, const Mat<F>& vectors) {
  const int d = static_cast<int>(vectors.size());
  Trivector<F> out(s.field(), d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      const Vec<F> l = s.contract(vectors[a], vectors[b]);
      for (int c = b + 1; c < d; ++c) {
        auto x = s.field().zero();
        for (int k = 0; k < s.dim(); ++k) x = s.field().add(x, s.field().mul(l[k], vectors[c][k]));
        out.set(a, b, c, x);
      }
    }
  return out;
}

template <class F>
Trivector<F> restrict(const Trivector<F>& s, const Subspace<F>& w) {
  return restrict(s, w.basis());
}

template <class F>
bool in_F(const Trivector<F>& s, const Subspace<F>& w3) {
  require_dim(w3, 3, "in_F");
  return restrict(s, w3).is_zero();
}

template <class F>
bool in_Y(const Trivector<F>& s, const Subspace<F>& w6) {
  require_dim(w6, 6, "in_Y");
  return restrict(s, w6).is_zero();
}

template <class F>
bool singular_at(const Trivector<F>& s, const Subspace<F>& w3) {
  require_dim(w3, 3, "singular_at");
  const auto& b = w3.basis();
  for (const auto& pr : kPairs)
    if (!is_zero_vector(s.field(), s.contract(b[pr[0]], b[pr[1]]))) return false;
  return true;
}

template <class F>
bool line_in_Y(const Trivector<F>& s, const Subspace<F>& v5, const Subspace<F>& v7) {
  require_dim(v5, 5, "line_in_Y");
  require_dim(v7, 7, "line_in_Y");
  if (!v7.contains(v5)) throw std::invalid_argument("line_in_Y: V5 is not contained in V7");
  if (!restrict(s, v5).is_zero()) return false;
  const auto& b5 = v5.basis();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const Vec<F> l = s.contract(b5[i], b5[j]);
      for (const auto& v : v7.basis()) {
        auto x = s.field().zero();
        for (int k = 0; k < s.dim(); ++k) x = s.field().add(x, s.field().mul(l[k], v[k]));
        if (!s.field().is_zero(x)) return false;
      }
    }
  return true;
}

template <class F>
bool g27_test(const Trivector<F>& s, const Subspace<F>& v8, const Vec<F>& x) {
  require_dim(v8, 8, "g27_test");
  if (is_zero_vector(s.field(), x)) throw std::invalid_argument("g27_test: x = 0");
  if (!v8.contains(x)) throw std::invalid_argument("g27_test: x is not in V8");
  const Mat<F> m = s.contract(x);
  const auto& b = v8.basis();
  const auto& f = s.field();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      auto r = f.zero();
      for (int a = 0; a < s.dim(); ++a) {
        if (f.is_zero(b[i][a])) continue;
        for (int c = 0; c < s.dim(); ++c) r = f.add(r, f.mul(b[i][a], f.mul(m[a][c], b[j][c])));
      }
      if (!f.is_zero(r)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Configurations

template <class F>
Configuration<F> build_configuration(ConfigKind kind, const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 10;
  const bool a = kind == ConfigKind::A;
  auto in_range = [](int x, int lo, int hi) { return x >= lo && x <= hi; };
  // 1-based triples inside V7 = <e1..e7> or V7' = <e4..e10>.
  const std::array<int, 3> t7 = a ? std::array<int, 3>{1, 6, 7} : std::array<int, 3>{5, 6, 7};
  const std::array<int, 3> t7p = a ? std::array<int, 3>{4, 5, 10} : std::array<int, 3>{5, 6, 7};
  Trivector<F> s(f, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const std::array<int, 3> t{i, j, k};
        const bool inside7 = in_range(i, 1, 7) && in_range(k, 1, 7);
        const bool inside7p = in_range(i, 4, 10) && in_range(k, 4, 10);
        typename F::Elem v = f.zero();
        if (inside7 || inside7p) {
          if ((inside7 && t == t7) || (inside7p && t == t7p)) v = f.one();
        } else {
          v = f.random(rng);
        }
        s.set(i - 1, j - 1, k - 1, v);
      }

  using S = Subspace<F>;
  const S v7 = S::coordinate(f, n, {1, 2, 3, 4, 5, 6, 7});
  const S v7p = S::coordinate(f, n, {4, 5, 6, 7, 8, 9, 10});
  const S v4 = a ? S::coordinate(f, n, {2, 3, 4, 5}) : S::coordinate(f, n, {1, 2, 3, 4});
  const S v4p = a ? S::coordinate(f, n, {6, 7, 8, 9}) : S::coordinate(f, n, {4, 8, 9, 10});
  const S target = a ? S::zero(f, n) : v4.intersect(v4p);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec<F> v = zero_vector(f, n), vp = zero_vector(f, n);
    for (int i = 0; i < 7; ++i) v[i] = f.random(rng);
    for (int i = 3; i < 10; ++i) vp[i] = f.random(rng);
    const S v5 = v4 + S::span(f, n, {v});
    const S v5p = v4p + S::span(f, n, {vp});
    if (v5.dim() != 5 || v5p.dim() != 5) continue;
    if (!(v5.intersect(v5p) == target)) continue;
    if (v5.intersect(v7p).dim() != 2 || v5p.intersect(v7).dim() != 2) continue;
    return Configuration<F>{kind, s, v4, v5, v7, v4p, v5p, v7p};
  }
  throw std::runtime_error("build_configuration: no admissible V5, V5' in 1000 draws");
}

template <class F>
ZIntersection<F> z_intersect(const Configuration<F>& c) {
  const Subspace<F> meet = c.v7.intersect(c.v7p);
  ZIntersection<F> out{c.v5.intersect(meet), c.v5p.intersect(meet), {}, false};
  const int da = out.trace.dim(), db = out.trace_prime.dim();
  if (da < 2 || db < 2) return out;
  if (da > 2 || db > 2 || out.trace == out.trace_prime) {
    out.positive_dimensional = true;
    return out;
  }
  // Both traces are planes, so W3 contains both.
  const Subspace<F> sum = out.trace + out.trace_prime;
  if (sum.dim() == 3) out.points.push_back(sum);
  return out;
}

// ---------------------------------------------------------------------------
// The affine system

template <class F>
Mat<F> beta_matrix(const Trivector<F>& s, const Subspace<F>& w, const Subspace<F>& w1, const Subspace<F>& w2) {
  require_dim(w, 3, "beta_matrix");
  require_dim(w1, 3, "beta_matrix");
  require_dim(w2, 3, "beta_matrix");
  const F& f = s.field();
  const auto &bw = w.basis(), &b1 = w1.basis(), &b2 = w2.basis();
  Mat<F> m(9, zero_vector(f, 9));
  for (int c = 0; c < 3; ++c)
    for (int p = 0; p < 3; ++p) {
      const int p1 = kPairs[p][0], p2 = kPairs[p][1];
      for (int b = 0; b < 3; ++b) {
        m[3 * c + p][3 * p1 + b] = s.eval(bw[c], b2[b], b1[p2]);
        m[3 * c + p][3 * p2 + b] = s.eval(bw[c], b1[p1], b2[b]);
      }
    }
  return m;
}

template <class F>
PhiResult<F> phi_solve(const Trivector<F>& s, const Subspace<F>& w, const Subspace<F>& w1, const Subspace<F>& w2) {
  require_dim(w, 3, "phi_solve: W");
  require_dim(w1, 3, "phi_solve: W'");
  require_dim(w2, 3, "phi_solve: W''");
  if (w.intersect(w1).dim() != 0) throw std::invalid_argument("phi_solve: W and W' are not transverse");
  if (w.intersect(w2).dim() != 0) throw std::invalid_argument("phi_solve: W and W'' are not transverse");
  if (w1.intersect(w2).dim() != 0) throw std::invalid_argument("phi_solve: W' and W'' are not transverse");
  if ((w + w1 + w2).dim() != 9) throw std::invalid_argument("phi_solve: W + W' + W'' is not direct");
  if (!singular_at(s, w)) throw std::invalid_argument("phi_solve: F_sigma is not singular at W");
  if (!restrict(s, w + w1).is_zero()) throw std::invalid_argument("phi_solve: W + W' is not in Y_sigma");
  if (!restrict(s, w + w2).is_zero()) throw std::invalid_argument("phi_solve: W + W'' is not in Y_sigma");

  const F& f = s.field();
  const auto &bw = w.basis(), &b1 = w1.basis(), &b2 = w2.basis();
  PhiResult<F> out{PhiOutcome::Empty, std::nullopt, -1, Mat<F>(18, zero_vector(f, 18)), zero_vector(f, 18), false};
  auto fill = [&](int row, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z, int ux, int uy, int uz) {
    out.constant[row] = s.eval(x, y, z);
    for (int c = 0; c < 3; ++c) {
      out.linear_part[row][ux + c] = f.add(out.linear_part[row][ux + c], s.eval(bw[c], y, z));
      out.linear_part[row][uy + c] = f.add(out.linear_part[row][uy + c], s.eval(x, bw[c], z));
      out.linear_part[row][uz + c] = f.add(out.linear_part[row][uz + c], s.eval(x, y, bw[c]));
    }
  };
  for (int p = 0; p < 3; ++p) {
    const int p1 = kPairs[p][0], p2 = kPairs[p][1];
    for (int b = 0; b < 3; ++b) fill(3 * p + b, b1[p1], b1[p2], b2[b], 3 * p1, 3 * p2, 9 + 3 * b);
    for (int a = 0; a < 3; ++a) fill(9 + 3 * p + a, b2[p1], b2[p2], b1[a], 9 + 3 * p1, 9 + 3 * p2, 3 * a);
  }
  out.zero_is_solution = is_zero_vector(f, out.constant);

  Vec<F> rhs(18);
  for (int i = 0; i < 18; ++i) rhs[i] = f.neg(out.constant[i]);
  const auto sol = solve_affine(f, out.linear_part, rhs, 18);
  if (!sol) return out;
  out.family_dimension = static_cast<int>(sol->kernel.size());
  if (out.family_dimension > 0) {
    out.outcome = PhiOutcome::AffineFamily;
    return out;
  }
  Mat<F> graph;
  for (int a = 0; a < 3; ++a)
    graph.push_back(lincomb(f, Mat<F>{b1[a], bw[0], bw[1], bw[2]},
                            Vec<F>{f.one(), sol->particular[3 * a], sol->particular[3 * a + 1],
                                   sol->particular[3 * a + 2]}));
  for (int b = 0; b < 3; ++b)
    graph.push_back(lincomb(f, Mat<F>{b2[b], bw[0], bw[1], bw[2]},
                            Vec<F>{f.one(), sol->particular[9 + 3 * b], sol->particular[9 + 3 * b + 1],
                                   sol->particular[9 + 3 * b + 2]}));
  Subspace<F> w6 = Subspace<F>::from_basis(f, s.dim(), graph);
  if (!in_Y(s, w6)) throw std::logic_error("phi_solve: solution fails the Y_sigma check");
  out.outcome = PhiOutcome::Unique;
  out.w6 = std::move(w6);
  return out;
}

// ---------------------------------------------------------------------------
// Enumerations

template <class F>
CompanionReport<F> count_companions(const Trivector<F>& s, const Subspace<F>& w, const Subspace<F>& w6,
                                    unsigned threads) {
  require_finite<F>("count_companions");
  require_dim(w, 3, "count_companions: W");
  require_dim(w6, 6, "count_companions: W6");
  if (!singular_at(s, w)) throw std::invalid_argument("count_companions: F_sigma is not singular at W");
  if (!in_Y(s, w6)) throw std::invalid_argument("count_companions: W6 is not in Y_sigma");
  if (w.intersect(w6).dim() != 0) throw std::invalid_argument("count_companions: W meets W6");

  CompanionReport<F> out;
  if constexpr (F::is_finite) {
    const F& f = s.field();
    const auto& m6 = w6.basis();
    // B_c(x, y) = sigma(w_c, x, y) on W6 coordinates.
    std::array<Mat<F>, 3> forms;
    for (int c = 0; c < 3; ++c) {
      forms[c] = Mat<F>(6, zero_vector(f, 6));
      const Mat<F> full = s.contract(w.basis()[c]);
      for (int i = 0; i < 6; ++i) {
        Vec<F> row = zero_vector(f, s.dim());
        for (int a = 0; a < s.dim(); ++a)
          for (int b = 0; b < s.dim(); ++b) row[b] = f.add(row[b], f.mul(m6[i][a], full[a][b]));
        for (int j = 0; j < 6; ++j) {
          auto x = f.zero();
          for (int b = 0; b < s.dim(); ++b) x = f.add(x, f.mul(row[b], m6[j][b]));
          forms[c][i][j] = x;
        }
      }
    }
    auto pair = [&](int c, const Vec<F>& x, const Vec<F>& y) {
      auto r = f.zero();
      for (int i = 0; i < 6; ++i) {
        if (f.is_zero(x[i])) continue;
        for (int j = 0; j < 6; ++j) r = f.add(r, f.mul(x[i], f.mul(forms[c][i][j], y[j])));
      }
      return r;
    };
    const unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::set<Subspace<F>>> found(workers);
    const std::uint64_t total = line_count(f.characteristic(), 6);
    const auto res = run_sharded(total, workers, 0, [&](unsigned id, std::uint64_t idx) {
      const Vec<F> a = line_from_index(f, 6, idx);
      Mat<F> rows(3, zero_vector(f, 6));
      for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) rows[c][j] = f.add(rows[c][j], f.mul(a[i], forms[c][i][j]));
      for_each_plane_over(f, a, nullspace(f, rows, 6), [&](const Vec<F>& y, const Vec<F>& z) {
        for (int c = 0; c < 3; ++c)
          if (!f.is_zero(pair(c, y, z))) return;
        found[id].insert(Subspace<F>::span(f, 6, {a, y, z}));
      });
    });
    out.lines_scanned = res.processed;
    for (const auto& local : merge_sets(found)) {
      ++out.count;
      if (out.companions.size() < CompanionReport<F>::kMaxStored) {
        Mat<F> vs;
        for (const auto& row : local.basis()) vs.push_back(lincomb(f, m6, row));
        out.companions.push_back(Subspace<F>::from_basis(f, s.dim(), vs));
      }
    }
    std::sort(out.companions.begin(), out.companions.end());
    out.spans_w6 = out.count == 2 && (out.companions[0] + out.companions[1]) == w6;
  }
  return out;
}

template <class F>
std::vector<Subspace<F>> s_points(const Trivector<F>& s, const Subspace<F>& w, unsigned threads) {
  require_finite<F>("s_points");
  require_dim(w, 3, "s_points");
  if (!singular_at(s, w)) throw std::invalid_argument("s_points: F_sigma is not singular at W");
  std::vector<Subspace<F>> out;
  if constexpr (F::is_finite) {
    const F& f = s.field();
    const int n = s.dim();
    // Complement spanned by coordinate vectors off the pivots of W.
    Mat<F> q;
    for (int i = 0; i < n; ++i) {
      Mat<F> acc = w.basis();
      acc.insert(acc.end(), q.begin(), q.end());
      acc.push_back(unit_vector(f, n, i));
      if (rank(f, acc) == static_cast<int>(acc.size())) q.push_back(acc.back());
    }
    const int dq = static_cast<int>(q.size());
    const std::uint64_t total = line_count(f.characteristic(), dq);
    if (total > kMaxScanLines)
      throw std::invalid_argument("s_points: P(Q) has " + std::to_string(total) + " lines over F_" +
                                  std::to_string(f.characteristic()) + ", limit " + std::to_string(kMaxScanLines));
    const auto& bw = w.basis();
    const unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::set<Subspace<F>>> found(workers);
    run_sharded(total, workers, 0, [&](unsigned id, std::uint64_t idx) {
      const Vec<F> a = lincomb(f, q, line_from_index(f, dq, idx));
      // y in Q with sigma(w_c, a, y) = 0, in Q coordinates.
      Mat<F> rows(3, zero_vector(f, dq));
      for (int c = 0; c < 3; ++c) {
        const Vec<F> l = s.contract(bw[c], a);
        for (int j = 0; j < dq; ++j)
          for (int k = 0; k < n; ++k) rows[c][j] = f.add(rows[c][j], f.mul(l[k], q[j][k]));
      }
      Mat<F> kernel;
      for (const auto& x : nullspace(f, rows, dq)) kernel.push_back(lincomb(f, q, x));
      for_each_plane_over(f, a, kernel, [&](const Vec<F>& y, const Vec<F>& z) {
        const Vec<F> l = s.contract(y, z);
        for (const auto* v : {&bw[0], &bw[1], &bw[2], &a}) {
          auto x = f.zero();
          for (int k = 0; k < n; ++k) x = f.add(x, f.mul(l[k], (*v)[k]));
          if (!f.is_zero(x)) return;
        }
        found[id].insert(Subspace<F>::span(f, n, {a, y, z}));
      });
    });
    out = merge_sets(found);
  }
  return out;
}

template <class F>
ScanReport<F> scan_singular_points(const Trivector<F>& s, double budget_seconds, unsigned threads) {
  require_finite<F>("scan_singular_points");
  ScanReport<F> out;
  if constexpr (F::is_finite) {
    const F& f = s.field();
    const int n = s.dim();
    const std::uint64_t p = f.characteristic();
    out.lines_total = line_count(p, n);
    if (out.lines_total > kMaxScanLines) {
      // Gaussian binomial [n; 3]_p.
      const double points = double(upow(p, n) - 1) * double(upow(p, n - 1) - 1) * double(upow(p, n - 2) - 1) /
                            (double(p * p * p - 1) * double(p * p - 1) * double(p - 1));
      std::ostringstream os;
      os << "scan_singular_points: G(3," << n << ")(F_" << p << ") has about " << points << " points and P^" << n - 1
         << " has " << out.lines_total << " lines; the limit is " << kMaxScanLines << " lines";
      throw std::invalid_argument(os.str());
    }
    const unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::set<Subspace<F>>> found(workers);
    const auto res = run_sharded(out.lines_total, workers, budget_seconds, [&](unsigned id, std::uint64_t idx) {
      const Vec<F> a = line_from_index(f, n, idx);
      // W lies in the kernel of sigma(a, ., .).
      const Mat<F> k = nullspace(f, s.contract(a), n);
      if (k.size() < 3) return;
      for_each_plane_over(f, a, k, [&](const Vec<F>& y, const Vec<F>& z) {
        if (is_zero_vector(f, s.contract(y, z))) found[id].insert(Subspace<F>::span(f, n, {a, y, z}));
      });
    });
    out.lines_scanned = res.processed;
    out.complete = res.complete;
    out.points = merge_sets(found);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Seeded constructions

template <class F>
Trivector<F> random_trivector(const F& f, std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Trivector<F> s(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) s.set(i, j, k, f.random(rng));
  return s;
}

namespace {
template <class F, class Pred>
Trivector<F> random_with_zeros(const F& f, std::mt19937_64& rng, Pred zero_at) {
  Trivector<F> s(f, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      for (int k = j + 1; k < 10; ++k) s.set(i, j, k, zero_at(i, j, k) ? f.zero() : f.random(rng));
  return s;
}

int count_in(int lo, int hi, std::initializer_list<int> xs) {
  int c = 0;
  for (int x : xs) c += (x >= lo && x <= hi);
  return c;
}
}  // namespace

template <class F>
Trivector<F> singular_trivector(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_with_zeros(f, rng, [](int i, int j, int k) { return count_in(0, 2, {i, j, k}) >= 2; });
}

template <class F>
CompanionInstance<F> companion_instance(const F& f, std::uint64_t seed, int max_attempts) {
  std::mt19937_64 rng(seed);
  using S = Subspace<F>;
  const S w = S::coordinate(f, 10, {1, 2, 3});
  const S w1 = S::coordinate(f, 10, {4, 5, 6});
  const S w2 = S::coordinate(f, 10, {7, 8, 9});
  auto in_w2 = [](int x) { return x <= 2 || (x >= 6 && x <= 8); };
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Trivector<F> s = random_with_zeros(f, rng, [&](int i, int j, int k) {
      return count_in(0, 2, {i, j, k}) >= 2 || k <= 5 || (in_w2(i) && in_w2(j) && in_w2(k));
    });
    auto phi = phi_solve(s, w, w1, w2);
    if (phi.outcome == PhiOutcome::Unique) return CompanionInstance<F>{std::move(s), w, w1, w2, *phi.w6, attempt};
  }
  throw std::runtime_error("companion_instance: no unique solution in " + std::to_string(max_attempts) + " attempts");
}

template <class F>
Trivector<F> g27_trivector(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_with_zeros(f, rng, [](int i, int, int k) { return i == 0 && k <= 7; });
}

// ---------------------------------------------------------------------------
// Text format

template <class F>
std::string to_text(const Trivector<F>& s) {
  std::ostringstream os;
  os << s.field().name() << '\n';
  if (s.dim() != 10) os << "dim " << s.dim() << '\n';
  const int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto v = s.coefficient(i, j, k);
        if (!s.field().is_zero(v)) os << i + 1 << ' ' << j + 1 << ' ' << k + 1 << " : " << s.field().format(v) << '\n';
      }
  return os.str();
}

namespace {
template <class F>
Trivector<F> parse_body(const F& f, std::istringstream& in, int& line_no) {
  std::string line;
  std::streampos body = in.tellg();
  int n = 10;
  // Optional dim line.
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) {
      body = in.tellg();
      continue;
    }
    if (word == "dim") {
      if (!(ls >> n) || n < 0 || n > 64) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad dim");
      body = in.tellg();
    } else {
      --line_no;
      in.clear();
      in.seekg(body);
    }
    break;
  }
  Trivector<F> s(f, n);
  std::vector<bool> seen(s.coefficients().size(), false);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int i, j, k;
    std::string colon, value, extra;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!(ls >> i >> j >> k >> colon >> value) || colon != ":" || (ls >> extra))
      throw std::invalid_argument(where + "expected 'i j k : value'");
    if (!(1 <= i && i < j && j < k && k <= n)) throw std::invalid_argument(where + "indices must satisfy 1 <= i < j < k <= n");
    typename F::Elem v;
    try {
      v = f.parse(value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
    s.set(i - 1, j - 1, k - 1, v);
  }
  return s;
}
}  // namespace

AnyTrivector parse_trivector(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "Q") return parse_body(RationalField{}, in, line_no);
    if (word == "Fp") {
      long long p;
      if (!(ls >> p) || p < 2 || p > (1ll << 31)) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad prime");
      return parse_body(PrimeField(static_cast<std::uint32_t>(p)), in, line_no);
    }
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected header 'Q' or 'Fp p'");
  }
  throw std::invalid_argument("empty trivector text");
}

// ---------------------------------------------------------------------------

#define HKG_TRILAB_INSTANTIATE(F)                                                                              \
  template class Trivector<F>;                                                                                 \
  template Trivector<F> restrict(const Trivector<F>&, const Mat<F>&);                                          \
  template Trivector<F> restrict(const Trivector<F>&, const Subspace<F>&);                                     \
  template bool in_F(const Trivector<F>&, const Subspace<F>&);                                                 \
  template bool in_Y(const Trivector<F>&, const Subspace<F>&);                                                 \
  template bool singular_at(const Trivector<F>&, const Subspace<F>&);                                          \
  template bool line_in_Y(const Trivector<F>&, const Subspace<F>&, const Subspace<F>&);                        \
  template Configuration<F> build_configuration(ConfigKind, const F&, std::uint64_t);                          \
  template ZIntersection<F> z_intersect(const Configuration<F>&);                                              \
  template PhiResult<F> phi_solve(const Trivector<F>&, const Subspace<F>&, const Subspace<F>&,                 \
                                  const Subspace<F>&);                                                         \
  template Mat<F> beta_matrix(const Trivector<F>&, const Subspace<F>&, const Subspace<F>&, const Subspace<F>&); \
  template CompanionReport<F> count_companions(const Trivector<F>&, const Subspace<F>&, const Subspace<F>&,    \
                                               unsigned);                                                      \
  template std::vector<Subspace<F>> s_points(const Trivector<F>&, const Subspace<F>&, unsigned);               \
  template bool g27_test(const Trivector<F>&, const Subspace<F>&, const Vec<F>&);                              \
  template ScanReport<F> scan_singular_points(const Trivector<F>&, double, unsigned);                          \
  template Trivector<F> random_trivector(const F&, std::uint64_t, int);                                        \
  template Trivector<F> singular_trivector(const F&, std::uint64_t);                                           \
  template CompanionInstance<F> companion_instance(const F&, std::uint64_t, int);                              \
  template Trivector<F> g27_trivector(const F&, std::uint64_t);                                                \
  template std::string to_text(const Trivector<F>&);

HKG_TRILAB_INSTANTIATE(RationalField)
HKG_TRILAB_INSTANTIATE(PrimeField)

}  // namespace hkg
