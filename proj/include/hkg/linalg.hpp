#pragma once

// Exact row reduction and subspaces over a field from field.hpp.

#include "hkg/field.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hkg {

template <class F>
using Vec = std::vector<typename F::Elem>;
template <class F>
using Mat = std::vector<Vec<F>>;

template <class F>
Vec<F> zero_vector(const F& f, int n) {
  return Vec<F>(static_cast<std::size_t>(n), f.zero());
}

template <class F>
Vec<F> unit_vector(const F& f, int n, int i) {
  Vec<F> v = zero_vector(f, n);
  v[static_cast<std::size_t>(i)] = f.one();
  return v;
}

template <class F>
bool is_zero_vector(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

/// Reduces m in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot columns.
template <class F>
std::vector<int> rref(const F& f, Mat<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && f.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const auto inv = f.inv(m[row][c]);
    for (auto& x : m[row]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || f.is_zero(m[r][c])) continue;
      const auto factor = m[r][c];
      for (int k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

template <class F>
int rank(const F& f, Mat<F> m) {
  return static_cast<int>(rref(f, m).size());
}

/// Basis of {x in F^cols : m x = 0}.
template <class F>
Mat<F> nullspace(const F& f, Mat<F> m, int cols) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[p] = true;
  Mat<F> out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v = unit_vector(f, cols, free);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Solution set {x : m x = b}: a particular solution and a kernel basis, or
/// nullopt when inconsistent.
template <class F>
struct AffineSolution {
  Vec<F> particular;
  Mat<F> kernel;
};

template <class F>
std::optional<AffineSolution<F>> solve_affine(const F& f, const Mat<F>& m, const Vec<F>& b, int cols) {
  Mat<F> aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  if (aug.empty()) return AffineSolution<F>{zero_vector(f, cols), nullspace(f, m, cols)};
  const auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec<F> x = zero_vector(f, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return AffineSolution<F>{std::move(x), nullspace(f, m, cols)};
}

/// A linear subspace of F^n, stored by its reduced row echelon basis.
template <class F>
class Subspace {
 public:
  /// Span of the given vectors; they may be dependent.
  static Subspace span(const F& f, int ambient, Mat<F> vectors) {
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("Subspace: vector length mismatch");
    Subspace s(f, ambient);
    rref(f, vectors);
    s.basis_ = std::move(vectors);
    return s;
  }
  /// Throws std::invalid_argument if the vectors are dependent.
  static Subspace from_basis(const F& f, int ambient, const Mat<F>& vectors) {
    Subspace s = span(f, ambient, vectors);
    if (s.dim() != static_cast<int>(vectors.size())) throw std::invalid_argument("Subspace: vectors are dependent");
    return s;
  }
  /// <e_i : i in indices>, indices 1-based.
  static Subspace coordinate(const F& f, int ambient, const std::vector<int>& indices) {
    Mat<F> vs;
    for (int i : indices) {
      if (i < 1 || i > ambient) throw std::invalid_argument("Subspace: coordinate index out of range");
      vs.push_back(unit_vector(f, ambient, i - 1));
    }
    return from_basis(f, ambient, vs);
  }
  static Subspace zero(const F& f, int ambient) { return Subspace(f, ambient); }

  const F& field() const { return f_; }
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Mat<F>& basis() const { return basis_; }

  bool contains(const Vec<F>& v) const {
    Mat<F> m = basis_;
    m.push_back(v);
    return rank(f_, m) == dim();
  }
  bool contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    Mat<F> m = a.basis_;
    m.insert(m.end(), b.basis_.begin(), b.basis_.end());
    return span(a.f_, a.n_, std::move(m));
  }

  Subspace intersect(const Subspace& o) const {
    // Null vectors of [a_1 .. a_r  -b_1 .. -b_s] as columns.
    const int r = dim(), s = o.dim();
    Mat<F> m(static_cast<std::size_t>(n_), zero_vector(f_, r + s));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < r; ++j) m[i][j] = basis_[j][i];
      for (int j = 0; j < s; ++j) m[i][r + j] = f_.neg(o.basis_[j][i]);
    }
    Mat<F> out;
    for (const auto& x : nullspace(f_, m, r + s)) {
      Vec<F> v = zero_vector(f_, n_);
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < n_; ++i) v[i] = f_.add(v[i], f_.mul(x[j], basis_[j][i]));
      out.push_back(std::move(v));
    }
    return span(f_, n_, std::move(out));
  }

  /// Coordinates of v in basis(); throws if v is not in the subspace.
  Vec<F> coordinates(const Vec<F>& v) const {
    Mat<F> m(static_cast<std::size_t>(n_), zero_vector(f_, dim()));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < dim(); ++j) m[i][j] = basis_[j][i];
    auto sol = solve_affine(f_, m, v, dim());
    if (!sol) throw std::invalid_argument("Subspace: vector not in subspace");
    return sol->particular;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.basis_ < b.basis_;
  }

  /// "<(1,0,0),(0,0,1)>".
  std::string to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (r) os << ',';
      os << '(';
      for (int i = 0; i < n_; ++i) os << (i ? "," : "") << f_.format(basis_[r][i]);
      os << ')';
    }
    os << '>';
    return os.str();
  }

 private:
  Subspace(const F& f, int ambient) : f_(f), n_(ambient) {}
  F f_;
  int n_;
  Mat<F> basis_;
};

}  // namespace hkg
