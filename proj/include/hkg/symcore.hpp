#pragma once

// Partitions, Schur-function arithmetic and the representation-theoretic
// decompositions (Littlewood-Richardson, plethysm, Cauchy) that the Chow
// ring and Borel-Weil-Bott modules are built on.

#include "hkg/numeric.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hkg {

/// Integer partition, parts weakly decreasing and positive. The empty
/// partition is the trivial one.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument if the
  /// sequence is not weakly decreasing or has a negative entry.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  /// i-th part, zero past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  bool fits_in_box(int rows, int cols) const {
    return length() <= rows && (empty() || parts_[0] <= cols);
  }
  /// Complement inside the rows x cols box, read backwards.
  Partition box_complement(int rows, int cols) const;
  /// Dominance order (same weight assumed).
  bool dominates(const Partition& other) const;

  std::string to_string() const;

  /// Lexicographic on parts; the descending order of this is the
  /// "reverse lexicographic" order, a linear extension of dominance.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of `weight` with at most `rows` parts, each at most
/// `cols`, in descending lexicographic order. Negative bound = unbounded.
std::vector<Partition> partitions_of(int weight, int rows = -1, int cols = -1);
/// All partitions inside the box, ordered by weight then descending lex.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Homogeneous formal integer combination of partitions.
class SchurVector {
 public:
  using Terms = std::map<Partition, Integer, std::greater<>>;

  SchurVector() = default;
  static SchurVector single(const Partition& p, Integer coeff = 1);

  /// Adds c * p; throws std::invalid_argument on a weight mismatch.
  void add(const Partition& p, const Integer& c);
  Integer coefficient(const Partition& p) const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Common weight; -1 for the zero vector.
  int degree() const { return degree_; }

  SchurVector& operator+=(const SchurVector& other);
  SchurVector& operator*=(const Integer& c);
  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend SchurVector operator*(SchurVector a, const Integer& c) { return a *= c; }
  friend SchurVector operator*(const Integer& c, SchurVector a) { return a *= c; }
  friend bool operator==(const SchurVector&, const SchurVector&) = default;

  /// Sum of coefficient * dim S_lambda(C^n).
  Integer dimension(int n) const;
  std::string to_string() const;

 private:
  Terms terms_;
  int degree_ = -1;
};

/// Littlewood-Richardson product s_lambda * s_mu. With max_rows >= 0 only
/// terms with at most that many parts are produced (the GL(max_rows)
/// tensor product); max_cols >= 0 likewise bounds the first part.
SchurVector lr_multiply(const Partition& lambda, const Partition& mu, int max_rows = -1,
                        int max_cols = -1);

/// dim S_lambda(C^n) by the hook-content formula; 0 if lambda has more
/// than n parts.
Integer schur_dimension(const Partition& lambda, int n);

/// Kostka numbers K_{shape, content} for every shape with at most
/// `max_rows` rows and first row at most `max_cols` (negative = unbounded).
std::map<Partition, Integer> kostka_by_shape(const std::vector<int>& content, int max_rows = -1,
                                             int max_cols = -1);

/// Decomposition of the exterior power Lambda^i(Lambda^m C^n) into Schur
/// functors of C^n. Throws std::invalid_argument if i > binomial(n, m).
SchurVector wedge_of_wedge(int i, int m, int n);
/// Lambda^i(Lambda^3 C^n).
inline SchurVector wedge_plethysm(int i, int n) { return wedge_of_wedge(i, 3, n); }

/// Lambda^j(A (x) B) = sum over |lambda| = j of S_lambda A (x) S_lambda' B.
std::vector<std::pair<Partition, Partition>> cauchy_wedge(int j);
/// Sym^j(A (x) B) = sum over |lambda| = j of S_lambda A (x) S_lambda B.
std::vector<std::pair<Partition, Partition>> cauchy_sym(int j);

}  // namespace hkg
