#include "hkg/symcore.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <cstdint>

namespace hkg {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

Partition Partition::box_complement(int rows, int cols) const {
  if (!fits_in_box(rows, cols)) throw std::invalid_argument("box_complement: partition outside box");
  std::vector<int> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = cols - (*this)[rows - 1 - i];
  return Partition(std::move(c));
}

bool Partition::dominates(const Partition& other) const {
  int a = 0, b = 0;
  const int len = std::max(length(), other.length());
  for (int i = 0; i < len; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int rows, int cols) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> cur;
  gen_partitions(weight, cols < 0 ? weight : cols, rows < 0 ? weight + 1 : rows, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int w = 0; w <= rows * cols; ++w) {
    auto ps = partitions_of(w, rows, cols);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// SchurVector

SchurVector SchurVector::single(const Partition& p, Integer coeff) {
  SchurVector v;
  v.add(p, coeff);
  return v;
}

void SchurVector::add(const Partition& p, const Integer& c) {
  if (c == 0) return;
  if (degree_ >= 0 && p.weight() != degree_)
    throw std::invalid_argument("SchurVector: inhomogeneous term " + p.to_string());
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  degree_ = terms_.empty() ? -1 : p.weight();
}

Integer SchurVector::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

SchurVector& SchurVector::operator+=(const SchurVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

SchurVector& SchurVector::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    degree_ = -1;
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

Integer SchurVector::dimension(int n) const {
  Integer total = 0;
  for (const auto& [p, c] : terms_) total += c * schur_dimension(p, n);
  return total;
}

std::string SchurVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Integer a = c < 0 ? Integer(-c) : c;
    if (a != 1) os << a << '*';
    os << "s" << p.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson

namespace {

// Adds the boxes of mu label by label, each label as a horizontal strip.
// The reverse reading word stays a lattice word iff, for every row r, the
// number of labels i in rows <= r is at most the number of labels i-1 in
// rows < r.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& lambda, const Partition& mu, int max_rows, int max_cols)
      : mu_(mu.parts()), max_rows_(max_rows), max_cols_(max_cols) {
    const int rows = lambda.length() + mu.length() + 1;
    shape_.assign(rows, 0);
    for (int i = 0; i < lambda.length(); ++i) shape_[i] = lambda[i];
    counts_.assign(mu_.size(), std::vector<int>(rows, 0));
    old_.resize(mu_.size());
  }

  SchurVector run() {
    next_label(0);
    return std::move(out_);
  }

 private:
  void next_label(std::size_t label) {
    if (label == mu_.size()) {
      out_.add(Partition(shape_), 1);
      return;
    }
    old_[label] = shape_;
    place(label, 0, mu_[label], 0, 0);
  }

  // cum_prev_above: number of labels (label - 1) in rows strictly above `row`.
  void place(std::size_t label, int row, int remaining, int cum_this, int cum_prev_above) {
    if (remaining == 0) {
      next_label(label + 1);
      return;
    }
    const std::vector<int>& old = old_[label];
    if (row >= static_cast<int>(shape_.size())) return;
    if (max_rows_ >= 0 && row >= max_rows_) return;
    if (row > 0 && old[row - 1] == 0) return;

    int cap = row == 0 ? remaining : old[row - 1] - old[row];
    cap = std::min(cap, remaining);
    if (max_cols_ >= 0) cap = std::min(cap, max_cols_ - shape_[row]);
    if (label > 0) cap = std::min(cap, cum_prev_above - cum_this);
    const int prev_here = label > 0 ? counts_[label - 1][row] : 0;
    for (int a = cap; a >= 0; --a) {
      shape_[row] += a;
      counts_[label][row] = a;
      place(label, row + 1, remaining - a, cum_this + a, cum_prev_above + prev_here);
      shape_[row] -= a;
      counts_[label][row] = 0;
    }
  }

  const std::vector<int>& mu_;
  int max_rows_;
  int max_cols_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> old_;
  std::vector<std::vector<int>> counts_;
  SchurVector out_;
};

}  // namespace

SchurVector lr_multiply(const Partition& lambda, const Partition& mu, int max_rows, int max_cols) {
  if (max_rows >= 0 && (lambda.length() > max_rows || mu.length() > max_rows)) return {};
  if (max_cols >= 0 && (lambda[0] > max_cols || mu[0] > max_cols)) return {};
  // The smaller factor is the one whose boxes get labelled.
  if (mu.weight() > lambda.weight()) return lr_multiply(mu, lambda, max_rows, max_cols);
  return LrEnumerator(lambda, mu, max_rows, max_cols).run();
}

// ---------------------------------------------------------------------------
// Dimensions and Kostka numbers

Integer schur_dimension(const Partition& lambda, int n) {
  if (lambda.length() > n) return 0;
  const Partition conj = lambda.conjugate();
  Integer num = 1, den = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      num *= n + c - r;
      den *= (lambda[r] - c) + (conj[c] - r) - 1;
    }
  }
  return num / den;
}

namespace {

void add_strips(const std::vector<int>& old, int row, int remaining, int max_rows, int max_cols,
                std::vector<int>& cur, const Integer& count, std::map<std::vector<int>, Integer>& out) {
  if (remaining == 0) {
    std::vector<int> key = cur;
    while (!key.empty() && key.back() == 0) key.pop_back();
    out[key] += count;
    return;
  }
  if (row >= static_cast<int>(cur.size())) return;
  if (max_rows >= 0 && row >= max_rows) return;
  if (row > 0 && old[row - 1] == 0) return;
  int cap = row == 0 ? remaining : old[row - 1] - old[row];
  if (max_cols >= 0) cap = std::min(cap, max_cols - old[row]);
  cap = std::min(cap, remaining);
  for (int a = cap; a >= 0; --a) {
    cur[row] = old[row] + a;
    add_strips(old, row + 1, remaining - a, max_rows, max_cols, cur, count, out);
  }
  cur[row] = old[row];
}

}  // namespace

std::map<Partition, Integer> kostka_by_shape(const std::vector<int>& content, int max_rows,
                                             int max_cols) {
  const int total = std::accumulate(content.begin(), content.end(), 0);
  std::map<std::vector<int>, Integer> states{{{}, 1}};
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka_by_shape: negative content");
    std::map<std::vector<int>, Integer> next;
    for (const auto& [shape, count] : states) {
      std::vector<int> old = shape;
      old.resize(std::max<std::size_t>(shape.size() + 1, 1), 0);
      std::vector<int> cur = old;
      add_strips(old, 0, c, max_rows, max_cols, cur, count, next);
    }
    states = std::move(next);
  }
  std::map<Partition, Integer> out;
  for (auto& [shape, count] : states)
    if (std::accumulate(shape.begin(), shape.end(), 0) == total) out.emplace(Partition(shape), count);
  return out;
}

// ---------------------------------------------------------------------------
// Plethysm Lambda^i(Lambda^m C^n)

namespace {

// Weights packed six bits per coordinate; entries never exceed binomial(n-1, m-1) <= 63
// for the sizes accepted below.
using PackedWeight = std::uint64_t;
constexpr int kPackBits = 6;

int unpack(PackedWeight w, int t) { return static_cast<int>((w >> (kPackBits * t)) & 63u); }

SchurVector compute_wedge_of_wedge(int i, int m, int n) {
  std::vector<PackedWeight> weights;
  {
    std::vector<int> sel(n, 0);
    std::fill(sel.end() - m, sel.end(), 1);
    do {
      PackedWeight w = 0;
      for (int t = 0; t < n; ++t)
        if (sel[t]) w += PackedWeight{1} << (kPackBits * t);
      weights.push_back(w);
    } while (std::next_permutation(sel.begin(), sel.end()));
  }

  // Character of Lambda^i as i-subset sums of the weights. Packed addition
  // is coordinatewise since no coordinate overflows its field.
  std::vector<std::unordered_map<PackedWeight, Integer>> dp(i + 1);
  dp[0][0] = 1;
  int processed = 0;
  for (PackedWeight w : weights) {
    for (int c = std::min(i - 1, processed); c >= 0; --c)
      for (const auto& [key, val] : dp[c]) dp[c + 1][key + w] += val;
    ++processed;
  }
  const auto& character = dp[i];

  // [s_lambda] f = sum_w sgn(w) [x^(lambda + rho - w rho)] f.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> shifts;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::vector<int> shift(n);
    for (int t = 0; t < n; ++t) shift[t] = perm[t] - t;  // rho_t - rho_{w(t)}, rho_t = n-1-t
    shifts.emplace_back(std::move(shift), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  SchurVector result;
  for (const auto& [key, val] : character) {
    std::vector<int> lambda(n);
    for (int t = 0; t < n; ++t) lambda[t] = unpack(key, t);
    if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>())) continue;
    Integer c = 0;
    for (const auto& [shift, sign] : shifts) {
      PackedWeight probe = 0;
      bool ok = true;
      for (int t = 0; t < n && ok; ++t) {
        const int e = lambda[t] + shift[t];
        if (e < 0 || e > 63) ok = false;
        else probe += PackedWeight(e) << (kPackBits * t);
      }
      if (!ok) continue;
      if (auto it = character.find(probe); it != character.end()) c += sign * it->second;
    }
    if (c != 0) result.add(Partition(lambda), c);
  }
  return result;
}

}  // namespace

SchurVector wedge_of_wedge(int i, int m, int n) {
  if (n <= 0 || m < 0 || m > n) throw std::invalid_argument("wedge_of_wedge: need 0 <= m <= n, n > 0");
  if (i < 0 || Integer(i) > binomial(n, m))
    throw std::invalid_argument("wedge_of_wedge: i exceeds binomial(n, m)");
  if (i == 0) return SchurVector::single(Partition{});
  if (n > 10 || binomial(n - 1, m - 1) > 63)
    throw std::invalid_argument("wedge_of_wedge: n too large for the packed weight table");

  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, SchurVector> cache;
  const auto key = std::make_tuple(i, m, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SchurVector v = compute_wedge_of_wedge(i, m, n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(v)).first->second;
}

std::vector<std::pair<Partition, Partition>> cauchy_wedge(int j) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& p : partitions_of(j)) out.emplace_back(p, p.conjugate());
  return out;
}

std::vector<std::pair<Partition, Partition>> cauchy_sym(int j) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& p : partitions_of(j)) out.emplace_back(p, p);
  return out;
}

}  // namespace hkg
