#include "doctest.h"
#include "oracles.hpp"

#include "hkg/symcore.hpp"

using namespace hkg;

namespace {

std::vector<Partition> all_up_to(int w) {
  std::vector<Partition> out;
  for (int k = 0; k <= w; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p{3, 1, 1, 0};
  CHECK(p.length() == 3);
  CHECK(p.weight() == 5);
  CHECK(p.conjugate() == Partition{3, 1, 1});
  CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
  CHECK(Partition{2, 1}.box_complement(3, 4) == Partition{4, 3, 2});
  CHECK(Partition{}.to_string() == "()");
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  for (const auto& q : all_up_to(9)) CHECK(q.conjugate().conjugate() == q);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_in_box(3, 7).size() == 120);
}

TEST_CASE("schur vector homogeneity and arithmetic") {
  SchurVector v;
  v.add(Partition{2}, 3);
  CHECK_THROWS_AS(v.add(Partition{1}, 1), std::invalid_argument);
  v.add(Partition{2}, -3);
  CHECK(v.is_zero());
  CHECK(v.degree() == -1);
  auto a = SchurVector::single(Partition{2, 1}, 2);
  auto b = SchurVector::single(Partition{3}, -1);
  CHECK((a + b) * Integer(3) == a * Integer(3) + b * Integer(3));
  CHECK(a + b == b + a);
}

TEST_CASE("lr small cases") {
  CHECK(lr_multiply({}, Partition{2, 1}) == SchurVector::single(Partition{2, 1}));
  auto p = lr_multiply(Partition{1}, Partition{1});
  SchurVector want;
  want.add(Partition{2}, 1);
  want.add(Partition{1, 1}, 1);
  CHECK(p == want);
  // s21 * s21 has the single multiplicity-2 term s321.
  auto q = lr_multiply(Partition{2, 1}, Partition{2, 1});
  CHECK(q.coefficient(Partition{3, 2, 1}) == 2);
  CHECK(q.size() == 7);
  CHECK(lr_multiply(Partition{2, 1}, Partition{2, 1}, 2).size() == 2);
}

TEST_CASE("lr agrees with monomial expansion for weights up to 6") {
  const auto parts = all_up_to(6);
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = x; y < parts.size(); ++y) {
      const auto& l = parts[x];
      const auto& m = parts[y];
      const int vars = std::max(1, l.weight() + m.weight());
      const auto got = lr_multiply(l, m);
      CHECK_MESSAGE(got == oracle::lr_by_monomials(l, m, vars), l.to_string() << " * " << m.to_string());
      CHECK(got == lr_multiply(m, l));
      for (const auto& [nu, c] : got.terms()) CHECK(c >= 1);
    }
}

TEST_CASE("lr associativity") {
  const auto parts = all_up_to(4);
  auto times = [](const SchurVector& v, const Partition& p) {
    SchurVector out;
    for (const auto& [q, c] : v.terms()) out += lr_multiply(q, p) * c;
    return out;
  };
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& c : parts) {
        if (a.weight() + b.weight() + c.weight() > 9) continue;
        const auto left = times(lr_multiply(a, b), c);
        const auto right = times(lr_multiply(b, c), a);
        CHECK(left == right);
      }
}

TEST_CASE("schur dimension") {
  CHECK(schur_dimension(Partition{1, 1, 1}, 10) == 120);
  CHECK(schur_dimension(Partition{}, 7) == 1);
  CHECK(schur_dimension(Partition{2, 1, 1, 1, 1, 1, 1, 1, 1}, 10) == 99);
  CHECK(schur_dimension(Partition{1, 1, 1, 1}, 3) == 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_up_to(8))
      CHECK_MESSAGE(schur_dimension(p, n) == oracle::count_ssyt(p, n), p.to_string() << " n=" << n);
}

TEST_CASE("kostka by shape") {
  const auto k = kostka_by_shape({2, 1, 1});
  for (const auto& [shape, c] : k) CHECK(c == oracle::kostka(shape, {2, 1, 1}));
  CHECK(k.at(Partition{2, 1, 1}) == 1);
  CHECK(k.at(Partition{4}) == 1);
  CHECK(k.at(Partition{3, 1}) == 2);
}

TEST_CASE("wedge plethysm anchors") {
  CHECK(wedge_plethysm(0, 6) == SchurVector::single(Partition{}));
  CHECK(wedge_plethysm(1, 6) == SchurVector::single(Partition{1, 1, 1}));
  CHECK(wedge_plethysm(20, 6) == SchurVector::single(Partition{10, 10, 10, 10, 10, 10}));
  CHECK_THROWS_AS(wedge_plethysm(21, 6), std::invalid_argument);
  // Lambda^2(Lambda^2 C^4) = S_{211} + S_{1111}? no: Lambda^2(Lambda^2) = S_{2,1,1}.
  CHECK(wedge_of_wedge(2, 2, 4) == SchurVector::single(Partition{2, 1, 1}));
}

TEST_CASE("wedge plethysm dimension sums") {
  for (int n = 3; n <= 6; ++n) {
    const long big = static_cast<long>(binomial(n, 3));
    for (int i = 0; i <= big; ++i) {
      const auto v = wedge_plethysm(i, n);
      CHECK_MESSAGE(v.dimension(n) == binomial(big, i), "n=" << n << " i=" << i);
      for (const auto& [p, c] : v.terms()) CHECK(c > 0);
    }
  }
}

TEST_CASE("wedge plethysm duality") {
  for (int i = 0; i <= 20; ++i) {
    const auto a = wedge_plethysm(i, 6);
    const auto b = wedge_plethysm(20 - i, 6);
    SchurVector flipped;
    for (const auto& [p, c] : a.terms()) {
      std::vector<int> q(6);
      for (int t = 0; t < 6; ++t) q[t] = 10 - p[5 - t];
      flipped.add(Partition(q), c);
    }
    CHECK_MESSAGE(flipped == b, "i=" << i);
  }
}

TEST_CASE("cauchy decompositions") {
  auto w2 = cauchy_wedge(2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == std::make_pair(Partition{2}, Partition{1, 1}));
  CHECK(w2[1] == std::make_pair(Partition{1, 1}, Partition{2}));
  CHECK(cauchy_wedge(1) == std::vector{std::make_pair(Partition{1}, Partition{1})});
  for (int j = 0; j <= 8; ++j) {
    Integer sum = 0;
    for (const auto& [a, b] : cauchy_wedge(j)) sum += schur_dimension(a, 3) * schur_dimension(b, 7);
    CHECK(sum == binomial(21, j));
    Integer sym = 0;
    for (const auto& [a, b] : cauchy_sym(j)) sym += schur_dimension(a, 3) * schur_dimension(b, 7);
    CHECK(sym == binomial(21 + j - 1, j));
  }
}
