#include "doctest.h"
#include "oracles.hpp"

#include "hkg/chow.hpp"

using namespace hkg;

namespace {

ChowClass s(const GrassCtx& g, std::initializer_list<int> parts, int c = 1) {
  return ChowClass::sigma(g, Partition(parts), c);
}

// Pieri for sigma_1: add one box in every admissible way.
ChowClass times_sigma1(const ChowClass& x) {
  const GrassCtx& g = x.ctx();
  ChowClass out(g);
  const auto& ring = x.ring();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (x.coefficients()[i] == 0) continue;
    auto parts = ring.partition(i).parts();
    parts.resize(g.k, 0);
    for (int r = 0; r < g.k; ++r) {
      if (parts[r] == g.cols() || (r > 0 && parts[r] == parts[r - 1])) continue;
      auto q = parts;
      ++q[r];
      out.add_term(Partition(q), x.coefficients()[i]);
    }
  }
  return out;
}

// Rank of a list of integer vectors over Q.
int rank_of(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t t = 0; t < cols; ++t) rows[r][t] -= f * rows[rank][t];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> degree_vector(const ChowClass& x, int d) {
  std::vector<Rational> v;
  for (std::size_t i = x.ring().degree_begin(d); i < x.ring().degree_begin(d + 1); ++i)
    v.emplace_back(x.coefficients()[i]);
  return v;
}

}  // namespace

TEST_CASE("grassmannian context") {
  CHECK(GrassCtx(6, 10).dim() == 24);
  CHECK_THROWS_AS(GrassCtx(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(GrassCtx(3, 3), std::invalid_argument);
  CHECK(SchubertRing::get(GrassCtx(3, 10)).size() == 120);
  CHECK(SchubertRing::get(GrassCtx(6, 10)).size() == 210);
}

TEST_CASE("class arithmetic") {
  const GrassCtx g(3, 6);
  CHECK(s(g, {4}).is_zero());
  CHECK(s(g, {1, 1, 1, 1}).is_zero());
  auto x = s(g, {2, 1}, 3) + s(g, {1}, -1);
  CHECK_FALSE(x.is_homogeneous());
  CHECK(x.min_degree() == 1);
  CHECK(x.max_degree() == 3);
  CHECK(x.degree_part(3) == s(g, {2, 1}, 3));
  CHECK(x.truncated(2) == s(g, {1}, -1));
  CHECK(x.to_string() == "-s(1) + 3*s(2,1)");
  CHECK_THROWS_AS(x + s(GrassCtx(2, 5), {1}), std::invalid_argument);
  CHECK_THROWS_AS(s(g, {1}, 3).divide_exact(2), std::domain_error);
}

TEST_CASE("giambelli reduce") {
  const GrassCtx g(3, 10);
  CHECK(giambelli_reduce(g, Taut::SubDual, {1}) == s(g, {1}));
  CHECK(giambelli_reduce(g, Taut::SubDual, {3}) == s(g, {3}) + s(g, {2, 1}, 2) + s(g, {1, 1, 1}));
  CHECK(giambelli_reduce(g, Taut::SubDual, {3}) == times_sigma1(times_sigma1(s(g, {1}))));
  CHECK(giambelli_reduce(g, Taut::Sub, {0, 0, 1}) == s(g, {1, 1, 1}, -1));
  CHECK(giambelli_reduce(g, Taut::Quot, {0, 1}) == s(g, {2}));
  CHECK(giambelli_reduce(g, Taut::SubDual, {22}).is_zero());
  CHECK(giambelli_reduce(g, Taut::SubDual, {0, 11}).is_zero());
}

TEST_CASE("products against iterated pieri") {
  for (auto g : {GrassCtx(2, 5), GrassCtx(3, 7), GrassCtx(4, 8)}) {
    ChowClass x = ChowClass::one(g);
    const ChowClass h = s(g, {1});
    for (int d = 1; d <= g.dim(); ++d) {
      const ChowClass by_ring = x * h;
      x = times_sigma1(x);
      CHECK(by_ring == x);
    }
  }
}

TEST_CASE("poincare duality") {
  for (auto g : {GrassCtx(3, 6), GrassCtx(2, 5)}) {
    const auto& ring = SchubertRing::get(g);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& l = ring.partition(i);
      const auto comp = l.box_complement(g.k, g.cols());
      for (std::size_t j = 0; j < ring.size(); ++j) {
        const auto& m = ring.partition(j);
        if (l.weight() + m.weight() != g.dim()) continue;
        const Integer v = schubert_integrate(ChowClass::sigma(g, l) * ChowClass::sigma(g, m));
        CHECK(v == (m == comp ? 1 : 0));
      }
    }
  }
}

TEST_CASE("top chern class of E is a point") {
  for (auto g : {GrassCtx(2, 4), GrassCtx(3, 6)}) {
    const ChowClass c = chern_of_bundle(g, BundleExpr::taut_sub_dual(), g.dim());
    CHECK(schubert_integrate(c.degree_part(g.k).pow(g.cols())) == 1);
    CHECK(schubert_integrate(c.degree_part(g.k)) == (g.k == g.dim() ? 1 : 0));
  }
}

TEST_CASE("tautological anchors and the defining relation") {
  for (auto g : {GrassCtx(2, 4), GrassCtx(3, 7), GrassCtx(6, 10)}) {
    const ChowClass cE = chern_of_bundle(g, BundleExpr::taut_sub_dual(), g.dim());
    ChowClass want = ChowClass::zero(g);
    for (int i = 0; i <= g.k; ++i) want += taut_chern(g, Taut::SubDual, i);
    CHECK(cE == want);
    const ChowClass cS = chern_of_bundle(g, BundleExpr::taut_sub(), g.dim());
    const ChowClass cQ = chern_of_bundle(g, BundleExpr::taut_quot(), g.dim());
    CHECK(cS * cQ == ChowClass::one(g));
    CHECK(cQ.degree_part(1) == s(g, {1}));
    CHECK(chern_of_bundle(g, BundleExpr::trivial(5), g.dim()) == ChowClass::one(g));
  }
}

TEST_CASE("whitney sum") {
  const GrassCtx g(3, 7);
  const BundleExpr E = BundleExpr::taut_sub_dual();
  const BundleExpr Q = BundleExpr::taut_quot();
  const BundleExpr S = BundleExpr::taut_sub();
  const std::vector<std::pair<BundleExpr, BundleExpr>> pairs{
      {E, Q}, {S, Q}, {E, BundleExpr::line(2)}, {wedge(2, E), sym(2, Q)}, {E * Q, twist(dual(Q), -1)}};
  for (const auto& [a, b] : pairs) {
    const ChowClass lhs = chern_of_bundle(g, a + b, g.dim());
    const ChowClass rhs = chern_of_bundle(g, a, g.dim()) * chern_of_bundle(g, b, g.dim());
    CHECK_MESSAGE(lhs == rhs, a.to_string() << " + " << b.to_string());
  }
}

TEST_CASE("bundle ranks") {
  const GrassCtx g(6, 10);
  const BundleExpr E = BundleExpr::taut_sub_dual();
  CHECK(wedge(3, E).rank(g) == 20);
  CHECK((E * BundleExpr::taut_quot()).rank(g) == 24);
  CHECK(schur(Partition{2, 1}, E).rank(g) == 70);
  CHECK(sym(2, BundleExpr::taut_quot()).rank(g) == 10);
  CHECK(wedge(3, E).to_string() == "Wedge^3(E)");
}

TEST_CASE("chern classes agree with explicit root expansion") {
  struct Case {
    GrassCtx g;
    Partition shape;
    int sign;
    int twist;
  };
  const std::vector<Case> cases{
      {GrassCtx(3, 7), Partition{1, 1}, 1, 0},  {GrassCtx(3, 6), Partition{1, 1}, 1, 0},
      {GrassCtx(2, 5), Partition{2}, 1, 0},     {GrassCtx(3, 6), Partition{2, 1}, 1, 0},
      {GrassCtx(3, 6), Partition{2}, -1, 1},    {GrassCtx(2, 6), Partition{3}, -1, 0},
      {GrassCtx(4, 7), Partition{1, 1}, 1, -1}, {GrassCtx(6, 10), Partition{1, 1, 1}, 1, 0},
  };
  const BundleExpr E = BundleExpr::taut_sub_dual();
  for (const auto& c : cases) {
    const int rank = static_cast<int>(oracle::schur_roots(c.shape, c.g.k).size());
    const int d = std::min(c.g.dim(), rank);
    BundleExpr b = schur(c.shape, E);
    if (c.sign < 0) b = dual(b);
    if (c.twist) b = twist(b, c.twist);
    const auto roots = oracle::schur_roots(c.shape, c.g.k, c.sign, c.twist);
    const ChowClass want =
        oracle::symmetric_to_schubert(c.g, oracle::total_chern_from_roots(roots, c.g.k, d));
    CHECK_MESSAGE(chern_of_bundle(c.g, b, d) == want, b.to_string() << " on " << c.g.to_string());
  }
}

TEST_CASE("wedge powers of E") {
  const GrassCtx g610(6, 10);
  const BundleExpr E = BundleExpr::taut_sub_dual();
  CHECK(chern_of_bundle(g610, wedge(3, E), 1).degree_part(1) == s(g610, {1}, 10));
  const GrassCtx g37(3, 7);
  CHECK(chern_of_bundle(g37, wedge(2, E), 1).degree_part(1) == s(g37, {1}, 2));
  CHECK(chern_of_bundle(g37, wedge(2, E), 3) == chern_of_bundle(g37, twist(dual(E), 1), 3));
  CHECK(chern_of_bundle(g37, wedge(3, E), 3) == chern_of_bundle(g37, BundleExpr::line(1), 3));
}

TEST_CASE("tangent bundle") {
  for (auto g : {GrassCtx(1, 3), GrassCtx(2, 4), GrassCtx(3, 10), GrassCtx(6, 10)})
    CHECK(tangent_chern(g, 1).degree_part(1) == s(g, {1}, g.n));
  const GrassCtx p2(1, 3);
  CHECK(schubert_integrate(tangent_chern(p2, 2)) == 3);
  // Euler characteristic of G(k,n) is binomial(n,k).
  for (auto g : {GrassCtx(2, 4), GrassCtx(2, 5), GrassCtx(3, 6)})
    CHECK(schubert_integrate(tangent_chern(g, g.dim())) == binomial(g.n, g.k));
}

TEST_CASE("intersection numbers on G(6,10)") {
  const auto nums = paper_intersection_numbers();
  CHECK(nums.at("c1c3") == 330);
  CHECK(nums.at("c4") == 105);
  CHECK(nums.at("c1^2c2") == 825);
  CHECK(nums.at("c2^2") == 477);
  CHECK(nums.at("c1^4") == 1452);
}

TEST_CASE("second chern class of Y") {
  const auto r = restricted_c2_of_Y();
  CHECK(r.cls.is_homogeneous());
  CHECK(r.cls.min_degree() == 2);
  CHECK(r.coeff_c1sq == 5);
  CHECK(r.coeff_c2 == -8);
  CHECK(r.pairing == 660);
}

TEST_CASE("hilbert polynomial from riemann-roch") {
  const auto p = riemann_roch_hilbert(3);
  CHECK(p.coefficient(0) == 3);
  CHECK(p.coefficient(2) == Rational(55, 2));
  CHECK(p.coefficient(4) == Rational(121, 2));
  CHECK(p.coefficient(1) == 0);
  CHECK(p(0) == 3);
  CHECK(p(1) == 91);
  CHECK(p(2) == 1081);
  CHECK(p.to_string() == "3 + 55/2*k^2 + 121/2*k^4");
}

TEST_CASE("dual variety degrees") {
  CHECK(dual_variety_degree(GrassCtx(1, 2), 2) == 2);
  // Plane curve of degree d: P^1 embedded by O(d) is a rational normal curve,
  // whose dual hypersurface has degree 2(d-1).
  CHECK(dual_variety_degree(GrassCtx(1, 2), 3) == 4);
  CHECK(dual_variety_degree(GrassCtx(1, 4), 1) == 0);
  CHECK(dual_variety_degree(GrassCtx(2, 4)) == 2);
  CHECK(dual_variety_degree(GrassCtx(3, 10)) == 640);
}

TEST_CASE("K3 model and companion class") {
  CHECK(companion_class_number() == 2);
  const auto k3 = k3_model_degree();
  CHECK(k3.expected_dimension == 2);
  CHECK(k3.degree == 22);
  CHECK(k3.calabi_yau);
  CHECK(k3.det_bundle == s(GrassCtx(3, 7), {1}, 7));
}

TEST_CASE("degree-10 monomials of G(3,10) lie in the ideal of sigma_1") {
  const GrassCtx g(3, 10);
  const ChowClass c2 = taut_chern(g, Taut::Sub, 2);
  const ChowClass c3 = taut_chern(g, Taut::Sub, 3);
  const ChowClass h = s(g, {1});
  const auto& ring = SchubertRing::get(g);
  std::vector<std::vector<Rational>> image;
  for (std::size_t i = ring.degree_begin(9); i < ring.degree_begin(10); ++i)
    image.push_back(degree_vector(ChowClass::sigma(g, ring.partition(i)) * h, 10));
  const int base = rank_of(image);
  for (const ChowClass& m : {c2.pow(5), c2 * c2 * c3 * c3}) {
    CHECK_FALSE(m.is_zero());
    auto with = image;
    with.push_back(degree_vector(m, 10));
    CHECK(rank_of(with) == base);
  }
}
