#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eirep/linfield.hpp"

using namespace eirep;

TEST_CASE("prime field arithmetic") {
  Field F2(2);
  CHECK(F2.add(1, 1) == 0);
  CHECK(F2.mul(1, 1) == 1);

  Field F3(3);
  CHECK(F3.inv(2) == 2);  // 2*2 = 4 = 1
  CHECK(F3.add(2, 2) == 1);
  CHECK(F3.neg(1) == 2);

  CHECK_THROWS_AS(Field(4), FieldError);
  CHECK_THROWS_AS(F3.inv(0), FieldError);
}

TEST_CASE("F4 defining relation t*t = t+1") {
  Field F4(2, 2);
  // modulus is x^2+x+1 (lexicographically least irreducible over F2)
  REQUIRE(F4.modulus() == std::vector<std::int64_t>({1, 1, 1}));
  FElem t = 2;  // the class of x
  CHECK(F4.mul(t, t) == F4.add(t, 1));
  CHECK(F4.mul(t, F4.inv(t)) == 1);
  // multiplicative order of the generator is q-1 = 3
  FElem g = F4.generator();
  CHECK(F4.pow(g, 3) == 1);
  CHECK(F4.pow(g, 1) != 1);
}

TEST_CASE("field axioms hold on all small fields") {
  for (auto [p, k] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    Field F(p, k);
    std::int64_t q = F.order();
    for (FElem a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (FElem b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (FElem c = 0; c < q; ++c) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("frobenius and inverse frobenius") {
  Field F9(3, 2);
  for (FElem a = 0; a < 9; ++a) {
    CHECK(F9.frobenius(a) == F9.pow(a, 3));
    CHECK(F9.frobenius_inv(F9.frobenius(a)) == a);
  }
}

TEST_CASE("polynomial factorization: x^3 - 1 over F4") {
  Field F4(2, 2);
  Rng rng(default_seed());
  Poly f = {1, 0, 0, 1};  // x^3 + 1 = x^3 - 1 in char 2
  auto fac3 = poly_factor(F4, f, rng);
  REQUIRE(fac3.size() == 3);
  // three distinct linear factors: roots are the cube roots of unity 1, t, t+1
  Poly prod = {1};
  for (auto& [g, m] : fac3) {
    CHECK(poly_deg(g) == 1);
    CHECK(m == 1);
    for (int i = 0; i < m; ++i) prod = poly_mul(F4, prod, g);
  }
  CHECK(prod == f);
  // the two non-rational roots are primitive cube roots: eps^2 + eps + 1 = 0
  int primitive = 0;
  for (auto& [g, m] : fac3) {
    (void)m;
    FElem root = F4.neg(g[0]);
    if (root != 1) {
      ++primitive;
      CHECK(F4.add(F4.add(F4.mul(root, root), root), 1) == 0);
    }
  }
  CHECK(primitive == 2);
}

TEST_CASE("polynomial factorization: x^2 - 1 over F2 and x^2 + 1 over F3") {
  Rng rng(default_seed());
  Field F2(2);
  auto f1 = poly_factor(F2, Poly{1, 0, 1}, rng);  // x^2+1 = (x+1)^2
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].first == Poly{1, 1});
  CHECK(f1[0].second == 2);

  Field F3(3);
  auto f2 = poly_factor(F3, Poly{1, 0, 1}, rng);  // x^2+1 irreducible over F3
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].second == 1);
  CHECK(poly_deg(f2[0].first) == 2);
  CHECK(poly_is_irreducible(F3, Poly{1, 0, 1}));

  CHECK_THROWS_AS(poly_factor(F3, Poly{}, rng), FieldError);
}

TEST_CASE("random polynomial factorization round-trips") {
  Rng rng(12345);
  for (auto [p, k] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    Field F(p, k);
    for (int trial = 0; trial < 40; ++trial) {
      int deg = 1 + static_cast<int>(rng.below(8));
      Poly f(static_cast<size_t>(deg) + 1);
      for (auto& c : f) c = static_cast<FElem>(rng.below(static_cast<std::uint64_t>(F.order())));
      f.back() = 1;  // monic
      auto factors = poly_factor(F, f, rng);
      Poly prod = {1};
      for (auto& [g, m] : factors) {
        CHECK(poly_is_irreducible(F, g));
        for (int i = 0; i < m; ++i) prod = poly_mul(F, prod, g);
      }
      CHECK(prod == f);
      // factors of degree <= 3 have no roots unless linear
      for (auto& [g, m] : factors) {
        (void)m;
        if (poly_deg(g) >= 2) {
          for (std::int64_t x = 0; x < F.order(); ++x)
            CHECK(poly_eval(F, g, static_cast<FElem>(x)) != 0);
        }
      }
    }
  }
}

TEST_CASE("matrix rank, nullspace, solve") {
  Field F2(2);
  Matrix id3 = Matrix::identity(3);
  CHECK(mat_rank(F2, id3) == 3);

  Matrix zero(3, 3);
  auto ns = mat_nullspace(F2, zero);
  CHECK(ns.size() == 3);

  // rank-nullity and solve(M, M v) on random matrices
  Rng rng(7);
  for (auto pk : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}}) {
    Field F(pk.first, pk.second);
    for (int trial = 0; trial < 30; ++trial) {
      int r = 1 + static_cast<int>(rng.below(5));
      int c = 1 + static_cast<int>(rng.below(5));
      Matrix m(r, c);
      for (auto& v : m.data()) v = static_cast<FElem>(rng.below(static_cast<std::uint64_t>(F.order())));
      CHECK(mat_rank(F, m) + static_cast<int>(mat_nullspace(F, m).size()) == c);
      std::vector<FElem> v(static_cast<size_t>(c));
      for (auto& x : v) x = static_cast<FElem>(rng.below(static_cast<std::uint64_t>(F.order())));
      auto b = mat_apply(F, m, v);
      std::vector<FElem> sol;
      REQUIRE(mat_solve(F, m, b, sol));
      CHECK(mat_apply(F, m, sol) == b);
    }
  }
}

TEST_CASE("min_poly of the 2x2 unipotent Jordan block over F2 is (x+1)^2") {
  Field F2(2);
  Matrix j(2, 2);
  j.at(0, 0) = 1; j.at(1, 1) = 1; j.at(1, 0) = 1;
  Poly m = mat_min_poly(F2, j);
  CHECK(m == Poly{1, 0, 1});  // x^2 + 1 = (x+1)^2 over F2
  Poly c = mat_charpoly(F2, j);
  CHECK(c == Poly{1, 0, 1});
}

TEST_CASE("charpoly matches determinant and trace on random matrices") {
  Rng rng(99);
  for (auto pk : {std::pair<int, int>{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
    Field F(pk.first, pk.second);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 1 + static_cast<int>(rng.below(5));
      Matrix m(n, n);
      for (auto& v : m.data()) v = static_cast<FElem>(rng.below(static_cast<std::uint64_t>(F.order())));
      Poly c = mat_charpoly(F, m);
      REQUIRE(poly_deg(c) == n);
      CHECK(c.back() == 1);
      // constant term: (-1)^n det
      FElem expect = mat_det(F, m);
      if (n % 2 == 1) expect = F.neg(expect);
      CHECK(c[0] == expect);
      // charpoly annihilates the matrix (Cayley-Hamilton)
      Matrix acc(n, n);
      Matrix power = Matrix::identity(n);
      for (int i = 0; i <= n; ++i) {
        acc = mat_add(F, acc, mat_scale(F, power, c[static_cast<size_t>(i)]));
        power = mat_mul(F, power, m);
      }
      CHECK(mat_is_zero(acc));
      // min poly divides charpoly
      Poly mp = mat_min_poly(F, m);
      CHECK(poly_mod(F, c, mp).empty());
    }
  }
}
