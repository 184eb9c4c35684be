#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sra/linalg.hpp"

using namespace sra;

namespace {

Vec qvec(const Field& f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(f.integer(x));
  return v;
}

}  // namespace

TEST_CASE("rref rank and nullspace") {
  Field f = Field::rationals();
  Rref r(3);
  CHECK(r.add_row(qvec(f, {1, 2, 3})));
  CHECK(r.add_row(qvec(f, {0, 1, 1})));
  CHECK_FALSE(r.add_row(qvec(f, {1, 3, 4})));  // dependent
  CHECK(r.rank() == 2);
  Mat ns = r.nullspace_basis();
  REQUIRE(ns.size() == 1);
  // every nullspace vector is killed by every row
  for (const auto& row : r.rows()) {
    FieldScalar acc;
    for (int j = 0; j < 3; ++j) acc += row[j] * ns[0][j];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("nullspace property on random matrices") {
  std::mt19937_64 rng(42);
  Field f = Field::dihedral(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int iter = 0; iter < 30; ++iter) {
    int rows = 1 + (int)(rng() % 6), cols = 2 + (int)(rng() % 6);
    Rref r(cols);
    Mat original;
    for (int i = 0; i < rows; ++i) {
      Vec v(cols);
      for (int j = 0; j < cols; ++j)
        v[j] = f.integer(d(rng)) + f.generator() * f.integer(d(rng));
      original.push_back(v);
      r.add_row(v);
    }
    Mat ns = r.nullspace_basis();
    CHECK((int)ns.size() == cols - r.rank());
    for (const auto& x : ns)
      for (const auto& row : original) {
        FieldScalar acc;
        for (int j = 0; j < cols; ++j) acc += row[j] * x[j];
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("subspace canonical equality and intersection") {
  Field f = Field::rationals();
  // span{(1,0,1),(0,1,1)} in two presentations
  Subspace a = Subspace::span(3, {qvec(f, {1, 0, 1}), qvec(f, {0, 1, 1})});
  Subspace b = Subspace::span(3, {qvec(f, {1, 1, 2}), qvec(f, {1, -1, 0})});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  Subspace c = Subspace::span(3, {qvec(f, {1, 0, 0}), qvec(f, {0, 0, 1})});
  Subspace i = Subspace::intersect(a, c);
  CHECK(i.dim() == 1);
  CHECK(i.contains(qvec(f, {1, 0, 1})));
  CHECK_FALSE(i.contains(qvec(f, {0, 1, 1})));
  // intersection with itself
  CHECK(Subspace::intersect(a, a) == a);
}

TEST_CASE("kpoly arithmetic, gcd, exact division") {
  Field f = Field::rationals();
  KPoly x = KPoly::linear(f.zero(), f.one());
  KPoly p = kp_mul(kp_add(x, KPoly::constant(f.integer(1))), kp_add(x, KPoly::constant(f.integer(-2))));
  CHECK(p.deg() == 2);
  CHECK(p.eval(f.integer(-1)).is_zero());
  CHECK(p.eval(f.integer(2)).is_zero());
  KPoly q = kp_add(x, KPoly::constant(f.integer(1)));
  KPoly d = kp_div_exact(p, q);
  CHECK(d.deg() == 1);
  CHECK(d.eval(f.integer(2)).is_zero());
  KPoly g = kp_gcd(p, q);
  CHECK(g.deg() == 1);
  CHECK(g.eval(f.integer(-1)).is_zero());
  CHECK_THROWS_AS(kp_div_exact(kp_add(p, KPoly::constant(f.one())), q), error);
}

TEST_CASE("bareiss elimination rank and vanishing minor") {
  Field f = Field::rationals();
  auto L = [&](long c0, long c1) { return KPoly::linear(f.integer(c0), f.integer(c1)); };
  // [1+x, 2; 2+2x, 4] has rank 1 over Q(x)
  std::vector<std::vector<KPoly>> m = {{L(1, 1), L(2, 0)}, {L(2, 2), L(4, 0)}};
  auto r = bareiss_eliminate(m);
  CHECK(r.rank == 1);
  // [x, 1; 1, x]: rank 2, minor det = x^2 - 1 up to sign
  std::vector<std::vector<KPoly>> m2 = {{L(0, 1), L(1, 0)}, {L(1, 0), L(0, 1)}};
  auto r2 = bareiss_eliminate(m2);
  CHECK(r2.rank == 2);
  CHECK(r2.minor_det.deg() == 2);
  CHECK(r2.minor_det.eval(f.integer(1)).is_zero());
  CHECK(r2.minor_det.eval(f.integer(-1)).is_zero());
  CHECK_FALSE(r2.minor_det.eval(f.integer(3)).is_zero());
}

TEST_CASE("exact sign") {
  Field k = Field::dihedral(3);  // c = sqrt(3)
  CHECK(exact_sign(k.generator()) == 1);
  CHECK(exact_sign(-k.generator()) == -1);
  CHECK(exact_sign(k.zero()) == 0);
  // c - 7/4 > 0 and c - 7/4 - 1/100 < 0 bracket sqrt(3) ~ 1.732
  CHECK(exact_sign(k.generator() - k.rational(Rational(173, 100))) == 1);
  CHECK(exact_sign(k.generator() - k.rational(Rational(174, 100))) == -1);
  Field k5 = Field::dihedral(5);
  // 2cos(pi/10) ~ 1.9021
  CHECK(exact_sign(k5.generator() - k5.rational(Rational(19, 10))) == 1);
  CHECK(exact_sign(k5.generator() - k5.rational(Rational(191, 100))) == -1);
}

TEST_CASE("rational roots of K[x] polynomials") {
  Field k = Field::dihedral(3);
  auto X = KPoly::linear(k.zero(), k.one());
  // (x - 1/2)(x + 3)(x - c): rational roots exactly {1/2, -3}
  KPoly p = kp_mul(kp_mul(KPoly::linear(k.rational(Rational(-1, 2)), k.one()),
                          KPoly::linear(k.integer(3), k.one())),
                   KPoly::linear(-k.generator(), k.one()));
  auto roots = kp_rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-3));
  CHECK(roots[1] == Rational(1, 2));
  // squarefree handling: (x - 2)^3
  KPoly q = KPoly::constant(k.one());
  for (int i = 0; i < 3; ++i) q = kp_mul(q, KPoly::linear(k.integer(-2), k.one()));
  auto roots2 = kp_rational_roots(q);
  REQUIRE(roots2.size() == 1);
  CHECK(roots2[0] == Rational(2));
  // no rational roots: x^2 - 3 (roots are +-c)
  KPoly r = kp_sub(kp_mul(X, X), KPoly::constant(k.integer(3)));
  CHECK(kp_rational_roots(r).empty());
  (void)X;
}
