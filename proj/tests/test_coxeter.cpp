#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sra/coxeter.hpp"

using namespace sra;

namespace {

RootSystem i2(int n, Rational eta0, Rational eta1 = Rational(0)) {
  Field k = Field::dihedral(n);
  std::vector<FieldScalar> etas = {k.rational(eta0)};
  if (n % 2 == 0) etas.push_back(k.rational(eta1));
  return RootSystem::dihedral(n, etas);
}

}  // namespace

TEST_CASE("I2(3): six roots, order six, one reflection class") {
  RootSystem rs = i2(3, Rational(1, 3));
  CHECK(rs.roots().size() == 6);
  CHECK(rs.order() == 6);
  CHECK(rs.conj_classes().size() == 3);
  CHECK(rs.reflections().size() == 3);
  CHECK(rs.reflection_classes() == 1);
  // all reflections conjugate (brute-force table check)
  int cls = rs.class_of(rs.reflections()[0]);
  for (int r : rs.reflections()) CHECK(rs.class_of(r) == cls);
}

TEST_CASE("I2(5): order ten, all five reflections in one class") {
  RootSystem rs = i2(5, Rational(1, 2));
  CHECK(rs.order() == 10);
  CHECK(rs.reflections().size() == 5);
  int cls = rs.class_of(rs.reflections()[0]);
  for (int r : rs.reflections()) CHECK(rs.class_of(r) == cls);
}

TEST_CASE("I2(4): two reflection classes, eta arity enforced") {
  RootSystem rs = i2(4, Rational(1, 2), Rational(1, 4));
  CHECK(rs.order() == 8);
  CHECK(rs.reflection_classes() == 2);
  CHECK(rs.class_of(rs.roots()[0].group_elem) != rs.class_of(rs.roots()[1].group_elem));
  CHECK(rs.eta_of_root(0) == rs.field().rational(Rational(1, 2)));
  CHECK(rs.eta_of_root(1) == rs.field().rational(Rational(1, 4)));
  CHECK(rs.eta_of_root(2) == rs.eta_of_root(0));
  Field k = Field::dihedral(4);
  CHECK_THROWS_AS(RootSystem::dihedral(4, {k.one()}), error);
  CHECK_THROWS_AS(RootSystem::dihedral(3, {Field::dihedral(3).one(), Field::dihedral(3).one()}),
                  error);
  CHECK_THROWS_AS(RootSystem::dihedral(2, {k.one()}), error);
}

TEST_CASE("A(1): two roots, order two") {
  RootSystem rs = RootSystem::symmetric(2, Field::rationals().zero());
  CHECK(rs.roots().size() == 2);
  CHECK(rs.order() == 2);
  Field q = Field::rationals();
  CHECK(rs.roots()[0].v == Vec{q.one(), -q.one()});
  CHECK(rs.roots()[1].v == Vec{-q.one(), q.one()});
}

TEST_CASE("A(2): S3 with all transpositions conjugate") {
  RootSystem rs = RootSystem::symmetric(3, Field::rationals().rational(Rational(1, 2)));
  CHECK(rs.order() == 6);
  CHECK(rs.roots().size() == 6);
  CHECK(rs.reflections().size() == 3);
  int cls = rs.class_of(rs.reflections()[0]);
  for (int r : rs.reflections()) CHECK(rs.class_of(r) == cls);
}

TEST_CASE("reflect: axis flip, involution, composition to rotation") {
  RootSystem rs = i2(3, Rational(1, 3));
  Field k = rs.field();
  // v = (1,0): (x1, x2) -> (-x1, x2)
  Vec x = {k.integer(5), k.integer(7)};
  Vec rx = reflect_vector(rs.roots()[0].v, x);
  CHECK(rx == Vec{k.integer(-5), k.integer(7)});
  // involution on all roots
  for (const auto& root : rs.roots()) {
    Vec y = reflect_vector(root.v, x);
    CHECK(reflect_vector(root.v, y) == x);
  }
  CHECK_THROWS_AS(reflect_vector(zero_vec(k, 2), x), error);
  // reflections across the angle-0 and angle-pi/3 roots compose to the
  // rotation by 2pi/3: exact matrix identity via the multiplication table
  int r0 = rs.roots()[0].group_elem, r1 = rs.roots()[1].group_elem;
  CHECK(rs.mult(r1, r0) == 1);             // rot(1)
  CHECK(rs.mult(r0, r1) == 2);             // rot(2), the inverse rotation
  CHECK(rs.inverse(1) == 2);
}

TEST_CASE("group coefficient matrices") {
  RootSystem rs = i2(3, Rational(1, 3));
  Field k = rs.field();
  // reflection across v=(1,0): coefficients diag(-1, 1)
  const Mat& m = rs.element(rs.roots()[0].group_elem).coeff;
  CHECK(m[0][0] == -k.one());
  CHECK(m[0][1].is_zero());
  CHECK(m[1][0].is_zero());
  CHECK(m[1][1] == k.one());
  // identity element
  const Mat& mi = rs.element(0).coeff;
  CHECK(mi[0][0].is_one());
  CHECK(mi[1][1].is_one());
  // antihomomorphism: coeff(g*h) = coeff(h) * coeff(g), exact
  for (int g = 0; g < rs.order(); ++g)
    for (int h = 0; h < rs.order(); ++h) {
      Mat lhs = rs.element(rs.mult(g, h)).coeff;
      Mat rhs = mat_mul(rs.element(h).coeff, rs.element(g).coeff);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(lhs[i][j] == rhs[i][j]);
    }
}

TEST_CASE("group elements permute the root set") {
  for (auto rs : {i2(3, Rational(1, 3)), i2(4, Rational(1, 2), Rational(0))}) {
    for (int g = 0; g < rs.order(); ++g) {
      for (const auto& r : rs.roots()) {
        Vec img = mat_vec(rs.element(g).matrix, r.v);
        bool found = false;
        for (const auto& s : rs.roots())
          if (img == s.v) { found = true; break; }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("dihedral group sizes") {
  for (int n : {3, 4, 5, 6, 7}) {
    RootSystem rs = n % 2 ? i2(n, Rational(1, 3))
                          : i2(n, Rational(1, 3), Rational(1, 4));
    CHECK(rs.order() == 2 * n);
    CHECK((int)rs.reflections().size() == n);
    CHECK(rs.roots().size() == (size_t)(2 * n));
  }
}
