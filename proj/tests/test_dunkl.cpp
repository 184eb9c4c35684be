#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sra/dunkl.hpp"

using namespace sra;

namespace {

Algebra make_i23(Rational eta) {
  Field k = Field::dihedral(3);
  return Algebra(RootSystem::dihedral(3, {k.rational(eta)}));
}

Algebra make_a1(Rational eta) {
  return Algebra(RootSystem::symmetric(2, Field::rationals().rational(eta)));
}

std::vector<uint64_t> monomials_up_to(int n, int d) {
  std::vector<uint64_t> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> gen = [&](int pos, int left) {
    if (pos == n) {
      uint64_t e = 0;
      for (int k = 0; k < n; ++k) e |= (uint64_t(cur[k]) << (8 * k));
      out.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      gen(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  gen(0, d);
  return out;
}

std::vector<Atom> random_word(const Algebra& a, std::mt19937_64& rng, int max_adeg) {
  std::vector<Atom> w;
  int adeg = 0;
  int len = 1 + int(rng() % 6);
  for (int i = 0; i < len; ++i) {
    if (rng() % 3 == 0) {
      w.push_back(Atom::grp(int(rng() % a.root_system().order())));
    } else if (adeg < max_adeg) {
      w.push_back(Atom::gen(int(rng() % 2), int(rng() % a.nvars())));
      ++adeg;
    }
  }
  if (w.empty()) w.push_back(Atom::grp(0));
  return w;
}

}  // namespace

TEST_CASE("calibrated kappa matches the root normalization") {
  DunklRep rep(make_i23(Rational(1, 3)));
  REQUIRE(rep.kappa().size() == 1);
  CHECK(rep.kappa()[0] == rep.algebra().field().one());  // unit roots
  DunklRep repa(make_a1(Rational(1, 2)));
  REQUIRE(repa.kappa().size() == 1);
  CHECK(repa.kappa()[0] == repa.algebra().field().integer(2));  // (v,v) = 2
}

TEST_CASE("eta = 0 reduces the Dunkl operator to the partial derivative") {
  DunklRep rep(make_i23(Rational(0)));
  Field f = rep.algebra().field();
  Polynomial x1sq = Polynomial::variable(f, 0) * Polynomial::variable(f, 0);
  Polynomial want = Polynomial::variable(f, 0).scaled(f.integer(2));
  CHECK(rep.apply_dunkl(0, x1sq) == want);
  CHECK(rep.apply_dunkl(0, Polynomial::constant(f, f.integer(7))).is_zero());
  CHECK(rep.apply_dunkl(1, Polynomial::constant(f, f.one())).is_zero());
}

TEST_CASE("Dunkl operators commute (degree <= 5)") {
  for (DunklRep rep : {DunklRep(make_i23(Rational(1, 3))), DunklRep(make_a1(Rational(1, 2)))}) {
    Field f = rep.algebra().field();
    int n = rep.algebra().nvars();
    for (uint64_t e : monomials_up_to(n, 5)) {
      Polynomial p(f);
      p.add_term(e, f.one());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Polynomial lhs = rep.apply_dunkl(i, rep.apply_dunkl(j, p));
          Polynomial rhs = rep.apply_dunkl(j, rep.apply_dunkl(i, p));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("equivariance r_v D_i r_v = sum_j R(v)_ij D_j (degree <= 4)") {
  DunklRep rep(make_i23(Rational(1, 3)));
  const RootSystem& rs = rep.algebra().root_system();
  Field f = rs.field();
  for (int ri : {0, 1, 2}) {
    const Root& root = rs.roots()[ri];
    int g = root.group_elem;
    for (uint64_t e : monomials_up_to(2, 4)) {
      Polynomial p(f);
      p.add_term(e, f.one());
      for (int i = 0; i < 2; ++i) {
        Polynomial lhs = rep.apply_group(g, rep.apply_dunkl(i, rep.apply_group(g, p)));
        Polynomial rhs(f);
        for (int j = 0; j < 2; ++j)
          rhs = rhs + rep.apply_dunkl(j, p).scaled(root.reflection[i][j]);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("represented commutators: Heisenberg case and off-diagonal") {
  // eta = 0: [b0_1, b1_1] p = 2p
  DunklRep rep0(make_a1(Rational(0)));
  Field q = rep0.algebra().field();
  for (uint64_t e : monomials_up_to(2, 4)) {
    Polynomial p(q);
    p.add_term(e, q.one());
    Polynomial br = rep0.apply_generator(0, 0, rep0.apply_generator(1, 0, p)) -
                    rep0.apply_generator(1, 0, rep0.apply_generator(0, 0, p));
    CHECK(br == p.scaled(q.integer(2)));
  }
  // same-alpha commutators vanish (degree <= 5)
  DunklRep rep(make_i23(Rational(1, 3)));
  Field f = rep.algebra().field();
  for (uint64_t e : monomials_up_to(2, 5)) {
    Polynomial p(f);
    p.add_term(e, f.one());
    for (int alpha : {0, 1}) {
      Polynomial br = rep.apply_generator(alpha, 0, rep.apply_generator(alpha, 1, p)) -
                      rep.apply_generator(alpha, 1, rep.apply_generator(alpha, 0, p));
      CHECK(br.is_zero());
    }
  }
  // [b0_1, b1_2] = 2 sum_v eta v_1 v_2/(v,v) r_v as operators (degree <= 4)
  const RootSystem& rs = rep.algebra().root_system();
  const Vec& k12 = rep.algebra().structure_element(0, 1);
  for (uint64_t e : monomials_up_to(2, 4)) {
    Polynomial p(f);
    p.add_term(e, f.one());
    Polynomial br = rep.apply_generator(0, 0, rep.apply_generator(1, 1, p)) -
                    rep.apply_generator(1, 1, rep.apply_generator(0, 0, p));
    Polynomial want(f);
    for (int g = 0; g < rs.order(); ++g) {
      if (k12[g].is_zero()) continue;
      want = want + rep.apply_group(g, p).scaled(k12[g] + k12[g]);
    }
    CHECK(br == want);
  }
}

TEST_CASE("oracle_check: defining relations as words") {
  DunklRep rep(make_i23(Rational(1, 3)));
  // [a0_1, a1_1] via both orders
  CHECK(rep.oracle_check({Atom::gen(0, 0), Atom::gen(1, 0)}, 4));
  CHECK(rep.oracle_check({Atom::gen(1, 0), Atom::gen(0, 0)}, 4));
  // g a g^{-1} against the Coxeter relation coefficients
  const RootSystem& rs = rep.algebra().root_system();
  for (int g = 0; g < rs.order(); ++g)
    for (int alpha : {0, 1})
      for (int i = 0; i < 2; ++i)
        CHECK(rep.oracle_check({Atom::grp(g), Atom::gen(alpha, i), Atom::grp(rs.inverse(g))}, 3));
}

TEST_CASE("oracle_check on random words") {
  std::mt19937_64 rng(424242);
  for (DunklRep rep : {DunklRep(make_i23(Rational(1, 3))), DunklRep(make_a1(Rational(1, 2)))}) {
    for (int iter = 0; iter < 40; ++iter) {
      std::vector<Atom> w = random_word(rep.algebra(), rng, 5);
      std::string witness;
      bool ok = rep.oracle_check(w, 4, &witness);
      CHECK(ok);
      if (!ok) MESSAGE("counterexample at ", witness);
    }
  }
}

TEST_CASE("divide_by_linear_form is exact and checked") {
  Field f = Field::dihedral(3);
  Vec v = {f.one(), f.generator()};
  // (x1 + c x2) * (x1^2 + x2) divided back
  Polynomial lin(f);
  lin.add_term(1, f.one());
  lin.add_term(uint64_t(1) << 8, f.generator());
  Polynomial p(f);
  p.add_term(2, f.one());
  p.add_term(uint64_t(1) << 8, f.one());
  Polynomial prod = lin * p;
  CHECK(divide_by_linear_form(prod, v) == p);
  Polynomial bad(f);
  bad.add_term(uint64_t(1) << 8, f.one());  // x2 alone is not divisible
  CHECK_THROWS_AS(divide_by_linear_form(bad, v), error);
}
