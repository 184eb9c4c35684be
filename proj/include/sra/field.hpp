#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "sra/error.hpp"

namespace sra {

using Rational = mpq_class;
using Integer = mpz_class;

std::string rational_to_string(const Rational& q);

struct FieldData;

/// Coefficient field of the engine: either Q, or the real cyclotomic field
/// K_n = Q(c) with c = 2 cos(pi/(2n)), n >= 3.  K_n contains cos and sin of
/// every multiple of pi/(2n), so all reflection and projector matrix entries
/// of I2(n) live in it.  Values are immutable and cheap handles.
class Field {
public:
  static Field rationals();
  static Field dihedral(int n);

  bool is_rational() const;
  int n() const;        // 0 for Q
  int degree() const;   // extension degree over Q
  const std::vector<Rational>& minpoly() const;  // monic, degree()+1 entries
  bool irreducibility_certified() const;

  class Scalar;
  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long v) const;
  Scalar rational(Rational q) const;
  Scalar from_coeffs(std::vector<Rational> c) const;  // coordinates in 1, c, c^2, ...
  Scalar generator() const;  // c itself; unsupported-operation for Q
  Scalar cheb(long k) const; // exact 2 cos(k*pi/(2n)); unsupported-operation for Q

  double generator_embedding() const;  // 2 cos(pi/(2n)) in double precision

  bool same(const Field& o) const;
  bool operator==(const Field& o) const { return same(o); }

private:
  explicit Field(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const FieldData> d_;
  friend class Scalar;
  friend struct FieldData;
};

/// Element of the field, reduced modulo the minimal polynomial; coordinate
/// vectors are canonical, so equality is coefficient-wise.  A default
/// constructed Scalar is the zero element compatible with every field.
class Field::Scalar {
public:
  Scalar() = default;

  bool is_zero() const;
  bool is_one() const;
  bool attached() const { return d_ != nullptr; }
  Field field() const;

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational rational_part() const;  // coefficient of 1; whole value if degree 1

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inv() const;

  /// this += a*b without materializing a*b as a temporary.
  void add_mul(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  double to_double() const;

  /// Canonical text form: "0", "3/2", "c", "-1/2*c", "3/2 + 1/2*c^2", ...
  std::string to_string() const;

private:
  std::shared_ptr<const FieldData> d_;  // null = detached zero
  std::vector<Rational> c_;             // size = degree when attached
  Scalar(std::shared_ptr<const FieldData> d, std::vector<Rational> c);
  friend class Field;
};

using FieldScalar = Field::Scalar;

// --- internal helpers, exposed for tests -----------------------------------

/// Cyclotomic polynomial Phi_m as integer coefficients (index = power).
std::vector<Integer> cyclotomic_poly(unsigned m);

/// Minimal polynomial of 2 cos(2*pi/m) for m > 2, degree phi(m)/2.
std::vector<Integer> real_cyclotomic_minpoly(unsigned m);

/// Brute-force check that a monic integer polynomial whose roots all lie in
/// (-2, 2) has no monic integer factor of degree in [1, max_degree].
bool has_small_factor(const std::vector<Integer>& poly, int max_degree);

/// Degree sets that a rational factorization could have, from mod-p
/// distinct-degree factorization patterns.  Returns true if the pattern
/// search proves irreducibility.
bool modp_proves_irreducible(const std::vector<Integer>& poly);

}  // namespace sra
