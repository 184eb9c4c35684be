#pragma once

#include <map>
#include <string>

#include "sra/algebra.hpp"

namespace sra {

/// Sparse polynomial in the N ambient coordinates, exact coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Field f) : f_(std::move(f)) {}

  static Polynomial constant(const Field& f, const FieldScalar& c);
  static Polynomial variable(const Field& f, int i);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::map<uint64_t, FieldScalar>& terms() const { return terms_; }
  const Field& field() const { return f_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldScalar& c) const;
  bool operator==(const Polynomial& o) const;

  void add_term(uint64_t e, const FieldScalar& c);

private:
  Field f_ = Field::rationals();
  std::map<uint64_t, FieldScalar> terms_;  // packed exponents, no zero coeffs
};

/// Polynomial realization of the algebra through Dunkl difference-differential
/// operators: D_i = d_i + sum over positive roots of
/// eta(v) kappa (v_i/(v,v)) (p - p o r_v)/(v, x), with kappa calibrated per
/// reflection class so that the unnormalized generators b^a_i = x_i +
/// (-1)^a D_i satisfy the doubled defining relation [b^0_i, b^1_j] =
/// 2 (delta_ij + sum_v eta v_i v_j/(v,v) r_v).
class DunklRep {
public:
  explicit DunklRep(Algebra a, int calibration_degree = 3);

  const Algebra& algebra() const { return alg_; }
  const std::vector<FieldScalar>& kappa() const { return kappa_; }

  Polynomial apply_partial(int i, const Polynomial& p) const;
  Polynomial apply_group(int g, const Polynomial& p) const;   // p -> p o rho(g)^{-1}
  Polynomial apply_dunkl(int i, const Polynomial& p) const;   // D_i
  Polynomial apply_generator(int alpha, int i, const Polynomial& p) const;  // b^alpha_i

  /// Operator of a whole word, atoms applied right-to-left.
  Polynomial apply_word(const std::vector<Atom>& word, const Polynomial& p) const;

  /// Operator of a normal-form element whose terms came from a word with
  /// word_adeg generator atoms: term coefficients pick up 2^((word_adeg-k)/2).
  Polynomial apply_element(const AlgebraElement& e, int word_adeg, const Polynomial& p) const;

  /// Soundness bridge: normal_form(word) agrees with the direct operator
  /// composition on every monomial of degree <= d.  On failure writes the
  /// smallest counterexample monomial into *witness.
  bool oracle_check(const std::vector<Atom>& word, int d, std::string* witness = nullptr) const;

private:
  Algebra alg_;
  std::vector<FieldScalar> kappa_;  // per reflection class
  void calibrate(int degree);
  Polynomial dunkl_with_kappa(int i, const Polynomial& p,
                              const std::vector<FieldScalar>& kappa) const;
};

/// Exact division of p by the linear form (v, x); throws internal-error when
/// the division does not come out exact.
Polynomial divide_by_linear_form(const Polynomial& p, const Vec& v);

}  // namespace sra
