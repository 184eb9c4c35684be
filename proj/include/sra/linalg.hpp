#pragma once

#include <optional>
#include <vector>

#include "sra/field.hpp"

namespace sra {

using Vec = std::vector<FieldScalar>;
using Mat = std::vector<Vec>;

/// Incremental reduced row echelon form over the coefficient field.
/// Rows are constraint vectors; pivots are normalized to 1 and cleared in
/// both directions, so the row set is canonical for the spanned row space.
class Rref {
public:
  explicit Rref(int cols) : cols_(cols), col_pivot_(cols, -1) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces v against the current rows in place.
  void reduce(Vec& v) const;

  /// Reduce and insert; returns true when the rank grew.
  bool add_row(Vec v);

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }
  int pivot_row_of_col(int c) const { return col_pivot_[c]; }

  /// Canonical basis of {x : r . x = 0 for all rows r}, one vector per free
  /// column, ordered by free column index; each has first nonzero entry 1.
  Mat nullspace_basis() const;

private:
  int cols_;
  std::vector<Vec> rows_;        // sorted by pivot column
  std::vector<int> pivot_cols_;  // parallel to rows_
  std::vector<int> col_pivot_;   // column -> row index or -1
  void insertion_fixup(int at);
};

/// A linear subspace of K^n in canonical reduced-echelon basis form.
/// Two Subspaces are equal iff their basis matrices are identical.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(int ambient, const Mat& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  static Subspace intersect(const Subspace& a, const Subspace& b);

private:
  int ambient_;
  Mat basis_;
};

// --- dense helpers ------------------------------------------------------------

Vec zero_vec(const Field& f, int n);
Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);
bool is_zero_vec(const Vec& v);

// --- univariate polynomials over the field ------------------------------------

/// Coefficient vector, index = power; no trailing zero terms.
struct KPoly {
  std::vector<FieldScalar> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  void trim();
  FieldScalar eval(const FieldScalar& x) const;
  std::string to_string() const;

  static KPoly constant(FieldScalar s);
  static KPoly linear(FieldScalar c0, FieldScalar c1);  // c0 + c1 x
};

KPoly kp_add(const KPoly& a, const KPoly& b);
KPoly kp_sub(const KPoly& a, const KPoly& b);
KPoly kp_mul(const KPoly& a, const KPoly& b);
/// Exact division; throws internal-error on nonzero remainder.
KPoly kp_div_exact(const KPoly& a, const KPoly& b);
/// Remainder of a mod b (b nonzero).
KPoly kp_rem(const KPoly& a, const KPoly& b);
/// Monic gcd.
KPoly kp_gcd(KPoly a, KPoly b);
KPoly kp_derivative(const KPoly& a);
KPoly kp_monic(KPoly a);

/// Fraction-free elimination of a matrix with polynomial entries.
/// Returns the rank over K(x) and (up to sign) the determinant of the pivot
/// submatrix, which vanishes at every x where the matrix loses rank.
struct PencilElim {
  int rank = 0;
  KPoly minor_det;  // zero polynomial when rank == 0
  std::vector<int> pivot_rows, pivot_cols;
};
PencilElim bareiss_eliminate(std::vector<std::vector<KPoly>> m, unsigned col_shuffle_seed = 0);

/// Exact sign of the real embedding of a scalar (-1, 0, +1), computed by
/// interval refinement of the field generator against its minimal polynomial.
int exact_sign(const FieldScalar& s);

/// All rational roots of p (exact; complete).  Roots in K \ Q are not
/// reported here.
std::vector<Rational> kp_rational_roots(const KPoly& p);

}  // namespace sra
