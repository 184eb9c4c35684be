#include "sra/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sra {

// --- Rref ---------------------------------------------------------------------

void Rref::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const FieldScalar& c = v[pivot_cols_[r]];
    if (c.is_zero()) continue;
    FieldScalar f = c;  // rows are pivot-normalized
    const Vec& row = rows_[r];
    for (int j = pivot_cols_[r]; j < cols_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
}

bool Rref::add_row(Vec v) {
  if ((int)v.size() != cols_) fail(errc::internal_error, "row width mismatch");
  reduce(v);
  int lead = -1;
  for (int j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) { lead = j; break; }
  if (lead < 0) return false;
  FieldScalar inv = v[lead].inv();
  for (int j = lead; j < cols_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  v[lead] = v[lead].field().one();
  // clear this column from existing rows to stay fully reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    FieldScalar c = rows_[r][lead];
    if (c.is_zero()) continue;
    for (int j = lead; j < cols_; ++j)
      if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
  }
  // insert keeping pivot columns sorted
  auto it = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
  int at = static_cast<int>(it - pivot_cols_.begin());
  pivot_cols_.insert(it, lead);
  rows_.insert(rows_.begin() + at, std::move(v));
  for (int c = 0; c < cols_; ++c)
    if (col_pivot_[c] >= at) col_pivot_[c]++;
  col_pivot_[lead] = at;
  return true;
}

Mat Rref::nullspace_basis() const {
  Mat out;
  Field f = Field::rationals();
  bool got = false;
  for (const auto& r : rows_) {
    if (got) break;
    for (const auto& s : r)
      if (s.attached()) { f = s.field(); got = true; break; }
  }
  for (int c = 0; c < cols_; ++c) {
    if (col_pivot_[c] >= 0) continue;
    Vec x(cols_);
    for (int j = 0; j < cols_; ++j) x[j] = f.zero();
    x[c] = f.one();
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r][c].is_zero()) x[pivot_cols_[r]] = -rows_[r][c];
    }
    out.push_back(std::move(x));
  }
  return out;
}

// --- Subspace -----------------------------------------------------------------

Subspace Subspace::span(int ambient, const Mat& vectors) {
  Rref r(ambient);
  for (const auto& v : vectors) r.add_row(v);
  Subspace s(ambient);
  s.basis_ = r.rows();
  return s;
}

bool Subspace::contains(const Vec& v) const {
  Rref r(ambient_);
  for (const auto& b : basis_) r.add_row(b);
  Vec w = v;
  r.reduce(w);
  return is_zero_vec(w);
}

bool Subspace::operator==(const Subspace& o) const {
  if (ambient_ != o.ambient_ || basis_.size() != o.basis_.size()) return false;
  for (size_t i = 0; i < basis_.size(); ++i)
    for (int j = 0; j < ambient_; ++j)
      if (!(basis_[i][j] == o.basis_[i][j])) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) fail(errc::internal_error, "ambient mismatch in intersection");
  int n = a.ambient_;
  int k = a.dim(), l = b.dim();
  if (k == 0 || l == 0) return Subspace(n);
  Field f = Field::rationals();
  for (const auto& s : a.basis_[0])
    if (s.attached()) { f = s.field(); break; }
  // solve u*A = w*B via the kernel of the stacked transpose [A^T | -B^T]
  Rref r(k + l);
  for (int row = 0; row < n; ++row) {
    Vec eq(k + l);
    for (int i = 0; i < k; ++i) eq[i] = a.basis_[i][row];
    for (int i = 0; i < l; ++i) eq[k + i] = -b.basis_[i][row];
    r.add_row(std::move(eq));
  }
  Mat ker = r.nullspace_basis();
  Mat vectors;
  for (const auto& uv : ker) {
    Vec x(n);
    for (int j = 0; j < n; ++j) x[j] = f.zero();
    for (int i = 0; i < k; ++i) {
      if (uv[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) x[j] += uv[i] * a.basis_[i][j];
    }
    vectors.push_back(std::move(x));
  }
  return span(n, vectors);
}

// --- dense helpers --------------------------------------------------------------

Vec zero_vec(const Field& f, int n) {
  Vec v(n);
  for (auto& s : v) s = f.zero();
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    FieldScalar acc;
    for (size_t j = 0; j < x.size(); ++j)
      if (!m[i][j].is_zero() && !x[j].is_zero()) acc += m[i][j] * x[j];
    out[i] = acc;
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Mat out(n, Vec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

// --- KPoly ----------------------------------------------------------------------

void KPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

FieldScalar KPoly::eval(const FieldScalar& x) const {
  FieldScalar acc;
  for (int i = deg(); i >= 0; --i) {
    acc = acc * x;
    acc += c[i];
  }
  return acc;
}

std::string KPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= deg(); ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c[i].to_string() << ")";
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

KPoly KPoly::constant(FieldScalar s) {
  KPoly p;
  p.c.push_back(std::move(s));
  p.trim();
  return p;
}

KPoly KPoly::linear(FieldScalar c0, FieldScalar c1) {
  KPoly p;
  p.c.push_back(std::move(c0));
  p.c.push_back(std::move(c1));
  p.trim();
  return p;
}

KPoly kp_add(const KPoly& a, const KPoly& b) {
  KPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

KPoly kp_sub(const KPoly& a, const KPoly& b) {
  KPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

KPoly kp_mul(const KPoly& a, const KPoly& b) {
  KPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

static void kp_divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  r = a;
  q = KPoly{};
  FieldScalar inv_lead = b.c.back().inv();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    FieldScalar c = r.c.back() * inv_lead;
    if ((int)q.c.size() < shift + 1) q.c.resize(shift + 1);
    q.c[shift] += c;
    for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] -= c * b.c[i];
    r.trim();
  }
}

KPoly kp_div_exact(const KPoly& a, const KPoly& b) {
  KPoly q, r;
  kp_divmod(a, b, q, r);
  if (!r.is_zero()) fail(errc::internal_error, "non-exact polynomial division");
  return q;
}

KPoly kp_rem(const KPoly& a, const KPoly& b) {
  KPoly q, r;
  kp_divmod(a, b, q, r);
  return r;
}

KPoly kp_monic(KPoly a) {
  if (a.is_zero()) return a;
  FieldScalar inv = a.c.back().inv();
  for (auto& s : a.c) s *= inv;
  return a;
}

KPoly kp_gcd(KPoly a, KPoly b) {
  a = kp_monic(std::move(a));
  b = kp_monic(std::move(b));
  while (!b.is_zero()) {
    KPoly r = kp_rem(a, b);
    a = std::move(b);
    b = kp_monic(std::move(r));
  }
  return a;
}

KPoly kp_derivative(const KPoly& a) {
  KPoly r;
  if (a.deg() < 1) return r;
  Field f = a.c.back().field();
  r.c.resize(a.c.size() - 1);
  for (int i = 1; i <= a.deg(); ++i) r.c[i - 1] = a.c[i] * f.integer(i);
  r.trim();
  return r;
}

// --- Bareiss over K[x] ----------------------------------------------------------

PencilElim bareiss_eliminate(std::vector<std::vector<KPoly>> m, unsigned col_shuffle_seed) {
  PencilElim res;
  if (m.empty() || m[0].empty()) return res;
  int rows = (int)m.size(), cols = (int)m[0].size();
  std::vector<int> colperm(cols);
  for (int j = 0; j < cols; ++j) colperm[j] = j;
  if (col_shuffle_seed != 0) {
    uint64_t s = col_shuffle_seed;
    for (int j = cols - 1; j > 0; --j) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      std::swap(colperm[j], colperm[s % (j + 1)]);
    }
  }
  KPoly prev_pivot;  // treated as 1 at the first step
  int k = 0;
  while (k < rows && k < cols) {
    // nonzero pivot of minimal degree limits coefficient growth
    int pi = -1, pj = -1, best = INT32_MAX;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j)
        if (!m[i][colperm[j]].is_zero() && m[i][colperm[j]].deg() < best) {
          best = m[i][colperm[j]].deg();
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[k], m[pi]);
    std::swap(colperm[k], colperm[pj]);
    const KPoly piv = m[k][colperm[k]];
    for (int i = k + 1; i < rows; ++i) {
      KPoly mik = m[i][colperm[k]];
      if (mik.is_zero()) {
        for (int j = k + 1; j < cols; ++j) {
          KPoly t = kp_mul(piv, m[i][colperm[j]]);
          m[i][colperm[j]] = prev_pivot.is_zero() ? std::move(t) : kp_div_exact(t, prev_pivot);
        }
        continue;
      }
      for (int j = k + 1; j < cols; ++j) {
        KPoly t = kp_sub(kp_mul(piv, m[i][colperm[j]]), kp_mul(mik, m[k][colperm[j]]));
        m[i][colperm[j]] = prev_pivot.is_zero() ? std::move(t) : kp_div_exact(t, prev_pivot);
      }
      m[i][colperm[k]] = KPoly{};
    }
    prev_pivot = piv;
    res.pivot_rows.push_back(k);
    res.pivot_cols.push_back(colperm[k]);
    ++k;
  }
  res.rank = k;
  res.minor_det = prev_pivot;  // det of the pivot submatrix up to sign
  return res;
}

// --- exact sign of the real embedding -------------------------------------------

namespace {

using QPoly = std::vector<Rational>;  // index = power

Rational qp_eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

int sgn(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

struct GenInterval {
  QPoly minpoly;
  Rational lo, hi;  // isolating interval, psi(lo) and psi(hi) of opposite sign
  void refine() {
    Rational mid = (lo + hi) / 2;
    Rational v = qp_eval(minpoly, mid);
    if (v == 0) { lo = mid; hi = mid; return; }
    if (sgn(v) == sgn(qp_eval(minpoly, lo))) lo = mid;
    else hi = mid;
  }
};

GenInterval generator_interval(const Field& f) {
  GenInterval ctx;
  ctx.minpoly = f.minpoly();
  double g = f.generator_embedding();
  // 2cos(pi/2n) is the largest minpoly root; root gaps far exceed 1e-6 at
  // desk scale, so a double seed isolates it
  ctx.lo = Rational((long)std::floor(g * 1e8) - 100, 100000000l);
  ctx.hi = Rational((long)std::ceil(g * 1e8) + 100, 100000000l);
  if (sgn(qp_eval(ctx.minpoly, ctx.lo)) * sgn(qp_eval(ctx.minpoly, ctx.hi)) >= 0)
    fail(errc::internal_error, "generator isolating interval invalid");
  return ctx;
}

struct QInterval {
  Rational lo, hi;
  QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  QInterval operator*(const QInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
  }
};

}  // namespace

int exact_sign(const FieldScalar& s) {
  if (s.is_zero()) return 0;
  Field f = s.field();
  if (f.is_rational()) return sgn(s.coeffs()[0]);
  GenInterval ctx = generator_interval(f);
  for (int iter = 0; iter < 20000; ++iter) {
    QInterval x{ctx.lo, ctx.hi};
    QInterval acc{Rational(0), Rational(0)};
    const auto& c = s.coeffs();
    for (int i = (int)c.size() - 1; i >= 0; --i) {
      acc = acc * x;
      acc = acc + QInterval{c[i], c[i]};
    }
    if (acc.lo > 0) return 1;
    if (acc.hi < 0) return -1;
    ctx.refine();
  }
  fail(errc::internal_error, "exact sign refinement did not converge");
}

// --- rational roots of a K[x] polynomial ----------------------------------------

namespace {

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_rem(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  while (r.size() >= b.size() && !r.empty()) {
    Rational c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    qp_trim(r);
  }
  return r;
}

QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QPoly r = qp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& q : a) q /= lead;
  }
  return a;
}

QPoly qp_div_exact(const QPoly& a, const QPoly& b) {
  QPoly q, r = a;
  while (r.size() >= b.size() && !r.empty()) {
    Rational c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] += c;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    qp_trim(r);
  }
  if (!r.empty()) fail(errc::internal_error, "non-exact rational polynomial division");
  return q;
}

QPoly qp_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * (long)i);
  return d;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(p);
  QPoly d = qp_derivative(p);
  qp_trim(d);
  chain.push_back(d);
  while (chain.back().size() > 1) {
    QPoly r = qp_rem(chain[chain.size() - 2], chain.back());
    for (auto& q : r) q = -q;
    qp_trim(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes_at(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.empty()) continue;
    int s = sgn(qp_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// simplest rational (minimal denominator) in [a, b] with 0 < a <= b
Rational simplest_rational_pos(const Rational& a, const Rational& b) {
  Integer fl = a.get_num() / a.get_den();  // floor for positive a
  Rational cl = (Rational(fl) == a) ? a : Rational(fl + 1);  // ceil
  if (cl <= b) return cl;
  // floor(a) == floor(b), no integer inside
  Rational fa = Rational(fl);
  return fa + Rational(1) / simplest_rational_pos(Rational(1) / (b - fa), Rational(1) / (a - fa));
}

Rational simplest_rational_in(Rational a, Rational b) {
  if (a > b) std::swap(a, b);
  if (a <= 0 && b >= 0) return Rational(0);
  if (b < 0) return -simplest_rational_pos(-b, -a);
  return simplest_rational_pos(a, b);
}

}  // namespace

std::vector<Rational> kp_rational_roots(const KPoly& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) fail(errc::internal_error, "rational roots of the zero polynomial");
  Field f = p.c.back().field();
  // coordinate polynomials over Q; a rational root must zero all of them
  int dk = f.degree();
  QPoly g;
  for (int coord = 0; coord < dk; ++coord) {
    QPoly q(p.c.size());
    bool nz = false;
    for (size_t i = 0; i < p.c.size(); ++i) {
      q[i] = p.c[i].attached() && coord < (int)p.c[i].coeffs().size() ? p.c[i].coeffs()[coord]
                                                                      : Rational(0);
      if (q[i] != 0) nz = true;
    }
    if (!nz) continue;
    qp_trim(q);
    g = g.empty() ? q : qp_gcd(g, q);
    if (g.size() == 1) return roots;  // constant gcd, no rational roots
  }
  if (g.empty()) fail(errc::internal_error, "zero polynomial slipped through");
  // squarefree part
  QPoly gp = qp_derivative(g);
  qp_trim(gp);
  if (!gp.empty()) {
    QPoly h = qp_gcd(g, gp);
    if (h.size() > 1) g = qp_div_exact(g, h);
  }
  if (g.size() <= 1) return roots;
  size_t nz = 0;
  while (nz < g.size() && g[nz] == 0) ++nz;
  if (nz > 0) {
    roots.push_back(Rational(0));
    g.erase(g.begin(), g.begin() + nz);
  }
  if (g.size() == 2) {
    roots.push_back(-g[0] / g[1]);
    g = {Rational(1)};
  }
  while (g.size() > 2) {
    // integer-clear for the root height bound: denominators divide the lead
    Integer den_lcm = 1;
    for (const auto& q : g) den_lcm = lcm(den_lcm, q.get_den());
    Integer L = abs(g.back().get_num() * (den_lcm / g.back().get_den()));
    Rational sep = Rational(1) / Rational(2 * L * L);
    Rational bound = 0;
    for (size_t i = 0; i + 1 < g.size(); ++i) {
      Rational q = abs(Rational(g[i] / g.back()));
      if (q > bound) bound = q;
    }
    bound += 1;
    auto chain = sturm_chain(g);
    struct Iv { Rational lo, hi; };
    std::vector<Iv> stack = {{-bound, bound}}, isolated;
    bool deflated = false;
    auto deflate_at = [&](const Rational& r) {
      roots.push_back(r);
      g = qp_div_exact(g, QPoly{-r, Rational(1)});
      qp_trim(g);
      deflated = true;
    };
    while (!stack.empty() && !deflated) {
      Iv iv = stack.back();
      stack.pop_back();
      int cnt = sign_changes_at(chain, iv.lo) - sign_changes_at(chain, iv.hi);
      if (cnt <= 0) continue;
      if (cnt == 1 && qp_eval(g, iv.lo) != 0 && qp_eval(g, iv.hi) != 0) {
        isolated.push_back(iv);
        continue;
      }
      Rational mid = (iv.lo + iv.hi) / 2;
      if (qp_eval(g, mid) == 0) { deflate_at(mid); break; }
      stack.push_back({iv.lo, mid});
      stack.push_back({mid, iv.hi});
    }
    if (deflated) continue;  // restart isolation on the deflated polynomial
    for (auto iv : isolated) {
      // refine, testing the simplest rational each round; stop when the
      // interval is too narrow to hold any rational of denominator <= L
      for (int guard = 0; guard < 100000; ++guard) {
        Rational cand = simplest_rational_in(iv.lo, iv.hi);
        if (qp_eval(g, cand) == 0) { roots.push_back(cand); break; }
        if (iv.hi - iv.lo < sep) break;  // proven: no rational root here
        Rational mid = (iv.lo + iv.hi) / 2;
        if (qp_eval(g, mid) == 0) { roots.push_back(mid); break; }
        if (sgn(qp_eval(g, mid)) == sgn(qp_eval(g, iv.lo))) iv.lo = mid;
        else iv.hi = mid;
      }
    }
    break;
  }
  // keep only roots of the full K-polynomial; sort for determinism
  std::vector<Rational> verified;
  for (const auto& r : roots)
    if (p.eval(f.rational(r)).is_zero()) verified.push_back(r);
  std::sort(verified.begin(), verified.end());
  verified.erase(std::unique(verified.begin(), verified.end()), verified.end());
  return verified;
}

}  // namespace sra
