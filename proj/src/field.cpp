#include "sra/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sra {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_eta: return "invalid-eta";
    case errc::invalid_root: return "invalid-root";
    case errc::field_mismatch: return "field-mismatch";
    case errc::instance_mismatch: return "instance-mismatch";
    case errc::division_by_zero: return "division-by-zero";
    case errc::unsupported_operation: return "unsupported-operation";
    case errc::degree_exceeded: return "degree-exceeded";
    case errc::non_stabilized: return "non-stabilized";
    case errc::inconclusive: return "inconclusive";
    case errc::parse_error: return "parse-error";
    case errc::internal_error: return "internal-error";
  }
  return "unknown";
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// --- dense integer polynomial helpers ---------------------------------------

using ZPoly = std::vector<Integer>;  // coefficient i = power i, no trailing zeros

static void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

static int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// Exact division, fails hard on nonzero remainder.
static ZPoly zp_div_exact(const ZPoly& num, const ZPoly& den) {
  ZPoly r = num;
  ZPoly q(std::max<size_t>(1, num.size() - den.size() + 1), Integer(0));
  while (zp_deg(r) >= zp_deg(den)) {
    int shift = zp_deg(r) - zp_deg(den);
    Integer c = r.back() / den.back();
    if (c * den.back() != r.back()) fail(errc::internal_error, "non-exact polynomial division");
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) r[i + shift] -= c * den[i];
    zp_trim(r);
  }
  if (!r.empty()) fail(errc::internal_error, "nonzero remainder in exact polynomial division");
  zp_trim(q);
  return q;
}

std::vector<Integer> cyclotomic_poly(unsigned m) {
  static std::map<unsigned, ZPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  ZPoly num(m + 1, Integer(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    ZPoly phi_d = cyclotomic_poly(d);
    num = zp_div_exact(num, phi_d);
  }
  cache[m] = num;
  return num;
}

std::vector<Integer> real_cyclotomic_minpoly(unsigned m) {
  // Phi_m is palindromic of even degree 2d for m > 2; substitute y = x + 1/x
  // using the recursion V_0 = 2, V_1 = y, V_{j+1} = y V_j - V_{j-1}, where
  // V_j(x + 1/x) = x^j + x^-j.
  if (m <= 2) fail(errc::invalid_parameter, "real cyclotomic minpoly needs m > 2");
  ZPoly phi = cyclotomic_poly(m);
  int twod = zp_deg(phi);
  if (twod % 2 != 0) fail(errc::internal_error, "cyclotomic degree not even");
  int d = twod / 2;
  std::vector<ZPoly> v(d + 1);
  v[0] = {Integer(2)};
  if (d >= 1) v[1] = {Integer(0), Integer(1)};
  for (int j = 2; j <= d; ++j) {
    ZPoly t(v[j - 1].size() + 1, Integer(0));
    for (size_t i = 0; i < v[j - 1].size(); ++i) t[i + 1] = v[j - 1][i];
    for (size_t i = 0; i < v[j - 2].size(); ++i) t[i] -= v[j - 2][i];
    v[j] = t;
  }
  ZPoly psi(d + 1, Integer(0));
  psi[0] = phi[d];
  for (int j = 1; j <= d; ++j)
    for (size_t i = 0; i < v[j].size(); ++i) psi[i] += phi[d + j] * v[j][i];
  zp_trim(psi);
  if (zp_deg(psi) != d || psi[d] != 1) fail(errc::internal_error, "palindrome substitution failed");
  return psi;
}

// --- brute-force bounded factor search ---------------------------------------

static bool zp_divides(const ZPoly& g, const ZPoly& f) {
  ZPoly r = f;
  while (zp_deg(r) >= zp_deg(g)) {
    int shift = zp_deg(r) - zp_deg(g);
    Integer c = r.back();  // g monic
    for (size_t i = 0; i < g.size(); ++i) r[i + shift] -= c * g[i];
    zp_trim(r);
  }
  return r.empty();
}

static bool search_factor(const ZPoly& f, int m, ZPoly& g, int pos) {
  if (pos < 0) return zp_divides(g, f);
  // all roots in (-2,2): |e_k| <= C(m,k) 2^k for the k-th symmetric function
  long bound = 1;
  int k = m - pos;
  for (int i = 0; i < k; ++i) bound = bound * 2 * (m - i) / (i + 1);
  for (long a = -bound; a <= bound; ++a) {
    g[pos] = a;
    if (search_factor(f, m, g, pos - 1)) return true;
  }
  return false;
}

bool has_small_factor(const std::vector<Integer>& poly, int max_degree) {
  for (int m = 1; m <= max_degree && 2 * m <= zp_deg(poly); ++m) {
    ZPoly g(m + 1, Integer(0));
    g[m] = 1;
    if (search_factor(poly, m, g, m - 1)) return true;
  }
  return false;
}

// --- mod-p distinct-degree patterns ------------------------------------------

namespace {

using PPoly = std::vector<uint64_t>;

PPoly pp_trim(PPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

PPoly pp_mod(const PPoly& a, const PPoly& m, uint64_t p) {
  // m monic
  PPoly r = a;
  while (r.size() >= m.size() && !r.empty()) {
    uint64_t c = r.back() % p;
    size_t shift = r.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = (__uint128_t)c * m[i] % p;
      r[i + shift] = (r[i + shift] + p - sub) % p;
    }
    r = pp_trim(std::move(r));
  }
  return r;
}

PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint64_t p) {
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (__uint128_t)a[i] * b[j]) % p;
  }
  return pp_mod(pp_trim(std::move(c)), m, p);
}

PPoly pp_gcd(PPoly a, PPoly b, uint64_t p) {
  auto inv = [p](uint64_t x) {
    // Fermat
    uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = (__uint128_t)r * base % p;
      base = (__uint128_t)base * base % p;
      e >>= 1;
    }
    return r;
  };
  a = pp_trim(std::move(a));
  b = pp_trim(std::move(b));
  while (!b.empty()) {
    uint64_t il = inv(b.back());
    PPoly bm = b;
    for (auto& x : bm) x = (__uint128_t)x * il % p;  // make monic
    a = pp_mod(a, bm, p);
    std::swap(a, b);
    b = pp_trim(std::move(b));
  }
  return a;
}

}  // namespace

bool modp_proves_irreducible(const std::vector<Integer>& poly) {
  int n = zp_deg(poly);
  if (n <= 1) return true;
  // candidate proper factor degrees still alive
  std::set<int> alive;
  for (int d = 1; d < n; ++d) alive.insert(d);
  static const int primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                               47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  for (int pi : primes) {
    uint64_t p = pi;
    PPoly f(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
      Integer c = poly[i] % Integer(pi);
      if (c < 0) c += pi;
      f[i] = c.get_ui();
    }
    f = pp_trim(std::move(f));
    if ((int)f.size() - 1 != n) continue;  // leading coefficient vanished
    // skip primes where f mod p is not squarefree
    PPoly df(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) df[i - 1] = (__uint128_t)f[i] * (i % p) % p;
    if (pp_gcd(f, pp_trim(std::move(df)), p).size() > 1) continue;
    // distinct-degree pattern: w = x; repeatedly w <- w^p mod f
    PPoly rem = f;
    PPoly w = {0, 1};
    std::vector<int> degs;  // factor degree multiset
    for (int d = 1; 2 * d <= (int)rem.size() - 1; ++d) {
      // w = x^{p^d} mod f  (tracked against original f for stability)
      PPoly wp = {1};
      PPoly base = w;
      uint64_t e = p;
      while (e) {
        if (e & 1) wp = pp_mulmod(wp, base, f, p);
        base = pp_mulmod(base, base, f, p);
        e >>= 1;
      }
      w = wp;
      PPoly diff = w;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p - 1) % p;
      PPoly g = pp_gcd(rem, pp_trim(std::move(diff)), p);
      int gd = (int)g.size() - 1;
      if (gd > 0) {
        for (int k = 0; k < gd / d; ++k) degs.push_back(d);
        // divide rem by g: recompute as gcd-free part is enough for patterns
        // (rem degree bookkeeping only)
        PPoly gm = g;
        uint64_t il = 1, e2 = p - 2, bb = gm.back();
        while (e2) { if (e2 & 1) il = (__uint128_t)il * bb % p; bb = (__uint128_t)bb * bb % p; e2 >>= 1; }
        for (auto& x : gm) x = (__uint128_t)x * il % p;
        // synthetic division
        PPoly quo(rem.size() - gm.size() + 1, 0);
        PPoly rr = rem;
        while (rr.size() >= gm.size() && !rr.empty()) {
          uint64_t c = rr.back();
          size_t shift = rr.size() - gm.size();
          quo[shift] = c;
          for (size_t i = 0; i < gm.size(); ++i) {
            uint64_t sub = (__uint128_t)c * gm[i] % p;
            rr[i + shift] = (rr[i + shift] + p - sub) % p;
          }
          rr = pp_trim(std::move(rr));
        }
        rem = pp_trim(std::move(quo));
      }
    }
    if ((int)rem.size() - 1 > 0) degs.push_back((int)rem.size() - 1);
    // subset sums of degs
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (int d : degs)
      for (int s = n; s >= d; --s)
        if (reach[s - d]) reach[s] = 1;
    for (auto it = alive.begin(); it != alive.end();) {
      if (!reach[*it]) it = alive.erase(it);
      else ++it;
    }
    if (alive.empty()) return true;
  }
  return false;
}

// --- field data ---------------------------------------------------------------

struct FieldData {
  int n = 0;  // 0 = rationals
  int degree = 1;
  std::vector<Rational> minpoly;                  // monic
  std::vector<std::vector<Rational>> power_red;   // c^(degree+k) reduced, k = 0..degree-2
  bool certified = false;
  double gen_embedding = 1.0;

  static std::shared_ptr<const FieldData> rationals() {
    auto d = std::make_shared<FieldData>();
    d->n = 0;
    d->degree = 1;
    d->minpoly = {Rational(-1), Rational(1)};  // placeholder x - 1, unused
    d->certified = true;
    return d;
  }

  static std::shared_ptr<const FieldData> dihedral(int n) {
    if (n < 3) fail(errc::invalid_parameter, "dihedral field needs n >= 3");
    auto d = std::make_shared<FieldData>();
    d->n = n;
    ZPoly psi = real_cyclotomic_minpoly(4 * (unsigned)n);
    d->degree = zp_deg(psi);
    d->minpoly.resize(psi.size());
    for (size_t i = 0; i < psi.size(); ++i) d->minpoly[i] = Rational(psi[i]);
    d->gen_embedding = 2.0 * std::cos(M_PI / (2.0 * n));
    // degree check: phi(4n)/2
    {
      unsigned phi = 1, mm = 4 * (unsigned)n;
      for (unsigned p = 2; p <= mm; ++p) {
        if (mm % p) continue;
        unsigned pk = 1;
        while (mm % p == 0) { mm /= p; pk *= p; }
        phi *= pk - pk / p;
      }
      if ((unsigned)d->degree * 2 != phi)
        fail(errc::internal_error, "minimal polynomial degree != phi(4n)/2");
    }
    // numeric root check at double precision
    {
      double x = d->gen_embedding, v = 0, xp = 1;
      for (size_t i = 0; i < psi.size(); ++i) { v += xp * psi[i].get_d(); xp *= x; }
      if (std::fabs(v) > 1e-9) fail(errc::internal_error, "minimal polynomial does not vanish at 2cos(pi/2n)");
    }
    // irreducibility: bounded factor search always; mod-p patterns as a
    // second certificate when the search cannot cover degree/2.
    if (has_small_factor(psi, std::min(4, d->degree / 2)))
      fail(errc::internal_error, "reducible candidate for minimal polynomial");
    d->certified = (d->degree <= 9) || modp_proves_irreducible(psi);
    // reduction rows for c^degree .. c^(2 degree - 2)
    int deg = d->degree;
    d->power_red.resize(std::max(0, deg - 1));
    std::vector<Rational> cur(deg);  // c^deg reduced: -(lower part of minpoly)
    for (int i = 0; i < deg; ++i) cur[i] = -d->minpoly[i];
    for (int k = 0; k + 1 <= deg - 1; ++k) {
      d->power_red[k] = cur;
      // multiply by c and reduce
      std::vector<Rational> nxt(deg);
      Rational top = cur[deg - 1];
      for (int i = deg - 1; i > 0; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      if (top != 0)
        for (int i = 0; i < deg; ++i) nxt[i] -= top * d->minpoly[i];
      cur = std::move(nxt);
    }
    return d;
  }
};

// --- Field -------------------------------------------------------------------

Field Field::rationals() {
  static std::shared_ptr<const FieldData> d = FieldData::rationals();
  return Field(d);
}

Field Field::dihedral(int n) {
  static std::map<int, std::shared_ptr<const FieldData>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, FieldData::dihedral(n)).first;
  return Field(it->second);
}

bool Field::is_rational() const { return d_->n == 0; }
int Field::n() const { return d_->n; }
int Field::degree() const { return d_->degree; }
const std::vector<Rational>& Field::minpoly() const { return d_->minpoly; }
bool Field::irreducibility_certified() const { return d_->certified; }
double Field::generator_embedding() const { return d_->gen_embedding; }

bool Field::same(const Field& o) const { return d_ == o.d_ || d_->n == o.d_->n; }

Field::Scalar Field::zero() const { return Scalar(d_, std::vector<Rational>(d_->degree)); }

Field::Scalar Field::one() const { return integer(1); }

Field::Scalar Field::integer(long v) const {
  std::vector<Rational> c(d_->degree);
  c[0] = v;
  return Scalar(d_, std::move(c));
}

Field::Scalar Field::rational(Rational q) const {
  std::vector<Rational> c(d_->degree);
  q.canonicalize();
  c[0] = std::move(q);
  return Scalar(d_, std::move(c));
}

Field::Scalar Field::from_coeffs(std::vector<Rational> c) const {
  if ((int)c.size() > d_->degree) fail(errc::invalid_parameter, "coefficient vector too long");
  c.resize(d_->degree);
  for (auto& q : c) q.canonicalize();
  return Scalar(d_, std::move(c));
}

Field::Scalar Field::generator() const {
  if (is_rational()) fail(errc::unsupported_operation, "rational field has no cyclotomic generator");
  std::vector<Rational> c(d_->degree);
  c[1] = 1;
  return Scalar(d_, std::move(c));
}

Field::Scalar Field::cheb(long k) const {
  if (is_rational()) fail(errc::unsupported_operation, "cheb requires a dihedral-typed field");
  long period = 4L * d_->n;
  k = ((k % period) + period) % period;
  // 2cos(k t): t_0 = 2, t_1 = c, t_{j+1} = c t_j - t_{j-1}
  Scalar prev = integer(2);
  if (k == 0) return prev;
  Scalar cur = generator();
  Scalar c = cur;
  for (long j = 1; j < k; ++j) {
    Scalar nxt = c * cur - prev;
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return cur;
}

// --- Scalar ------------------------------------------------------------------

Field::Scalar::Scalar(std::shared_ptr<const FieldData> d, std::vector<Rational> c)
    : d_(std::move(d)), c_(std::move(c)) {}

bool Field::Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Field::Scalar::is_one() const {
  if (!d_) return false;
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Field Field::Scalar::field() const {
  if (!d_) fail(errc::internal_error, "detached scalar has no field");
  return Field(d_);
}

Rational Field::Scalar::rational_part() const { return d_ ? c_[0] : Rational(0); }

static const std::shared_ptr<const FieldData>& pick_field(const Field::Scalar& a,
                                                          const Field::Scalar& b,
                                                          const std::shared_ptr<const FieldData>& da,
                                                          const std::shared_ptr<const FieldData>& db) {
  (void)a; (void)b;
  if (da && db && da != db && da->n != db->n) fail(errc::field_mismatch, "scalars from different fields");
  return da ? da : db;
}

Field::Scalar Field::Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Field::Scalar Field::Scalar::operator+(const Scalar& o) const {
  const auto& d = pick_field(*this, o, d_, o.d_);
  if (!d) return Scalar();
  Scalar r(d, std::vector<Rational>(d->degree));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Field::Scalar Field::Scalar::operator-(const Scalar& o) const {
  const auto& d = pick_field(*this, o, d_, o.d_);
  if (!d) return Scalar();
  Scalar r(d, std::vector<Rational>(d->degree));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Field::Scalar& Field::Scalar::operator+=(const Scalar& o) {
  if (!o.d_) return *this;
  if (!d_) { *this = o; return *this; }
  pick_field(*this, o, d_, o.d_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Field::Scalar& Field::Scalar::operator-=(const Scalar& o) {
  if (!o.d_) return *this;
  if (!d_) { *this = -o; return *this; }
  pick_field(*this, o, d_, o.d_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Field::Scalar Field::Scalar::operator*(const Scalar& o) const {
  const auto& d = pick_field(*this, o, d_, o.d_);
  if (!d_ || !o.d_) return Scalar();  // zero
  int deg = d->degree;
  if (deg == 1) {
    Scalar r(d, {c_[0] * o.c_[0]});
    return r;
  }
  std::vector<Rational> prod(2 * deg - 1);
  for (int i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> red(prod.begin(), prod.begin() + deg);
  for (int k = deg; k <= 2 * deg - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = d->power_red[k - deg];
    for (int i = 0; i < deg; ++i)
      if (row[i] != 0) red[i] += prod[k] * row[i];
  }
  return Scalar(d, std::move(red));
}

Field::Scalar& Field::Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

void Field::Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (!a.d_ || !b.d_) return;
  *this += a * b;
}

Field::Scalar Field::Scalar::inv() const {
  if (!d_ || is_zero()) fail(errc::division_by_zero, "inverse of zero");
  int deg = d_->degree;
  if (deg == 1) return Scalar(d_, {Rational(1) / c_[0]});
  // extended Euclid in Q[x] against the minimal polynomial
  using QP = std::vector<Rational>;
  auto trim = [](QP& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
  QP r0(d_->minpoly), r1(c_);
  trim(r0); trim(r1);
  QP s0 = {}, s1 = {Rational(1)};  // coefficients of the input element
  while (!r1.empty() && (int)r1.size() - 1 > 0) {
    // divide r0 by r1
    QP q;
    QP rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1);
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) rem[i + shift] -= c * r1[i];
      trim(rem);
    }
    // s_new = s0 - q * s1
    QP snew = s0;
    if (snew.size() < q.size() + s1.size()) snew.resize(q.size() + s1.size() - 1 + 1);
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    }
    trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (r1.empty()) fail(errc::internal_error, "gcd with minimal polynomial is nontrivial");
  Rational lead = r1[0];
  std::vector<Rational> out(deg);
  for (size_t i = 0; i < s1.size() && i < (size_t)deg; ++i) out[i] = s1[i] / lead;
  if (s1.size() > (size_t)deg) fail(errc::internal_error, "inverse exceeded field degree");
  return Scalar(d_, std::move(out));
}

Field::Scalar Field::Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Field::Scalar::operator==(const Scalar& o) const {
  if (!d_ || !o.d_) {
    const Scalar& attached = d_ ? *this : o;
    if (!attached.d_) return true;  // both detached zeros
    return attached.is_zero();
  }
  pick_field(*this, o, d_, o.d_);
  return c_ == o.c_;
}

double Field::Scalar::to_double() const {
  if (!d_) return 0.0;
  double x = d_->gen_embedding, v = 0, xp = 1;
  for (const auto& q : c_) { v += xp * q.get_d(); xp *= x; }
  return v;
}

std::string Field::Scalar::to_string() const {
  if (!d_ || is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational q = c_[i];
    if (first) {
      if (q < 0) { os << "-"; q = -q; }
    } else {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    if (i == 0) {
      os << q;
    } else {
      if (q != 1) os << q << "*";
      os << "c";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace sra
