#include "sra/dunkl.hpp"

#include <algorithm>
#include <sstream>

#include "sra/linalg.hpp"

namespace sra {

namespace {

int expo(uint64_t e, int i) { return int(e >> (8 * i)) & 0xff; }
uint64_t bump(uint64_t e, int i) { return e + (1ull << (8 * i)); }
uint64_t drop(uint64_t e, int i) { return e - (1ull << (8 * i)); }

int packed_degree(uint64_t e) { return int((e * 0x0101010101010101ull) >> 56); }

std::string mono_string(uint64_t e, int n) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    int k = expo(e, i);
    if (!k) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i + 1;
    if (k > 1) os << "^" << k;
  }
  return first ? "1" : os.str();
}

}  // namespace

Polynomial Polynomial::constant(const Field& f, const FieldScalar& c) {
  Polynomial p(f);
  p.add_term(0, c);
  return p;
}

Polynomial Polynomial::variable(const Field& f, int i) {
  Polynomial p(f);
  p.add_term(bump(0, i), f.one());
  return p;
}

void Polynomial::add_term(uint64_t e, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, packed_degree(e));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(f_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Polynomial Polynomial::scaled(const FieldScalar& c) const {
  Polynomial r(f_);
  if (c.is_zero()) return r;
  for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

Polynomial divide_by_linear_form(const Polynomial& p, const Vec& v) {
  int n = (int)v.size();
  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (!v[i].is_zero()) { pivot = i; break; }
  if (pivot < 0) fail(errc::invalid_root, "division by the zero form");
  FieldScalar inv = v[pivot].inv();
  Polynomial q(p.field());
  Polynomial r = p;
  // graded-lex with the pivot variable heaviest
  auto better = [&](uint64_t a, uint64_t b) {
    int da = packed_degree(a), db = packed_degree(b);
    if (da != db) return da > db;
    if (expo(a, pivot) != expo(b, pivot)) return expo(a, pivot) > expo(b, pivot);
    return a > b;
  };
  while (!r.is_zero()) {
    uint64_t lead = r.terms().begin()->first;
    FieldScalar lc = r.terms().begin()->second;
    for (const auto& [e, c] : r.terms())
      if (better(e, lead)) { lead = e; lc = c; }
    if (expo(lead, pivot) == 0)
      fail(errc::internal_error, "difference quotient not divisible by (v, x)");
    uint64_t qe = drop(lead, pivot);
    FieldScalar qc = lc * inv;
    q.add_term(qe, qc);
    for (int i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      r.add_term(qe + (1ull << (8 * i)), -(qc * v[i]));
    }
  }
  return q;
}

// --- DunklRep -------------------------------------------------------------------

DunklRep::DunklRep(Algebra a, int calibration_degree) : alg_(std::move(a)) {
  const RootSystem& rs = alg_.root_system();
  kappa_.assign(rs.reflection_classes(), alg_.field().zero());
  calibrate(calibration_degree);
}

Polynomial DunklRep::apply_partial(int i, const Polynomial& p) const {
  Polynomial r(p.field());
  for (const auto& [e, c] : p.terms()) {
    int k = expo(e, i);
    if (k == 0) continue;
    r.add_term(drop(e, i), c * p.field().integer(k));
  }
  return r;
}

Polynomial DunklRep::apply_group(int g, const Polynomial& p) const {
  // (g p)(x) = p(rho(g)^{-1} x); substitute x_j -> row j of coeff(g)
  const RootSystem& rs = alg_.root_system();
  const Mat& sub = rs.element(g).coeff;
  int n = rs.dim();
  Polynomial out(p.field());
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(p.field(), c);
    for (int j = 0; j < n; ++j) {
      int k = expo(e, j);
      if (!k) continue;
      Polynomial lin(p.field());
      for (int l = 0; l < n; ++l) lin.add_term(bump(0, l), sub[j][l]);
      for (int rep = 0; rep < k; ++rep) term = term * lin;
    }
    out = out + term;
  }
  return out;
}

Polynomial DunklRep::dunkl_with_kappa(int i, const Polynomial& p,
                                      const std::vector<FieldScalar>& kappa) const {
  const RootSystem& rs = alg_.root_system();
  Polynomial out = apply_partial(i, p);
  for (int ri : rs.positive_roots()) {
    const Root& root = rs.roots()[ri];
    FieldScalar w = rs.eta_of_root(ri) * kappa[root.eta_class] * root.v[i] / root.norm2;
    if (w.is_zero()) continue;
    Polynomial diff = p - apply_group(root.group_elem, p);
    if (diff.is_zero()) continue;
    out = out + divide_by_linear_form(diff, root.v).scaled(w);
  }
  return out;
}

Polynomial DunklRep::apply_dunkl(int i, const Polynomial& p) const {
  return dunkl_with_kappa(i, p, kappa_);
}

Polynomial DunklRep::apply_generator(int alpha, int i, const Polynomial& p) const {
  Polynomial xi = Polynomial::variable(p.field(), i) * p;
  Polynomial d = apply_dunkl(i, p);
  return alpha == 0 ? xi + d : xi - d;
}

void DunklRep::calibrate(int degree) {
  // Solve for kappa (one unknown per reflection class) by requiring
  // [b^0_i, b^1_j] = 2 (delta_ij + sum_v eta v_i v_j/(v,v) r_v) on all
  // monomials of degree <= calibration degree; the commutator is affine in
  // kappa and the Dunkl operators commute for every kappa.
  const RootSystem& rs = alg_.root_system();
  const Field& f = alg_.field();
  int n = rs.dim();
  int classes = rs.reflection_classes();
  std::vector<FieldScalar> zero_kappa(classes, f.zero());
  Rref system(classes + 1);

  auto commutator = [&](int i, int j, const Polynomial& p, const std::vector<FieldScalar>& kp) {
    auto b0 = [&](const Polynomial& q) {
      return Polynomial::variable(f, i) * q + dunkl_with_kappa(i, q, kp);
    };
    auto b1 = [&](const Polynomial& q) {
      return Polynomial::variable(f, j) * q - dunkl_with_kappa(j, q, kp);
    };
    return b0(b1(p)) - b1(b0(p));
  };

  std::vector<uint64_t> probes;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> gen = [&](int pos, int left) {
    if (pos == n) {
      uint64_t e = 0;
      for (int k = 0; k < n; ++k) e |= (uint64_t(cur[k]) << (8 * k));
      probes.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      gen(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  gen(0, degree);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& kij = alg_.structure_element(i, j);
      for (uint64_t e : probes) {
        Polynomial p(f);
        p.add_term(e, f.one());
        Polynomial target(f);
        for (int g = 0; g < rs.order(); ++g) {
          if (kij[g].is_zero()) continue;
          target = target + apply_group(g, p).scaled(kij[g] + kij[g]);
        }
        Polynomial base = commutator(i, j, p, zero_kappa);
        std::vector<Polynomial> resp;
        for (int c = 0; c < classes; ++c) {
          std::vector<FieldScalar> kp(classes, f.zero());
          kp[c] = f.one();
          resp.push_back(commutator(i, j, p, kp) - base);
        }
        // one linear equation per output monomial
        std::map<uint64_t, Vec> rows;
        auto row_of = [&](uint64_t m) -> Vec& {
          auto it = rows.find(m);
          if (it == rows.end()) it = rows.emplace(m, zero_vec(f, classes + 1)).first;
          return it->second;
        };
        for (int c = 0; c < classes; ++c)
          for (const auto& [m, cc] : resp[c].terms()) row_of(m)[c] = cc;
        Polynomial rhs = target - base;
        for (const auto& [m, cc] : rhs.terms()) row_of(m)[classes] = cc;
        for (auto& [m, row] : rows) system.add_row(row);
      }
    }
  // rows encode sum_c kappa_c * row[c] = row[classes]; a pivot in the last
  // column means inconsistency, a class without pivot is unconstrained
  // (its eta vanishes) and gets kappa = 0
  if (system.pivot_row_of_col(classes) >= 0)
    fail(errc::internal_error, "kappa calibration inconsistent");
  for (int c = 0; c < classes; ++c) {
    int r = system.pivot_row_of_col(c);
    kappa_[c] = r >= 0 ? system.rows()[r][classes] : f.zero();
  }
}

Polynomial DunklRep::apply_word(const std::vector<Atom>& word, const Polynomial& p) const {
  Polynomial cur = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->tag) {
      case Atom::Tag::generator: cur = apply_generator(it->alpha, it->index, cur); break;
      case Atom::Tag::group: cur = apply_group(it->g, cur); break;
      case Atom::Tag::scalar: cur = cur.scaled(it->c); break;
    }
  }
  return cur;
}

Polynomial DunklRep::apply_element(const AlgebraElement& e, int word_adeg,
                                   const Polynomial& p) const {
  const Field& f = alg_.field();
  Polynomial out(p.field());
  for (const auto& [m, c] : e.terms()) {
    int k = m.adeg();
    if ((word_adeg - k) % 2 != 0 || k > word_adeg)
      fail(errc::internal_error, "term degree incompatible with word degree");
    FieldScalar scale = c;
    for (int s = 0; s < (word_adeg - k) / 2; ++s) scale *= f.integer(2);
    Polynomial cur = apply_group((int)m.g, p);
    int n = alg_.nvars();
    for (int i = n - 1; i >= 0; --i)
      for (int rep = 0; rep < expo(m.e1, i); ++rep) cur = apply_generator(1, i, cur);
    for (int i = n - 1; i >= 0; --i)
      for (int rep = 0; rep < expo(m.e0, i); ++rep) cur = apply_generator(0, i, cur);
    out = out + cur.scaled(scale);
  }
  return out;
}

bool DunklRep::oracle_check(const std::vector<Atom>& word, int d, std::string* witness) const {
  AlgebraElement nf = alg_.normal_form(word);
  int word_adeg = 0;
  for (const auto& at : word)
    if (at.tag == Atom::Tag::generator) ++word_adeg;
  const Field& f = alg_.field();
  int n = alg_.nvars();
  std::vector<uint64_t> probes;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> gen = [&](int pos, int left) {
    if (pos == n) {
      uint64_t e = 0;
      for (int k = 0; k < n; ++k) e |= (uint64_t(cur[k]) << (8 * k));
      probes.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      gen(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  gen(0, d);
  std::sort(probes.begin(), probes.end(), [](uint64_t a, uint64_t b) {
    return packed_degree(a) != packed_degree(b) ? packed_degree(a) < packed_degree(b) : a < b;
  });
  for (uint64_t e : probes) {
    Polynomial p(f);
    p.add_term(e, f.one());
    Polynomial direct = apply_word(word, p);
    Polynomial via_nf = apply_element(nf, word_adeg, p);
    if (!(direct == via_nf)) {
      if (witness) *witness = mono_string(e, n);
      return false;
    }
  }
  return true;
}

}  // namespace sra
