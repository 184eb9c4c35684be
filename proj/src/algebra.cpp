#include "sra/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace sra {

namespace {

struct PairHashU32U64 {
  size_t operator()(const std::pair<uint32_t, uint64_t>& k) const {
    uint64_t h = k.second * 0x9e3779b97f4a7c15ull + k.first;
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return size_t(h);
  }
};

struct PairHashU64U64 {
  size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
    uint64_t h = k.first * 0x9e3779b97f4a7c15ull;
    h ^= k.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return size_t(h);
  }
};

uint64_t bump(uint64_t e, int i) { return e + (1ull << (8 * i)); }
uint64_t drop(uint64_t e, int i) { return e - (1ull << (8 * i)); }
int expo(uint64_t e, int i) { return int(e >> (8 * i)) & 0xff; }

}  // namespace

using TermList = std::vector<std::pair<Mono, FieldScalar>>;
using BlockList = std::vector<std::pair<uint64_t, FieldScalar>>;

struct AlgebraData {
  RootSystem rs;
  Field f;
  int N;
  std::vector<Vec> K;  // structure elements, index i*N+j, dense over group

  // pure caches for the rewriting engine
  mutable std::unordered_map<std::pair<uint32_t, uint64_t>, std::shared_ptr<const BlockList>,
                             PairHashU32U64>
      twist_memo;
  mutable std::unordered_map<std::pair<uint32_t, uint64_t>, std::shared_ptr<const TermList>,
                             PairHashU32U64>
      oneswap_memo;
  mutable std::unordered_map<std::pair<uint64_t, uint64_t>, std::shared_ptr<const TermList>,
                             PairHashU64U64>
      swap_memo;
  mutable size_t memo_slots = 0;
  size_t memo_budget = 12u << 20;  // term slots across the swap caches

  mutable std::map<int, Basis> basis_cache;

  explicit AlgebraData(RootSystem r) : rs(std::move(r)), f(rs.field()), N(rs.dim()) {
    K.resize(N * N);
    int order = rs.order();
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Vec k = zero_vec(f, order);
        if (i == j) k[rs.identity()] = f.one();
        for (size_t ri = 0; ri < rs.roots().size(); ++ri) {
          const Root& root = rs.roots()[ri];
          FieldScalar w = rs.eta_of_root((int)ri) * root.projector[i][j];
          if (!w.is_zero()) k[root.group_elem] += w;
        }
        K[i * N + j] = std::move(k);
      }
  }

  std::shared_ptr<const BlockList> twist(uint32_t g, uint64_t e) const;
  std::shared_ptr<const TermList> one_swap(int i, uint64_t u) const;
  std::shared_ptr<const TermList> swap(uint64_t v, uint64_t u) const;
};

// g . A(e): coefficients are entry products of the rows of M(g)
std::shared_ptr<const BlockList> AlgebraData::twist(uint32_t g, uint64_t e) const {
  if (g == (uint32_t)rs.identity() || e == 0)
    return std::make_shared<const BlockList>(BlockList{{e, f.one()}});
  auto key = std::make_pair(g, e);
  auto it = twist_memo.find(key);
  if (it != twist_memo.end()) return it->second;
  int i = 0;
  for (int k = N - 1; k >= 0; --k)
    if (expo(e, k) > 0) { i = k; break; }
  auto prev = twist(g, drop(e, i));
  const Mat& m = rs.element((int)g).coeff;
  std::map<uint64_t, FieldScalar> acc;
  for (const auto& [w, c] : *prev)
    for (int j = 0; j < N; ++j) {
      if (m[i][j].is_zero()) continue;
      acc[bump(w, j)] += c * m[i][j];
    }
  BlockList out;
  for (auto& [w, c] : acc)
    if (!c.is_zero()) out.emplace_back(w, std::move(c));
  auto sp = std::make_shared<const BlockList>(std::move(out));
  twist_memo.emplace(key, sp);
  return sp;
}

// a^1_i . A0(u) in normal form; terms have e1 block 0 or e_i
std::shared_ptr<const TermList> AlgebraData::one_swap(int i, uint64_t u) const {
  if (u == 0) {
    Mono m;
    m.e1 = bump(0, i);
    return std::make_shared<const TermList>(TermList{{m, f.one()}});
  }
  auto key = std::make_pair(uint32_t(i), u);
  auto it = oneswap_memo.find(key);
  if (it != oneswap_memo.end()) return it->second;
  int j = 0;
  for (int k = 0; k < N; ++k)
    if (expo(u, k) > 0) { j = k; break; }
  uint64_t urest = drop(u, j);
  std::map<Mono, FieldScalar> acc;
  // a^1_i a^0_j X = a^0_j (a^1_i X) - K_ij X
  auto rec = one_swap(i, urest);
  for (const auto& [m, c] : *rec) {
    Mono m2 = m;
    m2.e0 = bump(m2.e0, j);
    acc[m2] += c;
  }
  const Vec& kij = K[i * N + j];
  for (int w = 0; w < rs.order(); ++w) {
    if (kij[w].is_zero()) continue;
    auto tw = twist((uint32_t)w, urest);
    for (const auto& [a3, c3] : *tw) {
      Mono m;
      m.e0 = a3;
      m.g = (uint32_t)w;
      acc[m] -= kij[w] * c3;
    }
  }
  TermList out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  auto sp = std::make_shared<const TermList>(std::move(out));
  if (memo_slots + sp->size() < memo_budget) {
    memo_slots += sp->size();
    oneswap_memo.emplace(key, sp);
  }
  return sp;
}

// A1(v) . A0(u) in normal form
std::shared_ptr<const TermList> AlgebraData::swap(uint64_t v, uint64_t u) const {
  if (v == 0 || u == 0) {
    Mono m;
    m.e0 = u;
    m.e1 = v;
    return std::make_shared<const TermList>(TermList{{m, f.one()}});
  }
  auto key = std::make_pair(v, u);
  auto it = swap_memo.find(key);
  if (it != swap_memo.end()) return it->second;
  int i = 0;
  for (int k = N - 1; k >= 0; --k)
    if (expo(v, k) > 0) { i = k; break; }
  uint64_t vrest = drop(v, i);
  std::map<Mono, FieldScalar> acc;
  auto peeled = one_swap(i, u);
  for (const auto& [t, c] : *peeled) {
    // t = A0(a) A1(b) w with b in {0, e_i}
    auto inner = swap(vrest, t.e0);
    if (t.e1 == 0) {
      for (const auto& [s, c2] : *inner) {
        Mono m = s;
        m.g = (uint32_t)rs.mult((int)s.g, (int)t.g);
        acc[m] += c * c2;
      }
    } else {
      for (const auto& [s, c2] : *inner) {
        // append a^1_i through the group part of s
        const Mat& mw = rs.element((int)s.g).coeff;
        FieldScalar cc = c * c2;
        uint32_t gout = (uint32_t)rs.mult((int)s.g, (int)t.g);
        for (int jj = 0; jj < N; ++jj) {
          if (mw[i][jj].is_zero()) continue;
          Mono m = s;
          m.e1 = bump(m.e1, jj);
          m.g = gout;
          acc[m] += cc * mw[i][jj];
        }
      }
    }
  }
  TermList out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  auto sp = std::make_shared<const TermList>(std::move(out));
  if (memo_slots + sp->size() < memo_budget) {
    memo_slots += sp->size();
    swap_memo.emplace(key, sp);
  }
  return sp;
}

// --- Algebra -------------------------------------------------------------------

Algebra::Algebra(RootSystem rs) : d_(std::make_shared<AlgebraData>(std::move(rs))) {}

const RootSystem& Algebra::root_system() const { return d_->rs; }
const Field& Algebra::field() const { return d_->f; }
int Algebra::nvars() const { return d_->N; }

AlgebraElement Algebra::zero() const { return AlgebraElement(); }

AlgebraElement Algebra::from_terms(std::vector<std::pair<Mono, FieldScalar>> terms) const {
  std::map<Mono, FieldScalar> acc;
  for (auto& [m, c] : terms) acc[m] += c;
  AlgebraElement e;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) e.terms_.emplace_back(m, std::move(c));
  if (!e.terms_.empty()) e.d_ = d_;
  return e;
}

AlgebraElement Algebra::monomial(const Mono& m, const FieldScalar& c) const {
  AlgebraElement e;
  if (!c.is_zero()) {
    e.d_ = d_;
    e.terms_.emplace_back(m, c);
  }
  return e;
}

AlgebraElement Algebra::one() const { return monomial(Mono{}, d_->f.one()); }
AlgebraElement Algebra::scalar(const FieldScalar& c) const { return monomial(Mono{}, c); }

AlgebraElement Algebra::generator(int alpha, int i) const {
  if (alpha < 0 || alpha > 1 || i < 0 || i >= d_->N)
    fail(errc::invalid_parameter, "generator index out of range");
  Mono m;
  if (alpha == 0) m.e0 = bump(0, i);
  else m.e1 = bump(0, i);
  return monomial(m, d_->f.one());
}

AlgebraElement Algebra::group(int g) const {
  if (g < 0 || g >= d_->rs.order()) fail(errc::invalid_parameter, "group index out of range");
  Mono m;
  m.g = (uint32_t)g;
  return monomial(m, d_->f.one());
}

const Vec& Algebra::structure_element(int i, int j) const { return d_->K[i * d_->N + j]; }

void Algebra::mul_mono_into(const Mono& a, const Mono& b, const FieldScalar& coef,
                            const std::function<void(const Mono&, const FieldScalar&)>& sink) const {
  if (coef.is_zero()) return;
  const AlgebraData& D = *d_;
  uint32_t g12 = (uint32_t)D.rs.mult((int)a.g, (int)b.g);
  auto tw0 = D.twist(a.g, b.e0);
  auto tw1 = D.twist(a.g, b.e1);
  for (const auto& [r, cr] : *tw0) {
    auto sw = D.swap(a.e1, r);
    for (const auto& [s, cs] : *tw1) {
      FieldScalar c0 = coef * cr * cs;
      for (const auto& [t, ct] : *sw) {
        if (t.g == 0) {
          Mono m;
          m.e0 = a.e0 + t.e0;
          m.e1 = t.e1 + s;
          m.g = g12;
          sink(m, c0 * ct);
        } else {
          auto tw2 = D.twist(t.g, s);
          uint32_t gout = (uint32_t)D.rs.mult((int)t.g, (int)g12);
          for (const auto& [s2, c2] : *tw2) {
            Mono m;
            m.e0 = a.e0 + t.e0;
            m.e1 = t.e1 + s2;
            m.g = gout;
            sink(m, c0 * ct * c2);
          }
        }
      }
    }
  }
}

void Algebra::top_layer_into(const Mono& a, const Mono& b, const FieldScalar& coef,
                             const std::function<void(const Mono&, const FieldScalar&)>& sink) const {
  const AlgebraData& D = *d_;
  uint32_t g12 = (uint32_t)D.rs.mult((int)a.g, (int)b.g);
  auto tw0 = D.twist(a.g, b.e0);
  auto tw1 = D.twist(a.g, b.e1);
  for (const auto& [r, cr] : *tw0)
    for (const auto& [s, cs] : *tw1) {
      Mono m;
      m.e0 = a.e0 + r;
      m.e1 = a.e1 + s;
      m.g = g12;
      sink(m, coef * cr * cs);
    }
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.d_ && x.d_ != d_) fail(errc::instance_mismatch, "element from another algebra");
  if (y.d_ && y.d_ != d_) fail(errc::instance_mismatch, "element from another algebra");
  std::map<Mono, FieldScalar> acc;
  auto sink = [&acc](const Mono& m, const FieldScalar& c) { acc[m] += c; };
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) mul_mono_into(ma, mb, ca * cb, sink);
  AlgebraElement e;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) e.terms_.emplace_back(m, std::move(c));
  if (!e.terms_.empty()) e.d_ = d_;
  return e;
}

AlgebraElement Algebra::normal_form(const std::vector<Atom>& word) const {
  AlgebraElement acc = one();
  for (const Atom& at : word) {
    AlgebraElement factor;
    switch (at.tag) {
      case Atom::Tag::generator: factor = generator(at.alpha, at.index); break;
      case Atom::Tag::group: factor = group(at.g); break;
      case Atom::Tag::scalar: factor = scalar(at.c); break;
    }
    acc = multiply(acc, factor);
  }
  return acc;
}

AlgebraElement Algebra::bracket(Kind kind, const AlgebraElement& x,
                                const AlgebraElement& y) const {
  if (kind == Kind::trace) return multiply(x, y) - multiply(y, x);
  // parity-homogeneous parts, extended bilinearly
  auto split = [&](const AlgebraElement& e) {
    std::array<std::vector<std::pair<Mono, FieldScalar>>, 2> parts;
    for (const auto& t : e.terms()) parts[t.first.parity()].push_back(t);
    return std::array<AlgebraElement, 2>{from_terms(parts[0]), from_terms(parts[1])};
  };
  auto xs = split(x), ys = split(y);
  AlgebraElement out;
  for (int px = 0; px < 2; ++px)
    for (int py = 0; py < 2; ++py) {
      if (xs[px].is_zero() || ys[py].is_zero()) continue;
      AlgebraElement fg = multiply(xs[px], ys[py]);
      AlgebraElement gf = multiply(ys[py], xs[px]);
      out = out + (px * py == 1 ? fg + gf : fg - gf);
    }
  return out;
}

const Basis& Algebra::basis(int d) const {
  if (d < 0) fail(errc::invalid_parameter, "basis degree must be >= 0");
  auto it = d_->basis_cache.find(d);
  if (it != d_->basis_cache.end()) return it->second;
  Basis b;
  b.degree = d;
  int N = d_->N;
  std::vector<uint64_t> blocks;
  std::vector<int> cur(N, 0);
  std::function<void(int, int)> gen = [&](int pos, int left) {
    if (pos == N) {
      uint64_t e = 0;
      for (int i = 0; i < N; ++i) e |= (uint64_t(cur[i]) << (8 * i));
      blocks.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      gen(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  gen(0, d);
  for (uint64_t e0 : blocks) {
    int d0 = Mono::block_degree(e0);
    for (uint64_t e1 : blocks) {
      if (d0 + Mono::block_degree(e1) > d) continue;
      for (int g = 0; g < d_->rs.order(); ++g) {
        Mono m;
        m.e0 = e0;
        m.e1 = e1;
        m.g = (uint32_t)g;
        b.monos.push_back(m);
      }
    }
  }
  std::sort(b.monos.begin(), b.monos.end());
  for (int i = 0; i < (int)b.monos.size(); ++i) b.index.emplace(b.monos[i], i);
  return d_->basis_cache.emplace(d, std::move(b)).first->second;
}

// --- AlgebraElement ---------------------------------------------------------------

int AlgebraElement::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.adeg());
  return d;
}

Parity AlgebraElement::parity() const {
  if (terms_.empty()) return Parity::even;
  bool even = false, odd = false;
  for (const auto& t : terms_) (t.first.parity() ? odd : even) = true;
  if (even && odd) return Parity::mixed;
  return odd ? Parity::odd : Parity::even;
}

const Algebra AlgebraElement::algebra() const {
  if (!d_) fail(errc::internal_error, "the zero element has no algebra instance");
  Algebra a;
  a.d_ = d_;
  return a;
}

static void check_same(const std::shared_ptr<const AlgebraData>& da,
                       const std::shared_ptr<const AlgebraData>& db) {
  if (da && db && da != db) fail(errc::instance_mismatch, "elements from different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same(d_, o.d_);
  AlgebraElement out;
  out.d_ = d_ ? d_ : o.d_;
  std::map<Mono, FieldScalar> acc;
  for (const auto& [m, c] : terms_) acc[m] += c;
  for (const auto& [m, c] : o.terms_) acc[m] += c;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
  if (out.terms_.empty()) out.d_.reset();
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same(d_, o.d_);
  if (!d_ || !o.d_) return AlgebraElement();
  return algebra().multiply(*this, o);
}

AlgebraElement AlgebraElement::scaled(const FieldScalar& c) const {
  AlgebraElement out;
  if (c.is_zero()) return out;
  out.d_ = d_;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  check_same(d_, o.d_);
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == o.terms_[i].first) || !(terms_[i].second == o.terms_[i].second))
      return false;
  return true;
}

}  // namespace sra
