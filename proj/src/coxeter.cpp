#include "sra/coxeter.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sra {

Vec reflect_vector(const Vec& root, const Vec& x) {
  if (is_zero_vec(root)) fail(errc::invalid_root, "reflection across the zero vector");
  FieldScalar dot, norm2;
  for (size_t i = 0; i < root.size(); ++i) {
    dot += root[i] * x[i];
    norm2 += root[i] * root[i];
  }
  FieldScalar c = (dot + dot) / norm2;
  Vec out = x;
  for (size_t i = 0; i < root.size(); ++i) out[i] -= c * root[i];
  return out;
}

namespace {

Mat identity_mat(const Field& f, int n) {
  Mat m(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = i == j ? f.one() : f.zero();
  return m;
}

Mat transpose(const Mat& m) {
  Mat t(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

bool mat_eq(const Mat& a, const Mat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

Root make_root(const Field& f, Vec v) {
  Root r;
  int n = (int)v.size();
  r.v = std::move(v);
  for (int i = 0; i < n; ++i) r.norm2 += r.v[i] * r.v[i];
  if (r.norm2.is_zero()) fail(errc::invalid_root, "zero root");
  FieldScalar inv = r.norm2.inv();
  r.projector.assign(n, Vec(n));
  r.reflection = identity_mat(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.projector[i][j] = r.v[i] * r.v[j] * inv;
      r.reflection[i][j] -= (r.projector[i][j] + r.projector[i][j]);
    }
  return r;
}

}  // namespace

int RootSystem::find_element(const Mat& m) const {
  for (int g = 0; g < (int)elems_.size(); ++g)
    if (mat_eq(elems_[g].matrix, m)) return g;
  return -1;
}

RootSystem RootSystem::dihedral(int n, std::vector<FieldScalar> eta_values) {
  if (n < 3) fail(errc::invalid_parameter, "I2(n) needs n >= 3");
  size_t want = (n % 2 == 0) ? 2 : 1;
  if (eta_values.size() != want)
    fail(errc::invalid_eta, "I2(" + std::to_string(n) + ") needs " + std::to_string(want) +
                                " eta value(s), got " + std::to_string(eta_values.size()));
  Field k = Field::dihedral(n);
  RootSystem rs(Family::dihedral, k);
  rs.n_ = n;
  rs.dim_ = 2;
  FieldScalar half = k.rational(Rational(1, 2));
  for (auto& e : eta_values) {
    if (!e.attached()) e = k.zero();
    else if (!(e.field() == k)) fail(errc::field_mismatch, "eta value from the wrong field");
  }
  rs.eta_ = std::move(eta_values);
  // 2n unit roots at angles k pi / n: (cheb(2k)/2, cheb(n-2k)/2)
  for (int j = 0; j < 2 * n; ++j) {
    Vec v = {k.cheb(2 * j) * half, k.cheb(n - 2 * j) * half};
    Root r = make_root(k, std::move(v));
    if (!r.norm2.is_one()) fail(errc::internal_error, "dihedral roots must be unit");
    r.eta_class = (n % 2 == 0) ? (j % 2) : 0;
    rs.roots_.push_back(std::move(r));
  }
  for (int j = 0; j < n; ++j) rs.positive_.push_back(j);
  rs.enumerate_group();
  rs.verify_invariants();
  return rs;
}

RootSystem RootSystem::symmetric(int N, FieldScalar eta) {
  if (N < 2 || N > 5) fail(errc::invalid_parameter, "A(N-1) supported for 2 <= N <= 5");
  Field q = Field::rationals();
  RootSystem rs(Family::symmetric, q);
  rs.n_ = N;
  rs.dim_ = N;
  if (!eta.attached()) eta = q.zero();
  rs.eta_ = {eta};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      Vec v = zero_vec(q, N);
      v[i] = q.one();
      v[j] = -q.one();
      Root r = make_root(q, std::move(v));
      r.eta_class = 0;
      rs.roots_.push_back(std::move(r));
      if (i < j) rs.positive_.push_back((int)rs.roots_.size() - 1);
    }
  rs.enumerate_group();
  rs.verify_invariants();
  return rs;
}

void RootSystem::enumerate_group() {
  const Field& f = field_;
  int N = dim_;
  // closure from the reflection matrices, breadth-first
  elems_.clear();
  GroupElement id;
  id.name = "e";
  id.matrix = identity_mat(f, N);
  id.coeff = id.matrix;
  elems_.push_back(id);
  size_t frontier = 0;
  const int bound = 1000;
  while (frontier < elems_.size()) {
    if ((int)elems_.size() > bound)
      fail(errc::internal_error, "group closure not reached within bound");
    Mat base = elems_[frontier].matrix;
    for (const auto& r : roots_) {
      Mat prod = mat_mul(r.reflection, base);
      if (find_element(prod) < 0) {
        GroupElement e;
        e.matrix = std::move(prod);
        elems_.push_back(std::move(e));
      }
    }
    ++frontier;
  }
  // canonical words and deterministic ordering
  if (family_ == Family::dihedral) {
    int n = n_;
    FieldScalar half = f.rational(Rational(1, 2));
    auto rot_mat = [&](int j) {
      Mat m(2, Vec(2));
      m[0][0] = f.cheb(4 * j) * half;
      m[0][1] = -(f.cheb(n - 4 * j) * half);
      m[1][0] = f.cheb(n - 4 * j) * half;
      m[1][1] = m[0][0];
      return m;
    };
    std::vector<GroupElement> ordered;
    for (int j = 0; j < n; ++j) {
      if (find_element(rot_mat(j)) < 0) fail(errc::internal_error, "rotation missing from closure");
      GroupElement e;
      e.matrix = rot_mat(j);
      e.rot = j;
      e.is_reflection = false;
      e.name = j == 0 ? "e" : "rot(" + std::to_string(j) + ")";
      ordered.push_back(std::move(e));
    }
    for (int j = 0; j < n; ++j) {
      if (find_element(roots_[j].reflection) < 0)
        fail(errc::internal_error, "reflection missing from closure");
      GroupElement e;
      e.matrix = roots_[j].reflection;
      e.is_reflection = true;
      e.axis = j;
      e.name = "ref(" + std::to_string(j) + ")";
      ordered.push_back(std::move(e));
    }
    if (ordered.size() != elems_.size()) fail(errc::internal_error, "dihedral order != 2n");
    elems_ = std::move(ordered);
  } else {
    // order S_N by one-line notation, recovered from the permutation matrices
    for (auto& e : elems_) {
      e.perm.assign(N, -1);
      for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i)
          if (e.matrix[i][j].is_one()) e.perm[j] = i;  // e_j -> e_{perm[j]}
    }
    std::sort(elems_.begin(), elems_.end(),
              [](const GroupElement& a, const GroupElement& b) { return a.perm < b.perm; });
    for (auto& e : elems_) {
      int moved = 0;
      for (int i = 0; i < N; ++i)
        if (e.perm[i] != i) ++moved;
      e.is_reflection = (moved == 2);
      std::ostringstream os;
      if (moved == 0) {
        os << "e";
      } else {
        os << "perm(";
        for (int i = 0; i < N; ++i) os << (i ? " " : "") << e.perm[i] + 1;
        os << ")";
      }
      e.name = os.str();
    }
  }
  for (auto& e : elems_) e.coeff = transpose(e.matrix);
  // tables
  int order = (int)elems_.size();
  mult_.assign(order, std::vector<int>(order, -1));
  inv_.assign(order, -1);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      int at = find_element(mat_mul(elems_[g].matrix, elems_[h].matrix));
      if (at < 0) fail(errc::internal_error, "closure violated in multiplication table");
      mult_[g][h] = at;
      if (at == 0) inv_[g] = h;
    }
  // link roots to their reflection elements
  reflections_.clear();
  for (auto& r : roots_) {
    r.group_elem = find_element(r.reflection);
    if (r.group_elem < 0) fail(errc::internal_error, "root reflection missing");
    if (std::find(reflections_.begin(), reflections_.end(), r.group_elem) == reflections_.end())
      reflections_.push_back(r.group_elem);
  }
  std::sort(reflections_.begin(), reflections_.end());
  // conjugacy classes by brute force
  class_of_.assign(order, -1);
  classes_.clear();
  for (int g = 0; g < order; ++g) {
    if (class_of_[g] >= 0) continue;
    std::vector<int> cls;
    for (int h = 0; h < order; ++h) {
      int c = mult_[mult_[h][g]][inv_[h]];
      if (class_of_[c] < 0) {
        class_of_[c] = (int)classes_.size();
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  // generating set
  generators_.clear();
  if (family_ == Family::dihedral) {
    generators_.push_back(1);                     // rot(1)
    generators_.push_back(roots_[0].group_elem);  // ref(0)
  } else {
    for (int i = 0; i + 1 < N; ++i) {
      Mat m = identity_mat(field_, N);
      std::swap(m[i], m[i + 1]);
      generators_.push_back(find_element(transpose(m)));
    }
  }
}

void RootSystem::verify_invariants() const {
  const Field& f = field_;
  int N = dim_;
  // condition i: the root set is r_w-invariant for every root w, and eta is
  // constant along the reflection orbits
  for (const auto& w : roots_) {
    for (const auto& r : roots_) {
      Vec image = reflect_vector(w.v, r.v);
      bool found = false;
      for (const auto& s : roots_) {
        bool eq = true;
        for (int i = 0; i < N; ++i)
          if (!(s.v[i] == image[i])) { eq = false; break; }
        if (eq) {
          if (!(eta_[s.eta_class] == eta_[r.eta_class]))
            fail(errc::invalid_eta, "eta not constant on a conjugacy class");
          found = true;
          break;
        }
      }
      if (!found) fail(errc::internal_error, "root system not reflection-invariant");
    }
  }
  // condition ii: proportional roots occur only as +- pairs
  for (size_t a = 0; a < roots_.size(); ++a)
    for (size_t b = a + 1; b < roots_.size(); ++b) {
      bool prop = true;
      for (int i = 0; i < N && prop; ++i)
        for (int j = i + 1; j < N && prop; ++j)
          if (!(roots_[a].v[i] * roots_[b].v[j] == roots_[a].v[j] * roots_[b].v[i])) prop = false;
      if (!prop) continue;
      bool neg = true, pos = true;
      for (int i = 0; i < N; ++i) {
        if (!(roots_[a].v[i] == -roots_[b].v[i])) neg = false;
        if (!(roots_[a].v[i] == roots_[b].v[i])) pos = false;
      }
      if (!neg && !pos) fail(errc::internal_error, "proportional roots are not a +- pair");
    }
  // exact orthogonality; reflections are involutions; projectors idempotent
  Mat id = identity_mat(f, N);
  for (const auto& e : elems_)
    if (!mat_eq(mat_mul(transpose(e.matrix), e.matrix), id))
      fail(errc::internal_error, "group element matrix not orthogonal");
  for (const auto& r : roots_) {
    if (!mat_eq(mat_mul(r.reflection, r.reflection), id))
      fail(errc::internal_error, "reflection is not an involution");
    if (!mat_eq(mat_mul(r.projector, r.projector), r.projector))
      fail(errc::internal_error, "projector not idempotent");
  }
  // eta classes must agree with brute-forced conjugacy classes
  for (const auto& a : roots_)
    for (const auto& b : roots_) {
      if ((a.eta_class == b.eta_class) !=
          (class_of_[a.group_elem] == class_of_[b.group_elem]))
        fail(errc::internal_error, "eta classes disagree with conjugacy classes");
    }
}

std::string RootSystem::name() const {
  if (family_ == Family::dihedral) return "I2(" + std::to_string(n_) + ")";
  return "A(" + std::to_string(n_ - 1) + ")";
}

}  // namespace sra
