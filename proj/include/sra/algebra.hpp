#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "sra/coxeter.hpp"

namespace sra {

/// Normal-form monomial: a^0 block, a^1 block, then a group element.  The two
/// blocks commute internally, so a monomial is determined by the exponent
/// multi-indices (one byte per coordinate, N <= 8) and the group index.
struct Mono {
  uint64_t e0 = 0, e1 = 0;
  uint32_t g = 0;

  bool operator==(const Mono& o) const { return e0 == o.e0 && e1 == o.e1 && g == o.g; }
  int exp0(int i) const { return int(e0 >> (8 * i)) & 0xff; }
  int exp1(int i) const { return int(e1 >> (8 * i)) & 0xff; }
  static int block_degree(uint64_t e) { return int((e * 0x0101010101010101ull) >> 56); }
  int adeg() const { return block_degree(e0) + block_degree(e1); }
  int parity() const { return adeg() & 1; }
  bool operator<(const Mono& o) const {
    int da = adeg(), db = o.adeg();
    if (da != db) return da < db;
    if (e0 != o.e0) return e0 < o.e0;
    if (e1 != o.e1) return e1 < o.e1;
    return g < o.g;
  }
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t h = m.e0 * 0x9e3779b97f4a7c15ull;
    h ^= (m.e1 + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    h ^= (uint64_t(m.g) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    return size_t(h);
  }
};

enum class Kind { trace, supertrace };
enum class Parity { even, odd, mixed };

class Algebra;
struct AlgebraData;

/// Sparse element of H in normal form; immutable value type.
class AlgebraElement {
public:
  AlgebraElement() = default;

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max a-degree over terms, 0 for the zero element
  const std::vector<std::pair<Mono, FieldScalar>>& terms() const { return terms_; }
  Parity parity() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // normal-form product
  AlgebraElement scaled(const FieldScalar& c) const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  const Algebra algebra() const;

private:
  friend class Algebra;
  std::shared_ptr<const AlgebraData> d_;  // null iff zero
  std::vector<std::pair<Mono, FieldScalar>> terms_;  // sorted, no zero coefficients
};

/// One atom of an input word for normal_form.
struct Atom {
  enum class Tag { generator, group, scalar } tag;
  int alpha = 0, index = 0;  // generator a^alpha_index
  int g = 0;                 // group element index
  FieldScalar c;             // scalar factor
  static Atom gen(int alpha, int index) { return {Tag::generator, alpha, index, 0, {}}; }
  static Atom grp(int g) { return {Tag::group, 0, 0, g, {}}; }
  static Atom scal(FieldScalar s) { return {Tag::scalar, 0, 0, 0, std::move(s)}; }
};

/// Ordered monomial basis of a filtration subspace F_d with index lookup.
struct Basis {
  int degree = 0;
  std::vector<Mono> monos;
  std::unordered_map<Mono, int, MonoHash> index;
  int size() const { return (int)monos.size(); }
  int find(const Mono& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
};

/// The symplectic reflection algebra H_{1,eta}(G) for a fixed root system and
/// eta assignment.  Handles are cheap to copy and share one rewriting engine
/// whose memo tables behave as pure caches.
class Algebra {
public:
  explicit Algebra(RootSystem rs);

  const RootSystem& root_system() const;
  const Field& field() const;
  int nvars() const;  // N

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const FieldScalar& c) const;
  AlgebraElement generator(int alpha, int i) const;
  AlgebraElement group(int g) const;
  AlgebraElement monomial(const Mono& m, const FieldScalar& c) const;
  AlgebraElement from_terms(std::vector<std::pair<Mono, FieldScalar>> terms) const;

  AlgebraElement normal_form(const std::vector<Atom>& word) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement bracket(Kind kind, const AlgebraElement& x, const AlgebraElement& y) const;

  /// delta_ij + sum_{v in R} eta(v) v_i v_j/(v,v) r_v as a dense group vector.
  const Vec& structure_element(int i, int j) const;

  /// Streaming normal-form product of two monomials scaled by coef.
  void mul_mono_into(const Mono& a, const Mono& b, const FieldScalar& coef,
                     const std::function<void(const Mono&, const FieldScalar&)>& sink) const;

  /// Only the a-degree-preserving layer of the product (no commutator
  /// corrections); used to prescreen brackets that could drop into a lower
  /// filtration level.
  void top_layer_into(const Mono& a, const Mono& b, const FieldScalar& coef,
                      const std::function<void(const Mono&, const FieldScalar&)>& sink) const;

  const Basis& basis(int d) const;  // cached per degree

  bool same(const Algebra& o) const { return d_ == o.d_; }

private:
  friend class AlgebraElement;
  Algebra() = default;
  std::shared_ptr<const AlgebraData> d_;
};

}  // namespace sra
