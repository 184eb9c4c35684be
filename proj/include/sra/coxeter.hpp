#pragma once

#include <string>
#include <vector>

#include "sra/linalg.hpp"

namespace sra {

enum class Family { dihedral, symmetric };

/// One group element: canonical word plus its exact orthogonal matrix.
struct GroupElement {
  std::string name;        // "e", "rot(k)", "ref(k)", "s(i)" products collapse to these
  Mat matrix;              // N x N, orthogonal over the field
  Mat coeff;               // matrix M with g a_i = sum_j M_ij a_j g; equals matrix^T
  std::vector<int> perm;   // symmetric family only: one-line notation
  int rot = 0;             // dihedral: rotation exponent
  bool is_reflection = false;
  int axis = 0;            // dihedral reflections: root index in [0, n)
};

struct Root {
  Vec v;
  FieldScalar norm2;       // (v, v)
  Mat projector;           // v_i v_j / (v, v)
  Mat reflection;          // I - 2 projector
  int group_elem = -1;     // index of r_v in the enumerated group
  int eta_class = 0;       // reflection conjugacy class id
};

/// x - 2 (x,v)/(v,v) v; throws invalid-root on v = 0.
Vec reflect_vector(const Vec& root, const Vec& x);

/// Root system with its Coxeter group, conjugacy data and the G-invariant
/// coupling eta.  Immutable after construction; construction brute-force
/// verifies the root-system conditions and the group closure.
class RootSystem {
public:
  /// I2(n): 2n unit roots at angles k pi/n.  eta_values: one entry for odd n
  /// (all reflections conjugate), two for even n (classes of ref(0), ref(1)).
  static RootSystem dihedral(int n, std::vector<FieldScalar> eta_values);

  /// A(N-1): roots e_i - e_j over Q, group S_N, one reflection class.
  static RootSystem symmetric(int N, FieldScalar eta);

  Family family() const { return family_; }
  int n() const { return n_; }          // dihedral parameter or N for A(N-1)
  int dim() const { return dim_; }      // ambient dimension N
  const Field& field() const { return field_; }
  std::string name() const;

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<int>& positive_roots() const { return positive_; }
  FieldScalar eta_of_root(int root_idx) const { return eta_[roots_[root_idx].eta_class]; }
  const std::vector<FieldScalar>& eta_values() const { return eta_; }
  int reflection_classes() const { return (int)eta_.size(); }

  // group access
  int order() const { return (int)elems_.size(); }
  const GroupElement& element(int g) const { return elems_[g]; }
  int identity() const { return 0; }
  int mult(int g, int h) const { return mult_[g][h]; }  // g*h, h applied first
  int inverse(int g) const { return inv_[g]; }
  const std::vector<std::vector<int>>& conj_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  const std::vector<int>& reflections() const { return reflections_; }
  const std::vector<int>& group_generators() const { return generators_; }

  /// Index of the group element with the given exact matrix; -1 if absent.
  int find_element(const Mat& m) const;

private:
  RootSystem(Family f, const Field& k) : family_(f), field_(k) {}
  void enumerate_group();
  void verify_invariants() const;

  Family family_;
  Field field_;
  int n_ = 0, dim_ = 0;
  std::vector<Root> roots_;
  std::vector<int> positive_;
  std::vector<FieldScalar> eta_;
  std::vector<GroupElement> elems_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> reflections_;
  std::vector<int> generators_;
};

}  // namespace sra
