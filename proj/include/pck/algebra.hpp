#ifndef PCK_ALGEBRA_HPP
#define PCK_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pck/cyclotomic.hpp"
#include "pck/grading.hpp"

namespace pck {

/// Sparse vector over the basis of an algebra. Stored coefficients are
/// always nonzero, so the empty map is the zero vector.
class Vector {
 public:
  Vector() = default;
  static Vector basis(int index, int order);

  const std::map<int, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at `index` (zero of `order` if absent).
  CycScalar coeff(int index, int order) const;

  void add_term(int index, const CycScalar& c);
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector scaled(const CycScalar& c) const;
  Vector operator-() const;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, CycScalar> terms_;
};

struct BasisDescriptor {
  int index = 0;
  std::string name;
  GroupElement gdeg;
  GroupElement ldeg;
};

/// Bilinear map given on basis pairs: (i, j) -> sum_k c_k e_k.
class StructureTensor {
 public:
  /// Replaces the value at (i, j); a zero vector erases the entry.
  void set(int i, int j, Vector v);
  void add(int i, int j, int k, const CycScalar& c);
  const Vector* get(int i, int j) const;

  const std::map<std::pair<int, int>, Vector>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::map<std::pair<int, int>, Vector> entries_;
};

struct AlgebraFlags {
  bool check_commutative = false;
  friend bool operator==(const AlgebraFlags&, const AlgebraFlags&) = default;
};

/// (Lambda-degree, G-degree) of a homogeneous component P_{lambda,g}.
using ComponentKey = std::pair<GroupElement, GroupElement>;

/// Which basis vectors make up each bihomogeneous component.
struct GradedLayout {
  int scalar_order = 1;
  int dim = 0;
  std::map<ComponentKey, std::vector<int>> components;  // ascending basis indices
  std::vector<ComponentKey> key_of;                     // per basis index
  std::vector<int> position;                            // column inside its component
};

/// Everything needed to build an algebra, before any checking.
struct AlgebraData {
  std::string name;
  int scalar_order = 1;
  GroupSpec g_spec;
  GroupSpec lambda_spec;
  BiCharacter bichar;
  std::vector<BasisDescriptor> basis;
  StructureTensor product;
  StructureTensor bracket;
  AlgebraFlags flags;
};

/// A finite-dimensional (G, Lambda)-bigraded algebra with an associative
/// product and a color bracket, given by structure constants.
///
/// Construction checks the data is well formed (indices, names, degree
/// shapes, scalar orders, bi-character order dividing the scalar order).
/// It does not check the Poisson color axioms; see axioms.hpp.
class PoissonColorAlgebra {
 public:
  explicit PoissonColorAlgebra(AlgebraData data);

  const AlgebraData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  int scalar_order() const { return data_.scalar_order; }
  int dim() const { return static_cast<int>(data_.basis.size()); }
  const GroupSpec& g_spec() const { return data_.g_spec; }
  const GroupSpec& lambda_spec() const { return data_.lambda_spec; }
  const BiCharacter& bichar() const { return data_.bichar; }
  const std::vector<BasisDescriptor>& basis() const { return data_.basis; }
  const BasisDescriptor& basis(int i) const { return data_.basis[static_cast<std::size_t>(i)]; }
  const StructureTensor& product_tensor() const { return data_.product; }
  const StructureTensor& bracket_tensor() const { return data_.bracket; }
  const AlgebraFlags& flags() const { return data_.flags; }
  const std::shared_ptr<const GradedLayout>& layout() const { return layout_; }

  std::optional<int> index_of(const std::string& name) const;

  CycScalar zero() const { return CycScalar(data_.scalar_order); }
  CycScalar one() const { return CycScalar(data_.scalar_order, Rational(1)); }
  Vector basis_vector(int i) const { return Vector::basis(i, data_.scalar_order); }

  /// eps on the G-degrees of two basis vectors.
  const CycScalar& epsilon(int i, int j) const {
    return epsilon_table_[static_cast<std::size_t>(i * dim() + j)];
  }
  /// eps on arbitrary G-elements, embedded in the scalar field.
  CycScalar epsilon(const GroupElement& g, const GroupElement& h) const;

  Vector mul(const Vector& x, const Vector& y) const { return contract(data_.product, x, y); }
  Vector bracket(const Vector& x, const Vector& y) const { return contract(data_.bracket, x, y); }
  Vector mul(int i, int j) const;
  Vector bracket(int i, int j) const;

  const ComponentKey& component_of(int i) const { return layout_->key_of[static_cast<std::size_t>(i)]; }

 private:
  Vector contract(const StructureTensor& t, const Vector& x, const Vector& y) const;

  AlgebraData data_;
  std::shared_ptr<const GradedLayout> layout_;
  std::vector<CycScalar> epsilon_table_;
};

inline Vector mul(const PoissonColorAlgebra& a, const Vector& x, const Vector& y) { return a.mul(x, y); }
inline Vector bracket(const PoissonColorAlgebra& a, const Vector& x, const Vector& y) { return a.bracket(x, y); }

/// Basis names with coefficients, e.g. "2*e + -1*h"; "0" for zero.
std::string format_vector(const PoissonColorAlgebra& a, const Vector& v);

}  // namespace pck

#endif  // PCK_ALGEBRA_HPP
