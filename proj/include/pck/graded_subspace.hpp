#ifndef PCK_GRADED_SUBSPACE_HPP
#define PCK_GRADED_SUBSPACE_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "pck/algebra.hpp"
#include "pck/dense.hpp"

namespace pck {

/// A subspace that splits over the bihomogeneous components of an ambient
/// algebra. Each component stores an RREF matrix whose columns are the
/// component's basis vectors in ascending index order; components without
/// rows are absent. Equal subspaces have identical storage.
class GradedSubspace {
 public:
  using Matrix = DenseMatrix<CycScalar>;

  explicit GradedSubspace(std::shared_ptr<const GradedLayout> layout);

  static GradedSubspace zero(const PoissonColorAlgebra& a) { return GradedSubspace(a.layout()); }
  static GradedSubspace full(const PoissonColorAlgebra& a);
  /// Direct sum of the components whose Lambda-degree satisfies `pred`.
  static GradedSubspace lambda_part(const PoissonColorAlgebra& a, const std::function<bool(const GroupElement&)>& pred);

  const GradedLayout& layout() const { return *layout_; }
  const std::shared_ptr<const GradedLayout>& layout_ptr() const { return layout_; }
  const std::map<ComponentKey, Matrix>& components() const { return components_; }
  const Matrix* component(const ComponentKey& key) const;

  int dim() const;
  bool is_zero() const { return components_.empty(); }

  /// The RREF rows as vectors, component by component.
  std::vector<Vector> spanning_vectors() const;

  /// Adds rows (columns indexed as the component) and re-reduces.
  void add_rows(const ComponentKey& key, const Matrix& rows);

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b);

 private:
  std::shared_ptr<const GradedLayout> layout_;
  std::map<ComponentKey, Matrix> components_;
};

/// Splits a vector into its bihomogeneous parts.
std::map<ComponentKey, Vector> homogeneous_parts(const GradedLayout& layout, const Vector& v);

/// Per-component RREF of the inputs; every input must be bihomogeneous.
/// Throws InputError on a mixed-degree vector.
GradedSubspace span_of(const PoissonColorAlgebra& a, const std::vector<Vector>& vectors);

/// True iff every homogeneous part of v reduces to zero against S.
bool contains(const GradedSubspace& s, const Vector& v);

/// Throws std::invalid_argument if the ambient layouts differ.
GradedSubspace subspace_sum(const GradedSubspace& s, const GradedSubspace& t);
bool subspace_eq(const GradedSubspace& s, const GradedSubspace& t);
GradedSubspace intersect(const GradedSubspace& s, const GradedSubspace& t);
inline int dim(const GradedSubspace& s) { return s.dim(); }

/// Span of the standard basis vectors of `key` at the non-pivot columns
/// of S's RREF there.
GradedSubspace complement_within(const GradedSubspace& s, const ComponentKey& key, const PoissonColorAlgebra& a);

using LinearMap = std::function<Vector(const Vector&)>;

/// { x in domain : f(x) in target for every f }.
/// Each map must send every component into a single component, injectively
/// on components (true for multiplication by a homogeneous element), so
/// the solution set is itself graded and can be solved per component.
GradedSubspace solve_conditions(const PoissonColorAlgebra& a, const GradedSubspace& domain,
                                const std::vector<LinearMap>& maps, const GradedSubspace& target);

struct AnnihilatorConstraints {
  bool bracket = true;      // {x, e_j} = 0
  bool left_mul = true;     // x e_j = 0
  bool right_mul = true;    // e_j x = 0
  std::optional<std::vector<int>> basis_subset;  // default: every e_j
};

/// Exact null space of the stacked annihilation conditions.
GradedSubspace annihilator_solve(const PoissonColorAlgebra& a, const AnnihilatorConstraints& constraints);

}  // namespace pck

#endif  // PCK_GRADED_SUBSPACE_HPP
