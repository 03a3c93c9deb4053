#ifndef PCK_DECOMPOSITION_HPP
#define PCK_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pck/connections.hpp"
#include "pck/graded_subspace.hpp"

namespace pck {

struct IdealDescriptor {
  GroupElement class_rep;
  std::vector<GroupElement> members;
  GradedSubspace one_part;  // span of P_mu P_{mu^-1} + {P_mu, P_{mu^-1}}, mu in the class
  GradedSubspace vee_part;  // direct sum of P_mu, mu in the class
  GradedSubspace total;     // one_part + vee_part
};

struct DecompositionReport {
  GradedSubspace u_complement;
  std::vector<IdealDescriptor> ideals;
  /// orthogonality[i][j] for i != j; nullopt on the diagonal.
  std::vector<std::vector<std::optional<bool>>> orthogonality;
  bool sum_is_whole = false;  // U + sum I equals P exactly
  bool is_direct = false;
  int center_dim = 0;
  bool p1_condition = false;
  std::vector<std::string> notes;
};

/// Span of e_i e_j and {e_i, e_j} with ldeg(e_i) = mu in cls, ldeg(e_j) = mu^-1.
/// Throws PreconditionError if cls is not inverse-closed.
GradedSubspace ideal_one_part(const PoissonColorAlgebra& a, const std::vector<GroupElement>& cls);

IdealDescriptor build_ideal(const PoissonColorAlgebra& a, const std::vector<GroupElement>& cls);

bool is_subalgebra(const PoissonColorAlgebra& a, const GradedSubspace& s);
bool is_graded_ideal(const PoissonColorAlgebra& a, const GradedSubspace& s);

/// All products and brackets between spanning vectors of I and J vanish
/// (both orders). Requires distinct classes.
bool orthogonality_check(const PoissonColorAlgebra& a, const IdealDescriptor& i, const IdealDescriptor& j);

/// Z(P) = { x : {x, P} + xP + Px = 0 }.
GradedSubspace compute_center(const PoissonColorAlgebra& a);

/// P_1 == sum over classes of ideal_one_part. Requires a symmetric support.
bool p1_condition_check(const PoissonColorAlgebra& a);

/// Builds every I_[lambda] and the deterministic complement U inside P_1.
/// Throws PreconditionError on a non-symmetric support.
/// Attached to every decomposition report.
extern const char* const kP1Note;

DecompositionReport decompose(const PoissonColorAlgebra& a);

}  // namespace pck

#endif  // PCK_DECOMPOSITION_HPP
