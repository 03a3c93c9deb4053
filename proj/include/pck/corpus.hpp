#ifndef PCK_CORPUS_HPP
#define PCK_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pck/algebra.hpp"

namespace pck {

/// Grading data and basis of an algebra, without structure constants.
struct AlgebraSkeleton {
  std::string name;
  int scalar_order = 1;
  GroupSpec g_spec;
  GroupSpec lambda_spec;
  BiCharacter bichar;
  std::vector<BasisDescriptor> basis;
  AlgebraFlags flags;
};

/// Zero product; the bracket must satisfy bigrading, skew-symmetry and
/// Jacobi. Throws LoadError otherwise.
PoissonColorAlgebra construct_from_lie_color(const AlgebraSkeleton& skeleton, const StructureTensor& bracket);

/// Zero bracket; the product must be graded and associative.
PoissonColorAlgebra construct_from_associative(const AlgebraSkeleton& skeleton, const StructureTensor& product);

/// Block-diagonal sum over G_A x G_B and Lambda_A x Lambda_B, so the two
/// supports are disjoint and cross terms vanish. Basis names get the
/// prefixes when given, and are otherwise kept (clashes throw).
/// Throws std::invalid_argument on a scalar order mismatch.
PoissonColorAlgebra construct_direct_sum(const PoissonColorAlgebra& a, const PoissonColorAlgebra& b,
                                         const std::string& name, const std::string& prefix_a = "",
                                         const std::string& prefix_b = "");

// Individual corpus members.
PoissonColorAlgebra sl2_algebra();
PoissonColorAlgebra group_algebra(int n);
PoissonColorAlgebra grassmann_clifford();
PoissonColorAlgebra color_z3xz3();
PoissonColorAlgebra abelian_line();
PoissonColorAlgebra zero_algebra();
PoissonColorAlgebra nonsymmetric_example();

struct CorpusEntry {
  std::string name;
  std::string description;
  PoissonColorAlgebra algebra;
  bool symmetric_support = true;
};

/// Every built-in example, in a fixed order.
std::vector<CorpusEntry> builtin_corpus();

std::optional<CorpusEntry> corpus_entry(const std::string& name);

}  // namespace pck

#endif  // PCK_CORPUS_HPP
