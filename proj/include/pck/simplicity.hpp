#ifndef PCK_SIMPLICITY_HPP
#define PCK_SIMPLICITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pck/decomposition.hpp"

namespace pck {

/// Every nonzero P_{lambda,g} with lambda != 1 is one-dimensional, and so is
/// P_{lambda^-1,-g}.
bool maximal_length_check(const PoissonColorAlgebra& a);

struct MultiplicativityFailure {
  GroupElement lambda, g, mu, h;
};

struct MultiplicativityResult {
  bool holds = true;
  std::vector<MultiplicativityFailure> counterexamples;
};

/// For all nonzero P_{lambda,g}, P_{mu,h} with lambda, mu != 1 and
/// lambda mu in Sigma_Lambda: {P_{lambda,g}, P_{mu,h}} + P_{lambda,g} P_{mu,h} != 0.
MultiplicativityResult sigma_multiplicativity_check(const PoissonColorAlgebra& a);

/// Smallest graded ideal containing the generators. `rounds`, when given,
/// receives the number of enlargement rounds (never more than dim P).
GradedSubspace ideal_closure(const PoissonColorAlgebra& a, const std::vector<Vector>& generators,
                             int* rounds = nullptr);

/// Largest graded ideal contained in P_1, by shrinking refinement.
GradedSubspace largest_ideal_in_p1(const PoissonColorAlgebra& a, int* rounds = nullptr);

struct SimplicityVerdict {
  bool maximal_length = false;
  bool multiplicative = false;
  bool symmetric_support = false;

  bool criterion_applicable = false;
  std::optional<bool> criterion_result;
  bool center_zero = false;
  bool p1_condition = false;
  std::size_t class_count = 0;

  std::optional<bool> oracle_result;
  bool oracle_exact = false;
  /// Description of a proper nonzero graded ideal found by the oracle.
  std::optional<std::string> proper_ideal_witness;

  std::optional<bool> agreement;
  std::vector<std::string> notes;
};

/// Criterion side: center zero, P_1 condition, exactly one connection
/// class. Not applicable (criterion_result empty) when maximal length,
/// Sigma-multiplicativity or symmetric support fails.
SimplicityVerdict gr_simple_criterion(const PoissonColorAlgebra& a);

struct OracleResult {
  bool simple = false;
  bool exact = false;
  std::optional<std::string> witness;
};

/// Brute-force gr-simplicity by ideal closures. Exact under maximal
/// length; otherwise samples 50 seeded random homogeneous vectors per
/// multi-dimensional component.
OracleResult gr_simple_oracle(const PoissonColorAlgebra& a, std::uint64_t seed = 0);

/// Criterion and oracle together, with their agreement.
/// Attached to every simplicity verdict.
extern const char* const kMultiplicativityNote;

SimplicityVerdict analyze_simplicity(const PoissonColorAlgebra& a, std::uint64_t seed = 0);

/// The algebra structure induced on a subalgebra, with the subspace's RREF
/// rows as basis. Throws InputError if S is not closed under both products.
PoissonColorAlgebra restrict_to(const PoissonColorAlgebra& a, const GradedSubspace& s, const std::string& name);

struct SimpleDecomposition {
  DecompositionReport decomposition;
  std::vector<PoissonColorAlgebra> restricted;
  std::vector<SimplicityVerdict> verdicts;
  bool all_simple = false;
};

/// Decomposes and checks every I_[lambda] for gr-simplicity. Throws
/// PreconditionError unless maximal length, Sigma-multiplicativity, zero
/// center and the P_1 condition all hold.
SimpleDecomposition simple_decomposition(const PoissonColorAlgebra& a, std::uint64_t seed = 0);

}  // namespace pck

#endif  // PCK_SIMPLICITY_HPP
