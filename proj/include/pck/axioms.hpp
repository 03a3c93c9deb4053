#ifndef PCK_AXIOMS_HPP
#define PCK_AXIOMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pck/algebra.hpp"

namespace pck {

/// Reports are capped at this many counterexamples per axiom.
inline constexpr std::size_t kMaxCounterexamples = 20;

struct Counterexample {
  std::vector<std::string> basis;  // names of the basis elements involved
  Vector lhs;
  Vector rhs;
};

struct AxiomResult {
  std::string axiom;
  bool checked = true;  // false for optional checks that were not requested
  std::size_t violations = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return violations == 0; }
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  const AxiomResult* find(const std::string& axiom) const;
  /// First failed axiom, or nullptr.
  const AxiomResult* first_failure() const;
};

struct CheckOptions {
  /// Basis-triple loops are split over this many threads; results are
  /// merged in triple order, so output does not depend on it.
  int threads = 1;
};

AxiomResult check_bigrading(const PoissonColorAlgebra& a);
AxiomResult check_associativity(const PoissonColorAlgebra& a, const CheckOptions& opts = {});
AxiomResult check_epsilon_commutativity(const PoissonColorAlgebra& a);
AxiomResult check_skew_symmetry(const PoissonColorAlgebra& a);
AxiomResult check_jacobi(const PoissonColorAlgebra& a, const CheckOptions& opts = {});
AxiomResult check_leibniz(const PoissonColorAlgebra& a, const CheckOptions& opts = {});

/// Bigrading, associativity, skew-symmetry, Jacobi, Leibniz, and
/// eps-commutativity when flags.check_commutative is set.
AxiomReport validate_all(const PoissonColorAlgebra& a, const CheckOptions& opts = {});

}  // namespace pck

#endif  // PCK_AXIOMS_HPP
