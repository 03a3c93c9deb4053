#ifndef PCK_TESTS_SUPPORT_HPP
#define PCK_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pck/algebra.hpp"

namespace pck::testing {

/// Small random element of Q(zeta_order) with integer coefficients in [-3, 3].
CycScalar random_scalar(int order, std::mt19937_64& rng);

/// Random vector inside one bihomogeneous component.
Vector random_in_component(const PoissonColorAlgebra& a, const ComponentKey& key, std::mt19937_64& rng);

/// Copy of `a` with replaced tensors.
PoissonColorAlgebra with_tensors(const PoissonColorAlgebra& a, StructureTensor product, StructureTensor bracket,
                                 const std::string& name);

/// Evaluates every axiom on random homogeneous vectors instead of basis
/// triples. Returns a description of the first violation found.
std::optional<std::string> random_axiom_violation(const PoissonColorAlgebra& a, std::mt19937_64& rng, int trials);

struct Mutant {
  std::string description;
  PoissonColorAlgebra algebra;
};

/// For every stored entry of either tensor: negate it, double it, scale it
/// by 1/3 and delete it.
std::vector<Mutant> single_entry_mutants(const PoissonColorAlgebra& a);

}  // namespace pck::testing

#endif  // PCK_TESTS_SUPPORT_HPP
