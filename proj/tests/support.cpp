#include "support.hpp"

#include <iterator>

#include "pck/graded_subspace.hpp"

namespace pck::testing {

CycScalar random_scalar(int order, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(order)));
  for (auto& x : c) x = Rational(coeff(rng));
  return CycScalar(order, std::move(c));
}

Vector random_in_component(const PoissonColorAlgebra& a, const ComponentKey& key, std::mt19937_64& rng) {
  Vector v;
  for (int i : a.layout()->components.at(key)) v.add_term(i, random_scalar(a.scalar_order(), rng));
  return v;
}

PoissonColorAlgebra with_tensors(const PoissonColorAlgebra& a, StructureTensor product, StructureTensor bracket,
                                 const std::string& name) {
  AlgebraData d = a.data();
  d.name = name;
  d.product = std::move(product);
  d.bracket = std::move(bracket);
  return PoissonColorAlgebra(std::move(d));
}

namespace {

std::string describe(const std::string& axiom, const PoissonColorAlgebra& a, const Vector& lhs, const Vector& rhs) {
  return axiom + ": " + format_vector(a, lhs) + " != " + format_vector(a, rhs);
}

}  // namespace

std::optional<std::string> random_axiom_violation(const PoissonColorAlgebra& a, std::mt19937_64& rng, int trials) {
  const auto& comps = a.layout()->components;
  if (comps.empty()) return std::nullopt;
  std::vector<ComponentKey> keys;
  for (const auto& [k, _] : comps) keys.push_back(k);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  const auto& lspec = a.lambda_spec();
  const auto& gspec = a.g_spec();

  const auto lands_in = [&](const Vector& v, const ComponentKey& x, const ComponentKey& y) {
    const ComponentKey want{group_compose(lspec, x.first, y.first), group_compose(gspec, x.second, y.second)};
    for (const auto& [k, _] : homogeneous_parts(*a.layout(), v)) {
      if (k != want) return false;
    }
    return true;
  };

  for (int t = 0; t < trials; ++t) {
    const ComponentKey kx = keys[pick(rng)], ky = keys[pick(rng)], kz = keys[pick(rng)];
    const Vector x = random_in_component(a, kx, rng);
    const Vector y = random_in_component(a, ky, rng);
    const Vector z = random_in_component(a, kz, rng);
    const CycScalar exy = a.epsilon(kx.second, ky.second);
    const CycScalar eyz = a.epsilon(ky.second, kz.second);

    const Vector xy = a.mul(x, y);
    const Vector bxy = a.bracket(x, y);
    if (!lands_in(xy, kx, ky)) return "bigrading of product: " + format_vector(a, xy);
    if (!lands_in(bxy, kx, ky)) return "bigrading of bracket: " + format_vector(a, bxy);

    const Vector assoc_l = a.mul(xy, z), assoc_r = a.mul(x, a.mul(y, z));
    if (!(assoc_l == assoc_r)) return describe("associativity", a, assoc_l, assoc_r);

    if (a.flags().check_commutative) {
      const Vector yx = a.mul(y, x).scaled(exy);
      if (!(xy == yx)) return describe("commutativity", a, xy, yx);
    }

    const Vector skew = -a.bracket(y, x).scaled(exy);
    if (!(bxy == skew)) return describe("skew-symmetry", a, bxy, skew);

    const Vector jac_l = a.bracket(x, a.bracket(y, z));
    const Vector jac_r = a.bracket(bxy, z) + a.bracket(y, a.bracket(x, z)).scaled(exy);
    if (!(jac_l == jac_r)) return describe("jacobi", a, jac_l, jac_r);

    const Vector leib_l = a.bracket(xy, z);
    const Vector leib_r = a.mul(x, a.bracket(y, z)) + a.mul(a.bracket(x, z), y).scaled(eyz);
    if (!(leib_l == leib_r)) return describe("leibniz", a, leib_l, leib_r);
  }
  return std::nullopt;
}

std::vector<Mutant> single_entry_mutants(const PoissonColorAlgebra& a) {
  std::vector<Mutant> out;
  const int n = a.scalar_order();
  const struct {
    const char* label;
    std::optional<CycScalar> factor;
  } kinds[] = {
      {"negated", CycScalar(n, Rational(-1))},
      {"doubled", CycScalar(n, Rational(2))},
      {"scaled by 1/3", CycScalar(n, Rational(1, 3))},
      {"deleted", std::nullopt},
  };
  for (int which = 0; which < 2; ++which) {
    const StructureTensor& t = which == 0 ? a.product_tensor() : a.bracket_tensor();
    for (const auto& [ij, v] : t.entries()) {
      for (const auto& kind : kinds) {
        StructureTensor mutated = t;
        mutated.set(ij.first, ij.second, kind.factor ? v.scaled(*kind.factor) : Vector{});
        const std::string entry = (which == 0 ? a.basis(ij.first).name + "*" + a.basis(ij.second).name
                                              : "{" + a.basis(ij.first).name + "," + a.basis(ij.second).name + "}");
        const std::string desc = a.name() + ": " + entry + " " + kind.label;
        out.push_back({desc, which == 0 ? with_tensors(a, mutated, a.bracket_tensor(), desc)
                                        : with_tensors(a, a.product_tensor(), mutated, desc)});
      }
    }
  }
  return out;
}

}  // namespace pck::testing
