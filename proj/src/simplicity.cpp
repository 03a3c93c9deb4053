#include "pck/simplicity.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "pck/axioms.hpp"
#include "pck/errors.hpp"

namespace pck {

namespace {

constexpr int kSamplesPerComponent = 50;

std::size_t component_dim(const PoissonColorAlgebra& a, const ComponentKey& key) {
  auto it = a.layout()->components.find(key);
  return it == a.layout()->components.end() ? 0 : it->second.size();
}

bool has_nonzero_multiplication(const PoissonColorAlgebra& a) {
  return !a.product_tensor().empty() || !a.bracket_tensor().empty();
}

std::vector<LinearMap> multiplication_maps(const PoissonColorAlgebra& a, const std::vector<int>& js) {
  std::vector<LinearMap> maps;
  for (int j : js) {
    const Vector e = a.basis_vector(j);
    maps.push_back([&a, e](const Vector& x) { return a.bracket(x, e); });
    maps.push_back([&a, e](const Vector& x) { return a.mul(x, e); });
    maps.push_back([&a, e](const Vector& x) { return a.mul(e, x); });
  }
  return maps;
}

std::string describe_ideal(const PoissonColorAlgebra& a, const std::string& generator, const GradedSubspace& ideal) {
  return "ideal generated by " + generator + " has dimension " + std::to_string(ideal.dim()) + " of " +
         std::to_string(a.dim());
}

CycScalar random_scalar(int order, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  std::vector<Rational> coeffs(static_cast<std::size_t>(euler_phi(order)));
  for (auto& c : coeffs) c = Rational(dist(rng));
  return CycScalar(order, std::move(coeffs));
}

}  // namespace

bool maximal_length_check(const PoissonColorAlgebra& a) {
  for (const auto& [key, cols] : a.layout()->components) {
    if (is_identity(key.first)) continue;
    if (cols.size() != 1) return false;
    const ComponentKey mirror{group_inverse(a.lambda_spec(), key.first), group_inverse(a.g_spec(), key.second)};
    if (component_dim(a, mirror) != 1) return false;
  }
  return true;
}

MultiplicativityResult sigma_multiplicativity_check(const PoissonColorAlgebra& a) {
  MultiplicativityResult out;
  const SupportData s = compute_supports(a);
  const auto& comps = a.layout()->components;
  for (const auto& [k1, c1] : comps) {
    if (is_identity(k1.first)) continue;
    for (const auto& [k2, c2] : comps) {
      if (is_identity(k2.first)) continue;
      if (!s.in_support(group_compose(a.lambda_spec(), k1.first, k2.first))) continue;
      bool nonzero = false;
      for (int i : c1) {
        for (int j : c2) {
          if (a.product_tensor().get(i, j) || a.bracket_tensor().get(i, j)) nonzero = true;
        }
      }
      if (!nonzero) {
        out.holds = false;
        out.counterexamples.push_back({k1.first, k1.second, k2.first, k2.second});
      }
    }
  }
  return out;
}

GradedSubspace ideal_closure(const PoissonColorAlgebra& a, const std::vector<Vector>& generators, int* rounds) {
  GradedSubspace current = span_of(a, generators);
  int round = 0;
  while (true) {
    std::vector<Vector> images;
    for (const auto& u : current.spanning_vectors()) {
      for (int j = 0; j < a.dim(); ++j) {
        const Vector e = a.basis_vector(j);
        images.push_back(a.bracket(u, e));
        images.push_back(a.mul(u, e));
        images.push_back(a.mul(e, u));
      }
    }
    std::vector<Vector> parts;
    for (const auto& v : images) {
      for (auto& [key, p] : homogeneous_parts(*a.layout(), v)) parts.push_back(std::move(p));
    }
    GradedSubspace next = subspace_sum(current, span_of(a, parts));
    if (next.dim() == current.dim()) break;
    current = std::move(next);
    if (++round > a.dim()) throw std::logic_error("ideal closure exceeded its round bound");
  }
  if (rounds) *rounds = round;
  return current;
}

GradedSubspace largest_ideal_in_p1(const PoissonColorAlgebra& a, int* rounds) {
  std::vector<int> outside;
  std::vector<int> inside;
  for (int j = 0; j < a.dim(); ++j) (is_identity(a.basis(j).ldeg) ? inside : outside).push_back(j);
  const GradedSubspace p1 = GradedSubspace::lambda_part(a, [](const GroupElement& l) { return is_identity(l); });
  // Products with P_lambda land in P_lambda, which meets P_1 trivially.
  GradedSubspace current = solve_conditions(a, p1, multiplication_maps(a, outside), GradedSubspace::zero(a));
  const auto inner = multiplication_maps(a, inside);
  int round = 0;
  while (true) {
    GradedSubspace next = solve_conditions(a, current, inner, current);
    if (next.dim() == current.dim()) break;
    current = std::move(next);
    if (++round > a.dim()) throw std::logic_error("P_1 ideal refinement exceeded its round bound");
  }
  if (rounds) *rounds = round;
  return current;
}

SimplicityVerdict gr_simple_criterion(const PoissonColorAlgebra& a) {
  SimplicityVerdict v;
  const SupportData s = compute_supports(a);
  v.symmetric_support = check_symmetric_support(s);
  v.maximal_length = maximal_length_check(a);
  v.multiplicative = sigma_multiplicativity_check(a).holds;
  v.notes.emplace_back(kMultiplicativityNote);
  v.criterion_applicable = v.symmetric_support && v.maximal_length && v.multiplicative;
  if (!v.criterion_applicable) return v;
  v.center_zero = compute_center(a).is_zero();
  v.p1_condition = p1_condition_check(a);
  v.class_count = connection_classes(s).classes.size();
  v.criterion_result = v.center_zero && v.p1_condition && v.class_count == 1;
  return v;
}

OracleResult gr_simple_oracle(const PoissonColorAlgebra& a, std::uint64_t seed) {
  OracleResult out;
  if (!has_nonzero_multiplication(a)) {
    out.exact = true;
    out.witness = "{P,P} + PP = 0";
    return out;
  }
  const GradedSubspace whole = GradedSubspace::full(a);
  const auto proper_nonzero = [&](const GradedSubspace& s) { return !s.is_zero() && !(s == whole); };

  const GradedSubspace p1_ideal = largest_ideal_in_p1(a);
  const bool p1_is_everything = p1_ideal == whole;
  out.exact = maximal_length_check(a) && !p1_is_everything;

  for (int i = 0; i < a.dim(); ++i) {
    if (is_identity(a.basis(i).ldeg)) continue;
    const GradedSubspace c = ideal_closure(a, {a.basis_vector(i)});
    if (proper_nonzero(c)) {
      out.witness = describe_ideal(a, a.basis(i).name, c);
      return out;
    }
  }
  if (proper_nonzero(p1_ideal)) {
    out.witness = "largest graded ideal inside P_1 has dimension " + std::to_string(p1_ideal.dim());
    return out;
  }
  if (!out.exact) {
    std::mt19937_64 rng(seed);
    for (const auto& [key, cols] : a.layout()->components) {
      const bool needs_sampling = cols.size() > 1 || is_identity(key.first);
      if (!needs_sampling) continue;
      for (int t = 0; t < kSamplesPerComponent; ++t) {
        Vector v;
        for (int k : cols) v.add_term(k, random_scalar(a.scalar_order(), rng));
        if (v.is_zero()) continue;
        const GradedSubspace c = ideal_closure(a, {v});
        if (proper_nonzero(c)) {
          out.witness = describe_ideal(a, format_vector(a, v), c);
          return out;
        }
      }
    }
  }
  out.simple = true;
  return out;
}

const char* const kMultiplicativityNote =
    "Sigma-multiplicativity applied to pairs with lambda*mu in Sigma_Lambda (not merely in Lambda)";

SimplicityVerdict analyze_simplicity(const PoissonColorAlgebra& a, std::uint64_t seed) {
  SimplicityVerdict v = gr_simple_criterion(a);
  const OracleResult o = gr_simple_oracle(a, seed);
  v.oracle_result = o.simple;
  v.oracle_exact = o.exact;
  v.proper_ideal_witness = o.witness;
  if (v.criterion_result) v.agreement = *v.criterion_result == o.simple;
  return v;
}

PoissonColorAlgebra restrict_to(const PoissonColorAlgebra& a, const GradedSubspace& s, const std::string& name) {
  if (s.layout_ptr() != a.layout()) throw std::invalid_argument("restrict_to: subspace of a different algebra");
  struct Row {
    int pivot;  // ambient basis index of the row's pivot
    ComponentKey key;
    Vector vec;
  };
  std::vector<Row> rows;
  for (const auto& [key, m] : s.components()) {
    const auto& cols = a.layout()->components.at(key);
    const auto pivots = pivot_columns(m);
    for (Index r = 0; r < m.rows(); ++r) {
      Vector v;
      for (Index c = 0; c < m.cols(); ++c) v.add_term(cols[static_cast<std::size_t>(c)], m(r, c));
      rows.push_back({cols[static_cast<std::size_t>(pivots[r])], key, std::move(v)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.pivot < y.pivot; });
  std::map<int, int> new_index;  // pivot -> restricted index
  for (std::size_t i = 0; i < rows.size(); ++i) new_index[rows[i].pivot] = static_cast<int>(i);

  AlgebraData d;
  d.name = name;
  d.scalar_order = a.scalar_order();
  d.g_spec = a.g_spec();
  d.lambda_spec = a.lambda_spec();
  d.bichar = a.bichar();
  d.flags = a.flags();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string label = format_vector(a, rows[i].vec);
    d.basis.push_back({static_cast<int>(i), label, rows[i].key.second, rows[i].key.first});
  }
  const auto coordinates = [&](const Vector& w) {
    if (!contains(s, w)) throw InputError("restrict_to: subspace is not closed under multiplication");
    Vector out;
    for (const auto& [k, c] : w.terms()) {
      auto it = new_index.find(k);
      if (it != new_index.end()) out.add_term(it->second, c);
    }
    return out;
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      d.product.set(static_cast<int>(i), static_cast<int>(j), coordinates(a.mul(rows[i].vec, rows[j].vec)));
      d.bracket.set(static_cast<int>(i), static_cast<int>(j), coordinates(a.bracket(rows[i].vec, rows[j].vec)));
    }
  }
  return PoissonColorAlgebra(std::move(d));
}

SimpleDecomposition simple_decomposition(const PoissonColorAlgebra& a, std::uint64_t seed) {
  if (!maximal_length_check(a)) throw PreconditionError("simple decomposition requires maximal length");
  if (!sigma_multiplicativity_check(a).holds) {
    throw PreconditionError("simple decomposition requires Sigma_Lambda-multiplicativity");
  }
  if (!compute_center(a).is_zero()) throw PreconditionError("simple decomposition requires a zero center");
  if (!p1_condition_check(a)) throw PreconditionError("simple decomposition requires the P_1 condition");

  SimpleDecomposition out{decompose(a), {}, {}};
  out.all_simple = true;
  for (std::size_t i = 0; i < out.decomposition.ideals.size(); ++i) {
    const auto& ideal = out.decomposition.ideals[i];
    PoissonColorAlgebra sub =
        restrict_to(a, ideal.total, a.name() + "/I[" + format_multiplicative(a.lambda_spec(), ideal.class_rep) + "]");
    SimplicityVerdict v = analyze_simplicity(sub, seed);
    const bool simple = v.oracle_result.value_or(false) && v.criterion_result.value_or(false);
    if (!simple) out.all_simple = false;
    out.restricted.push_back(std::move(sub));
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

}  // namespace pck
