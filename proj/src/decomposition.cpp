#include "pck/decomposition.hpp"

#include <algorithm>

#include "pck/errors.hpp"

namespace pck {

namespace {

bool in_class(const std::vector<GroupElement>& cls, const GroupElement& l) {
  return std::find(cls.begin(), cls.end(), l) != cls.end();
}

GradedSubspace p1_part(const PoissonColorAlgebra& a) {
  return GradedSubspace::lambda_part(a, [](const GroupElement& l) { return is_identity(l); });
}

}  // namespace

GradedSubspace ideal_one_part(const PoissonColorAlgebra& a, const std::vector<GroupElement>& cls) {
  const auto& spec = a.lambda_spec();
  for (const auto& mu : cls) {
    if (!in_class(cls, group_inverse(spec, mu))) throw PreconditionError("class is not closed under inverses");
  }
  std::vector<Vector> gens;
  for (int i = 0; i < a.dim(); ++i) {
    const auto& li = a.basis(i).ldeg;
    if (!in_class(cls, li)) continue;
    const GroupElement want = group_inverse(spec, li);
    for (int j = 0; j < a.dim(); ++j) {
      if (!(a.basis(j).ldeg == want)) continue;
      gens.push_back(a.mul(i, j));
      gens.push_back(a.bracket(i, j));
    }
  }
  return span_of(a, gens);
}

IdealDescriptor build_ideal(const PoissonColorAlgebra& a, const std::vector<GroupElement>& cls) {
  GradedSubspace one = ideal_one_part(a, cls);
  GradedSubspace vee = GradedSubspace::lambda_part(a, [&](const GroupElement& l) { return in_class(cls, l); });
  GradedSubspace total = subspace_sum(one, vee);
  return IdealDescriptor{cls.empty() ? a.lambda_spec().identity() : cls.front(), cls, std::move(one), std::move(vee),
                         std::move(total)};
}

bool is_subalgebra(const PoissonColorAlgebra& a, const GradedSubspace& s) {
  const auto span = s.spanning_vectors();
  for (const auto& u : span) {
    for (const auto& v : span) {
      if (!contains(s, a.mul(u, v)) || !contains(s, a.bracket(u, v))) return false;
    }
  }
  return true;
}

bool is_graded_ideal(const PoissonColorAlgebra& a, const GradedSubspace& s) {
  for (const auto& u : s.spanning_vectors()) {
    for (int j = 0; j < a.dim(); ++j) {
      const Vector e = a.basis_vector(j);
      if (!contains(s, a.bracket(u, e)) || !contains(s, a.mul(u, e)) || !contains(s, a.mul(e, u))) return false;
    }
  }
  return true;
}

bool orthogonality_check(const PoissonColorAlgebra& a, const IdealDescriptor& i, const IdealDescriptor& j) {
  if (i.class_rep == j.class_rep) throw PreconditionError("orthogonality_check needs two distinct classes");
  const auto si = i.total.spanning_vectors();
  const auto sj = j.total.spanning_vectors();
  for (const auto& u : si) {
    for (const auto& v : sj) {
      if (!a.mul(u, v).is_zero() || !a.mul(v, u).is_zero()) return false;
      if (!a.bracket(u, v).is_zero() || !a.bracket(v, u).is_zero()) return false;
    }
  }
  return true;
}

GradedSubspace compute_center(const PoissonColorAlgebra& a) { return annihilator_solve(a, AnnihilatorConstraints{}); }

bool p1_condition_check(const PoissonColorAlgebra& a) {
  const SupportData s = compute_supports(a);
  if (!check_symmetric_support(s)) throw PreconditionError("P_1 condition requires a symmetric Lambda-support");
  return subspace_eq(ideal_one_part(a, s.sigma_lambda), p1_part(a));
}

const char* const kP1Note =
    "P_1 condition evaluated as P_1 = sum over Sigma_Lambda of (P_l P_{l^-1} + {P_l, P_{l^-1}})";

DecompositionReport decompose(const PoissonColorAlgebra& a) {
  const SupportData s = compute_supports(a);
  if (!check_symmetric_support(s)) throw PreconditionError("decomposition requires a symmetric Lambda-support");
  const ConnectionClasses classes = connection_classes(s);

  DecompositionReport report{GradedSubspace::zero(a), {}, {}, false, false, 0, false, {}};
  GradedSubspace one_sum = GradedSubspace::zero(a);
  for (const auto& cls : classes.classes) {
    report.ideals.push_back(build_ideal(a, cls));
    one_sum = subspace_sum(one_sum, report.ideals.back().one_part);
  }

  for (const auto& [key, cols] : a.layout()->components) {
    if (!is_identity(key.first)) continue;
    report.u_complement = subspace_sum(report.u_complement, complement_within(one_sum, key, a));
  }

  const std::size_t n = report.ideals.size();
  report.orthogonality.assign(n, std::vector<std::optional<bool>>(n));
  bool pairwise_trivial = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      report.orthogonality[i][j] = orthogonality_check(a, report.ideals[i], report.ideals[j]);
      if (j > i && !intersect(report.ideals[i].total, report.ideals[j].total).is_zero()) pairwise_trivial = false;
    }
  }

  GradedSubspace whole = report.u_complement;
  int dim_sum = report.u_complement.dim();
  for (const auto& ideal : report.ideals) {
    whole = subspace_sum(whole, ideal.total);
    dim_sum += ideal.total.dim();
  }
  report.sum_is_whole = subspace_eq(whole, GradedSubspace::full(a));
  report.is_direct = report.sum_is_whole && dim_sum == a.dim() && pairwise_trivial;
  report.center_dim = compute_center(a).dim();
  report.p1_condition = subspace_eq(one_sum, p1_part(a));
  report.notes.emplace_back(kP1Note);
  return report;
}

}  // namespace pck
