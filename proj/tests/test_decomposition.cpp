#include <gtest/gtest.h>

#include "pck/connections.hpp"
#include "pck/corpus.hpp"
#include "pck/decomposition.hpp"
#include "pck/errors.hpp"

namespace pck {
namespace {

Vector named(const PoissonColorAlgebra& a, const char* name) { return a.basis_vector(*a.index_of(name)); }

std::vector<GroupElement> first_class(const PoissonColorAlgebra& a) {
  return connection_classes(compute_supports(a)).classes.front();
}

TEST(OnePart, Examples) {
  const auto sl2 = sl2_algebra();
  EXPECT_EQ(ideal_one_part(sl2, first_class(sl2)), span_of(sl2, {named(sl2, "h")}));
  const auto fz3 = group_algebra(3);
  EXPECT_EQ(ideal_one_part(fz3, first_class(fz3)), span_of(fz3, {named(fz3, "t0")}));
  // both tensors zero, support {z, z^-1}
  AlgebraData d;
  d.name = "inert";
  d.lambda_spec = GroupSpec{1, {}, {"z"}};
  d.basis = {{0, "p", {}, GroupElement{{1}}}, {1, "m", {}, GroupElement{{-1}}}};
  const PoissonColorAlgebra inert(std::move(d));
  EXPECT_TRUE(ideal_one_part(inert, first_class(inert)).is_zero());
  EXPECT_THROW(ideal_one_part(sl2, {GroupElement{{1}}}), PreconditionError);
}

TEST(BuildIdeal, Examples) {
  const auto sl2 = sl2_algebra();
  EXPECT_EQ(build_ideal(sl2, first_class(sl2)).total, GradedSubspace::full(sl2));
  const auto two = corpus_entry("two_block")->algebra;
  const auto block = build_ideal(two, first_class(two)).total;
  EXPECT_EQ(block, span_of(two, {named(two, "a_t0"), named(two, "a_t1"), named(two, "a_t2")}));
  const auto gc = grassmann_clifford();
  EXPECT_EQ(build_ideal(gc, first_class(gc)).total, GradedSubspace::full(gc));
}

TEST(SubalgebraAndIdeal, Examples) {
  const auto sl2 = sl2_algebra();
  EXPECT_TRUE(is_subalgebra(sl2, span_of(sl2, {named(sl2, "e")})));
  EXPECT_FALSE(is_subalgebra(sl2, span_of(sl2, {named(sl2, "e"), named(sl2, "f")})));
  EXPECT_FALSE(is_graded_ideal(sl2, span_of(sl2, {named(sl2, "e")})));
  EXPECT_TRUE(is_graded_ideal(sl2, GradedSubspace::full(sl2)));
  EXPECT_TRUE(is_graded_ideal(sl2, GradedSubspace::zero(sl2)));
}

TEST(Ideals, AreSubalgebrasAndIdealsOnCorpus) {
  for (const auto& entry : builtin_corpus()) {
    if (!entry.symmetric_support) continue;
    const auto& a = entry.algebra;
    for (const auto& cls : connection_classes(compute_supports(a)).classes) {
      const auto ideal = build_ideal(a, cls);
      EXPECT_TRUE(is_subalgebra(a, ideal.total)) << entry.name;
      EXPECT_TRUE(is_graded_ideal(a, ideal.total)) << entry.name;
      // the one-part sits in degree (1, 0)
      const ComponentKey unit{a.lambda_spec().identity(), a.g_spec().identity()};
      for (const auto& [key, _] : ideal.one_part.components()) EXPECT_EQ(key, unit) << entry.name;
    }
  }
}

TEST(Orthogonality, DistinctClasses) {
  for (const char* name : {"two_block", "three_block", "sl2_plus_fz3"}) {
    const auto a = corpus_entry(name)->algebra;
    const auto classes = connection_classes(compute_supports(a)).classes;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        if (i == j) {
          EXPECT_THROW(orthogonality_check(a, build_ideal(a, classes[i]), build_ideal(a, classes[j])), PreconditionError);
        } else {
          EXPECT_TRUE(orthogonality_check(a, build_ideal(a, classes[i]), build_ideal(a, classes[j]))) << name;
        }
      }
    }
  }
}

TEST(Center, Examples) {
  EXPECT_TRUE(compute_center(sl2_algebra()).is_zero());
  EXPECT_TRUE(compute_center(group_algebra(3)).is_zero());
  const auto line = abelian_line();
  EXPECT_EQ(compute_center(line), GradedSubspace::full(line));
  const auto central = corpus_entry("central_line")->algebra;
  EXPECT_EQ(compute_center(central), span_of(central, {named(central, "u")}));
}

TEST(P1Condition, Examples) {
  EXPECT_TRUE(p1_condition_check(sl2_algebra()));
  EXPECT_TRUE(p1_condition_check(grassmann_clifford()));
  EXPECT_FALSE(p1_condition_check(corpus_entry("central_line")->algebra));
  EXPECT_TRUE(p1_condition_check(zero_algebra()));
}

TEST(Decompose, Examples) {
  const auto sl2 = decompose(sl2_algebra());
  EXPECT_TRUE(sl2.u_complement.is_zero());
  ASSERT_EQ(sl2.ideals.size(), 1u);
  EXPECT_TRUE(sl2.is_direct);

  const auto two = decompose(corpus_entry("two_block")->algebra);
  EXPECT_TRUE(two.u_complement.is_zero());
  EXPECT_EQ(two.ideals.size(), 2u);
  EXPECT_TRUE(two.is_direct);
  EXPECT_EQ(two.orthogonality[0][1], std::optional<bool>(true));
  EXPECT_EQ(two.orthogonality[1][0], std::optional<bool>(true));
  EXPECT_FALSE(two.orthogonality[0][0].has_value());

  const auto central = corpus_entry("central_line")->algebra;
  const auto c = decompose(central);
  EXPECT_EQ(c.u_complement, span_of(central, {named(central, "u")}));
  EXPECT_EQ(c.ideals.size(), 1u);
  EXPECT_TRUE(c.is_direct);
  EXPECT_EQ(c.center_dim, 1);
  EXPECT_FALSE(c.p1_condition);

  EXPECT_THROW(decompose(nonsymmetric_example()), PreconditionError);
}

TEST(Decompose, SumIsWholeOnCorpus) {
  for (const auto& entry : builtin_corpus()) {
    if (!entry.symmetric_support) continue;
    const auto& a = entry.algebra;
    const auto d = decompose(a);
    GradedSubspace sum = d.u_complement;
    int dims = d.u_complement.dim();
    for (const auto& i : d.ideals) {
      sum = subspace_sum(sum, i.total);
      dims += i.total.dim();
    }
    EXPECT_TRUE(d.sum_is_whole) << entry.name;
    EXPECT_EQ(sum, GradedSubspace::full(a)) << entry.name;
    if (d.center_dim == 0 && d.p1_condition) {
      EXPECT_TRUE(d.is_direct) << entry.name;
      EXPECT_TRUE(d.u_complement.is_zero()) << entry.name;
      EXPECT_EQ(dims, a.dim()) << entry.name;
    }
  }
}

}  // namespace
}  // namespace pck
