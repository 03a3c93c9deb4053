#include "pck/corpus.hpp"

#include <stdexcept>

#include "pck/algebra_file.hpp"

namespace pck {

namespace {

AlgebraData data_from(const AlgebraSkeleton& s) {
  AlgebraData d;
  d.name = s.name;
  d.scalar_order = s.scalar_order;
  d.g_spec = s.g_spec;
  d.lambda_spec = s.lambda_spec;
  d.bichar = s.bichar;
  d.basis = s.basis;
  d.flags = s.flags;
  return d;
}

// Bi-character with order raised to the field's order.
BiCharacter lift_bichar(const BiCharacter& b, int order) {
  BiCharacter out{order, b.matrix};
  const std::int64_t scale = order / b.cyclotomic_order;
  for (auto& row : out.matrix) {
    for (auto& x : row) x *= scale;
  }
  return out;
}

GroupSpec trivial_group() { return GroupSpec{}; }

GroupSpec cyclic(std::int64_t n, std::string name) { return GroupSpec{0, {n}, {std::move(name)}}; }

GroupSpec integers(std::string name) { return GroupSpec{1, {}, {std::move(name)}}; }

GroupElement el(std::initializer_list<std::int64_t> c) { return GroupElement{std::vector<std::int64_t>(c)}; }

CycScalar q(int order, long n) { return CycScalar(order, Rational(n)); }

}  // namespace

PoissonColorAlgebra construct_from_lie_color(const AlgebraSkeleton& skeleton, const StructureTensor& bracket) {
  AlgebraData d = data_from(skeleton);
  d.bracket = bracket;
  PoissonColorAlgebra a(std::move(d));
  require_valid(a);
  return a;
}

PoissonColorAlgebra construct_from_associative(const AlgebraSkeleton& skeleton, const StructureTensor& product) {
  AlgebraData d = data_from(skeleton);
  d.product = product;
  PoissonColorAlgebra a(std::move(d));
  require_valid(a);
  return a;
}

PoissonColorAlgebra construct_direct_sum(const PoissonColorAlgebra& a, const PoissonColorAlgebra& b,
                                         const std::string& name, const std::string& prefix_a,
                                         const std::string& prefix_b) {
  if (a.scalar_order() != b.scalar_order()) throw std::invalid_argument("direct sum of algebras over different fields");
  const int order = a.scalar_order();
  AlgebraData d;
  d.name = name;
  d.scalar_order = order;
  d.g_spec = product_group(a.g_spec(), b.g_spec());
  d.lambda_spec = product_group(a.lambda_spec(), b.lambda_spec());
  d.bichar = product_bicharacter(a.g_spec(), lift_bichar(a.bichar(), order), b.g_spec(), lift_bichar(b.bichar(), order));
  d.flags.check_commutative = a.flags().check_commutative && b.flags().check_commutative;
  for (const auto& x : a.basis()) {
    d.basis.push_back({x.index, prefix_a + x.name, embed_left(a.g_spec(), b.g_spec(), x.gdeg),
                       embed_left(a.lambda_spec(), b.lambda_spec(), x.ldeg)});
  }
  const int shift = a.dim();
  for (const auto& y : b.basis()) {
    d.basis.push_back({y.index + shift, prefix_b + y.name, embed_right(a.g_spec(), b.g_spec(), y.gdeg),
                       embed_right(a.lambda_spec(), b.lambda_spec(), y.ldeg)});
  }
  const auto copy = [](const StructureTensor& src, int offset, StructureTensor& dst) {
    for (const auto& [ij, v] : src.entries()) {
      Vector moved;
      for (const auto& [k, c] : v.terms()) moved.add_term(k + offset, c);
      dst.set(ij.first + offset, ij.second + offset, std::move(moved));
    }
  };
  copy(a.product_tensor(), 0, d.product);
  copy(b.product_tensor(), shift, d.product);
  copy(a.bracket_tensor(), 0, d.bracket);
  copy(b.bracket_tensor(), shift, d.bracket);
  return PoissonColorAlgebra(std::move(d));
}

PoissonColorAlgebra sl2_algebra() {
  AlgebraSkeleton s{"sl2", 1, trivial_group(), integers("z"), BiCharacter{1, {}}, {}, {}};
  s.basis = {{0, "e", el({}), el({1})}, {1, "f", el({}), el({-1})}, {2, "h", el({}), el({0})}};
  StructureTensor br;
  br.add(2, 0, 0, q(1, 2));   // {h,e} = 2e
  br.add(0, 2, 0, q(1, -2));  // {e,h} = -2e
  br.add(2, 1, 1, q(1, -2));  // {h,f} = -2f
  br.add(1, 2, 1, q(1, 2));   // {f,h} = 2f
  br.add(0, 1, 2, q(1, 1));   // {e,f} = h
  br.add(1, 0, 2, q(1, -1));  // {f,e} = -h
  return construct_from_lie_color(s, br);
}

PoissonColorAlgebra group_algebra(int n) {
  if (n < 2) throw std::invalid_argument("group_algebra needs n >= 2");
  AlgebraSkeleton s{"fz" + std::to_string(n), 1, trivial_group(), cyclic(n, "t"), BiCharacter{1, {}}, {}, {true}};
  for (int a = 0; a < n; ++a) s.basis.push_back({a, "t" + std::to_string(a), el({}), el({a})});
  StructureTensor prod;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) prod.add(a, b, (a + b) % n, q(1, 1));
  }
  return construct_from_associative(s, prod);
}

PoissonColorAlgebra grassmann_clifford() {
  AlgebraData d;
  d.name = "grassmann_clifford";
  d.scalar_order = 2;
  d.g_spec = cyclic(2, "p");
  d.lambda_spec = cyclic(2, "s");
  d.bichar = BiCharacter{2, {{1}}};
  d.flags.check_commutative = true;
  d.basis = {{0, "one", el({0}), el({0})}, {1, "xi", el({1}), el({1})}};
  d.product.add(0, 0, 0, q(2, 1));
  d.product.add(0, 1, 1, q(2, 1));
  d.product.add(1, 0, 1, q(2, 1));
  d.bracket.add(1, 1, 0, q(2, 1));  // {xi,xi} = 1
  PoissonColorAlgebra a(std::move(d));
  require_valid(a);
  return a;
}

PoissonColorAlgebra color_z3xz3() {
  // Twisted group algebra of Z3 x Z3: t_a t_b = zeta^(a1 b2) t_{a+b}.
  AlgebraSkeleton s{"color_z3xz3", 3, GroupSpec{0, {3, 3}, {"a", "b"}}, GroupSpec{0, {3, 3}, {"s", "t"}},
                    BiCharacter{3, {{0, 1}, {-1, 0}}}, {}, {true}};
  const auto idx = [](int i, int j) { return 3 * i + j; };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      s.basis.push_back({idx(i, j), "t" + std::to_string(i) + std::to_string(j), el({i, j}), el({i, j})});
    }
  }
  StructureTensor prod;
  for (int a1 = 0; a1 < 3; ++a1) {
    for (int a2 = 0; a2 < 3; ++a2) {
      for (int b1 = 0; b1 < 3; ++b1) {
        for (int b2 = 0; b2 < 3; ++b2) {
          prod.add(idx(a1, a2), idx(b1, b2), idx((a1 + b1) % 3, (a2 + b2) % 3), root_of_unity(3, a1 * b2));
        }
      }
    }
  }
  return construct_from_associative(s, prod);
}

PoissonColorAlgebra abelian_line() {
  AlgebraSkeleton s{"abelian_line", 1, trivial_group(), trivial_group(), BiCharacter{1, {}}, {}, {}};
  s.basis = {{0, "u", el({}), el({})}};
  return construct_from_lie_color(s, StructureTensor{});
}

PoissonColorAlgebra zero_algebra() {
  AlgebraSkeleton s{"zero", 1, trivial_group(), trivial_group(), BiCharacter{1, {}}, {}, {}};
  return construct_from_lie_color(s, StructureTensor{});
}

PoissonColorAlgebra nonsymmetric_example() {
  // F[x]/(x^2) graded by Z with x in degree z: support {z} has no inverse.
  AlgebraSkeleton s{"nonsymmetric", 1, trivial_group(), integers("z"), BiCharacter{1, {}}, {}, {true}};
  s.basis = {{0, "a", el({}), el({0})}, {1, "x", el({}), el({1})}};
  StructureTensor prod;
  prod.add(0, 0, 0, q(1, 1));
  prod.add(0, 1, 1, q(1, 1));
  prod.add(1, 0, 1, q(1, 1));
  return construct_from_associative(s, prod);
}

std::vector<CorpusEntry> builtin_corpus() {
  const auto checked = [](PoissonColorAlgebra a) {
    require_valid(a);
    return a;
  };
  std::vector<CorpusEntry> out;
  out.push_back({"sl2", "sl_2 as a Lie algebra graded by Z (root grading), zero product", sl2_algebra()});
  out.push_back({"fz3", "group algebra F[Z3], zero bracket", group_algebra(3)});
  out.push_back({"fz5", "group algebra F[Z5], zero bracket", group_algebra(5)});
  out.push_back({"grassmann_clifford", "Poisson superalgebra on {1, xi}: xi xi = 0, {xi, xi} = 1", grassmann_clifford()});
  out.push_back({"color_z3xz3", "twisted group algebra of Z3 x Z3 with zeta_3-valued bi-character", color_z3xz3()});
  out.push_back({"two_block", "F[Z3] + F[Z3]",
                 checked(construct_direct_sum(group_algebra(3), group_algebra(3), "two_block", "a_", "b_"))});
  out.push_back({"three_block", "sl2 + F[Z3] + F[Z5]",
                 checked(construct_direct_sum(construct_direct_sum(sl2_algebra(), group_algebra(3), "sl2+fz3"),
                                              group_algebra(5), "three_block", "", "c_"))});
  out.push_back({"sl2_plus_fz3", "sl2 + F[Z3]", checked(construct_direct_sum(sl2_algebra(), group_algebra(3), "sl2_plus_fz3"))});
  out.push_back({"central_line", "F[Z3] + a central line in degree (1, 0)",
                 checked(construct_direct_sum(group_algebra(3), abelian_line(), "central_line"))});
  out.push_back({"abelian_line", "one-dimensional algebra with both products zero", abelian_line()});
  out.push_back({"zero", "the zero algebra", zero_algebra()});
  out.push_back({"nonsymmetric", "F[x]/(x^2) with deg x = z; support {z} is not symmetric", nonsymmetric_example(), false});
  return out;
}

std::optional<CorpusEntry> corpus_entry(const std::string& name) {
  for (auto& e : builtin_corpus()) {
    if (e.name == name) return std::move(e);
  }
  return std::nullopt;
}

}  // namespace pck
