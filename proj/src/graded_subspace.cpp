#include "pck/graded_subspace.hpp"

#include <stdexcept>

#include "pck/errors.hpp"

namespace pck {

namespace {

using Matrix = GradedSubspace::Matrix;

CycScalar field_zero(const GradedLayout& layout) { return CycScalar(layout.scalar_order); }

std::vector<CycScalar> to_row(const GradedLayout& layout, const ComponentKey& key, const Vector& v) {
  const auto& cols = layout.components.at(key);
  std::vector<CycScalar> row(cols.size(), field_zero(layout));
  for (const auto& [k, c] : v.terms()) row[static_cast<std::size_t>(layout.position[k])] = c;
  return row;
}

Vector from_row(const GradedLayout& layout, const ComponentKey& key, const Matrix& m, Index r) {
  const auto& cols = layout.components.at(key);
  Vector v;
  for (Index c = 0; c < m.cols(); ++c) v.add_term(cols[static_cast<std::size_t>(c)], m(r, c));
  return v;
}

void require_same_ambient(const GradedSubspace& s, const GradedSubspace& t) {
  if (s.layout_ptr() != t.layout_ptr()) throw std::invalid_argument("subspaces of different ambient algebras");
}

}  // namespace

GradedSubspace::GradedSubspace(std::shared_ptr<const GradedLayout> layout) : layout_(std::move(layout)) {}

GradedSubspace GradedSubspace::full(const PoissonColorAlgebra& a) {
  return lambda_part(a, [](const GroupElement&) { return true; });
}

GradedSubspace GradedSubspace::lambda_part(const PoissonColorAlgebra& a,
                                           const std::function<bool(const GroupElement&)>& pred) {
  GradedSubspace out(a.layout());
  for (const auto& [key, cols] : a.layout()->components) {
    if (!pred(key.first)) continue;
    const auto n = static_cast<Index>(cols.size());
    Matrix id = filled(n, n, a.zero());
    for (Index i = 0; i < n; ++i) id(i, i) = a.one();
    out.components_.emplace(key, std::move(id));
  }
  return out;
}

const GradedSubspace::Matrix* GradedSubspace::component(const ComponentKey& key) const {
  auto it = components_.find(key);
  return it == components_.end() ? nullptr : &it->second;
}

int GradedSubspace::dim() const {
  int d = 0;
  for (const auto& [key, m] : components_) d += static_cast<int>(m.rows());
  return d;
}

std::vector<Vector> GradedSubspace::spanning_vectors() const {
  std::vector<Vector> out;
  for (const auto& [key, m] : components_) {
    for (Index r = 0; r < m.rows(); ++r) out.push_back(from_row(*layout_, key, m, r));
  }
  return out;
}

void GradedSubspace::add_rows(const ComponentKey& key, const Matrix& rows) {
  if (rows.rows() == 0) return;
  auto it = components_.find(key);
  Matrix m = it == components_.end() ? rows : vstack(it->second, rows);
  rref(m);
  if (m.rows() == 0) {
    if (it != components_.end()) components_.erase(it);
    return;
  }
  components_[key] = std::move(m);
}

bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.layout_ != b.layout_ || a.components_.size() != b.components_.size()) return false;
  auto it = b.components_.begin();
  for (const auto& [key, m] : a.components_) {
    if (!(it->first == key) || !same_matrix(m, it->second)) return false;
    ++it;
  }
  return true;
}

std::map<ComponentKey, Vector> homogeneous_parts(const GradedLayout& layout, const Vector& v) {
  std::map<ComponentKey, Vector> parts;
  for (const auto& [k, c] : v.terms()) parts[layout.key_of[static_cast<std::size_t>(k)]].add_term(k, c);
  return parts;
}

GradedSubspace span_of(const PoissonColorAlgebra& a, const std::vector<Vector>& vectors) {
  const auto& layout = *a.layout();
  std::map<ComponentKey, std::vector<std::vector<CycScalar>>> rows;
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    auto parts = homogeneous_parts(layout, v);
    if (parts.size() != 1) throw InputError("span_of: vector " + format_vector(a, v) + " is not bihomogeneous");
    const auto& key = parts.begin()->first;
    rows[key].push_back(to_row(layout, key, v));
  }
  GradedSubspace out(a.layout());
  for (auto& [key, rs] : rows) {
    Matrix m(static_cast<Index>(rs.size()), static_cast<Index>(rs.front().size()));
    for (std::size_t r = 0; r < rs.size(); ++r) {
      for (std::size_t c = 0; c < rs[r].size(); ++c) m(static_cast<Index>(r), static_cast<Index>(c)) = rs[r][c];
    }
    out.add_rows(key, m);
  }
  return out;
}

bool contains(const GradedSubspace& s, const Vector& v) {
  const auto& layout = s.layout();
  for (const auto& [key, part] : homogeneous_parts(layout, v)) {
    const Matrix* m = s.component(key);
    if (m == nullptr) return false;
    for (const auto& x : reduce_against(*m, to_row(layout, key, part))) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

GradedSubspace subspace_sum(const GradedSubspace& s, const GradedSubspace& t) {
  require_same_ambient(s, t);
  GradedSubspace out = s;
  for (const auto& [key, m] : t.components()) out.add_rows(key, m);
  return out;
}

bool subspace_eq(const GradedSubspace& s, const GradedSubspace& t) {
  require_same_ambient(s, t);
  return s == t;
}

GradedSubspace intersect(const GradedSubspace& s, const GradedSubspace& t) {
  require_same_ambient(s, t);
  GradedSubspace out(s.layout_ptr());
  const CycScalar zero = field_zero(s.layout());
  for (const auto& [key, m] : s.components()) {
    const Matrix* other = t.component(key);
    if (other == nullptr) continue;
    out.add_rows(key, intersect_rows(m, *other, zero));
  }
  return out;
}

GradedSubspace complement_within(const GradedSubspace& s, const ComponentKey& key, const PoissonColorAlgebra& a) {
  GradedSubspace out(a.layout());
  auto it = a.layout()->components.find(key);
  if (it == a.layout()->components.end()) return out;
  const auto n = static_cast<Index>(it->second.size());
  std::vector<bool> pivot(static_cast<std::size_t>(n), false);
  if (const Matrix* m = s.component(key)) {
    for (auto p : pivot_columns(*m)) pivot[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Index> free_cols;
  for (Index c = 0; c < n; ++c) {
    if (!pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  Matrix rows = filled(static_cast<Index>(free_cols.size()), n, a.zero());
  for (std::size_t i = 0; i < free_cols.size(); ++i) rows(static_cast<Index>(i), free_cols[i]) = a.one();
  out.add_rows(key, rows);
  return out;
}

GradedSubspace solve_conditions(const PoissonColorAlgebra& a, const GradedSubspace& domain,
                                const std::vector<LinearMap>& maps, const GradedSubspace& target) {
  require_same_ambient(domain, target);
  const auto& layout = *a.layout();
  const CycScalar zero = a.zero();
  GradedSubspace out(a.layout());
  for (const auto& [key, rows] : domain.components()) {
    // residual[i] collects, for every map, the part of f(row_i) outside the target.
    std::vector<std::map<std::pair<std::size_t, int>, CycScalar>> residual(static_cast<std::size_t>(rows.rows()));
    std::map<std::pair<std::size_t, int>, Index> column_of;
    for (Index r = 0; r < rows.rows(); ++r) {
      const Vector x = from_row(layout, key, rows, r);
      for (std::size_t f = 0; f < maps.size(); ++f) {
        for (const auto& [pkey, part] : homogeneous_parts(layout, maps[f](x))) {
          std::vector<CycScalar> row = to_row(layout, pkey, part);
          if (const Matrix* t = target.component(pkey)) row = reduce_against(*t, std::move(row));
          const auto& cols = layout.components.at(pkey);
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c].is_zero()) continue;
            const std::pair<std::size_t, int> col{f, cols[c]};
            column_of.try_emplace(col, 0);
            residual[static_cast<std::size_t>(r)][col] = row[c];
          }
        }
      }
    }
    if (column_of.empty()) {
      out.add_rows(key, rows);
      continue;
    }
    Index next = 0;
    for (auto& [col, idx] : column_of) idx = next++;
    // Transposed system: unknowns are the combination coefficients of the rows.
    Matrix system = filled(next, rows.rows(), zero);
    for (Index r = 0; r < rows.rows(); ++r) {
      for (const auto& [col, c] : residual[static_cast<std::size_t>(r)]) system(column_of[col], r) = c;
    }
    const Matrix coeffs = null_space(system, zero);
    if (coeffs.rows() == 0) continue;
    Matrix combined = filled(coeffs.rows(), rows.cols(), zero);
    for (Index i = 0; i < coeffs.rows(); ++i) {
      for (Index r = 0; r < rows.rows(); ++r) {
        if (coeffs(i, r).is_zero()) continue;
        for (Index c = 0; c < rows.cols(); ++c) {
          if (!rows(r, c).is_zero()) combined(i, c) += coeffs(i, r) * rows(r, c);
        }
      }
    }
    out.add_rows(key, combined);
  }
  return out;
}

GradedSubspace annihilator_solve(const PoissonColorAlgebra& a, const AnnihilatorConstraints& constraints) {
  std::vector<int> js;
  if (constraints.basis_subset) {
    js = *constraints.basis_subset;
  } else {
    for (int j = 0; j < a.dim(); ++j) js.push_back(j);
  }
  std::vector<LinearMap> maps;
  for (int j : js) {
    const Vector e = a.basis_vector(j);
    if (constraints.bracket) maps.push_back([&a, e](const Vector& x) { return a.bracket(x, e); });
    if (constraints.left_mul) maps.push_back([&a, e](const Vector& x) { return a.mul(x, e); });
    if (constraints.right_mul) maps.push_back([&a, e](const Vector& x) { return a.mul(e, x); });
  }
  return solve_conditions(a, GradedSubspace::full(a), maps, GradedSubspace::zero(a));
}

}  // namespace pck
