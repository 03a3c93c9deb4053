#include "pck/algebra.hpp"

#include <set>
#include <sstream>

#include "pck/errors.hpp"

namespace pck {

Vector Vector::basis(int index, int order) {
  Vector v;
  v.terms_.emplace(index, CycScalar(order, Rational(1)));
  return v;
}

CycScalar Vector::coeff(int index, int order) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? CycScalar(order) : it->second;
}

void Vector::add_term(int index, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Vector& Vector::operator+=(const Vector& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

Vector Vector::scaled(const CycScalar& c) const {
  Vector out;
  if (c.is_zero()) return out;
  for (const auto& [i, x] : terms_) out.terms_.emplace(i, x * c);
  return out;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

void StructureTensor::set(int i, int j, Vector v) {
  if (v.is_zero()) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = std::move(v);
  }
}

void StructureTensor::add(int i, int j, int k, const CycScalar& c) {
  Vector& v = entries_[{i, j}];
  v.add_term(k, c);
  if (v.is_zero()) entries_.erase({i, j});
}

const Vector* StructureTensor::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

void check_element(const GroupSpec& spec, const GroupElement& e, const std::string& where) {
  if (!spec.is_canonical(e)) {
    throw InputError(where + ": degree is not a canonical element of its group");
  }
}

void check_tensor(const AlgebraData& d, const StructureTensor& t, const std::string& label) {
  const int n = static_cast<int>(d.basis.size());
  for (const auto& [ij, v] : t.entries()) {
    if (ij.first < 0 || ij.first >= n || ij.second < 0 || ij.second >= n) {
      throw InputError(label + ": entry refers to a basis index out of range");
    }
    for (const auto& [k, c] : v.terms()) {
      if (k < 0 || k >= n) throw InputError(label + ": result refers to a basis index out of range");
      if (c.order() != d.scalar_order) throw InputError(label + ": coefficient in the wrong scalar field");
    }
  }
}

}  // namespace

PoissonColorAlgebra::PoissonColorAlgebra(AlgebraData data) : data_(std::move(data)) {
  const auto& d = data_;
  if (d.scalar_order < 1) throw InputError("scalar_order must be positive");
  try {
    d.g_spec.validate();
    d.lambda_spec.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("group spec: ") + e.what());
  }
  if (d.bichar.cyclotomic_order < 1 || d.scalar_order % d.bichar.cyclotomic_order != 0) {
    throw InputError("bi-character order must divide scalar_order");
  }
  if (d.bichar.matrix.size() != d.g_spec.rank()) {
    throw InputError("bi-character matrix size does not match the rank of G");
  }
  for (const auto& row : d.bichar.matrix) {
    if (row.size() != d.g_spec.rank()) throw InputError("bi-character matrix is not square");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < d.basis.size(); ++i) {
    const auto& b = d.basis[i];
    if (b.index != static_cast<int>(i)) throw InputError("basis indices must run 0..dim-1 in order");
    if (b.name.empty()) throw InputError("basis element " + std::to_string(i) + " has an empty name");
    if (!names.insert(b.name).second) throw InputError("duplicate basis name '" + b.name + "'");
    check_element(d.g_spec, b.gdeg, "basis '" + b.name + "' gdeg");
    check_element(d.lambda_spec, b.ldeg, "basis '" + b.name + "' ldeg");
  }
  check_tensor(d, d.product, "product");
  check_tensor(d, d.bracket, "bracket");

  auto layout = std::make_shared<GradedLayout>();
  layout->scalar_order = d.scalar_order;
  layout->dim = dim();
  for (const auto& b : d.basis) {
    ComponentKey key{b.ldeg, b.gdeg};
    auto& members = layout->components[key];
    layout->position.push_back(static_cast<int>(members.size()));
    members.push_back(b.index);
    layout->key_of.push_back(std::move(key));
  }
  layout_ = std::move(layout);

  epsilon_table_.reserve(static_cast<std::size_t>(dim() * dim()));
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) epsilon_table_.push_back(epsilon(d.basis[i].gdeg, d.basis[j].gdeg));
  }
}

std::optional<int> PoissonColorAlgebra::index_of(const std::string& name) const {
  for (const auto& b : data_.basis) {
    if (b.name == name) return b.index;
  }
  return std::nullopt;
}

CycScalar PoissonColorAlgebra::epsilon(const GroupElement& g, const GroupElement& h) const {
  const std::int64_t scale = data_.scalar_order / data_.bichar.cyclotomic_order;
  return CycScalar::root_of_unity(data_.scalar_order, data_.bichar.exponent(g, h) * scale);
}

Vector PoissonColorAlgebra::mul(int i, int j) const {
  const Vector* v = data_.product.get(i, j);
  return v ? *v : Vector{};
}

Vector PoissonColorAlgebra::bracket(int i, int j) const {
  const Vector* v = data_.bracket.get(i, j);
  return v ? *v : Vector{};
}

Vector PoissonColorAlgebra::contract(const StructureTensor& t, const Vector& x, const Vector& y) const {
  Vector out;
  for (const auto& [i, xi] : x.terms()) {
    for (const auto& [j, yj] : y.terms()) {
      const Vector* v = t.get(i, j);
      if (v == nullptr) continue;
      out += v->scaled(xi * yj);
    }
  }
  return out;
}

std::string format_vector(const PoissonColorAlgebra& a, const Vector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    const std::string lit = c.to_literal();
    if (lit == "1") {
      os << a.basis(i).name;
    } else if (c.coeffs().size() > 1 && lit.find(' ') != std::string::npos) {
      os << '(' << lit << ")*" << a.basis(i).name;
    } else {
      os << lit << '*' << a.basis(i).name;
    }
  }
  return os.str();
}

}  // namespace pck
