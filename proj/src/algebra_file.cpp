#include "pck/algebra_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pck {

using nlohmann::json;

const char* to_string(LoadErrorKind kind) {
  switch (kind) {
    case LoadErrorKind::syntax: return "syntax";
    case LoadErrorKind::schema: return "schema";
    case LoadErrorKind::unknown_name: return "unknown_name";
    case LoadErrorKind::non_homogeneous: return "non_homogeneous";
    case LoadErrorKind::bicharacter: return "bicharacter";
    case LoadErrorKind::axiom_failure: return "axiom_failure";
  }
  return "unknown";
}

LoadError::LoadError(LoadErrorKind kind, std::string location, const std::string& message,
                     std::shared_ptr<const AxiomReport> axioms)
    : InputError(std::string(to_string(kind)) + " error at " + location + ": " + message),
      kind_(kind),
      location_(std::move(location)),
      axioms_(std::move(axioms)) {}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw LoadError(LoadErrorKind::schema, where, what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<std::int64_t>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  return j;
}

GroupSpec parse_group(const json& j, const std::string& where) {
  GroupSpec spec;
  spec.free_rank = static_cast<int>(as_int(field(j, "free_rank", where), where + "/free_rank"));
  const auto& tors = as_array(field(j, "torsion", where), where + "/torsion");
  for (std::size_t i = 0; i < tors.size(); ++i) spec.torsion.push_back(as_int(tors[i], where + "/torsion/" + std::to_string(i)));
  if (auto it = j.find("generators"); it != j.end()) {
    const auto& names = as_array(*it, where + "/generators");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].is_string()) schema_error(where + "/generators/" + std::to_string(i), "expected a string");
      spec.generator_names.push_back(names[i].get<std::string>());
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    schema_error(where, e.what());
  }
  return spec;
}

json group_to_json(const GroupSpec& spec) {
  json j{{"free_rank", spec.free_rank}, {"torsion", spec.torsion}};
  if (!spec.generator_names.empty()) j["generators"] = spec.generator_names;
  return j;
}

GroupElement parse_element(const GroupSpec& spec, const json& j, const std::string& where) {
  const auto& arr = as_array(j, where);
  if (arr.size() != spec.rank()) {
    schema_error(where, "element has " + std::to_string(arr.size()) + " coordinates, group rank is " +
                            std::to_string(spec.rank()));
  }
  GroupElement e;
  for (std::size_t i = 0; i < arr.size(); ++i) e.coords.push_back(as_int(arr[i], where + "/" + std::to_string(i)));
  return spec.canonical(std::move(e));
}

CycScalar parse_coeff(const json& j, int order, const std::string& where) {
  try {
    if (j.is_number_integer()) return CycScalar(order, Rational(j.get<long>()));
    if (j.is_string()) return CycScalar::parse(j.get<std::string>(), order);
  } catch (const std::exception& e) {
    schema_error(where, e.what());
  }
  schema_error(where, "coefficient must be a scalar literal string or an integer");
}

void parse_tensor(const json& j, const std::string& where, const std::map<std::string, int>& index,
                  const AlgebraData& d, StructureTensor& out) {
  const auto& arr = as_array(j, where);
  const auto lookup = [&](const json& name, const std::string& at) {
    if (!name.is_string()) schema_error(at, "expected a basis name");
    auto it = index.find(name.get<std::string>());
    if (it == index.end()) throw LoadError(LoadErrorKind::unknown_name, at, "unknown basis name '" + name.get<std::string>() + "'");
    return it->second;
  };
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string at = where + "/" + std::to_string(n);
    const int left = lookup(field(arr[n], "left", at), at + "/left");
    const int right = lookup(field(arr[n], "right", at), at + "/right");
    if (out.get(left, right)) schema_error(at, "duplicate entry for this basis pair");
    const auto& result = as_array(field(arr[n], "result", at), at + "/result");
    Vector v;
    std::optional<ComponentKey> key;
    for (std::size_t t = 0; t < result.size(); ++t) {
      const std::string tat = at + "/result/" + std::to_string(t);
      const int k = lookup(field(result[t], "basis", tat), tat + "/basis");
      const auto& bk = d.basis[static_cast<std::size_t>(k)];
      ComponentKey this_key{bk.ldeg, bk.gdeg};
      if (key && !(*key == this_key)) {
        throw LoadError(LoadErrorKind::non_homogeneous, tat, "result terms have different bidegrees");
      }
      key = std::move(this_key);
      v.add_term(k, parse_coeff(field(result[t], "coeff", tat), d.scalar_order, tat + "/coeff"));
    }
    out.set(left, right, std::move(v));
  }
}

json tensor_to_json(const PoissonColorAlgebra& a, const StructureTensor& t) {
  json arr = json::array();
  for (const auto& [ij, v] : t.entries()) {
    json result = json::array();
    for (const auto& [k, c] : v.terms()) result.push_back({{"basis", a.basis(k).name}, {"coeff", c.to_literal()}});
    arr.push_back({{"left", a.basis(ij.first).name}, {"right", a.basis(ij.second).name}, {"result", result}});
  }
  return arr;
}

}  // namespace

PoissonColorAlgebra parse_algebra_unchecked(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw LoadError(LoadErrorKind::syntax, "byte " + std::to_string(e.byte), e.what());
  }
  const auto& version = field(j, "pck_format", "");
  if (as_int(version, "/pck_format") != kFormatVersion) schema_error("/pck_format", "unsupported format version");

  AlgebraData d;
  const auto& name = field(j, "name", "");
  if (!name.is_string()) schema_error("/name", "expected a string");
  d.name = name.get<std::string>();
  d.scalar_order = static_cast<int>(as_int(field(j, "scalar_order", ""), "/scalar_order"));
  if (d.scalar_order < 1) schema_error("/scalar_order", "must be positive");
  d.g_spec = parse_group(field(j, "group_g", ""), "/group_g");
  d.lambda_spec = parse_group(field(j, "group_lambda", ""), "/group_lambda");

  const auto& bc = field(j, "bicharacter", "");
  d.bichar.cyclotomic_order = static_cast<int>(as_int(field(bc, "cyclotomic_order", "/bicharacter"), "/bicharacter/cyclotomic_order"));
  const auto& rows = as_array(field(bc, "matrix", "/bicharacter"), "/bicharacter/matrix");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string at = "/bicharacter/matrix/" + std::to_string(r);
    std::vector<std::int64_t> row;
    const auto& cells = as_array(rows[r], at);
    for (std::size_t c = 0; c < cells.size(); ++c) row.push_back(as_int(cells[c], at + "/" + std::to_string(c)));
    d.bichar.matrix.push_back(std::move(row));
  }

  std::map<std::string, int> index;
  const auto& basis = as_array(field(j, "basis", ""), "/basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string at = "/basis/" + std::to_string(i);
    const auto& bname = field(basis[i], "name", at);
    if (!bname.is_string()) schema_error(at + "/name", "expected a string");
    BasisDescriptor b{static_cast<int>(i), bname.get<std::string>(),
                      parse_element(d.g_spec, field(basis[i], "gdeg", at), at + "/gdeg"),
                      parse_element(d.lambda_spec, field(basis[i], "ldeg", at), at + "/ldeg")};
    if (!index.emplace(b.name, b.index).second) schema_error(at + "/name", "duplicate basis name '" + b.name + "'");
    d.basis.push_back(std::move(b));
  }
  parse_tensor(field(j, "product", ""), "/product", index, d, d.product);
  parse_tensor(field(j, "bracket", ""), "/bracket", index, d, d.bracket);
  if (auto it = j.find("flags"); it != j.end()) {
    if (auto c = it->find("check_commutative"); c != it->end()) {
      if (!c->is_boolean()) schema_error("/flags/check_commutative", "expected a boolean");
      d.flags.check_commutative = c->get<bool>();
    }
  }
  try {
    return PoissonColorAlgebra(std::move(d));
  } catch (const InputError& e) {
    schema_error("", e.what());
  }
}

void require_valid(const PoissonColorAlgebra& a, const CheckOptions& opts) {
  const ValidationReport bc = bichar_validate(a.g_spec(), a.bichar());
  if (!bc.valid) throw LoadError(LoadErrorKind::bicharacter, "/bicharacter", bc.failures.front());
  auto report = std::make_shared<AxiomReport>(validate_all(a, opts));
  if (const AxiomResult* bad = report->first_failure()) {
    std::string where = "/" + bad->axiom;
    std::ostringstream msg;
    msg << bad->axiom << " fails (" << bad->violations << " violations)";
    for (std::size_t c = 0; c < bad->counterexamples.size(); ++c) {
      const auto& names = bad->counterexamples[c].basis;
      msg << (c ? ", (" : " at (");
      for (std::size_t i = 0; i < names.size(); ++i) msg << (i ? "," : "") << names[i];
      msg << ")";
    }
    throw LoadError(LoadErrorKind::axiom_failure, where, msg.str(), std::move(report));
  }
}

PoissonColorAlgebra parse_algebra(std::string_view text, const CheckOptions& opts) {
  PoissonColorAlgebra a = parse_algebra_unchecked(text);
  require_valid(a, opts);
  return a;
}

json algebra_to_json(const PoissonColorAlgebra& a) {
  json basis = json::array();
  for (const auto& b : a.basis()) basis.push_back({{"name", b.name}, {"gdeg", b.gdeg.coords}, {"ldeg", b.ldeg.coords}});
  json matrix = json::array();
  for (const auto& row : a.bichar().matrix) matrix.push_back(row);
  return json{{"pck_format", kFormatVersion},
              {"name", a.name()},
              {"scalar_order", a.scalar_order()},
              {"group_g", group_to_json(a.g_spec())},
              {"group_lambda", group_to_json(a.lambda_spec())},
              {"bicharacter", {{"cyclotomic_order", a.bichar().cyclotomic_order}, {"matrix", matrix}}},
              {"basis", basis},
              {"product", tensor_to_json(a, a.product_tensor())},
              {"bracket", tensor_to_json(a, a.bracket_tensor())},
              {"flags", {{"check_commutative", a.flags().check_commutative}}}};
}

std::string serialize_algebra(const PoissonColorAlgebra& a) { return algebra_to_json(a).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pck
