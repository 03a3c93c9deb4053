#include "pck/grading.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pck {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("group coordinate overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("bi-character exponent overflow");
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_rank(const GroupSpec& spec, const GroupElement& e) {
  if (e.coords.size() != spec.rank()) {
    throw std::invalid_argument("group element has " + std::to_string(e.coords.size()) +
                                " coordinates, expected " + std::to_string(spec.rank()));
  }
}

}  // namespace

void GroupSpec::validate() const {
  if (free_rank < 0) throw std::invalid_argument("negative free rank");
  for (auto m : torsion) {
    if (m < 2) throw std::invalid_argument("torsion orders must be >= 2");
  }
  if (!generator_names.empty() && generator_names.size() != rank()) {
    throw std::invalid_argument("generator name count does not match group rank");
  }
}

GroupElement GroupSpec::canonical(GroupElement e) const {
  require_rank(*this, e);
  for (std::size_t i = free_rank; i < rank(); ++i) e.coords[i] = mod(e.coords[i], torsion_order(i));
  return e;
}

bool GroupSpec::is_canonical(const GroupElement& e) const {
  if (e.coords.size() != rank()) return false;
  for (std::size_t i = free_rank; i < rank(); ++i) {
    if (e.coords[i] < 0 || e.coords[i] >= torsion_order(i)) return false;
  }
  return true;
}

std::string GroupSpec::generator_name(std::size_t i) const {
  if (i < generator_names.size()) return generator_names[i];
  return "g" + std::to_string(i);
}

GroupElement group_compose(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  require_rank(spec, a);
  require_rank(spec, b);
  GroupElement out{std::vector<std::int64_t>(spec.rank())};
  for (std::size_t i = 0; i < spec.rank(); ++i) out.coords[i] = checked_add(a.coords[i], b.coords[i]);
  return spec.canonical(std::move(out));
}

GroupElement group_inverse(const GroupSpec& spec, const GroupElement& a) {
  require_rank(spec, a);
  GroupElement out = a;
  for (auto& c : out.coords) c = checked_mul(c, -1);
  return spec.canonical(std::move(out));
}

std::string format_multiplicative(const GroupSpec& spec, const GroupElement& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (e.coords[i] == 0) continue;
    if (!first) os << '*';
    os << spec.generator_name(i);
    if (e.coords[i] != 1) os << '^' << e.coords[i];
    first = false;
  }
  return first ? "1" : os.str();
}

GroupElement parse_multiplicative(const GroupSpec& spec, const std::string& text) {
  GroupElement out = spec.identity();
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s == "1") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('*', pos), s.size());
    const std::string factor = s.substr(pos, end - pos);
    const std::size_t caret = factor.find('^');
    const std::string name = factor.substr(0, caret);
    std::int64_t power = 1;
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        power = std::stoll(factor.substr(caret + 1), &used);
        if (used != factor.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in group literal '" + text + "'");
      }
    }
    bool found = false;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
      if (spec.generator_name(i) == name) {
        out.coords[i] = checked_add(out.coords[i], power);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown generator '" + name + "' in '" + text + "'");
    pos = end + 1;
  }
  return spec.canonical(std::move(out));
}

GroupSpec product_group(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec out;
  out.free_rank = a.free_rank + b.free_rank;
  out.torsion = a.torsion;
  out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
  std::vector<std::string> names;
  for (int i = 0; i < a.free_rank; ++i) names.push_back(a.generator_name(i));
  for (int i = 0; i < b.free_rank; ++i) names.push_back(b.generator_name(i));
  for (std::size_t i = a.free_rank; i < a.rank(); ++i) names.push_back(a.generator_name(i));
  for (std::size_t i = b.free_rank; i < b.rank(); ++i) names.push_back(b.generator_name(i));
  // Disambiguate clashing names by suffixing the later occurrence.
  for (std::size_t i = 0; i < names.size(); ++i) {
    while (std::find(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(i), names[i]) !=
           names.begin() + static_cast<std::ptrdiff_t>(i)) {
      names[i] += "'";
    }
  }
  out.generator_names = std::move(names);
  return out;
}

namespace {

// Position of generator i of the left/right factor inside the product group.
std::size_t left_slot(const GroupSpec& a, const GroupSpec& b, std::size_t i) {
  if (i < static_cast<std::size_t>(a.free_rank)) return i;
  return i + static_cast<std::size_t>(b.free_rank);
}

std::size_t right_slot(const GroupSpec& a, const GroupSpec& b, std::size_t i) {
  if (i < static_cast<std::size_t>(b.free_rank)) return static_cast<std::size_t>(a.free_rank) + i;
  return a.rank() + i;
}

}  // namespace

GroupElement embed_left(const GroupSpec& a, const GroupSpec& b, const GroupElement& x) {
  require_rank(a, x);
  GroupElement out{std::vector<std::int64_t>(a.rank() + b.rank(), 0)};
  for (std::size_t i = 0; i < a.rank(); ++i) out.coords[left_slot(a, b, i)] = x.coords[i];
  return out;
}

GroupElement embed_right(const GroupSpec& a, const GroupSpec& b, const GroupElement& y) {
  require_rank(b, y);
  GroupElement out{std::vector<std::int64_t>(a.rank() + b.rank(), 0)};
  for (std::size_t i = 0; i < b.rank(); ++i) out.coords[right_slot(a, b, i)] = y.coords[i];
  return out;
}

std::vector<GroupElement> enumerate_window(const GroupSpec& spec, int window) {
  std::vector<GroupElement> out;
  GroupElement cur = spec.identity();
  for (int i = 0; i < spec.free_rank; ++i) cur.coords[i] = -window;
  if (spec.rank() == 0) return {cur};
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < spec.rank(); ++i) {
      const std::int64_t hi = spec.is_torsion_generator(i) ? spec.torsion_order(i) - 1 : window;
      const std::int64_t lo = spec.is_torsion_generator(i) ? 0 : -window;
      if (cur.coords[i] < hi) {
        ++cur.coords[i];
        break;
      }
      cur.coords[i] = lo;
    }
    if (i == spec.rank()) break;
  }
  return out;
}

std::int64_t BiCharacter::exponent(const GroupElement& g, const GroupElement& h) const {
  const std::int64_t n = cyclotomic_order;
  if (g.coords.size() != matrix.size() || h.coords.size() != matrix.size()) {
    throw std::invalid_argument("bi-character applied to element of wrong rank");
  }
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (g.coords[i] == 0) continue;
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (h.coords[j] == 0 || matrix[i][j] == 0) continue;
      const std::int64_t term = checked_mul(checked_mul(mod(g.coords[i], n), mod(matrix[i][j], n)),
                                            mod(h.coords[j], n));
      acc = mod(checked_add(acc, mod(term, n)), n);
    }
  }
  return acc;
}

BiCharacter product_bicharacter(const GroupSpec& ga, const BiCharacter& a, const GroupSpec& gb,
                                const BiCharacter& b) {
  if (a.cyclotomic_order != b.cyclotomic_order) {
    throw std::invalid_argument("bi-characters of different cyclotomic orders");
  }
  const std::size_t n = ga.rank() + gb.rank();
  BiCharacter out{a.cyclotomic_order, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0))};
  for (std::size_t i = 0; i < ga.rank(); ++i) {
    for (std::size_t j = 0; j < ga.rank(); ++j) out.matrix[left_slot(ga, gb, i)][left_slot(ga, gb, j)] = a.matrix[i][j];
  }
  for (std::size_t i = 0; i < gb.rank(); ++i) {
    for (std::size_t j = 0; j < gb.rank(); ++j) {
      out.matrix[right_slot(ga, gb, i)][right_slot(ga, gb, j)] = b.matrix[i][j];
    }
  }
  return out;
}

CycScalar bichar_eval(const BiCharacter& b, const GroupElement& g, const GroupElement& h) {
  return CycScalar::root_of_unity(b.cyclotomic_order, b.exponent(g, h));
}

ValidationReport bichar_validate(const GroupSpec& spec, const BiCharacter& b) {
  ValidationReport report;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    report.fail(std::string("group: ") + e.what());
    return report;
  }
  const std::int64_t n = b.cyclotomic_order;
  if (n < 1) {
    report.fail("cyclotomic order must be positive");
    return report;
  }
  const std::size_t r = spec.rank();
  if (b.matrix.size() != r) {
    report.fail("matrix has " + std::to_string(b.matrix.size()) + " rows, group rank is " + std::to_string(r));
    return report;
  }
  for (const auto& row : b.matrix) {
    if (row.size() != r) {
      report.fail("matrix is not square over the group generators");
      return report;
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      if (mod(checked_add(b.matrix[i][j], b.matrix[j][i]), n) != 0) {
        std::ostringstream os;
        os << "axiom (i): B[" << i << "][" << j << "] + B[" << j << "][" << i << "] = "
           << b.matrix[i][j] + b.matrix[j][i] << " is not 0 mod " << n;
        report.fail(os.str());
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!spec.is_torsion_generator(i)) continue;
    const std::int64_t m = spec.torsion_order(i);
    for (std::size_t j = 0; j < r; ++j) {
      if (mod(checked_mul(m, b.matrix[i][j]), n) != 0) {
        std::ostringstream os;
        os << "well-definedness: " << m << "*B[" << i << "][" << j << "] is not 0 mod " << n;
        report.fail(os.str());
      }
      if (j != i && mod(checked_mul(m, b.matrix[j][i]), n) != 0) {
        std::ostringstream os;
        os << "well-definedness: " << m << "*B[" << j << "][" << i << "] is not 0 mod " << n;
        report.fail(os.str());
      }
    }
  }
  if (!report.valid) return report;

  // Spot checks through the evaluation path itself.
  const auto elems = enumerate_window(spec, 2);
  const std::size_t cap = std::min<std::size_t>(elems.size(), 48);
  const CycScalar one(static_cast<int>(n), Rational(1));
  int spot_failures = 0;
  const auto spot_fail = [&](const std::string& what) {
    if (++spot_failures <= 20) report.fail(what);
  };
  for (std::size_t a = 0; a < elems.size(); ++a) {
    const CycScalar self = bichar_eval(b, elems[a], elems[a]);
    if (!(self == one || self == -one)) spot_fail("eps(g,g) not +-1 at element #" + std::to_string(a));
    if (!bichar_eval(b, elems[a], spec.identity()).is_one() || !bichar_eval(b, spec.identity(), elems[a]).is_one()) {
      spot_fail("eps(g,0) != 1 at element #" + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < cap; ++a) {
    for (std::size_t c = 0; c < cap; ++c) {
      const CycScalar gh = bichar_eval(b, elems[a], elems[c]);
      if (!(gh * bichar_eval(b, elems[c], elems[a])).is_one()) {
        spot_fail("axiom (i) fails on sampled pair");
      }
      const GroupElement sum = group_compose(spec, elems[a], elems[c]);
      for (std::size_t f = 0; f < cap; ++f) {
        if (!(bichar_eval(b, sum, elems[f]) == bichar_eval(b, elems[a], elems[f]) * bichar_eval(b, elems[c], elems[f]))) {
          spot_fail("axiom (ii) fails on sampled triple");
        }
        if (!(bichar_eval(b, elems[f], sum) == bichar_eval(b, elems[f], elems[a]) * bichar_eval(b, elems[f], elems[c]))) {
          spot_fail("axiom (iii) fails on sampled triple");
        }
      }
    }
  }
  return report;
}

}  // namespace pck
