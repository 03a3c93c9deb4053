#ifndef PCK_GRADING_HPP
#define PCK_GRADING_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pck/cyclotomic.hpp"

namespace pck {

/// A group element as coordinates over the generators of its GroupSpec:
/// free coordinates first, then torsion coordinates in [0, m_i).
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Z^r x Z_{m_1} x ... x Z_{m_s}. The same type describes the additive
/// color group G and the multiplicatively written grading group Lambda.
struct GroupSpec {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;
  /// Optional display names, one per generator; empty means defaults.
  std::vector<std::string> generator_names;

  std::size_t rank() const { return static_cast<std::size_t>(free_rank) + torsion.size(); }
  bool is_torsion_generator(std::size_t i) const { return i >= static_cast<std::size_t>(free_rank); }
  std::int64_t torsion_order(std::size_t i) const { return torsion[i - static_cast<std::size_t>(free_rank)]; }

  /// Throws std::invalid_argument for negative rank or torsion orders < 2.
  void validate() const;

  GroupElement identity() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }
  GroupElement canonical(GroupElement e) const;
  bool is_canonical(const GroupElement& e) const;

  /// Name of generator i, falling back to "g<i>".
  std::string generator_name(std::size_t i) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

GroupElement group_compose(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupSpec& spec, const GroupElement& a);
inline bool is_identity(const GroupElement& e) {
  for (auto c : e.coords) {
    if (c != 0) return false;
  }
  return true;
}

/// Multiplicative notation using generator names, e.g. "z^-1", "s*t^2", "1".
std::string format_multiplicative(const GroupSpec& spec, const GroupElement& e);
/// Inverse of format_multiplicative; also accepts bare "z" for z^1.
GroupElement parse_multiplicative(const GroupSpec& spec, const std::string& text);

/// Cartesian product; coordinates ordered [free a, free b, torsion a, torsion b].
GroupSpec product_group(const GroupSpec& a, const GroupSpec& b);
GroupElement embed_left(const GroupSpec& a, const GroupSpec& b, const GroupElement& x);
GroupElement embed_right(const GroupSpec& a, const GroupSpec& b, const GroupElement& y);

/// All elements with torsion coordinates fully enumerated and free
/// coordinates in [-window, window].
std::vector<GroupElement> enumerate_window(const GroupSpec& spec, int window);

/// eps(g, h) = zeta_N^(g^T B h).
struct BiCharacter {
  int cyclotomic_order = 1;
  std::vector<std::vector<std::int64_t>> matrix;

  /// g^T B h reduced into [0, N).
  std::int64_t exponent(const GroupElement& g, const GroupElement& h) const;

  friend bool operator==(const BiCharacter&, const BiCharacter&) = default;
};

/// Block-diagonal bi-character on product_group(a, b).
BiCharacter product_bicharacter(const GroupSpec& ga, const BiCharacter& a, const GroupSpec& gb,
                                const BiCharacter& b);

CycScalar bichar_eval(const BiCharacter& b, const GroupElement& g, const GroupElement& h);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    valid = false;
    failures.push_back(std::move(what));
  }
};

/// Checks shape, (B + B^T) = 0 mod N and torsion well-definedness, then
/// spot-verifies axioms (i)-(iii) and eps(g,g) = +-1 on the enumerated window.
ValidationReport bichar_validate(const GroupSpec& spec, const BiCharacter& b);

}  // namespace pck

#endif  // PCK_GRADING_HPP
