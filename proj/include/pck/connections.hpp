#ifndef PCK_CONNECTIONS_HPP
#define PCK_CONNECTIONS_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pck/algebra.hpp"

namespace pck {

/// Supports of both gradings. Element lists are ordered by first
/// appearance in the basis, which makes every report deterministic.
struct SupportData {
  GroupSpec lambda_spec;
  GroupSpec g_spec;
  std::vector<GroupElement> sigma_lambda;  // lambda != 1 with P_lambda != 0
  std::vector<GroupElement> sigma_g;       // g != 0 with P_g != 0
  std::map<GroupElement, std::vector<GroupElement>> lambda_g;  // g -> {lambda != 1 : P_{lambda,g} != 0}

  bool in_support(const GroupElement& l) const;
  /// Position of l in sigma_lambda; throws std::out_of_range if absent.
  std::size_t position(const GroupElement& l) const;

 private:
  friend SupportData compute_supports(const PoissonColorAlgebra& a);
  std::set<GroupElement> members_;
};

SupportData compute_supports(const PoissonColorAlgebra& a);

bool check_symmetric_support(const SupportData& s);

/// [l_1, ..., l_k]: l_1 is the source, every partial product stays in the
/// support, the full product is the target or its inverse.
struct WitnessChain {
  std::vector<GroupElement> elements;

  /// The partial products l_1, l_1 l_2, ..., l_1 ... l_k.
  std::vector<GroupElement> partial_products(const GroupSpec& spec) const;
};

/// Checks the three defining conditions of a connection from source to target.
bool is_valid_witness(const SupportData& s, const WitnessChain& chain, const GroupElement& source,
                      const GroupElement& target);

/// Shortest connection from l to m by breadth-first search over partial
/// products, or nullopt. Throws PreconditionError if l or m is outside the
/// support.
std::optional<WitnessChain> is_connected(const SupportData& s, const GroupElement& l, const GroupElement& m);

struct ConnectionClasses {
  /// Classes in order of their first element; members in support order.
  std::vector<std::vector<GroupElement>> classes;
  /// Representative (first element) to every other member of its class.
  std::map<std::pair<GroupElement, GroupElement>, WitnessChain> witnesses;

  std::size_t class_of(const GroupElement& l) const;
};

/// Throws PreconditionError when the support is not symmetric.
ConnectionClasses connection_classes(const SupportData& s);

}  // namespace pck

#endif  // PCK_CONNECTIONS_HPP
