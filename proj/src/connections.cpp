#include "pck/connections.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "pck/errors.hpp"

namespace pck {

bool SupportData::in_support(const GroupElement& l) const { return members_.count(l) != 0; }

std::size_t SupportData::position(const GroupElement& l) const {
  auto it = std::find(sigma_lambda.begin(), sigma_lambda.end(), l);
  if (it == sigma_lambda.end()) throw std::out_of_range("element not in the Lambda-support");
  return static_cast<std::size_t>(it - sigma_lambda.begin());
}

SupportData compute_supports(const PoissonColorAlgebra& a) {
  SupportData s;
  s.lambda_spec = a.lambda_spec();
  s.g_spec = a.g_spec();
  std::set<GroupElement> seen_g;
  for (const auto& b : a.basis()) {
    if (!is_identity(b.ldeg) && s.members_.insert(b.ldeg).second) s.sigma_lambda.push_back(b.ldeg);
    if (!is_identity(b.gdeg) && seen_g.insert(b.gdeg).second) s.sigma_g.push_back(b.gdeg);
    if (!is_identity(b.ldeg)) {
      auto& ls = s.lambda_g[b.gdeg];
      if (std::find(ls.begin(), ls.end(), b.ldeg) == ls.end()) ls.push_back(b.ldeg);
    }
  }
  return s;
}

bool check_symmetric_support(const SupportData& s) {
  for (const auto& l : s.sigma_lambda) {
    if (!s.in_support(group_inverse(s.lambda_spec, l))) return false;
  }
  return true;
}

std::vector<GroupElement> WitnessChain::partial_products(const GroupSpec& spec) const {
  std::vector<GroupElement> out;
  GroupElement acc = spec.identity();
  for (const auto& l : elements) {
    acc = group_compose(spec, acc, l);
    out.push_back(acc);
  }
  return out;
}

bool is_valid_witness(const SupportData& s, const WitnessChain& chain, const GroupElement& source,
                      const GroupElement& target) {
  if (chain.elements.empty() || !(chain.elements.front() == source)) return false;
  for (const auto& l : chain.elements) {
    if (!s.in_support(l)) return false;
  }
  const auto partial = chain.partial_products(s.lambda_spec);
  for (const auto& p : partial) {
    if (!s.in_support(p)) return false;
  }
  const GroupElement& last = partial.back();
  return last == target || last == group_inverse(s.lambda_spec, target);
}

namespace {

// BFS from `source`; returns parent links (node -> (previous node, factor)).
std::map<GroupElement, std::pair<GroupElement, GroupElement>> explore(const SupportData& s, const GroupElement& source,
                                                                       const std::function<bool(const GroupElement&)>& stop,
                                                                       std::optional<GroupElement>& hit) {
  std::map<GroupElement, std::pair<GroupElement, GroupElement>> parent;
  std::deque<GroupElement> queue{source};
  parent.emplace(source, std::make_pair(source, source));
  while (!queue.empty()) {
    GroupElement node = std::move(queue.front());
    queue.pop_front();
    if (stop(node)) {
      hit = node;
      return parent;
    }
    for (const auto& t : s.sigma_lambda) {
      GroupElement next = group_compose(s.lambda_spec, node, t);
      if (!s.in_support(next) || parent.count(next) != 0) continue;
      parent.emplace(next, std::make_pair(node, t));
      queue.push_back(std::move(next));
    }
  }
  return parent;
}

WitnessChain chain_to(const std::map<GroupElement, std::pair<GroupElement, GroupElement>>& parent,
                      const GroupElement& source, GroupElement node) {
  std::vector<GroupElement> factors;
  while (!(node == source)) {
    const auto& [prev, factor] = parent.at(node);
    factors.push_back(factor);
    node = prev;
  }
  factors.push_back(source);
  std::reverse(factors.begin(), factors.end());
  return WitnessChain{std::move(factors)};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  // The smaller root wins so that roots are first-appearance positions.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<WitnessChain> is_connected(const SupportData& s, const GroupElement& l, const GroupElement& m) {
  if (!s.in_support(l) || !s.in_support(m)) throw PreconditionError("is_connected: argument outside the Lambda-support");
  const GroupElement m_inv = group_inverse(s.lambda_spec, m);
  std::optional<GroupElement> hit;
  const auto parent = explore(s, l, [&](const GroupElement& x) { return x == m || x == m_inv; }, hit);
  if (!hit) return std::nullopt;
  return chain_to(parent, l, *hit);
}

std::size_t ConnectionClasses::class_of(const GroupElement& l) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::find(classes[i].begin(), classes[i].end(), l) != classes[i].end()) return i;
  }
  throw std::out_of_range("element belongs to no connection class");
}

ConnectionClasses connection_classes(const SupportData& s) {
  if (!check_symmetric_support(s)) throw PreconditionError("connection classes require a symmetric Lambda-support");
  const std::size_t n = s.sigma_lambda.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<GroupElement> none;
    const auto reached = explore(s, s.sigma_lambda[i], [](const GroupElement&) { return false; }, none);
    for (const auto& [node, link] : reached) {
      uf.unite(i, s.position(node));
      uf.unite(i, s.position(group_inverse(s.lambda_spec, node)));
    }
  }
  ConnectionClasses out;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.try_emplace(uf.find(i), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(s.sigma_lambda[i]);
  }
  for (const auto& cls : out.classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      auto chain = is_connected(s, cls.front(), cls[i]);
      if (!chain) throw std::logic_error("class member without a connection to its representative");
      out.witnesses.emplace(std::make_pair(cls.front(), cls[i]), std::move(*chain));
    }
  }
  return out;
}

}  // namespace pck
