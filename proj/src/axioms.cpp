#include "pck/axioms.hpp"

#include <functional>
#include <thread>

namespace pck {

bool AxiomReport::passed() const {
  for (const auto& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

const AxiomResult* AxiomReport::first_failure() const {
  for (const auto& r : results) {
    if (!r.passed()) return &r;
  }
  return nullptr;
}

namespace {

struct Bucket {
  std::size_t violations = 0;
  std::vector<Counterexample> found;

  void record(Counterexample c) {
    ++violations;
    if (found.size() < kMaxCounterexamples) found.push_back(std::move(c));
  }
};

void merge_into(AxiomResult& out, Bucket&& b) {
  out.violations += b.violations;
  for (auto& c : b.found) {
    if (out.counterexamples.size() >= kMaxCounterexamples) break;
    out.counterexamples.push_back(std::move(c));
  }
}

// Runs body(i, bucket) for every leading index i, possibly in parallel, and
// merges buckets in ascending i.
AxiomResult run_by_leading_index(const std::string& name, int dim, int threads,
                                 const std::function<void(int, Bucket&)>& body) {
  std::vector<Bucket> buckets(static_cast<std::size_t>(dim));
  const int workers = std::max(1, std::min(threads, dim));
  if (workers == 1) {
    for (int i = 0; i < dim; ++i) body(i, buckets[i]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < dim; i += workers) body(i, buckets[i]);
      });
    }
  }
  AxiomResult out;
  out.axiom = name;
  for (auto& b : buckets) merge_into(out, std::move(b));
  return out;
}

std::vector<std::string> names_of(const PoissonColorAlgebra& a, std::initializer_list<int> idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(a.basis(i).name);
  return out;
}

}  // namespace

AxiomResult check_bigrading(const PoissonColorAlgebra& a) {
  AxiomResult out;
  out.axiom = "bigrading";
  Bucket bucket;
  for (const auto* t : {&a.product_tensor(), &a.bracket_tensor()}) {
    for (const auto& [ij, v] : t->entries()) {
      const auto& bi = a.basis(ij.first);
      const auto& bj = a.basis(ij.second);
      const GroupElement want_l = group_compose(a.lambda_spec(), bi.ldeg, bj.ldeg);
      const GroupElement want_g = group_compose(a.g_spec(), bi.gdeg, bj.gdeg);
      for (const auto& [k, c] : v.terms()) {
        const auto& bk = a.basis(k);
        if (bk.ldeg == want_l && bk.gdeg == want_g) continue;
        Vector term;
        term.add_term(k, c);
        bucket.record({names_of(a, {ij.first, ij.second, k}), term, Vector{}});
      }
    }
  }
  merge_into(out, std::move(bucket));
  return out;
}

AxiomResult check_associativity(const PoissonColorAlgebra& a, const CheckOptions& opts) {
  const int n = a.dim();
  return run_by_leading_index("associativity", n, opts.threads, [&](int i, Bucket& b) {
    for (int j = 0; j < n; ++j) {
      const Vector ij = a.mul(i, j);
      for (int k = 0; k < n; ++k) {
        Vector lhs = a.mul(ij, a.basis_vector(k));
        Vector rhs = a.mul(a.basis_vector(i), a.mul(j, k));
        if (!(lhs == rhs)) b.record({names_of(a, {i, j, k}), std::move(lhs), std::move(rhs)});
      }
    }
  });
}

AxiomResult check_epsilon_commutativity(const PoissonColorAlgebra& a) {
  AxiomResult out;
  out.axiom = "epsilon_commutativity";
  Bucket bucket;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      Vector lhs = a.mul(i, j);
      Vector rhs = a.mul(j, i).scaled(a.epsilon(i, j));
      if (!(lhs == rhs)) bucket.record({names_of(a, {i, j}), std::move(lhs), std::move(rhs)});
    }
  }
  merge_into(out, std::move(bucket));
  return out;
}

AxiomResult check_skew_symmetry(const PoissonColorAlgebra& a) {
  AxiomResult out;
  out.axiom = "skew_symmetry";
  Bucket bucket;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i; j < a.dim(); ++j) {
      Vector lhs = a.bracket(i, j);
      Vector rhs = -a.bracket(j, i).scaled(a.epsilon(i, j));
      if (!(lhs == rhs)) bucket.record({names_of(a, {i, j}), std::move(lhs), std::move(rhs)});
    }
  }
  merge_into(out, std::move(bucket));
  return out;
}

AxiomResult check_jacobi(const PoissonColorAlgebra& a, const CheckOptions& opts) {
  const int n = a.dim();
  // [x, [y, z]] = [[x, y], z] + eps(x, y) [y, [x, z]]
  return run_by_leading_index("jacobi", n, opts.threads, [&](int i, Bucket& b) {
    const Vector x = a.basis_vector(i);
    for (int j = 0; j < n; ++j) {
      const Vector y = a.basis_vector(j);
      const Vector xy = a.bracket(i, j);
      for (int k = 0; k < n; ++k) {
        const Vector z = a.basis_vector(k);
        Vector lhs = a.bracket(x, a.bracket(j, k));
        Vector rhs = a.bracket(xy, z) + a.bracket(y, a.bracket(i, k)).scaled(a.epsilon(i, j));
        if (!(lhs == rhs)) b.record({names_of(a, {i, j, k}), std::move(lhs), std::move(rhs)});
      }
    }
  });
}

AxiomResult check_leibniz(const PoissonColorAlgebra& a, const CheckOptions& opts) {
  const int n = a.dim();
  // {xy, z} = x{y, z} + eps(y, z) {x, z} y
  return run_by_leading_index("leibniz", n, opts.threads, [&](int i, Bucket& b) {
    const Vector x = a.basis_vector(i);
    for (int j = 0; j < n; ++j) {
      const Vector y = a.basis_vector(j);
      const Vector xy = a.mul(i, j);
      for (int k = 0; k < n; ++k) {
        const Vector z = a.basis_vector(k);
        Vector lhs = a.bracket(xy, z);
        Vector rhs = a.mul(x, a.bracket(j, k)) + a.mul(a.bracket(i, k), y).scaled(a.epsilon(j, k));
        if (!(lhs == rhs)) b.record({names_of(a, {i, j, k}), std::move(lhs), std::move(rhs)});
      }
    }
  });
}

AxiomReport validate_all(const PoissonColorAlgebra& a, const CheckOptions& opts) {
  AxiomReport report;
  report.results.push_back(check_bigrading(a));
  report.results.push_back(check_associativity(a, opts));
  if (a.flags().check_commutative) {
    report.results.push_back(check_epsilon_commutativity(a));
  } else {
    AxiomResult skipped;
    skipped.axiom = "epsilon_commutativity";
    skipped.checked = false;
    report.results.push_back(std::move(skipped));
  }
  report.results.push_back(check_skew_symmetry(a));
  report.results.push_back(check_jacobi(a, opts));
  report.results.push_back(check_leibniz(a, opts));
  return report;
}

}  // namespace pck
