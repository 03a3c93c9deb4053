// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pck/algebra_file.hpp"
#include "pck/axioms.hpp"
#include "pck/connections.hpp"
#include "pck/corpus.hpp"
#include "pck/decomposition.hpp"
#include "pck/report.hpp"
#include "pck/simplicity.hpp"
#include "support.hpp"

namespace {

using namespace pck;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> log;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (log.size() < 10) log.push_back(what);
    }
  }
};

std::vector<CorpusEntry> symmetric_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& e : builtin_corpus()) {
    if (e.symmetric_support) out.push_back(std::move(e));
  }
  return out;
}

bool has(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

Outcome axiom_validator() {
  Outcome o;
  int valid = 0;
  for (const auto& e : builtin_corpus()) {
    const bool ok = validate_all(e.algebra).passed();
    o.require(ok, e.name + " fails validate_all");
    valid += ok ? 1 : 0;
  }
  o.require(valid >= 8, "fewer than 8 valid corpus algebras");

  std::mt19937_64 rng(2024);
  int tried = 0, killed = 0, equivalent = 0;
  std::vector<std::string> equivalents;
  for (const auto& base : {sl2_algebra(), group_algebra(3), grassmann_clifford()}) {
    for (const auto& m : testing::single_entry_mutants(base)) {
      ++tried;
      const auto report = validate_all(m.algebra);
      const auto* failure = report.first_failure();
      const bool caught = failure != nullptr && !failure->counterexamples.empty();
      const auto independent = testing::random_axiom_violation(m.algebra, rng, 400);
      if (caught) {
        ++killed;
        o.require(independent.has_value(), m.description + ": basis checks fail but random vectors satisfy every axiom");
      } else if (!independent) {
        ++equivalent;
        equivalents.push_back(m.description);
      } else {
        o.require(false, m.description + ": survived although " + *independent);
      }
    }
  }
  const int relevant = tried - equivalent;
  o.require(killed == relevant, "not every non-equivalent mutant was killed");
  o.require(relevant >= 50, "fewer than 50 non-equivalent mutants");
  std::ostringstream d;
  d << valid << " corpus algebras valid; " << killed << "/" << relevant << " mutants killed (" << tried
    << " tried, " << equivalent << " still satisfy every axiom)";
  o.detail = d.str();
  for (const auto& e : equivalents) o.log.push_back("equivalent mutant: " + e);
  return o;
}

Outcome connection_relation() {
  Outcome o;
  std::size_t queries = 0, closure_checks = 0;
  for (const auto& e : symmetric_corpus()) {
    const auto s = compute_supports(e.algebra);
    const auto c = connection_classes(s);
    std::vector<std::vector<bool>> rel(s.sigma_lambda.size(), std::vector<bool>(s.sigma_lambda.size()));
    for (std::size_t i = 0; i < s.sigma_lambda.size(); ++i) {
      for (std::size_t j = 0; j < s.sigma_lambda.size(); ++j) {
        const auto& l = s.sigma_lambda[i];
        const auto& m = s.sigma_lambda[j];
        const auto w = is_connected(s, l, m);
        ++queries;
        rel[i][j] = w.has_value();
        if (w) o.require(is_valid_witness(s, *w, l, m), e.name + ": invalid witness");
        o.require(rel[i][j] == (c.class_of(l) == c.class_of(m)), e.name + ": relation disagrees with partition");
      }
    }
    const std::size_t n = rel.size();
    for (std::size_t i = 0; i < n; ++i) {
      o.require(rel[i][i], e.name + ": not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        o.require(rel[i][j] == rel[j][i], e.name + ": not symmetric");
        for (std::size_t k = 0; k < n; ++k) {
          if (rel[i][j] && rel[j][k]) o.require(rel[i][k], e.name + ": not transitive");
        }
      }
    }
    for (const auto& mu : s.sigma_lambda) {
      for (const auto& eta : s.sigma_lambda) {
        const auto prod = group_compose(s.lambda_spec, mu, eta);
        if (!s.in_support(prod)) continue;
        ++closure_checks;
        o.require(c.class_of(eta) == c.class_of(mu) && c.class_of(prod) == c.class_of(mu),
                  e.name + ": class not closed under supported products");
      }
    }
  }
  o.detail = std::to_string(queries) + " witness queries, " + std::to_string(closure_checks) + " closure pairs";
  return o;
}

Outcome ideals_are_ideals() {
  Outcome o;
  int count = 0;
  for (const auto& e : symmetric_corpus()) {
    for (const auto& cls : connection_classes(compute_supports(e.algebra)).classes) {
      const auto ideal = build_ideal(e.algebra, cls);
      ++count;
      o.require(is_subalgebra(e.algebra, ideal.total), e.name + ": I not a subalgebra");
      o.require(is_graded_ideal(e.algebra, ideal.total), e.name + ": I not a graded ideal");
    }
  }
  o.detail = std::to_string(count) + " ideals checked";
  return o;
}

Outcome orthogonality() {
  Outcome o;
  int pairs = 0;
  for (const auto& e : symmetric_corpus()) {
    const auto& a = e.algebra;
    std::vector<IdealDescriptor> ideals;
    for (const auto& cls : connection_classes(compute_supports(a)).classes) ideals.push_back(build_ideal(a, cls));
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        if (i == j) continue;
        ++pairs;
        o.require(orthogonality_check(a, ideals[i], ideals[j]), e.name + ": orthogonality_check false");
        for (const auto& x : ideals[i].total.spanning_vectors()) {
          for (const auto& y : ideals[j].total.spanning_vectors()) {
            o.require(a.mul(x, y).is_zero() && a.bracket(x, y).is_zero(), e.name + ": nonzero cross term");
          }
        }
      }
    }
  }
  o.require(pairs >= 8, "too few distinct class pairs exercised");
  o.detail = std::to_string(pairs) + " ordered pairs of distinct classes";
  return o;
}

Outcome decomposition_sum() {
  Outcome o;
  int runs = 0;
  for (const auto& e : symmetric_corpus()) {
    const auto d = decompose(e.algebra);
    ++runs;
    GradedSubspace ideals = GradedSubspace::zero(e.algebra);
    for (const auto& i : d.ideals) ideals = subspace_sum(ideals, i.total);
    o.require(subspace_sum(d.u_complement, ideals) == GradedSubspace::full(e.algebra) && d.sum_is_whole,
              e.name + ": U + sum I != P");
    o.require(intersect(d.u_complement, ideals).is_zero(), e.name + ": U meets the ideals");
    if (e.name == "central_line") o.require(d.u_complement.dim() == 1, "central_line: dim U != 1");
  }
  o.require(corpus_entry("central_line").has_value(), "central_line missing");
  o.detail = std::to_string(runs) + " decompositions; central_line dim U = " +
             std::to_string(decompose(corpus_entry("central_line")->algebra).u_complement.dim());
  return o;
}

Outcome direct_when_centerless() {
  Outcome o;
  std::vector<std::string> qualified;
  for (const auto& e : symmetric_corpus()) {
    const auto& a = e.algebra;
    if (!(compute_center(a).is_zero() && p1_condition_check(a))) continue;
    qualified.push_back(e.name);
    const auto d = decompose(a);
    int total = 0;
    for (const auto& i : d.ideals) total += i.total.dim();
    o.require(d.is_direct, e.name + ": not direct");
    o.require(total == a.dim(), e.name + ": ideal dimensions do not sum to dim P");
  }
  for (const char* need : {"sl2", "fz3", "grassmann_clifford", "two_block", "three_block", "sl2_plus_fz3"}) {
    o.require(has(qualified, need), std::string(need) + " should have zero center and the P_1 condition");
  }
  o.detail = std::to_string(qualified.size()) + " algebras with zero center and P_1 condition";
  return o;
}

Outcome criterion_vs_oracle() {
  Outcome o;
  std::vector<std::string> positive, negative;
  for (const auto& e : builtin_corpus()) {
    const auto v = analyze_simplicity(e.algebra);
    if (!(v.maximal_length && v.multiplicative)) continue;
    if (!v.symmetric_support) continue;
    o.require(v.criterion_result.has_value(), e.name + ": criterion not applied");
    o.require(v.oracle_exact, e.name + ": oracle not exact");
    o.require(v.criterion_result == v.oracle_result, e.name + ": criterion and oracle disagree");
    (v.oracle_result.value_or(false) ? positive : negative).push_back(e.name);
  }
  for (const char* need : {"sl2", "fz3", "fz5", "grassmann_clifford", "color_z3xz3"}) {
    o.require(has(positive, need), std::string(need) + " should be gr-simple");
  }
  for (const char* need : {"two_block", "three_block"}) {
    o.require(has(negative, need), std::string(need) + " should not be gr-simple");
  }
  o.detail = std::to_string(positive.size()) + " simple, " + std::to_string(negative.size()) + " not simple, all agreeing";
  return o;
}

Outcome simple_summands() {
  Outcome o;
  std::ostringstream d;
  for (const auto& [name, expected] : {std::pair<std::string, std::size_t>{"two_block", 2}, {"three_block", 3}}) {
    const auto a = corpus_entry(name)->algebra;
    const auto sd = simple_decomposition(a);
    o.require(sd.restricted.size() == expected, name + ": wrong number of ideals");
    int total = 0;
    for (std::size_t i = 0; i < sd.restricted.size(); ++i) {
      total += sd.restricted[i].dim();
      const auto oracle = gr_simple_oracle(sd.restricted[i]);
      o.require(oracle.simple && oracle.exact, name + ": summand not gr-simple by the exact oracle");
      o.require(validate_all(sd.restricted[i]).passed(), name + ": restricted summand invalid");
    }
    o.require(total == a.dim(), name + ": summand dimensions do not add up");
    d << name << " -> " << sd.restricted.size() << " ideals (dims sum " << total << "/" << a.dim() << ") ";
  }
  o.detail = d.str();
  return o;
}

Outcome largest_p1_ideal() {
  Outcome o;
  int checked = 0;
  for (const auto& e : symmetric_corpus()) {
    const auto& a = e.algebra;
    if (!(compute_center(a).is_zero() && p1_condition_check(a))) continue;
    ++checked;
    int rounds = 0;
    o.require(largest_ideal_in_p1(a, &rounds).is_zero(), e.name + ": nonzero ideal inside P_1");
    o.require(rounds <= a.dim() + 1, e.name + ": refinement exceeded its round bound");
  }
  o.detail = std::to_string(checked) + " algebras; largest ideal in P_1 is zero";
  return o;
}

Outcome bicharacter_laws() {
  Outcome o;
  std::size_t triples = 0;
  for (const auto& e : builtin_corpus()) {
    const auto& a = e.algebra;
    o.require(bichar_validate(a.g_spec(), a.bichar()).valid, e.name + ": bi-character rejected");
    const auto elems = enumerate_window(a.g_spec(), 2);
    for (const auto& g : elems) {
      const CycScalar gg = a.epsilon(g, g);
      o.require(gg.is_one() || (-gg).is_one(), e.name + ": eps(g,g) not +-1");
      for (const auto& h : elems) {
        o.require((a.epsilon(g, h) * a.epsilon(h, g)).is_one(), e.name + ": eps(g,h) eps(h,g) != 1");
        for (const auto& f : elems) {
          ++triples;
          o.require(a.epsilon(group_compose(a.g_spec(), g, h), f) == a.epsilon(g, f) * a.epsilon(h, f),
                    e.name + ": not multiplicative on the left");
          o.require(a.epsilon(g, group_compose(a.g_spec(), h, f)) == a.epsilon(g, h) * a.epsilon(g, f),
                    e.name + ": not multiplicative on the right");
        }
      }
    }
  }
  const auto negative = bichar_validate(GroupSpec{0, {3}, {}}, BiCharacter{3, {{1}}});
  o.require(!negative.valid, "Z3 with N = 3, B = [[1]] accepted");
  o.detail = std::to_string(triples) + " triples; Z3/N=3/B=[[1]] " + (negative.valid ? "accepted" : "rejected");
  return o;
}

Outcome determinism() {
  Outcome o;
  int algebras = 0;
  for (const auto& e : builtin_corpus()) {
    ++algebras;
    const std::string s1 = serialize_algebra(e.algebra);
    const auto back = parse_algebra(s1);
    o.require(serialize_algebra(back) == s1, e.name + ": serialization not byte-stable");
    o.require(serialize_algebra(parse_algebra(serialize_algebra(back))) == s1, e.name + ": second round trip differs");
    for (auto format : {ReportFormat::json, ReportFormat::text}) {
      const std::string r1 = emit_report(e.algebra, full_analysis(e.algebra, {1}, 7), format);
      const std::string r2 = emit_report(e.algebra, full_analysis(e.algebra, {1}, 7), format);
      const std::string r4 = emit_report(e.algebra, full_analysis(e.algebra, {4}, 7), format);
      const std::string rb = emit_report(back, full_analysis(back, {2}, 7), format);
      o.require(r1 == r2, e.name + ": report differs between runs");
      o.require(r1 == r4, e.name + ": report depends on the thread count");
      o.require(r1 == rb, e.name + ": report differs after a round trip");
    }
  }
  o.detail = std::to_string(algebras) + " algebras, json and text reports, 1/2/4 threads";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom validator and mutation harness", axiom_validator},
      {"connection relation is an equivalence, classes closed", connection_relation},
      {"every I_[l] is a subalgebra and a graded ideal", ideals_are_ideals},
      {"distinct classes are orthogonal", orthogonality},
      {"P = U + sum of I_[l] exactly", decomposition_sum},
      {"zero center and P_1 condition give a direct sum", direct_when_centerless},
      {"simplicity criterion agrees with the exact oracle", criterion_vs_oracle},
      {"block sums split into gr-simple ideals", simple_summands},
      {"no nonzero ideal inside P_1", largest_p1_ideal},
      {"bi-character laws", bicharacter_laws},
      {"round trip and report determinism", determinism},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %2zu  %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    for (const auto& line : o.log) std::printf("        %s\n", line.c_str());
    failed += o.pass ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.2fs\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size(),
              total);
  return failed == 0 ? 0 : 1;
}
