#include "pck/report.hpp"

#include <algorithm>
#include <sstream>

namespace pck {

using nlohmann::json;

namespace {

std::string lam(const PoissonColorAlgebra& a, const GroupElement& l) { return format_multiplicative(a.lambda_spec(), l); }

json lam_list(const PoissonColorAlgebra& a, const std::vector<GroupElement>& ls) {
  json out = json::array();
  for (const auto& l : ls) out.push_back(lam(a, l));
  return out;
}

json subspace_json(const PoissonColorAlgebra& a, const GradedSubspace& s) {
  json basis = json::array();
  for (const auto& v : s.spanning_vectors()) basis.push_back(format_vector(a, v));
  return json{{"dim", s.dim()}, {"basis", basis}};
}

json chain_json(const PoissonColorAlgebra& a, const GroupElement& from, const GroupElement& to,
                const std::optional<WitnessChain>& chain) {
  json j{{"from", lam(a, from)}, {"to", lam(a, to)}};
  if (chain) {
    j["chain"] = lam_list(a, chain->elements);
    j["partial_products"] = lam_list(a, chain->partial_products(a.lambda_spec()));
  } else {
    j["chain"] = nullptr;
  }
  return j;
}

json axioms_json(const PoissonColorAlgebra& a, const AxiomReport& r) {
  json checks = json::array();
  for (const auto& res : r.results) {
    json ces = json::array();
    for (const auto& c : res.counterexamples) {
      ces.push_back({{"basis", c.basis}, {"lhs", format_vector(a, c.lhs)}, {"rhs", format_vector(a, c.rhs)}});
    }
    checks.push_back({{"axiom", res.axiom},
                      {"checked", res.checked},
                      {"passed", res.passed()},
                      {"violations", res.violations},
                      {"counterexamples", ces}});
  }
  return json{{"passed", r.passed()}, {"checks", checks}};
}

json verdict_json(const SimplicityVerdict& v) {
  const auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json j{{"maximal_length", v.maximal_length},
         {"sigma_multiplicative", v.multiplicative},
         {"symmetric_support", v.symmetric_support},
         {"criterion_applicable", v.criterion_applicable},
         {"criterion_result", opt(v.criterion_result)},
         {"oracle_result", opt(v.oracle_result)},
         {"oracle_exact", v.oracle_exact},
         {"agreement", opt(v.agreement)},
         {"proper_ideal_witness", v.proper_ideal_witness ? json(*v.proper_ideal_witness) : json(nullptr)}};
  if (v.criterion_applicable) {
    j["reasons"] = {{"center_zero", v.center_zero}, {"p1_condition", v.p1_condition}, {"class_count", v.class_count}};
  }
  return j;
}

// Class order, then member order within each class.
template <class F>
void for_each_witness(const ConnectionClasses& c, F&& f) {
  for (const auto& cls : c.classes) {
    for (const auto& m : cls) {
      const auto it = c.witnesses.find({cls.front(), m});
      if (it != c.witnesses.end()) f(cls.front(), m, it->second);
    }
  }
}

void text_subspace(std::ostream& os, const PoissonColorAlgebra& a, const GradedSubspace& s) {
  os << "dim " << s.dim();
  if (s.dim() > 0) {
    os << ": span{";
    bool first = true;
    for (const auto& v : s.spanning_vectors()) {
      os << (first ? "" : ", ") << format_vector(a, v);
      first = false;
    }
    os << "}";
  }
}

const char* const kOnePartNote = "the one-part of I_[l] uses {P_m, P_{m^-1}} for m in the class";

// Standing notes first, then the ones raised by individual sections.
std::vector<std::string> all_notes(const AnalysisReport& r) {
  std::vector<std::string> notes = {kMultiplicativityNote, kP1Note, kOnePartNote};
  const auto add = [&](const std::vector<std::string>& more) {
    for (const auto& n : more) {
      if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
    }
  };
  if (r.decomposition) add(r.decomposition->notes);
  if (r.simplicity) add(r.simplicity->notes);
  add(r.notes);
  return notes;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_text(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

}  // namespace

AnalysisReport full_analysis(const PoissonColorAlgebra& a, const CheckOptions& opts, std::uint64_t seed) {
  AnalysisReport r;
  r.bicharacter = bichar_validate(a.g_spec(), a.bichar());
  r.axioms = validate_all(a, opts);
  r.support = compute_supports(a);
  r.center = compute_center(a);
  if (check_symmetric_support(*r.support)) {
    r.classes = connection_classes(*r.support);
    r.decomposition = decompose(a);
  }
  r.simplicity = analyze_simplicity(a, seed);
  const auto& v = *r.simplicity;
  if (v.criterion_applicable && v.center_zero && v.p1_condition) r.simple_decomposition = simple_decomposition(a, seed);
  return r;
}

json report_to_json(const PoissonColorAlgebra& a, const AnalysisReport& r) {
  json j{{"algebra", a.name()}, {"dim", a.dim()}, {"notes", all_notes(r)}};
  if (r.bicharacter) j["bicharacter"] = {{"valid", r.bicharacter->valid}, {"failures", r.bicharacter->failures}};
  if (r.axioms) j["axioms"] = axioms_json(a, *r.axioms);
  if (r.support) {
    json sigma_g = json::array();
    for (const auto& g : r.support->sigma_g) sigma_g.push_back(g.coords);
    json lambda_g = json::array();
    for (const auto& [g, ls] : r.support->lambda_g) lambda_g.push_back({{"g", g.coords}, {"lambdas", lam_list(a, ls)}});
    j["support"] = {{"sigma_lambda", lam_list(a, r.support->sigma_lambda)},
                    {"sigma_g", sigma_g},
                    {"lambda_g", lambda_g},
                    {"symmetric_support", check_symmetric_support(*r.support)}};
  }
  if (r.classes) {
    json classes = json::array();
    for (const auto& c : r.classes->classes) classes.push_back(lam_list(a, c));
    j["classes"] = classes;
    json witnesses = json::array();
    for_each_witness(*r.classes, [&](const GroupElement& from, const GroupElement& to, const WitnessChain& chain) {
      witnesses.push_back(chain_json(a, from, to, chain));
    });
    j["witnesses"] = witnesses;
  }
  if (!r.queries.empty()) {
    json qs = json::array();
    for (const auto& q : r.queries) qs.push_back(chain_json(a, q.from, q.to, q.chain));
    j["witness_queries"] = qs;
  }
  if (r.center) j["center"] = subspace_json(a, *r.center);
  if (r.decomposition) {
    const auto& d = *r.decomposition;
    json ideals = json::array();
    for (const auto& ideal : d.ideals) {
      ideals.push_back({{"class", lam_list(a, ideal.members)},
                        {"one_part", subspace_json(a, ideal.one_part)},
                        {"vee_dim", ideal.vee_part.dim()},
                        {"dim", ideal.total.dim()},
                        {"subalgebra", is_subalgebra(a, ideal.total)},
                        {"graded_ideal", is_graded_ideal(a, ideal.total)}});
    }
    json orth = json::array();
    for (const auto& row : d.orthogonality) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(x ? json(*x) : json(nullptr));
      orth.push_back(jr);
    }
    j["decomposition"] = {{"u_complement", subspace_json(a, d.u_complement)},
                          {"ideals", ideals},
                          {"orthogonality", orth},
                          {"sum_is_whole", d.sum_is_whole},
                          {"is_direct", d.is_direct},
                          {"center_dim", d.center_dim},
                          {"p1_condition", d.p1_condition}};
  }
  if (r.simplicity) {
    j["simplicity"] = verdict_json(*r.simplicity);
  }
  if (r.simple_decomposition) {
    json parts = json::array();
    const auto& sd = *r.simple_decomposition;
    for (std::size_t i = 0; i < sd.restricted.size(); ++i) {
      parts.push_back({{"ideal", sd.restricted[i].name()}, {"dim", sd.restricted[i].dim()}, {"verdict", verdict_json(sd.verdicts[i])}});
    }
    j["simple_decomposition"] = {{"all_simple", sd.all_simple}, {"ideals", parts}};
  }
  return j;
}

std::string emit_report(const PoissonColorAlgebra& a, const AnalysisReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(a, r).dump(2) + "\n";

  std::ostringstream os;
  os << "algebra " << a.name() << " (dim " << a.dim() << ")\n";
  if (r.bicharacter) {
    os << "bi-character: " << (r.bicharacter->valid ? "valid" : "INVALID") << "\n";
    for (const auto& f : r.bicharacter->failures) os << "  " << f << "\n";
  }
  if (r.axioms) {
    os << "axioms: " << (r.axioms->passed() ? "all pass" : "FAILED") << "\n";
    for (const auto& res : r.axioms->results) {
      os << "  " << res.axiom << ": " << (!res.checked ? "skipped" : (res.passed() ? "pass" : "FAIL")) << "\n";
      for (const auto& c : res.counterexamples) {
        os << "    at (";
        for (std::size_t i = 0; i < c.basis.size(); ++i) os << (i ? "," : "") << c.basis[i];
        os << "): " << format_vector(a, c.lhs) << " != " << format_vector(a, c.rhs) << "\n";
      }
    }
  }
  if (r.support) {
    os << "Sigma_Lambda: {";
    for (std::size_t i = 0; i < r.support->sigma_lambda.size(); ++i) os << (i ? ", " : "") << lam(a, r.support->sigma_lambda[i]);
    os << "}\nsymmetric support: " << yes_no(check_symmetric_support(*r.support)) << "\n";
  }
  if (r.classes) {
    os << "connection classes: " << r.classes->classes.size() << "\n";
    for (const auto& c : r.classes->classes) {
      os << "  [";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << lam(a, c[i]);
      os << "]\n";
    }
  }
  const auto print_chain = [&](const GroupElement& from, const GroupElement& to, const std::optional<WitnessChain>& chain) {
    os << "  " << lam(a, from) << " ~ " << lam(a, to) << ": ";
    if (!chain) {
      os << "not connected\n";
      return;
    }
    const auto partial = chain->partial_products(a.lambda_spec());
    for (std::size_t i = 0; i < partial.size(); ++i) os << (i ? " -> " : "") << lam(a, partial[i]);
    os << "\n";
  };
  if (r.classes && !r.classes->witnesses.empty()) {
    os << "witnesses:\n";
    for_each_witness(*r.classes, [&](const GroupElement& from, const GroupElement& to, const WitnessChain& chain) {
      print_chain(from, to, chain);
    });
  }
  for (const auto& q : r.queries) print_chain(q.from, q.to, q.chain);
  if (r.center) {
    os << "center: ";
    text_subspace(os, a, *r.center);
    os << "\n";
  }
  if (r.decomposition) {
    const auto& d = *r.decomposition;
    os << "decomposition:\n  U: ";
    text_subspace(os, a, d.u_complement);
    os << "\n";
    for (const auto& ideal : d.ideals) {
      os << "  I[" << lam(a, ideal.class_rep) << "]: ";
      text_subspace(os, a, ideal.total);
      os << "\n    one part: ";
      text_subspace(os, a, ideal.one_part);
      os << "\n";
    }
    os << "  U + sum I = P: " << yes_no(d.sum_is_whole) << "\n  direct: " << yes_no(d.is_direct)
       << "\n  center dim: " << d.center_dim << "\n  P_1 condition: " << yes_no(d.p1_condition) << "\n";
  }
  if (r.simplicity) {
    const auto& v = *r.simplicity;
    os << "simplicity:\n  maximal length: " << yes_no(v.maximal_length) << "\n  Sigma-multiplicative: " << yes_no(v.multiplicative)
       << "\n  criterion: " << opt_text(v.criterion_result) << "\n  oracle: " << opt_text(v.oracle_result)
       << (v.oracle_exact ? " (exact)" : " (sampled)") << "\n  agreement: " << opt_text(v.agreement) << "\n";
    if (v.proper_ideal_witness) os << "  witness: " << *v.proper_ideal_witness << "\n";
  }
  if (r.simple_decomposition) {
    const auto& sd = *r.simple_decomposition;
    os << "gr-simple summands: " << sd.restricted.size() << (sd.all_simple ? " (all gr-simple)" : " (NOT all gr-simple)") << "\n";
    for (std::size_t i = 0; i < sd.restricted.size(); ++i) {
      os << "  " << sd.restricted[i].name() << ": dim " << sd.restricted[i].dim() << ", oracle "
         << opt_text(sd.verdicts[i].oracle_result) << "\n";
    }
  }
  for (const auto& n : all_notes(r)) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace pck
