#ifndef PCK_REPORT_HPP
#define PCK_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pck/axioms.hpp"
#include "pck/connections.hpp"
#include "pck/decomposition.hpp"
#include "pck/simplicity.hpp"

namespace pck {

struct WitnessQuery {
  GroupElement from;
  GroupElement to;
  std::optional<WitnessChain> chain;
};

/// Sections are optional; only the ones that were computed are emitted.
struct AnalysisReport {
  std::optional<ValidationReport> bicharacter;
  std::optional<AxiomReport> axioms;
  std::optional<SupportData> support;
  std::optional<ConnectionClasses> classes;
  std::vector<WitnessQuery> queries;
  std::optional<DecompositionReport> decomposition;
  std::optional<GradedSubspace> center;
  std::optional<SimplicityVerdict> simplicity;
  std::optional<SimpleDecomposition> simple_decomposition;
  std::vector<std::string> notes;
};

enum class ReportFormat { json, text };

/// Every section that applies to the algebra. Sections needing a
/// symmetric support are left out when it is not symmetric.
AnalysisReport full_analysis(const PoissonColorAlgebra& a, const CheckOptions& opts = {}, std::uint64_t seed = 0);

nlohmann::json report_to_json(const PoissonColorAlgebra& a, const AnalysisReport& r);

/// Deterministic: JSON keys are sorted, lists keep their computed order.
std::string emit_report(const PoissonColorAlgebra& a, const AnalysisReport& r, ReportFormat format);

}  // namespace pck

#endif  // PCK_REPORT_HPP
