#ifndef PCK_ALGEBRA_FILE_HPP
#define PCK_ALGEBRA_FILE_HPP

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "pck/algebra.hpp"
#include "pck/axioms.hpp"
#include "pck/errors.hpp"

namespace pck {

inline constexpr int kFormatVersion = 1;

enum class LoadErrorKind { syntax, schema, unknown_name, non_homogeneous, bicharacter, axiom_failure };

const char* to_string(LoadErrorKind kind);

/// Structured load failure. `location` is a byte offset for syntax errors
/// and a JSON pointer otherwise.
class LoadError : public InputError {
 public:
  LoadError(LoadErrorKind kind, std::string location, const std::string& message,
            std::shared_ptr<const AxiomReport> axioms = nullptr);

  LoadErrorKind kind() const { return kind_; }
  const std::string& location() const { return location_; }
  const AxiomReport* axioms() const { return axioms_.get(); }

 private:
  LoadErrorKind kind_;
  std::string location_;
  std::shared_ptr<const AxiomReport> axioms_;
};

/// Parses and fully validates an algebra file (bi-character plus every
/// axiom). Throws LoadError.
PoissonColorAlgebra parse_algebra(std::string_view text, const CheckOptions& opts = {});

/// Parses without running the bi-character or axiom checks.
PoissonColorAlgebra parse_algebra_unchecked(std::string_view text);

/// Bi-character and axiom validation with LoadError on failure.
void require_valid(const PoissonColorAlgebra& a, const CheckOptions& opts = {});

nlohmann::json algebra_to_json(const PoissonColorAlgebra& a);

/// Canonical file text: sorted keys, entries ordered by (left, right)
/// basis index, result terms by basis index, two-space indentation.
std::string serialize_algebra(const PoissonColorAlgebra& a);

std::string read_file(const std::string& path);

}  // namespace pck

#endif  // PCK_ALGEBRA_FILE_HPP
