#ifndef PCK_ERRORS_HPP
#define PCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pck {

/// Malformed or inconsistent input: parse failures, bad degrees, axiom
/// violations at load time. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed input that does not meet an operation's preconditions
/// (non-symmetric support, unmet hypotheses of the simplicity criterion). Exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pck

#endif  // PCK_ERRORS_HPP
