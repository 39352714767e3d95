#ifndef CADET_ERRORS_HPP
#define CADET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cadet {

// A computation was asked to exceed its step/memory budget. The CLI maps
// this to exit code 3.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An exact cross-check failed (non-integral solution, mismatched
// distribution, broken invariant). The CLI maps this to exit code 1.
class VerificationError : public std::runtime_error {
  public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cadet

#endif
