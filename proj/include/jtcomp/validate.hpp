#ifndef JTCOMP_VALIDATE_HPP
#define JTCOMP_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace jtcomp {

/// Deliberate faults for exercising the self-validation suite; each one
/// must be caught by a named check.
enum class FaultInjection {
  kNone,
  kWidenBetaSupport,     // boundary-radius sampler leaves its support
  kDisableDistanceGate,  // clustering ignores the ToA distance bound
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full battery: sampler distribution tests, density
/// normalizations, support bounds, fading moments, exhaustive-oracle
/// comparisons, and clustering constraint invariants.
std::vector<CheckResult> run_validation(
    FaultInjection fault = FaultInjection::kNone, std::uint64_t seed = 12345);

}  // namespace jtcomp

#endif  // JTCOMP_VALIDATE_HPP
