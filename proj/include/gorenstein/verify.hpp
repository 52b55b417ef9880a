#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorenstein/resolution.hpp"

namespace gorenstein {

enum class CheckOutcome { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckOutcome outcome = CheckOutcome::Skip;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  /// One "PASS|FAIL|SKIP  name  detail" line per check.
  std::string to_text() const;
};

/// Runs every structural check on presentations given as data, so a
/// hand-edited matrix is judged on its own entries.
VerificationReport verify_presentations(const DualElement& phi, const LinearPresentation& lin,
                                        const std::optional<QuadraticPresentation>& quad);

/// Builds both presentations from phi (degree 2n-1) and verifies them.
VerificationReport run_verification(const DualElement& phi);

/// n with deg phi = 2n-1; throws for even degree.
int presentation_size(const DualElement& phi);

}  // namespace gorenstein
